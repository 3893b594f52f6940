#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "cli.hpp"

using polysurj::cli::Command;
using polysurj::cli::Format;
using polysurj::cli::NecessaryCheck;

int main(int argc, char** argv) {
  CLI::App app{"polysurj: surjectivity certificates and real fibers of polynomial maps"};
  app.require_subcommand(1);
  app.fallthrough();

  polysurj::cli::RunConfig config;
  std::string format = "text";
  std::string target;
  int theorem = 18;
  std::string check;

  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", config.seed, "Seed for sampled checks");
  app.add_flag("--assume-det-nonvanishing", config.assume_det_nonvanishing,
               "Assume det(g) never vanishes on R^n when it cannot be proven");
  app.add_option("--samples", config.samples, "Random fiber samples for Surjective maps of the plane");

  auto* analyze = app.add_subcommand("analyze", "Run every sufficient-condition pipeline");
  analyze->add_option("file", config.input, "Problem file or builtin:<name>")->required();
  analyze->add_option("--target", target, "Fiber target r1,r2,...");

  auto* fiber = app.add_subcommand("fiber", "Count and isolate the real fiber (n = 2)");
  fiber->add_option("file", config.input, "Problem file or builtin:<name>")->required();
  fiber->add_option("--target", target, "Fiber target r1,r2");

  auto* leadform = app.add_subcommand("leadform", "Leading forms and the induced homogeneous system");
  leadform->add_option("file", config.input, "Problem file or builtin:<name>")->required();

  auto* necessary = app.add_subcommand("necessary", "Necessary conditions for a nonvanishing determinant");
  necessary->add_option("file", config.input, "Problem file or builtin:<name>")->required();
  necessary->add_option("--thm", theorem, "17: odd column of g; 18: Jacobian products")
      ->check(CLI::IsMember({17, 18}));
  necessary->add_option("--col", config.column, "Column of g for --thm 17 (1-based)");

  auto* pinchuk = app.add_subcommand("pinchuk", "Build and inspect the Pinchuk map");
  pinchuk->add_option("--check", check, "Run a check on the map")->check(CLI::IsMember({"thm18"}));
  pinchuk->add_option("--emit", config.output_path, "Write the expanded map as a problem file");

  auto* emit = app.add_subcommand("emit", "Write a builtin problem as a problem file");
  emit->add_option("builtin", config.input, "Builtin name")->required();
  emit->add_option("path", config.output_path, "Destination")->required();

  for (auto* sub : {analyze, fiber, leadform, necessary, pinchuk, emit}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage mistakes are input errors; --help still exits 0.
    const int code = app.exit(e);
    return code == 0 ? 0 : polysurj::cli::kInputError;
  }

  const std::map<CLI::App*, Command> commands = {
      {analyze, Command::Analyze}, {fiber, Command::Fiber}, {leadform, Command::Leadform},
      {necessary, Command::Necessary}, {pinchuk, Command::Pinchuk}, {emit, Command::Emit}};
  for (const auto& [sub, command] : commands)
    if (sub->parsed()) config.command = command;

  config.format = format == "json" ? Format::Json : Format::Text;
  config.necessary = theorem == 17 ? NecessaryCheck::Column : NecessaryCheck::JacobianProduct;
  config.pinchuk_check = !check.empty();
  if (!target.empty()) {
    try {
      config.target = polysurj::cli::parse_target(target);
    } catch (const std::exception& e) {
      std::cerr << "error: --target: " << e.what() << "\n";
      return polysurj::cli::kInputError;
    }
  }
  return polysurj::cli::run(config, std::cout, std::cerr);
}
