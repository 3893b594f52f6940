#include "cli.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "polysurj/certify.hpp"
#include "polysurj/corpus.hpp"
#include "polysurj/fiber.hpp"
#include "polysurj/parser.hpp"
#include "polysurj/realalg.hpp"
#include "polysurj/report.hpp"
#include "polysurj/systems.hpp"

namespace polysurj::cli {

using nlohmann::json;

namespace {

constexpr std::string_view kBuiltinPrefix = "builtin:";

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ProblemSpec load_problem(const RunConfig& config) {
  if (config.input.empty()) throw InputError("no input file given");
  ProblemSpec spec = [&] {
    if (config.input.rfind(kBuiltinPrefix, 0) == 0) return builtin_problem(config.input.substr(kBuiltinPrefix.size()));
    const std::string text = read_file(config.input);
    try {
      return parse_problem_file(text);
    } catch (const ParseError& e) {
      throw InputError(config.input + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                       e.what());
    }
  }();
  if (config.assume_det_nonvanishing) spec.assume_det_nonvanishing = true;
  if (config.target) {
    if (config.target->size() != spec.nvars())
      throw InputError("target has " + std::to_string(config.target->size()) + " entries, expected " +
                       std::to_string(spec.nvars()));
    spec.target = *config.target;
    spec.target_defaulted = false;
  }
  return spec;
}

int exit_for(const std::vector<Certificate>& certs) {
  for (const auto& c : certs)
    if (c.decisive()) return kDecisive;
  return kInconclusive;
}

std::string render_point(const std::vector<Rational>& pt) {
  std::string s = "(";
  for (std::size_t i = 0; i < pt.size(); ++i) s += (i ? ", " : "") + to_string(pt[i]);
  return s + ")";
}

// Divides a form by the absolute value of its leading coefficient.
MultiPoly positive_normalized(const MultiPoly& f) {
  if (f.is_zero()) return f;
  return f * Rational(1 / abs(f.leading_term().second));
}

struct Sample {
  std::vector<Rational> target;
  FiberReport report;
  std::string error;
};

std::vector<Sample> sample_fibers(const PolyMap& f, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 4);
  std::vector<Sample> out;
  for (std::size_t i = 0; i < count; ++i) {
    Sample s;
    for (int k = 0; k < 2; ++k) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      s.target.push_back(r);
    }
    try {
      s.report = solve_fiber(f, s.target);
    } catch (const FiberRefinementError& e) {
      s.error = e.what();
    }
    out.push_back(std::move(s));
  }
  return out;
}

int run_analyze(const RunConfig& config, std::ostream& out) {
  ProblemSpec spec = load_problem(config);
  std::vector<Certificate> certs = analyze(spec);
  auto first = first_surjective(certs);
  std::vector<Sample> samples;
  if (config.samples > 0 && first && spec.nvars() == 2) samples = sample_fibers(spec.map, config.samples, config.seed);

  if (config.format == Format::Json) {
    json doc = json::parse(to_json_string(certs));
    doc["first_surjective"] = first ? json(certs[*first].via) : json(nullptr);
    doc["samples"] = json::array();
    for (const auto& s : samples) {
      json j = s.error.empty() ? json::parse(to_json_string(s.report)) : json{{"error", s.error}};
      if (!s.error.empty()) {
        j["target"] = json::array();
        for (const auto& t : s.target) j["target"].push_back(to_string(t));
      }
      doc["samples"].push_back(std::move(j));
    }
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& c : certs) out << to_text(c) << "\n";
    out << "summary: " << (first ? "Surjective via " + certs[*first].via : std::string("no surjectivity certificate"))
        << "\n";
    for (const auto& s : samples) {
      if (s.error.empty())
        out << "sample " << to_text(s.report);
      else
        out << "sample fiber over " << render_point(s.target) << ": undecided (" << s.error << ")\n";
    }
  }
  return exit_for(certs);
}

int run_fiber(const RunConfig& config, std::ostream& out, std::ostream& err) {
  ProblemSpec spec = load_problem(config);
  if (spec.nvars() != 2)
    throw InputError("fiber queries need a map of the plane (n = 2); this problem has n = " +
                     std::to_string(spec.nvars()));
  FiberReport report;
  try {
    report = solve_fiber(spec.map, spec.target);
  } catch (const FiberRefinementError& e) {
    err << "error: " << e.what() << "\n";
    return kInconclusive;
  }
  out << (config.format == Format::Json ? to_json_string(report) + "\n" : to_text(report));
  return kDecisive;
}

int run_leadform(const RunConfig& config, std::ostream& out) {
  ProblemSpec spec = load_problem(config);
  HomogSystem lead = leading_form_system(spec.map);
  HomogSystem induced = induced_homogeneous(build_combined(spec, false));
  ZeroSolutionVerdict real = real_only_zero(lead);
  ZeroSolutionVerdict complex = complex_only_zero(lead);
  if (config.format == Format::Json) {
    json doc;
    doc["components"] = json::array();
    for (std::size_t j = 0; j < lead.forms.size(); ++j)
      doc["components"].push_back(
          {{"degree", lead.degrees[j].to_string()}, {"leading_form", render(lead.forms[j])}});
    doc["induced_homogeneous"] = json::array();
    for (const auto& f : induced.forms) doc["induced_homogeneous"].push_back(render(f));
    auto verdict = [](const ZeroSolutionVerdict& v) {
      json j{{"status", to_string(v.status)}, {"reason", v.reason}};
      j["point"] = json::array();
      for (const auto& c : v.point) j["point"].push_back(to_string(c));
      return j;
    };
    doc["leading_forms_real"] = verdict(real);
    doc["leading_forms_complex"] = verdict(complex);
    out << doc.dump(2) << "\n";
  } else {
    for (std::size_t j = 0; j < lead.forms.size(); ++j)
      out << "p" << j + 1 << ": degree " << lead.degrees[j].to_string() << ", leading form " << render(lead.forms[j])
          << "\n";
    out << "induced homogeneous system:\n";
    for (const auto& f : induced.forms) out << "  " << render(f) << " = 0\n";
    out << "leading forms over R: " << to_string(real.status)
        << (real.point.empty() ? "" : " " + render_point(real.point)) << " (" << real.reason << ")\n";
    out << "leading forms over C: " << to_string(complex.status)
        << (complex.point.empty() ? "" : " " + render_point(complex.point)) << " (" << complex.reason << ")\n";
  }
  const bool inconclusive = real.inconclusive() && complex.inconclusive();
  return inconclusive ? kInconclusive : kDecisive;
}

int emit_certificate(const Certificate& c, const RunConfig& config, std::ostream& out) {
  out << (config.format == Format::Json ? to_json_string(c) + "\n" : to_text(c));
  return c.decisive() ? kDecisive : kInconclusive;
}

int run_necessary(const RunConfig& config, std::ostream& out) {
  ProblemSpec spec = load_problem(config);
  if (config.necessary == NecessaryCheck::Column) {
    if (config.column == 0 || config.column > spec.nvars())
      throw InputError("column " + std::to_string(config.column) + " is out of range 1.." +
                       std::to_string(spec.nvars()));
    return emit_certificate(check_column(spec.gmatrix, config.column - 1, spec.assume_det_nonvanishing), config, out);
  }
  return emit_certificate(check_jacobian_product(spec.map), config, out);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw InputError("cannot write '" + path + "'");
  o << text;
}

int run_pinchuk(const RunConfig& config, std::ostream& out) {
  PinchukMap m = build_pinchuk();
  const PolyMap f = m.map();
  if (!config.output_path.empty())
    write_file(config.output_path, write_problem_file(make_problem(f), "Pinchuk map (expanded)"));

  const std::pair<const char*, const MultiPoly*> parts[] = {{"t", &m.t}, {"s", &m.s}, {"h", &m.h}, {"f", &m.f},
                                                            {"u", &m.u}, {"p", &m.p}, {"q", &m.q}};
  std::optional<Certificate> cert;
  std::vector<std::vector<std::string>> reduced;
  if (config.pinchuk_check) {
    cert = check_jacobian_product(f);
    for (std::size_t j = 0; j < 2; ++j) {
      auto sys = build_jacobian_product_system(f, j);
      std::vector<std::string> forms;
      for (const auto& form : sys->forms) forms.push_back(render(positive_normalized(form)));
      reduced.push_back(std::move(forms));
    }
  }

  if (config.format == Format::Json) {
    json doc;
    doc["degrees"] = json::object();
    for (const auto& [name, poly] : parts) doc["degrees"][name] = total_degree(*poly).to_string();
    doc["leading_form_p"] = render(leading_form(m.p));
    doc["leading_form_q"] = render(leading_form(m.q));
    if (cert) {
      doc["certificate"] = json::parse(to_json_string(*cert));
      doc["reduced_systems"] = reduced;
    }
    if (!config.output_path.empty()) doc["emitted"] = config.output_path;
    out << doc.dump(2) << "\n";
  } else {
    out << "Pinchuk map\n  degrees:";
    for (const auto& [name, poly] : parts) out << " " << name << "=" << total_degree(*poly).to_string();
    out << "\n  leading form of p: " << render(leading_form(m.p)) << "\n";
    out << "  leading form of q: " << render(leading_form(m.q)) << "\n";
    if (!config.output_path.empty()) out << "  wrote " << config.output_path << "\n";
    if (cert) {
      for (std::size_t j = 0; j < reduced.size(); ++j) {
        out << "  reduced system for component " << j + 1 << ":";
        for (const auto& s : reduced[j]) out << " " << s << " = 0;";
        out << "\n";
      }
      out << to_text(*cert);
    }
  }
  return cert && !cert->decisive() ? kInconclusive : kDecisive;
}

int run_emit(const RunConfig& config, std::ostream& out) {
  if (config.output_path.empty()) throw InputError("emit needs a destination path");
  ProblemSpec spec = builtin_problem(config.input);
  write_file(config.output_path, write_problem_file(spec, "builtin problem '" + config.input + "'"));
  out << "wrote " << config.output_path << "\n";
  return kDecisive;
}

}  // namespace

std::vector<Rational> parse_target(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in target '" + text + "'");
    out.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw std::invalid_argument("empty target");
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Analyze: return run_analyze(config, out);
      case Command::Fiber: return run_fiber(config, out, err);
      case Command::Leadform: return run_leadform(config, out);
      case Command::Necessary: return run_necessary(config, out);
      case Command::Pinchuk: return run_pinchuk(config, out);
      case Command::Emit: return run_emit(config, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace polysurj::cli
