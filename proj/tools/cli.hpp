#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "polysurj/rational.hpp"

namespace polysurj::cli {

enum class Command { Analyze, Fiber, Leadform, Necessary, Pinchuk, Emit };
enum class Format { Text, Json };
enum class NecessaryCheck { Column, JacobianProduct };

struct RunConfig {
  Command command = Command::Analyze;
  /// Problem file path, or "builtin:<name>". For `emit`, the builtin name.
  std::string input;
  /// Destination file for `emit` and `pinchuk --emit`.
  std::string output_path;
  std::optional<std::vector<Rational>> target;
  Format format = Format::Text;
  std::uint64_t seed = 0;
  bool assume_det_nonvanishing = false;
  NecessaryCheck necessary = NecessaryCheck::JacobianProduct;
  /// One-based column for the column check.
  std::size_t column = 1;
  /// `pinchuk --check thm18`
  bool pinchuk_check = false;
  /// Random fiber samples per Surjective verdict (maps of the plane only).
  std::size_t samples = 0;
};

enum ExitCode : int { kDecisive = 0, kInputError = 1, kInconclusive = 2 };

/// Parses "r1,r2,...". Throws std::invalid_argument.
std::vector<Rational> parse_target(const std::string& text);

/// Executes one command. Reports go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace polysurj::cli
