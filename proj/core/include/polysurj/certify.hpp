#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polysurj/multipoly.hpp"
#include "polysurj/parser.hpp"
#include "polysurj/realalg.hpp"
#include "polysurj/systems.hpp"

namespace polysurj {

/// What is known about the sign of det(g) on R^n.
struct DetStatus {
  enum class Kind {
    ConstantNonzero,         // det is a nonzero constant `value`
    PositiveByMonomialTest,  // c0 + sum c_k m_k, even monomials, all c of one sign
    VanishWitness,           // det(point) == 0 exactly
    SignChange,              // det(point) and det(other_point) have opposite signs
    AssumedNonvanishing,     // caller asserted it
    Unknown,
  };

  Kind kind = Kind::Unknown;
  MultiPoly determinant{1};
  std::optional<Rational> value;
  std::vector<Rational> point;
  std::vector<Rational> other_point;

  /// Never vanishes on R^n, either proven or assumed.
  bool accepted() const {
    return kind == Kind::ConstantNonzero || kind == Kind::PositiveByMonomialTest ||
           kind == Kind::AssumedNonvanishing;
  }
  /// Proven to vanish somewhere on R^n.
  bool vanishes() const { return kind == Kind::VanishWitness || kind == Kind::SignChange; }
};

std::string to_string(DetStatus::Kind k);

/// Expands det(g) and classifies it. Throws std::invalid_argument for a
/// non-square or empty matrix.
DetStatus det_status(const PolyMatrix& g, bool assume_nonvanishing);

/// Result of one gate or sub-test inside a pipeline.
struct SubVerdict {
  enum class Outcome { Passed, Failed, Inconclusive, Info };
  std::string name;
  Outcome outcome = Outcome::Info;
  std::string detail;
  /// Hypotheses of the claimed conclusion; Info entries are never gates.
  bool gate = true;
};

std::string to_string(SubVerdict::Outcome o);

struct SystemRecord {
  std::string name;
  std::size_t nvars = 0;
  std::vector<std::string> forms;  // rendered polynomials
};

struct Certificate {
  enum class Verdict {
    Surjective,
    OddFiberParity,
    NecessaryConditionHolds,
    TheoremViolatedOrHypothesisFails,
    NotApplicable,
    Inconclusive,
  };

  Verdict verdict = Verdict::Inconclusive;
  std::string via;
  std::string reason;
  /// Nonzero solution of the tested homogeneous system, when one was found.
  std::vector<Rational> witness;
  std::vector<std::string> assumptions;

  std::vector<SystemRecord> systems;
  std::vector<SubVerdict> subverdicts;
  std::optional<DetStatus> det;
  std::optional<Integer> bezout;
  /// Set when the complex only-zero test also justified the fiber-parity
  /// conclusion alongside a surjectivity verdict.
  bool parity_claim = false;
  /// Whether det(g) is a nonzero constant (needed for the infinite-fiber
  /// branch of the parity statement). Only set by parity pipelines.
  std::optional<bool> det_is_unit;

  bool decisive() const { return verdict != Verdict::Inconclusive; }
};

std::string to_string(Certificate::Verdict v);
std::optional<Certificate::Verdict> verdict_from_string(const std::string& s);

/// Throws std::logic_error when a Surjective or OddFiberParity verdict sits
/// on top of a gate that did not pass. Every pipeline calls it before
/// returning and deserialization calls it on every certificate.
void enforce_evidence(const Certificate& c);

/// Product of the component degrees is odd and the leading forms have only
/// the zero real solution.
Certificate certify_degree_product(const PolyMap& f);

/// The unique odd maximum per row selects one p_j and one g_ij; the
/// resulting products of leading forms must have only the zero real solution.
Certificate certify_top_pair(const ProblemSpec& spec);

/// Every combined equation has odd degree, det(g) never vanishes, and the
/// induced homogeneous system has only the zero real solution.
Certificate certify_combined(const ProblemSpec& spec);

/// Parity of real fibers: odd combined degrees, only the zero complex
/// solution, det(g) nonvanishing. Reports the Bezout number.
Certificate certify_fiber_parity(const ProblemSpec& spec, const std::vector<Rational>& target);

/// Even exponents alpha >= 2, det J(f) nonvanishing, and the leading forms
/// of sum_j alpha_j p_j^(alpha_j - 1) grad p_j have only the zero real solution.
Certificate certify_power_gradient(const PolyMap& f, const std::vector<unsigned>& alpha, bool assume_jacobian);

/// Necessary condition on a column j0 (zero-based) of odd-degree entries:
/// when det(g) never vanishes, the leading forms of that column have a
/// nonzero real common zero.
Certificate check_column(const PolyMatrix& g, std::size_t j0, bool assume_nonvanishing = false);

/// Necessary condition for det J(f) to never vanish: for every j the forms
/// leading_form(p_j) * leading_form(dp_j/dX_i) have a nonzero real zero.
Certificate check_jacobian_product(const PolyMap& f);

/// Sufficient-condition pipeline in order: degree product, unique top pair,
/// combined system, power gradient; followed by the fiber-parity check at
/// the problem target. Every certificate is returned.
std::vector<Certificate> analyze(const ProblemSpec& spec);

/// Index of the first Surjective certificate, if any.
std::optional<std::size_t> first_surjective(const std::vector<Certificate>& certs);

/// Product of the combined-equation degrees. Throws std::invalid_argument
/// when some equation is zero or constant.
Integer bezout_number(const ProblemSpec& spec);

}  // namespace polysurj
