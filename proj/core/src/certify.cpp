#include "polysurj/certify.hpp"

#include <algorithm>
#include <stdexcept>

namespace polysurj {

std::string to_string(DetStatus::Kind k) {
  switch (k) {
    case DetStatus::Kind::ConstantNonzero: return "ConstantNonzero";
    case DetStatus::Kind::PositiveByMonomialTest: return "PositiveByMonomialTest";
    case DetStatus::Kind::VanishWitness: return "VanishWitness";
    case DetStatus::Kind::SignChange: return "SignChange";
    case DetStatus::Kind::AssumedNonvanishing: return "AssumedNonvanishing";
    case DetStatus::Kind::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(SubVerdict::Outcome o) {
  switch (o) {
    case SubVerdict::Outcome::Passed: return "passed";
    case SubVerdict::Outcome::Failed: return "failed";
    case SubVerdict::Outcome::Inconclusive: return "inconclusive";
    case SubVerdict::Outcome::Info: return "info";
  }
  return "?";
}

namespace {

const std::pair<Certificate::Verdict, const char*> kVerdictNames[] = {
    {Certificate::Verdict::Surjective, "Surjective"},
    {Certificate::Verdict::OddFiberParity, "OddFiberParity"},
    {Certificate::Verdict::NecessaryConditionHolds, "NecessaryConditionHolds"},
    {Certificate::Verdict::TheoremViolatedOrHypothesisFails, "TheoremViolatedOrHypothesisFails"},
    {Certificate::Verdict::NotApplicable, "NotApplicable"},
    {Certificate::Verdict::Inconclusive, "Inconclusive"},
};

}  // namespace

std::string to_string(Certificate::Verdict v) {
  for (const auto& [verdict, name] : kVerdictNames)
    if (verdict == v) return name;
  return "?";
}

std::optional<Certificate::Verdict> verdict_from_string(const std::string& s) {
  for (const auto& [verdict, name] : kVerdictNames)
    if (s == name) return verdict;
  return std::nullopt;
}

void enforce_evidence(const Certificate& c) {
  using V = Certificate::Verdict;
  if (c.verdict != V::Surjective && c.verdict != V::OddFiberParity) return;
  for (const auto& s : c.subverdicts) {
    if (!s.gate || s.outcome == SubVerdict::Outcome::Passed || s.outcome == SubVerdict::Outcome::Info) continue;
    throw std::logic_error(to_string(c.verdict) + " claimed via " + c.via + " but gate '" + s.name + "' is " +
                           to_string(s.outcome));
  }
  if (c.det && !c.det->accepted())
    throw std::logic_error(to_string(c.verdict) + " claimed via " + c.via + " with determinant status " +
                           to_string(c.det->kind));
}

// ---------------------------------------------------------------------------
// Determinant classification

namespace {

bool all_even(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e % 2 == 0; });
}

bool one_signed_even_monomials(const MultiPoly& d) {
  const int s = sgn(d.constant_term());
  if (s == 0) return false;
  for (const auto& [m, c] : d.terms())
    if (!all_even(m) || sgn(c) != s) return false;
  return true;
}

// Restriction of p to the line where variable `var` is free and the others
// take the given values.
UniPoly restrict_to_line(const MultiPoly& p, std::size_t var, const std::vector<Rational>& point) {
  std::vector<MultiPoly> images;
  for (std::size_t v = 0; v < p.nvars(); ++v)
    images.push_back(v == var ? MultiPoly::variable(1, 0) : MultiPoly::constant(1, point[v]));
  return to_unipoly(substitute(p, images));
}

// Searches lines parallel to the axes through small integer points for an
// exact rational zero, else for a sign change.
void search_determinant_zero(const MultiPoly& d, DetStatus& out) {
  const std::size_t n = d.nvars();
  const Rational values[] = {0, 1, -1, 2, -2};
  constexpr std::size_t kValues = 5;
  constexpr std::size_t kMaxLinesPerAxis = 625;
  std::optional<std::vector<Rational>> positive, negative;

  auto note_sign = [&](const std::vector<Rational>& pt, int s) {
    if (s > 0 && !positive) positive = pt;
    if (s < 0 && !negative) negative = pt;
  };

  for (std::size_t var = 0; var < n; ++var) {
    std::vector<std::size_t> idx(n, 0);
    for (std::size_t line = 0; line < kMaxLinesPerAxis; ++line) {
      std::vector<Rational> pt(n);
      for (std::size_t v = 0; v < n; ++v) pt[v] = v == var ? Rational(0) : values[idx[v]];
      UniPoly u = restrict_to_line(d, var, pt);
      if (u.is_zero()) {
        out.kind = DetStatus::Kind::VanishWitness;
        out.point = pt;
        return;
      }
      for (const auto& t : values) {
        pt[var] = t;
        note_sign(pt, u.sign_at(t));
      }
      UniPoly s = squarefree_part(u);
      auto roots = isolate_real_roots(s);
      for (auto& iso : roots) {
        if (auto r = exact_rational_root(s, iso)) {
          out.kind = DetStatus::Kind::VanishWitness;
          out.point = pt;
          out.point[var] = *r;
          return;
        }
        pt[var] = iso.lo;
        note_sign(pt, u.sign_at(iso.lo));
        pt[var] = iso.hi;
        note_sign(pt, u.sign_at(iso.hi));
      }
      // Next line: odometer over the fixed coordinates.
      std::size_t v = 0;
      for (; v < n; ++v) {
        if (v == var) continue;
        if (++idx[v] < kValues) break;
        idx[v] = 0;
      }
      if (v == n) break;
    }
  }
  if (positive && negative) {
    out.kind = DetStatus::Kind::SignChange;
    out.point = *positive;
    out.other_point = *negative;
  }
}

}  // namespace

DetStatus det_status(const PolyMatrix& g, bool assume_nonvanishing) {
  if (g.empty()) throw std::invalid_argument("det_status: empty matrix");
  for (const auto& row : g)
    if (row.size() != g.size()) throw std::invalid_argument("det_status: matrix is not square");
  DetStatus out;
  out.determinant = determinant(g);
  const MultiPoly& d = out.determinant;
  const std::size_t n = d.nvars();
  if (d.is_constant()) {
    if (d.is_zero()) {
      out.kind = DetStatus::Kind::VanishWitness;
      out.point.assign(n, Rational(0));
    } else {
      out.kind = DetStatus::Kind::ConstantNonzero;
      out.value = d.constant_term();
    }
    return out;
  }
  if (one_signed_even_monomials(d)) {
    out.kind = DetStatus::Kind::PositiveByMonomialTest;
    return out;
  }
  search_determinant_zero(d, out);
  if (out.kind != DetStatus::Kind::Unknown) return out;
  if (assume_nonvanishing) out.kind = DetStatus::Kind::AssumedNonvanishing;
  return out;
}

// ---------------------------------------------------------------------------
// Pipelines

namespace {

using Verdict = Certificate::Verdict;
using Outcome = SubVerdict::Outcome;

SystemRecord record(std::string name, const HomogSystem& sys) {
  SystemRecord r{std::move(name), sys.nvars, {}};
  for (const auto& f : sys.forms) r.forms.push_back(render(f));
  return r;
}

SystemRecord record(std::string name, const CombinedSystem& sys) {
  SystemRecord r{std::move(name), sys.nvars, {}};
  for (const auto& e : sys.equations) r.forms.push_back(render(e));
  return r;
}

std::string render_point(const std::vector<Rational>& pt) {
  std::string s = "(";
  for (std::size_t i = 0; i < pt.size(); ++i) s += (i ? ", " : "") + to_string(pt[i]);
  return s + ")";
}

std::string describe(const ZeroSolutionVerdict& v) {
  std::string s = to_string(v.status) + " over " + to_string(v.field);
  if (!v.point.empty()) s += " at " + render_point(v.point);
  if (!v.reason.empty()) s += ": " + v.reason;
  return s;
}

Certificate finish(Certificate c, Verdict v, std::string reason) {
  c.verdict = v;
  c.reason = std::move(reason);
  enforce_evidence(c);
  return c;
}

void gate(Certificate& c, std::string name, bool passed, std::string detail) {
  c.subverdicts.push_back({std::move(name), passed ? Outcome::Passed : Outcome::Failed, std::move(detail), true});
}

void info(Certificate& c, std::string name, std::string detail) {
  c.subverdicts.push_back({std::move(name), Outcome::Info, std::move(detail), false});
}

std::string det_detail(const DetStatus& d) {
  std::string s = to_string(d.kind) + "; det = " + render(d.determinant);
  if (d.kind == DetStatus::Kind::VanishWitness) s += "; zero at " + render_point(d.point);
  if (d.kind == DetStatus::Kind::SignChange)
    s += "; positive at " + render_point(d.point) + ", negative at " + render_point(d.other_point);
  return s;
}

// Records the determinant gate. Returns a finished certificate when the
// gate fails.
std::optional<Certificate> determinant_gate(Certificate& c, const PolyMatrix& g, bool assume) {
  DetStatus d = det_status(g, assume);
  c.det = d;
  if (d.accepted()) {
    if (d.kind == DetStatus::Kind::AssumedNonvanishing)
      c.assumptions.push_back("det never vanishes on R^n (assumed by the caller)");
    gate(c, "determinant-nonvanishing", true, det_detail(d));
    return std::nullopt;
  }
  if (d.vanishes()) {
    gate(c, "determinant-nonvanishing", false, det_detail(d));
    return finish(c, Verdict::NotApplicable, "the determinant vanishes somewhere on R^n");
  }
  c.subverdicts.push_back({"determinant-nonvanishing", Outcome::Inconclusive, det_detail(d), true});
  return finish(c, Verdict::Inconclusive,
                "could not establish that the determinant never vanishes (it may be assumed explicitly)");
}

// Runs the real only-zero test; returns a finished certificate unless it
// succeeded.
std::optional<Certificate> real_only_zero_gate(Certificate& c, const HomogSystem& sys, const std::string& system_name) {
  ZeroSolutionVerdict v = real_only_zero(sys);
  if (v.only_zero()) {
    gate(c, system_name + " only-zero over R", true, describe(v));
    return std::nullopt;
  }
  if (v.has_witness()) {
    gate(c, system_name + " only-zero over R", false, describe(v));
    c.witness = v.point;
    return finish(c, Verdict::NotApplicable, system_name + " has a nonzero real solution");
  }
  c.subverdicts.push_back({system_name + " only-zero over R", Outcome::Inconclusive, describe(v), true});
  return finish(c, Verdict::Inconclusive, "could not decide whether " + system_name + " has only the zero solution");
}

Integer degree_product(const std::vector<Degree>& degrees) {
  Integer b = 1;
  for (const auto& d : degrees) b *= static_cast<long>(d.value());
  return b;
}

// The optional fiber-parity add-on of a surjectivity certificate.
void parity_addon(Certificate& c, const HomogSystem& sys, const std::vector<Degree>& degrees) {
  ZeroSolutionVerdict v = complex_only_zero(sys);
  info(c, "complex only-zero", describe(v));
  if (!v.only_zero()) return;
  c.bezout = degree_product(degrees);
  c.parity_claim = true;
}

}  // namespace

Certificate certify_degree_product(const PolyMap& f) {
  Certificate c;
  c.via = "degree-product";
  const std::size_t n = f.nvars();
  std::vector<Degree> degrees;
  std::string listing;
  bool odd = true;
  for (std::size_t j = 0; j < n; ++j) {
    Degree d = total_degree(f[j]);
    degrees.push_back(d);
    listing += (j ? ", " : "") + d.to_string();
    odd = odd && d.is_odd();
  }
  gate(c, "odd degree product", odd, "component degrees (" + listing + ")");
  if (!odd) return finish(c, Verdict::NotApplicable, "the product of the component degrees is not odd");

  HomogSystem sys = leading_form_system(f);
  c.systems.push_back(record("leading forms", sys));
  if (auto done = real_only_zero_gate(c, sys, "leading forms")) return *done;
  parity_addon(c, sys, degrees);
  return finish(c, Verdict::Surjective, "the leading forms have only the zero real solution");
}

Certificate certify_top_pair(const ProblemSpec& spec) {
  validate(spec);
  Certificate c;
  c.via = "unique-top-pair";
  auto built = build_top_pair_system(spec);
  if (!built) {
    gate(c, "unique odd row maximum", false, built.failure().reason);
    return finish(c, Verdict::NotApplicable, built.failure().reason);
  }
  std::string rows;
  for (std::size_t i = 0; i < built->selector.size(); ++i)
    rows += (i ? ", " : "") + std::string("row ") + std::to_string(i + 1) + " -> j=" +
            std::to_string(built->selector[i] + 1) + " (degree " + built->row_maxima[i].to_string() + ")";
  gate(c, "unique odd row maximum", true, rows);
  c.systems.push_back(record("top-pair forms", built->system));
  if (auto done = determinant_gate(c, spec.gmatrix, spec.assume_det_nonvanishing)) return *done;
  if (auto done = real_only_zero_gate(c, built->system, "top-pair forms")) return *done;
  parity_addon(c, built->system, built->row_maxima);
  return finish(c, Verdict::Surjective, "the top-pair forms have only the zero real solution");
}

namespace {

// Shared gate of the combined-system pipelines: every equation has odd
// degree.
std::optional<Certificate> odd_equations_gate(Certificate& c, const CombinedSystem& sys) {
  std::string listing;
  std::optional<std::size_t> bad;
  for (std::size_t i = 0; i < sys.degrees.size(); ++i) {
    listing += (i ? ", " : "") + sys.degrees[i].to_string();
    if (!bad && !sys.degrees[i].is_odd()) bad = i;
  }
  gate(c, "odd equation degrees", !bad, "combined degrees (" + listing + ")");
  if (bad)
    return finish(c, Verdict::NotApplicable,
                  "equation " + std::to_string(*bad + 1) + " has degree " + sys.degrees[*bad].to_string() +
                      ", not odd");
  return std::nullopt;
}

}  // namespace

Certificate certify_combined(const ProblemSpec& spec) {
  validate(spec);
  Certificate c;
  c.via = "odd-combined-system";
  CombinedSystem combined = build_combined(spec, false);
  c.systems.push_back(record("combined equations", combined));
  if (auto done = odd_equations_gate(c, combined)) return *done;
  HomogSystem induced = induced_homogeneous(combined);
  c.systems.push_back(record("induced homogeneous", induced));
  if (auto done = determinant_gate(c, spec.gmatrix, spec.assume_det_nonvanishing)) return *done;
  if (auto done = real_only_zero_gate(c, induced, "induced homogeneous")) return *done;
  return finish(c, Verdict::Surjective, "the induced homogeneous system has only the zero real solution");
}

Certificate certify_fiber_parity(const ProblemSpec& spec, const std::vector<Rational>& target) {
  validate(spec);
  if (target.size() != spec.nvars()) throw std::invalid_argument("certify_fiber_parity: target has the wrong length");
  ProblemSpec shifted = spec;
  shifted.target = target;
  Certificate c;
  c.via = "odd-fiber-parity";
  info(c, "target", render_point(target));
  CombinedSystem combined = build_combined(shifted, true);
  c.systems.push_back(record("combined equations (shifted)", combined));
  if (auto done = odd_equations_gate(c, combined)) return *done;
  HomogSystem induced = induced_homogeneous(combined);
  c.systems.push_back(record("induced homogeneous", induced));
  if (auto done = determinant_gate(c, spec.gmatrix, spec.assume_det_nonvanishing)) return *done;

  ZeroSolutionVerdict v = complex_only_zero(induced);
  if (!v.only_zero()) {
    const bool witness = v.has_witness();
    c.subverdicts.push_back(
        {"induced homogeneous only-zero over C", witness ? Outcome::Failed : Outcome::Inconclusive, describe(v), true});
    c.witness = v.point;
    return finish(c, witness ? Verdict::NotApplicable : Verdict::Inconclusive,
                  witness ? "the induced homogeneous system has a nonzero complex solution"
                          : "could not decide the complex only-zero question");
  }
  gate(c, "induced homogeneous only-zero over C", true, describe(v));
  c.bezout = degree_product(combined.degrees);
  c.det_is_unit = c.det->kind == DetStatus::Kind::ConstantNonzero;
  info(c, "infinite-fiber branch",
       *c.det_is_unit ? "det is a nonzero constant: an infinite complex fiber is possible only as stated"
                      : "det is not a nonzero constant: only the odd real count branch is justified");
  return finish(c, Verdict::OddFiberParity,
                "every finite real fiber has odd cardinality (Bezout number " + c.bezout->get_str() + ")");
}

Certificate certify_power_gradient(const PolyMap& f, const std::vector<unsigned>& alpha, bool assume_jacobian) {
  Certificate c;
  c.via = "even-power-gradient";
  auto built = build_power_gradient_system(f, alpha);
  if (!built) {
    gate(c, "even exponents", false, built.failure().reason);
    return finish(c, Verdict::NotApplicable, built.failure().reason);
  }
  std::string listing;
  for (std::size_t j = 0; j < alpha.size(); ++j) listing += (j ? ", " : "") + std::to_string(alpha[j]);
  gate(c, "even exponents", true, "alpha = (" + listing + ")");
  c.systems.push_back(record("power-gradient forms", *built));
  if (auto done = determinant_gate(c, jacobian_matrix(f), assume_jacobian)) return *done;
  if (auto done = real_only_zero_gate(c, *built, "power-gradient forms")) return *done;
  return finish(c, Verdict::Surjective, "the power-gradient forms have only the zero real solution");
}

Certificate check_column(const PolyMatrix& g, std::size_t j0, bool assume_nonvanishing) {
  Certificate c;
  c.via = "odd-column";
  auto built = build_column_system(g, j0);
  if (!built) {
    gate(c, "odd column degrees", false, built.failure().reason);
    return finish(c, Verdict::NotApplicable, built.failure().reason);
  }
  gate(c, "odd column degrees", true, "column " + std::to_string(j0 + 1));
  c.systems.push_back(record("column leading forms", *built));
  DetStatus d = det_status(g, assume_nonvanishing);
  info(c, "determinant", det_detail(d));
  c.det = d;
  ZeroSolutionVerdict v = real_only_zero(*built);
  info(c, "column leading forms over R", describe(v));
  if (v.has_witness()) {
    c.witness = v.point;
    return finish(c, Verdict::NecessaryConditionHolds, "the column leading forms have a nonzero real solution");
  }
  if (v.only_zero())
    return finish(c, Verdict::TheoremViolatedOrHypothesisFails,
                  "the column leading forms have only the zero real solution, so det(g) must vanish somewhere on R^n");
  return finish(c, Verdict::Inconclusive, "could not decide the column system");
}

Certificate check_jacobian_product(const PolyMap& f) {
  Certificate c;
  c.via = "jacobian-product";
  const std::size_t n = f.nvars();
  std::optional<std::size_t> violated, undecided, constant;
  for (std::size_t j = 0; j < n; ++j) {
    auto built = build_jacobian_product_system(f, j);
    const std::string name = "component " + std::to_string(j + 1);
    if (!built) {
      info(c, name, built.failure().reason);
      if (!constant) constant = j;
      continue;
    }
    c.systems.push_back(record("jacobian-product forms, " + name, *built));
    ZeroSolutionVerdict v = real_only_zero(*built);
    info(c, name + " over R", describe(v));
    if (v.has_witness()) {
      if (c.witness.empty()) c.witness = v.point;
    } else if (v.only_zero()) {
      if (!violated) violated = j;
    } else if (!undecided) {
      undecided = j;
    }
  }
  DetStatus d = det_status(jacobian_matrix(f), false);
  info(c, "jacobian determinant", det_detail(d));
  c.det = d;
  if (violated) {
    c.witness.clear();
    return finish(c, Verdict::TheoremViolatedOrHypothesisFails,
                  "component " + std::to_string(*violated + 1) +
                      ": the forms have only the zero real solution, so det J(f) must vanish somewhere on R^n");
  }
  if (constant)
    return finish(c, Verdict::NotApplicable,
                  "component " + std::to_string(*constant + 1) + " is constant, so det J(f) is identically zero");
  if (undecided) {
    c.witness.clear();
    return finish(c, Verdict::Inconclusive, "component " + std::to_string(*undecided + 1) + " could not be decided");
  }
  return finish(c, Verdict::NecessaryConditionHolds, "every component's forms have a nonzero real solution");
}

std::vector<Certificate> analyze(const ProblemSpec& spec) {
  validate(spec);
  std::vector<Certificate> out;
  out.push_back(certify_degree_product(spec.map));
  out.push_back(certify_top_pair(spec));
  out.push_back(certify_combined(spec));
  std::vector<unsigned> alpha = spec.alpha;
  if (!std::all_of(alpha.begin(), alpha.end(), [](unsigned a) { return a >= 2 && a % 2 == 0; }))
    alpha.assign(spec.nvars(), 2);
  out.push_back(certify_power_gradient(spec.map, alpha, spec.assume_det_nonvanishing));
  out.push_back(certify_fiber_parity(spec, spec.target));
  return out;
}

std::optional<std::size_t> first_surjective(const std::vector<Certificate>& certs) {
  for (std::size_t i = 0; i < certs.size(); ++i)
    if (certs[i].verdict == Certificate::Verdict::Surjective) return i;
  return std::nullopt;
}

Integer bezout_number(const ProblemSpec& spec) {
  CombinedSystem sys = build_combined(spec, false);
  for (std::size_t i = 0; i < sys.degrees.size(); ++i) {
    const Degree& d = sys.degrees[i];
    if (d.is_neg_infinity() || d.value() == 0)
      throw std::invalid_argument("bezout_number: combined equation " + std::to_string(i + 1) +
                                  " is zero or constant");
  }
  return degree_product(sys.degrees);
}

}  // namespace polysurj
