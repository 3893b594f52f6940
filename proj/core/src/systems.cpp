#include "polysurj/systems.hpp"

#include <stdexcept>

namespace polysurj {

bool HomogSystem::well_formed() const {
  if (forms.size() != degrees.size()) return false;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const auto& f = forms[i];
    if (f.nvars() != nvars) return false;
    if (f.is_zero()) {
      if (!degrees[i].is_neg_infinity()) return false;
      continue;
    }
    if (!is_homogeneous(f) || total_degree(f) != degrees[i]) return false;
  }
  return true;
}

namespace {

HomogSystem from_forms(std::size_t nvars, std::vector<MultiPoly> forms) {
  HomogSystem sys;
  sys.nvars = nvars;
  for (const auto& f : forms) sys.degrees.push_back(total_degree(f));
  sys.forms = std::move(forms);
  return sys;
}

}  // namespace

CombinedSystem build_combined(const ProblemSpec& spec, bool shift_by_target) {
  validate(spec);
  const std::size_t n = spec.nvars();
  std::vector<MultiPoly> bases;
  for (std::size_t j = 0; j < n; ++j) {
    MultiPoly b = spec.map[j];
    if (shift_by_target) b -= MultiPoly::constant(n, spec.target[j]);
    bases.push_back(power(b, spec.alpha[j]));
  }
  CombinedSystem sys;
  sys.nvars = n;
  sys.shifted_by_target = shift_by_target;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly eq(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (spec.gmatrix[i][j].is_zero()) continue;
      eq += bases[j] * spec.gmatrix[i][j];
    }
    sys.degrees.push_back(total_degree(eq));
    sys.equations.push_back(std::move(eq));
  }
  return sys;
}

HomogSystem induced_homogeneous(const CombinedSystem& sys) {
  std::vector<MultiPoly> forms;
  for (const auto& e : sys.equations) forms.push_back(leading_form(e));
  return from_forms(sys.nvars, std::move(forms));
}

HomogSystem homogenize(const CombinedSystem& sys) {
  const std::size_t n = sys.nvars;
  HomogSystem out;
  out.nvars = n + 1;
  for (std::size_t i = 0; i < sys.equations.size(); ++i) {
    const MultiPoly& e = sys.equations[i];
    if (e.is_zero())
      throw std::invalid_argument("homogenize: equation " + std::to_string(i + 1) +
                                  " is zero (degree -inf); the system is degenerate");
    const auto d = static_cast<std::uint32_t>(total_degree(e).value());
    std::vector<std::pair<Monomial, Rational>> terms;
    for (const auto& [m, c] : e.terms()) {
      Monomial h = m;
      h.push_back(d - static_cast<std::uint32_t>(monomial_degree(m)));
      terms.emplace_back(std::move(h), c);
    }
    out.forms.push_back(MultiPoly::from_terms(n + 1, terms));
    out.degrees.push_back(Degree(d));
  }
  return out;
}

MultiPoly specialize(const MultiPoly& p, std::size_t var, const Rational& value) {
  std::vector<MultiPoly> images;
  for (std::size_t v = 0; v < p.nvars(); ++v)
    images.push_back(v == var ? MultiPoly::constant(p.nvars(), value) : MultiPoly::variable(p.nvars(), v));
  return substitute(p, images);
}

MultiPoly drop_trailing_variable(const MultiPoly& p, const Rational& value) {
  if (p.nvars() < 2) throw std::invalid_argument("drop_trailing_variable: need at least two variables");
  const std::size_t n = p.nvars() - 1;
  std::vector<MultiPoly> images;
  for (std::size_t v = 0; v < n; ++v) images.push_back(MultiPoly::variable(n, v));
  images.push_back(MultiPoly::constant(n, value));
  return substitute(p, images);
}

Gated<TopPairSystem> build_top_pair_system(const ProblemSpec& spec) {
  validate(spec);
  const std::size_t n = spec.nvars();
  TopPairSystem out;
  out.system.nvars = n;
  for (std::size_t i = 0; i < n; ++i) {
    Degree best = Degree::neg_infinity();
    std::size_t best_j = 0;
    std::size_t count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      Degree d = static_cast<std::int64_t>(spec.alpha[j]) * total_degree(spec.map[j]) +
                 total_degree(spec.gmatrix[i][j]);
      if (j == 0 || d > best) {
        best = d;
        best_j = j;
        count = 1;
      } else if (d == best) {
        ++count;
      }
    }
    const auto row = static_cast<std::ptrdiff_t>(i);
    if (best.is_neg_infinity())
      return NotApplicable{"row " + std::to_string(i + 1) + ": every entry has degree -inf", row};
    if (count > 1)
      return NotApplicable{"row " + std::to_string(i + 1) + ": maximal degree " + best.to_string() +
                               " is attained " + std::to_string(count) + " times (tie)",
                           row};
    if (!best.is_odd())
      return NotApplicable{"row " + std::to_string(i + 1) + ": maximal degree " + best.to_string() +
                               " is even",
                           row};
    MultiPoly form = leading_form(spec.map[best_j]) * leading_form(spec.gmatrix[i][best_j]);
    out.system.degrees.push_back(total_degree(form));
    out.system.forms.push_back(std::move(form));
    out.selector.push_back(best_j);
    out.row_maxima.push_back(best);
  }
  return out;
}

Gated<HomogSystem> build_column_system(const PolyMatrix& gmatrix, std::size_t j0) {
  const std::size_t n = gmatrix.size();
  if (n == 0) throw std::invalid_argument("build_column_system: empty matrix");
  if (j0 >= n) throw std::out_of_range("build_column_system: column index out of range");
  std::vector<MultiPoly> forms;
  for (std::size_t i = 0; i < n; ++i) {
    if (gmatrix[i].size() != n) throw std::invalid_argument("build_column_system: matrix is not square");
    Degree d = total_degree(gmatrix[i][j0]);
    if (!d.is_odd())
      return NotApplicable{"column " + std::to_string(j0 + 1) + ": entry in row " + std::to_string(i + 1) +
                               " has degree " + d.to_string() + ", which is not odd",
                           static_cast<std::ptrdiff_t>(i)};
    forms.push_back(leading_form(gmatrix[i][j0]));
  }
  return from_forms(gmatrix[0][0].nvars(), std::move(forms));
}

Gated<HomogSystem> build_jacobian_product_system(const PolyMap& f, std::size_t j) {
  if (j >= f.size()) throw std::out_of_range("build_jacobian_product_system: component index out of range");
  if (f[j].is_constant())
    return NotApplicable{"component p" + std::to_string(j + 1) + " is constant",
                         static_cast<std::ptrdiff_t>(j)};
  const MultiPoly top = leading_form(f[j]);
  std::vector<MultiPoly> forms;
  for (std::size_t i = 0; i < f.nvars(); ++i)
    forms.push_back(top * leading_form(partial_derivative(f[j], i)));
  return from_forms(f.nvars(), std::move(forms));
}

Gated<HomogSystem> build_power_gradient_system(const PolyMap& f, const std::vector<unsigned>& alpha) {
  const std::size_t n = f.nvars();
  if (alpha.size() != n) throw std::invalid_argument("build_power_gradient_system: alpha length mismatch");
  for (std::size_t j = 0; j < n; ++j)
    if (alpha[j] < 2 || alpha[j] % 2 != 0)
      return NotApplicable{"alpha_" + std::to_string(j + 1) + " = " + std::to_string(alpha[j]) +
                               " is not an even integer >= 2",
                           static_cast<std::ptrdiff_t>(j)};
  std::vector<MultiPoly> weighted;  // alpha_j * p_j^(alpha_j - 1)
  for (std::size_t j = 0; j < n; ++j) weighted.push_back(Rational(alpha[j]) * power(f[j], alpha[j] - 1));
  std::vector<MultiPoly> forms;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly row(n);
    for (std::size_t j = 0; j < n; ++j) row += weighted[j] * partial_derivative(f[j], i);
    forms.push_back(leading_form(row));
  }
  return from_forms(n, std::move(forms));
}

HomogSystem leading_form_system(const PolyMap& f) {
  std::vector<MultiPoly> forms;
  for (const auto& p : f.components()) forms.push_back(leading_form(p));
  return from_forms(f.nvars(), std::move(forms));
}

}  // namespace polysurj
