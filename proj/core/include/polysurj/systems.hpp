#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "polysurj/multipoly.hpp"
#include "polysurj/parser.hpp"

namespace polysurj {

/// A list of homogeneous forms with their recorded degrees.
struct HomogSystem {
  std::size_t nvars = 0;
  std::vector<MultiPoly> forms;
  std::vector<Degree> degrees;

  /// Each nonzero form is homogeneous of its recorded degree and zero
  /// forms carry -infinity.
  bool well_formed() const;
};

/// Equations sum_j (p_j - a_j)^alpha_j * g_ij = 0, i = 1..n.
struct CombinedSystem {
  std::size_t nvars = 0;
  std::vector<MultiPoly> equations;
  std::vector<Degree> degrees;
  bool shifted_by_target = false;
};

/// A criterion's applicability gate failed. `row` is the offending
/// equation/row/component index (zero-based) when there is one.
struct NotApplicable {
  std::string reason;
  std::ptrdiff_t row = -1;
};

/// Either a built system or the reason it could not be built.
template <typename T>
class Gated {
 public:
  Gated(T value) : state_(std::move(value)) {}
  Gated(NotApplicable na) : state_(std::move(na)) {}

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }
  const T& value() const { return std::get<T>(state_); }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }
  const NotApplicable& failure() const { return std::get<NotApplicable>(state_); }

 private:
  std::variant<T, NotApplicable> state_;
};

/// Builds the combined system; with `shift_by_target` each p_j is replaced
/// by p_j - target_j first.
CombinedSystem build_combined(const ProblemSpec& spec, bool shift_by_target);

/// Leading forms of the combined equations.
HomogSystem induced_homogeneous(const CombinedSystem& sys);

/// Homogenizes each equation with one extra variable X_{n+1}:
/// X_{n+1}^{d_i} * e_i(X/X_{n+1}). Throws std::invalid_argument when an
/// equation is zero (its degree is -infinity).
HomogSystem homogenize(const CombinedSystem& sys);

/// Sets one variable to a constant and returns polynomials in the same
/// ring (used to check homogenization against X_{n+1} = 0 and 1).
MultiPoly specialize(const MultiPoly& p, std::size_t var, const Rational& value);

/// Restricts p to the first `nvars` variables after setting the rest to 0
/// or 1 (drops trailing variables).
MultiPoly drop_trailing_variable(const MultiPoly& p, const Rational& value);

/// The top-pair system: for each row i the index j(i) maximizing
/// alpha_j * deg p_j + deg g_ij must be unique and the maximum odd; form i
/// is then leading_form(p_j(i)) * leading_form(g_i,j(i)).
struct TopPairSystem {
  HomogSystem system;
  std::vector<std::size_t> selector;  // j(i), zero-based
  std::vector<Degree> row_maxima;
};
Gated<TopPairSystem> build_top_pair_system(const ProblemSpec& spec);

/// Leading forms of column j0 of g; every entry of the column must have
/// odd degree.
Gated<HomogSystem> build_column_system(const PolyMatrix& gmatrix, std::size_t j0);

/// Form i = leading_form(p_j) * leading_form(dp_j/dX_i). Zero partials give
/// zero forms of degree -infinity. Not applicable to constant p_j.
Gated<HomogSystem> build_jacobian_product_system(const PolyMap& f, std::size_t j);

/// Form i = leading_form(sum_j alpha_j p_j^(alpha_j - 1) dp_j/dX_i). Every
/// alpha_j must be even and >= 2.
Gated<HomogSystem> build_power_gradient_system(const PolyMap& f,
                                               const std::vector<unsigned>& alpha);

/// Leading forms of the components of f.
HomogSystem leading_form_system(const PolyMap& f);

}  // namespace polysurj
