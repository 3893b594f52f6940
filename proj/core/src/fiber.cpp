#include "polysurj/fiber.hpp"

#include <algorithm>
#include <optional>

#include "bareiss.hpp"

namespace polysurj {

std::string to_string(FiberReport::Status s) {
  switch (s) {
    case FiberReport::Status::Finite: return "Finite";
    case FiberReport::Status::InfiniteOverC: return "InfiniteOverC";
    case FiberReport::Status::Empty: return "Empty";
  }
  return "?";
}

std::string to_string(FiberReport::Parity p) {
  switch (p) {
    case FiberReport::Parity::Odd: return "Odd";
    case FiberReport::Parity::Even: return "Even";
    case FiberReport::Parity::NotApplicable: return "N/A";
  }
  return "?";
}

UniPoly eliminate(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
  if (p.nvars() != 2 || q.nvars() != 2) throw std::invalid_argument("eliminate: expected two variables");
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("eliminate: zero input");
  auto pc = coefficients_in(p, var);
  auto qc = coefficients_in(q, var);
  std::vector<UniPoly> pd(pc.rbegin(), pc.rend());
  std::vector<UniPoly> qd(qc.rbegin(), qc.rend());
  return detail::bareiss_determinant(detail::sylvester_matrix(pd, qd), UniPoly::constant(1));
}

namespace {

// Bivariate polynomial as rows by power of x; row i is the coefficient of
// x^i, a polynomial in y.
using Rows = std::vector<UniPoly>;

Rows to_rows(const MultiPoly& p) { return p.is_zero() ? Rows{} : coefficients_in(p, 0); }

// p(x + x0, y + y0)
Rows taylor_shift2(const Rows& p, const Rational& x0, const Rational& y0) {
  Rows acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    // acc = acc * (x + x0) + row
    Rows next(acc.size() + 1);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k + 1] += acc[k];
      next[k] += acc[k] * x0;
    }
    next[0] += taylor_shift(*it, y0);
    acc = std::move(next);
  }
  return acc;
}

Rational coeff(const Rows& r, std::size_t i, std::size_t j) { return i < r.size() ? r[i].coeff(j) : Rational(0); }

Rows combine(const Rational& a, const Rows& p, const Rational& b, const Rows& q) {
  Rows out(std::max(p.size(), q.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < p.size()) out[i] += p[i] * a;
    if (i < q.size()) out[i] += q[i] * b;
  }
  return out;
}

std::vector<Rational> powers(const Rational& r, std::size_t n) {
  std::vector<Rational> out(n + 1);
  out[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) out[k] = out[k - 1] * r;
  return out;
}

std::size_t max_row_size(const Rows& r) {
  std::size_t m = 0;
  for (const auto& row : r) m = std::max(m, row.size());
  return m;
}

// Sign of a shifted polynomial over [-rx, rx] x [-ry, ry], or 0 when the
// enclosure contains zero.
int box_sign(const Rows& shifted, const Rational& rx, const Rational& ry) {
  const auto px = powers(rx, shifted.size());
  const auto py = powers(ry, max_row_size(shifted));
  Rational rest = 0;
  for (std::size_t i = 0; i < shifted.size(); ++i)
    for (std::size_t j = 0; j < shifted[i].size(); ++j)
      if (i + j > 0) rest += abs(shifted[i].coeff(j)) * px[i] * py[j];
  Rational c = coeff(shifted, 0, 0);
  return abs(c) > rest ? sgn(c) : 0;
}

// Sign of the shifted polynomial on the edge s = s_fixed, t in [-r, r]
// (x edge), or on t = s_fixed, s in [-r, r] (y edge).
int edge_sign(const Rows& shifted, bool x_edge, const Rational& fixed, const Rational& r) {
  std::vector<Rational> e;  // univariate in the free variable
  if (x_edge) {
    const auto pf = powers(fixed, shifted.size());
    e.assign(max_row_size(shifted), Rational(0));
    for (std::size_t i = 0; i < shifted.size(); ++i)
      for (std::size_t j = 0; j < shifted[i].size(); ++j) e[j] += shifted[i].coeff(j) * pf[i];
  } else {
    e.assign(shifted.size(), Rational(0));
    for (std::size_t i = 0; i < shifted.size(); ++i) e[i] = shifted[i].evaluate(fixed);
  }
  if (e.empty()) return 0;
  const auto pr = powers(r, e.size());
  Rational rest = 0;
  for (std::size_t k = 1; k < e.size(); ++k) rest += abs(e[k]) * pr[k];
  return abs(e[0]) > rest ? sgn(e[0]) : 0;
}

enum class BoxVerdict { Excluded, Confirmed, Undecided };

BoxVerdict examine(const Rows& P, const Rows& Q, const SolutionBox& box) {
  const Rational x0 = box.x.midpoint(), y0 = box.y.midpoint();
  const Rational rx = box.x.width() / 2, ry = box.y.width() / 2;
  Rows Ps = taylor_shift2(P, x0, y0);
  Rows Qs = taylor_shift2(Q, x0, y0);
  if (box_sign(Ps, rx, ry) != 0 || box_sign(Qs, rx, ry) != 0) return BoxVerdict::Excluded;

  // Preconditioned Poincare-Miranda: G = adj(J(center)) * (P, Q).
  const Rational px = coeff(Ps, 1, 0), py = coeff(Ps, 0, 1);
  const Rational qx = coeff(Qs, 1, 0), qy = coeff(Qs, 0, 1);
  if (px * qy - py * qx == 0) return BoxVerdict::Undecided;
  Rows G1 = combine(qy, Ps, -py, Qs);
  Rows G2 = combine(-qx, Ps, px, Qs);
  int left = edge_sign(G1, true, -rx, ry), right = edge_sign(G1, true, rx, ry);
  if (left == 0 || right == 0 || left == right) return BoxVerdict::Undecided;
  int bottom = edge_sign(G2, false, -ry, rx), top = edge_sign(G2, false, ry, rx);
  if (bottom == 0 || top == 0 || bottom == top) return BoxVerdict::Undecided;
  return BoxVerdict::Confirmed;
}

struct RootInfo {
  Isolation iso;
  std::optional<Rational> rational;
};

std::vector<RootInfo> real_roots(const UniPoly& squarefree) {
  std::vector<RootInfo> out;
  for (auto& iso : isolate_real_roots(squarefree)) {
    RootInfo r{iso, std::nullopt};
    r.rational = exact_rational_root(squarefree, r.iso);
    out.push_back(std::move(r));
  }
  return out;
}

// Restriction of p to x = value (var = 0) or y = value (var = 1).
UniPoly fix_variable(const MultiPoly& p, std::size_t var, const Rational& value) {
  std::vector<MultiPoly> images(2, MultiPoly::variable(1, 0));
  images[var] = MultiPoly::constant(1, value);
  return to_unipoly(substitute(p, images));
}

// One coordinate of the candidate is the rational `value`; the other is the
// unique root of the eliminant inside `other`.
bool decide_exact(const MultiPoly& P, const MultiPoly& Q, std::size_t var, const Rational& value,
                  const Isolation& other) {
  UniPoly u = fix_variable(P, var, value), v = fix_variable(Q, var, value);
  if (u.is_zero() && v.is_zero()) throw std::logic_error("fiber: common factor missed by elimination");
  UniPoly g = gcd_univariate(u, v);
  if (g.is_constant()) return false;
  if (other.is_exact()) return g.evaluate(*other.exact_root) == 0;
  return sturm_count(g, other.lo, other.hi) > 0;
}

FiberReport finish(FiberReport r) {
  r.status = r.points.empty() ? FiberReport::Status::Empty : FiberReport::Status::Finite;
  r.parity = r.points.size() % 2 ? FiberReport::Parity::Odd : FiberReport::Parity::Even;
  std::sort(r.points.begin(), r.points.end(), [](const SolutionBox& a, const SolutionBox& b) {
    return a.x.lo != b.x.lo ? a.x.lo < b.x.lo : a.y.lo < b.y.lo;
  });
  return r;
}

FiberReport infinite(FiberReport r) {
  r.status = FiberReport::Status::InfiniteOverC;
  r.parity = FiberReport::Parity::NotApplicable;
  return r;
}

}  // namespace

FiberReport solve_fiber(const PolyMap& f, const std::vector<Rational>& target, const FiberOptions& opts) {
  if (f.nvars() != 2) throw std::invalid_argument("solve_fiber: only maps of the plane (two variables) are supported");
  if (target.size() != 2) throw std::invalid_argument("solve_fiber: target must have two entries");
  FiberReport report;
  report.target = target;
  const Degree dp = total_degree(f[0]), dq = total_degree(f[1]);
  report.bezout = (dp.is_finite() && dq.is_finite()) ? Integer(dp.value()) * Integer(dq.value()) : Integer(0);

  const MultiPoly P = f[0] - MultiPoly::constant(2, target[0]);
  const MultiPoly Q = f[1] - MultiPoly::constant(2, target[1]);
  if ((P.is_constant() && !P.is_zero()) || (Q.is_constant() && !Q.is_zero())) return finish(report);
  if (P.is_zero() || Q.is_zero()) return infinite(report);  // a whole curve (or plane) of solutions

  const UniPoly in_x = eliminate(P, Q, 1);
  const UniPoly in_y = eliminate(P, Q, 0);
  if (in_x.is_zero() || in_y.is_zero()) return infinite(report);

  const UniPoly sx = squarefree_part(in_x), sy = squarefree_part(in_y);
  if (sx.is_constant() || sy.is_constant()) return finish(report);
  const auto xs = real_roots(sx);
  const auto ys = real_roots(sy);
  const Rows Prows = to_rows(P), Qrows = to_rows(Q);

  for (const auto& xr : xs) {
    for (const auto& yr : ys) {
      if (xr.rational || yr.rational) {
        bool hit = xr.rational ? decide_exact(P, Q, 0, *xr.rational, yr.iso) : decide_exact(P, Q, 1, *yr.rational, xr.iso);
        if (hit) report.points.push_back({xr.iso, yr.iso});
        continue;
      }
      SolutionBox box{xr.iso, yr.iso};
      bool decided = false;
      unsigned nx = 0, ny = 0;
      while (!decided) {
        BoxVerdict v = examine(Prows, Qrows, box);
        if (v == BoxVerdict::Excluded) {
          decided = true;
        } else if (v == BoxVerdict::Confirmed) {
          report.points.push_back(box);
          decided = true;
        } else if (box.x.width() >= box.y.width()) {
          if (nx++ == opts.max_bisections) break;
          refine(box.x, sx);
        } else {
          if (ny++ == opts.max_bisections) break;
          refine(box.y, sy);
        }
      }
      if (!decided)
        throw FiberRefinementError("solve_fiber: candidate box [" + to_string(box.x.lo) + ", " + to_string(box.x.hi) +
                                   "] x [" + to_string(box.y.lo) + ", " + to_string(box.y.hi) +
                                   "] undecided after " + std::to_string(opts.max_bisections) +
                                   " refinements (singular solution?)");
    }
  }
  return finish(report);
}

}  // namespace polysurj
