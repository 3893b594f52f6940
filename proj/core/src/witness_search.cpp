#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "polysurj/realalg.hpp"

namespace polysurj {

namespace {

struct DoubleForm {
  std::vector<std::pair<std::vector<std::uint32_t>, double>> terms;
  double scale = 1.0;

  double eval(const std::vector<double>& x) const {
    double acc = 0;
    for (const auto& [m, c] : terms) {
      double t = c;
      for (std::size_t k = 0; k < m.size(); ++k)
        for (std::uint32_t e = 0; e < m[k]; ++e) t *= x[k];
      acc += t;
    }
    return acc / scale;
  }
};

DoubleForm to_double_form(const MultiPoly& f) {
  DoubleForm d;
  double s = 0;
  for (const auto& [m, c] : f.terms()) {
    d.terms.emplace_back(m, c.get_d());
    s += std::abs(c.get_d());
  }
  d.scale = s > 0 ? s : 1.0;
  return d;
}

std::vector<Rational> farey_values(long max_den) {
  std::vector<Rational> v;
  for (long q = 1; q <= max_den; ++q)
    for (long p = -q; p <= q; ++p)
      if (std::gcd(p, q) == 1) v.emplace_back(p, q);
  for (auto& r : v) r.canonicalize();
  std::sort(v.begin(), v.end());
  return v;
}

double pow_size(std::size_t base, std::size_t exp) {
  double r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= static_cast<double>(base);
  return r;
}

bool exact_common_zero(const std::vector<const MultiPoly*>& forms, const std::vector<Rational>& point) {
  if (std::all_of(point.begin(), point.end(), [](const Rational& c) { return c == 0; })) return false;
  for (const auto* f : forms)
    if (evaluate(*f, point) != 0) return false;
  return true;
}

struct Start {
  double score;
  std::size_t face;  // fixed coordinate
  double face_value;
  std::vector<double> x;
};

double residual_norm2(const std::vector<DoubleForm>& forms, const std::vector<double>& x) {
  double s = 0;
  for (const auto& f : forms) {
    double r = f.eval(x);
    s += r * r;
  }
  return s;
}

// Solves the small dense system a * d = b in place (partial pivoting);
// returns false when singular.
bool solve_dense(std::vector<std::vector<double>> a, std::vector<double>& b) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
    if (std::abs(a[piv][k]) < 1e-300) return false;
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t j = k + 1; j < n; ++j) b[k] -= a[k][j] * b[j];
    b[k] /= a[k][k];
  }
  return true;
}

// Levenberg-Marquardt on the free coordinates of one face.
std::vector<double> descend(const std::vector<DoubleForm>& forms, Start start) {
  std::vector<double> x = start.x;
  const std::size_t n = x.size();
  std::vector<std::size_t> free_idx;
  for (std::size_t k = 0; k < n; ++k)
    if (k != start.face) free_idx.push_back(k);
  const std::size_t m = free_idx.size();
  double lambda = 1e-3;
  double current = residual_norm2(forms, x);
  for (int iter = 0; iter < 200 && current > 1e-30; ++iter) {
    std::vector<double> r(forms.size());
    for (std::size_t i = 0; i < forms.size(); ++i) r[i] = forms[i].eval(x);
    std::vector<std::vector<double>> jac(forms.size(), std::vector<double>(m));
    for (std::size_t c = 0; c < m; ++c) {
      const double h = 1e-7;
      auto xp = x, xm = x;
      xp[free_idx[c]] += h;
      xm[free_idx[c]] -= h;
      for (std::size_t i = 0; i < forms.size(); ++i) jac[i][c] = (forms[i].eval(xp) - forms[i].eval(xm)) / (2 * h);
    }
    std::vector<std::vector<double>> jtj(m, std::vector<double>(m, 0.0));
    std::vector<double> jtr(m, 0.0);
    for (std::size_t i = 0; i < forms.size(); ++i)
      for (std::size_t a = 0; a < m; ++a) {
        jtr[a] -= jac[i][a] * r[i];
        for (std::size_t b = 0; b < m; ++b) jtj[a][b] += jac[i][a] * jac[i][b];
      }
    bool improved = false;
    for (int tries = 0; tries < 12 && !improved; ++tries) {
      auto sys = jtj;
      for (std::size_t a = 0; a < m; ++a) sys[a][a] += lambda * (1.0 + jtj[a][a]);
      auto step = jtr;
      if (solve_dense(sys, step)) {
        auto trial = x;
        for (std::size_t a = 0; a < m; ++a) trial[free_idx[a]] += step[a];
        double val = residual_norm2(forms, trial);
        if (std::isfinite(val) && val < current) {
          x = std::move(trial);
          current = val;
          lambda = std::max(lambda / 10, 1e-12);
          improved = true;
          break;
        }
      }
      lambda *= 10;
    }
    if (!improved) break;
  }
  return x;
}

}  // namespace

std::optional<std::vector<Rational>> search_rational_witness(const std::vector<MultiPoly>& forms, std::size_t nvars,
                                                             const WitnessSearchOptions& opts) {
  if (nvars == 0) throw std::invalid_argument("witness search needs at least one variable");
  std::vector<const MultiPoly*> nonzero;
  for (const auto& f : forms) {
    if (f.nvars() != nvars) throw std::invalid_argument("witness search: form has the wrong variable count");
    if (!f.is_zero()) nonzero.push_back(&f);
  }
  if (nonzero.empty()) {
    std::vector<Rational> e(nvars, Rational(0));
    e[0] = 1;
    return e;
  }
  std::vector<DoubleForm> dforms;
  for (const auto* f : nonzero) dforms.push_back(to_double_form(*f));

  long den = std::max(1L, opts.max_denominator);
  std::vector<Rational> values = farey_values(den);
  while (den > 1 && 2.0 * nvars * pow_size(values.size(), nvars - 1) > static_cast<double>(opts.max_grid_points))
    values = farey_values(--den);
  std::vector<double> dvalues;
  for (const auto& v : values) dvalues.push_back(v.get_d());

  std::vector<Start> best;
  const std::size_t keep = opts.descent_starts;
  const std::size_t free = nvars - 1;

  for (std::size_t face = 0; face < nvars; ++face) {
    for (int side : {1, -1}) {
      std::vector<std::size_t> idx(free, 0);
      std::vector<double> x(nvars);
      while (true) {
        for (std::size_t k = 0, c = 0; k < nvars; ++k) x[k] = (k == face) ? side : dvalues[idx[c++]];
        double score = residual_norm2(dforms, x);
        if (score < 1e-18) {
          std::vector<Rational> point(nvars);
          for (std::size_t k = 0, c = 0; k < nvars; ++k) point[k] = (k == face) ? Rational(side) : values[idx[c++]];
          if (exact_common_zero(nonzero, point)) return normalize_projective(std::move(point));
        }
        if (keep > 0 && (best.size() < keep || score < best.back().score)) {
          Start s{score, face, static_cast<double>(side), x};
          best.insert(std::upper_bound(best.begin(), best.end(), s,
                                       [](const Start& a, const Start& b) { return a.score < b.score; }),
                      std::move(s));
          if (best.size() > keep) best.pop_back();
        }
        std::size_t c = 0;
        while (c < free && ++idx[c] == values.size()) idx[c++] = 0;
        if (c == free) break;
      }
    }
  }

  for (const auto& start : best) {
    std::vector<double> x = descend(dforms, start);
    if (residual_norm2(dforms, x) > 1e-16) continue;
    double big = 0;
    for (double v : x) big = std::max(big, std::abs(v));
    for (double scale : {1.0, big}) {
      if (!(scale > 0) || !std::isfinite(scale)) continue;
      std::vector<Rational> point(nvars);
      for (std::size_t k = 0; k < nvars; ++k) {
        double v = x[k] / scale;
        point[k] = std::abs(v) < 1e-9 ? Rational(0) : approximate(v, opts.reconstruction_denominator);
      }
      if (exact_common_zero(nonzero, point)) return normalize_projective(std::move(point));
    }
  }
  return std::nullopt;
}

}  // namespace polysurj
