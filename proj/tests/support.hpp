#pragma once

// Reference constructions used only by the tests. Each one is written from
// the defining formulas and avoids the library routine it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "mpl/bench.hpp"
#include "mpl/dbm.hpp"
#include "mpl/matrix.hpp"
#include "mpl/pwa.hpp"

namespace mpl::testing {

inline Matrix worked_matrix() { return Matrix{{eps, 1, 3}, {5, eps, 4}, {7, 8, eps}}; }

// Image and preimage examples: D = {x1-x2 >= 6, x1-x3 > -1, x2-x3 >= 2},
// dynamics x1' = x2+1, x2' = x1+5, x3' = x1+2.
inline Dbm worked_dbm() {
  const Constraint cs[] = {{1, 2, 6, false}, {1, 3, -1, true}, {2, 3, 2, false}};
  return Dbm::from_constraints(3, cs);
}
inline FiniteCoefficient worked_mode() { return with_dummy({2, 1, 1}); }
inline Matrix worked_dynamics() {
  return augment_zero(Matrix{{eps, 1, eps}, {5, eps, eps}, {2, eps, eps}});
}
// {x1'-x2' <= -10, x1'-x3' <= -7, x2'-x3' = 3}
inline Dbm worked_image() {
  const Constraint cs[] = {{2, 1, 10, false}, {3, 1, 7, false}, {2, 3, 3, false}, {3, 2, -3, false}};
  return canonical_form(Dbm::from_constraints(3, cs));
}

struct Ineq {
  std::size_t i, j;
  std::int64_t bound;
  bool strict;
};

// Builds a zone from inequalities written as x_i - x_j (>= | >) bound.
inline Dbm zone(std::initializer_list<Ineq> list) {
  std::vector<Constraint> cs;
  for (const auto& q : list) cs.push_back({q.i, q.j, q.bound, q.strict});
  return canonical_form(Dbm::from_constraints(3, cs));
}

// The seven abstract states of the worked example, transcribed inequality by
// inequality (x_i - x_j < b is written as x_j - x_i > -b).
inline std::vector<std::pair<std::vector<std::size_t>, Dbm>> worked_states() {
  return {
      {{2, 1, 1}, zone({{1, 2, 1, false}, {1, 3, 3, false}, {2, 3, 2, false}})},
      {{2, 1, 2}, zone({{2, 1, -1, true}, {1, 3, -1, true}, {2, 3, 2, false}})},
      {{2, 3, 2}, zone({{2, 1, 3, false}, {3, 1, 1, false}, {2, 3, 2, false}})},
      {{3, 1, 1}, zone({{1, 2, 1, false}, {1, 3, -1, true}, {3, 2, -2, true}})},
      {{3, 1, 2},
       zone({{1, 2, -3, true}, {2, 1, -1, true}, {1, 3, -1, true}, {3, 1, -3, true}, {2, 3, -2, true},
             {3, 2, -2, true}})},
      {{3, 3, 1}, zone({{1, 2, 1, false}, {3, 1, 1, false}, {3, 2, 2, false}})},
      {{3, 3, 2}, zone({{2, 1, -1, true}, {3, 1, 1, false}, {3, 2, -2, true}})},
  };
}

// The thirteen arrows between the states above, 0-based and sorted.
inline std::vector<std::pair<std::size_t, std::size_t>> worked_edges() {
  std::vector<std::pair<std::size_t, std::size_t>> e{{1, 7}, {4, 7}, {7, 7}, {3, 7}, {3, 6}, {6, 5}, {6, 7},
                                                     {6, 2}, {2, 6}, {5, 7}, {7, 5}, {7, 2}, {2, 7}};
  for (auto& [a, b] : e) {
    --a;
    --b;
  }
  std::sort(e.begin(), e.end());
  return e;
}

inline double to_double(Scalar s) {
  return s.is_eps() ? -std::numeric_limits<double>::infinity() : static_cast<double>(s.value());
}

// y_i = max_j A(i,j) + x_j over doubles, A not augmented.
inline std::vector<double> simulate(const Matrix& a, const std::vector<double>& x) {
  std::vector<double> y(a.rows(), -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).is_finite()) y[i] = std::max(y[i], static_cast<double>(a(i, j).value()) + x[j]);
  return y;
}

// Row arrangement: row i of A goes to row g_i with A(i, g_i) subtracted;
// colliding rows merge by max, rows nobody lands on stay eps.
inline Matrix row_definite_by_rows(const Matrix& a, const FiniteCoefficient& g) {
  const std::size_t n = a.rows();
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t pivot = a(i, g[i]).value();
    for (std::size_t k = 0; k < n; ++k)
      if (a(i, k).is_finite()) b(g[i], k) = std::max(b(g[i], k), Scalar{a(i, k).value() - pivot});
  }
  return b;
}

// Column-definite form straight from its entrywise formula, alpha a
// permutation: A(i, alpha(j)) - A(j, alpha(j)).
inline Matrix col_definite_by_formula(const Matrix& a, const std::vector<std::size_t>& alpha) {
  const std::size_t n = a.rows();
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, alpha[j]).is_finite()) b(i, j) = Scalar{a(i, alpha[j]).value() - a(j, alpha[j]).value()};
  return b;
}

// Region bounds as the intersection over (i, j) of
// x_{g_i} - x_j >= A(i,j) - A(i,g_i), A augmented, plus the zero diagonal.
inline Matrix region_by_intersection(const Matrix& aug, const FiniteCoefficient& g) {
  const std::size_t m = aug.rows();
  Matrix b = Matrix::identity(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (aug(i, j).is_finite())
        b(g[i], j) = std::max(b(g[i], j), Scalar{aug(i, j).value() - aug(i, g[i]).value()});
  return b;
}

inline bool is_permutation_coefficient(const std::vector<std::size_t>& alpha) {
  std::vector<std::size_t> s = alpha;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

// --- random instances ---------------------------------------------------------

inline Matrix random_system(std::mt19937_64& rng, std::size_t n, std::size_t finite_per_row, std::int64_t lo = 1,
                            std::int64_t hi = 100) {
  bench::BenchConfig cfg;
  cfg.finite_per_row = finite_per_row;
  cfg.value_lo = lo;
  cfg.value_hi = hi;
  cfg.seed = rng();
  return bench::random_row_finite(n, cfg, 0);
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double eps_rate = 0.3) {
  std::uniform_int_distribution<int> val(-20, 20);
  std::bernoulli_distribution is_eps(eps_rate);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!is_eps(rng)) m(i, j) = Scalar{val(rng)};
  return m;
}

// About half of these are built around an integer witness point and so are
// non-empty; the rest are arbitrary and often empty.
inline Dbm random_dbm(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> idx(0, static_cast<int>(n));
  std::uniform_int_distribution<int> val(-10, 10);
  std::uniform_int_distribution<int> slack(0, 3);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<std::size_t> count(0, 2 * n + 2);
  const bool witnessed = coin(rng);
  std::vector<int> p(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) p[k] = val(rng);
  std::vector<Constraint> cs;
  const std::size_t k = count(rng);
  for (std::size_t c = 0; c < k; ++c) {
    const auto i = static_cast<std::size_t>(idx(rng));
    const auto j = static_cast<std::size_t>(idx(rng));
    if (i == j) continue;
    if (witnessed) {
      const int s = slack(rng);
      cs.push_back({i, j, p[i] - p[j] - s, s > 0 && coin(rng)});
    } else {
      cs.push_back({i, j, val(rng), coin(rng)});
    }
  }
  return Dbm::from_constraints(n, cs);
}

inline std::vector<double> random_point(std::mt19937_64& rng, std::size_t n, int range) {
  std::uniform_int_distribution<int> v(-range, range);
  std::vector<double> x(n);
  for (auto& e : x) e = v(rng);
  return x;
}

// Point of a non-empty canonical DBM, built one coordinate at a time. Values
// are multiples of 1/64 so all sums stay exact; non-strict endpoints are
// picked with some probability to exercise boundaries.
inline std::vector<double> sample_point(std::mt19937_64& rng, const Dbm& d) {
  const std::size_t n = d.dim();
  std::vector<double> x(n + 1, 0.0);
  std::uniform_int_distribution<int> frac(1, 63);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> spread(0, 20);
  const double inf = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k <= n; ++k) {
    double lo = -inf, hi = inf;
    bool lo_strict = false, hi_strict = false;
    for (std::size_t j = 0; j < k; ++j) {
      if (d.bound(k, j).is_finite()) {
        const double v = x[j] + static_cast<double>(d.bound(k, j).value());
        if (v > lo || (v == lo && d.is_strict(k, j))) {
          lo_strict = v > lo ? d.is_strict(k, j) : true;
          lo = v;
        }
      }
      if (d.bound(j, k).is_finite()) {
        const double v = x[j] - static_cast<double>(d.bound(j, k).value());
        if (v < hi || (v == hi && d.is_strict(j, k))) {
          hi_strict = v < hi ? d.is_strict(j, k) : true;
          hi = v;
        }
      }
    }
    double v;
    const int p = pick(rng);
    if (lo == hi) {
      v = lo;
    } else if (p == 0 && std::isfinite(lo) && !lo_strict) {
      v = lo;
    } else if (p == 1 && std::isfinite(hi) && !hi_strict) {
      v = hi;
    } else if (std::isfinite(lo) && std::isfinite(hi)) {
      v = lo + (hi - lo) * frac(rng) / 64.0;
    } else if (std::isfinite(lo)) {
      v = lo + spread(rng) + frac(rng) / 64.0;
    } else if (std::isfinite(hi)) {
      v = hi - spread(rng) - frac(rng) / 64.0;
    } else {
      v = spread(rng) - 10 + frac(rng) / 64.0;
    }
    x[k] = v;
  }
  return {x.begin() + 1, x.end()};
}

}  // namespace mpl::testing
