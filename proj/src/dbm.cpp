#include "mpl/dbm.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "mpl/error.hpp"
#include "mpl/op_counter.hpp"

namespace mpl {

namespace {

// Tighter-of-two rule shared by construction, intersection and closure.
inline void tighten(Scalar& b, std::uint8_t& s, Scalar cand_b, std::uint8_t cand_s) {
  if (cand_b > b) {
    b = cand_b;
    s = cand_s;
  } else if (cand_b == b && cand_b.is_finite()) {
    s = std::min(s, cand_s);
  }
}

void normalise(Matrix& bounds, std::vector<std::uint8_t>& signs) {
  const std::size_t m = bounds.rows();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto& s = signs[i * m + j];
      if (bounds(i, j).is_eps()) s = 0;
      s = s ? 1 : 0;
    }
    // x_i - x_i >= 0 always holds.
    tighten(bounds(i, i), signs[i * m + i], Scalar::unit(), 1);
  }
}

}  // namespace

Dbm Dbm::full_space(std::size_t n) {
  Dbm d;
  d.n_ = n;
  d.bounds_ = Matrix::identity(n + 1);
  d.signs_.assign((n + 1) * (n + 1), 0);
  for (std::size_t i = 0; i <= n; ++i) d.signs_[i * (n + 1) + i] = 1;
  d.canonical_ = true;
  return d;
}

Dbm Dbm::from_constraints(std::size_t n, std::span<const Constraint> constraints) {
  Dbm d = full_space(n);
  for (const auto& c : constraints) {
    if (c.i > n || c.j > n) {
      throw DimensionError("constraint index (" + std::to_string(c.i) + "," + std::to_string(c.j) +
                           ") outside 0.." + std::to_string(n));
    }
    tighten(d.bounds_(c.i, c.j), d.signs_[c.i * (n + 1) + c.j], Scalar{c.bound}, c.strict ? 0 : 1);
  }
  d.canonical_ = constraints.empty();
  return d;
}

Dbm Dbm::box(std::span<const std::int64_t> lo, std::span<const std::int64_t> hi) {
  if (lo.size() != hi.size()) throw DimensionError("box: lo and hi differ in length");
  std::vector<Constraint> cs;
  cs.reserve(2 * lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    cs.push_back({i + 1, 0, lo[i], false});
    cs.push_back({0, i + 1, -hi[i], false});
  }
  return from_constraints(lo.size(), cs);
}

Dbm Dbm::box(std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> l(n, lo), h(n, hi);
  return box(l, h);
}

Dbm Dbm::from_parts(Matrix bounds, std::vector<std::uint8_t> signs, bool canonical) {
  if (!bounds.is_square() || bounds.rows() == 0) throw DimensionError("DBM bound matrix must be square and non-empty");
  if (signs.size() != bounds.rows() * bounds.cols()) throw DimensionError("DBM sign matrix does not match bounds");
  normalise(bounds, signs);
  Dbm d;
  d.n_ = bounds.rows() - 1;
  d.bounds_ = std::move(bounds);
  d.signs_ = std::move(signs);
  d.canonical_ = canonical;
  return d;
}

std::ostream& operator<<(std::ostream& os, const Dbm& d) {
  os << '{';
  bool first = true;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (i == j || d.bound(i, j).is_eps()) continue;
      os << (first ? "" : ", ") << 'x' << i << "-x" << j << (d.is_strict(i, j) ? ">" : ">=") << d.bound(i, j);
      first = false;
    }
  }
  return os << '}';
}

Dbm intersect(const Dbm& a, const Dbm& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("intersect: DBMs over " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()) +
                         " variables");
  }
  detail::count_call<&OpCounts::intersections>();
  Dbm r = a;
  const std::size_t m = a.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) tighten(r.bounds_(i, j), r.signs_[i * m + j], b.bound(i, j), b.sign(i, j));
  detail::count_ops(m * m);
  r.canonical_ = false;
  return r;
}

Dbm canonical_form(const Dbm& d) {
  if (d.canonical_) return d;
  detail::count_call<&OpCounts::canonicalizations>();
  Dbm r = d;
  const std::size_t m = d.size();
  auto& b = r.bounds_;
  auto& s = r.signs_;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      const Scalar bik = b(i, k);
      if (bik.is_eps()) continue;
      const std::uint8_t sik = s[i * m + k];
      for (std::size_t j = 0; j < m; ++j) {
        const Scalar bkj = b(k, j);
        if (bkj.is_eps()) continue;
        tighten(b(i, j), s[i * m + j], otimes(bik, bkj), std::min(sik, s[k * m + j]));
      }
    }
  }
  detail::count_ops(m * m * m);
  r.canonical_ = true;
  return r;
}

Matrix canonical_bounds_by_powers(const Matrix& bounds) {
  if (!bounds.is_square()) throw DimensionError("canonical_bounds_by_powers: bound matrix must be square");
  const std::size_t m = bounds.rows();
  // m = n + 1, so powers 0..n+1 are 0..m.
  Matrix power = Matrix::identity(m);
  Matrix acc = power;
  for (std::size_t p = 1; p <= m; ++p) {
    power = mat_otimes(power, bounds);
    acc = mat_oplus(acc, power);
  }
  detail::count_ops(m * m * m * m);
  return acc;
}

bool is_empty(const Dbm& d) {
  const Dbm c = canonical_form(d);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Scalar b = c.bound(i, i);
    if (b > Scalar::unit() || (b == Scalar::unit() && c.is_strict(i, i))) return true;
  }
  return false;
}

bool is_definite(const Dbm& d) {
  if (!d.is_canonical()) throw ContractError("is_definite requires a canonical DBM");
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.bound(i, i) != Scalar::unit()) return false;
  return permanent(d.bounds()) == Scalar::unit();
}

bool contains_point(const Dbm& d, std::span<const double> x) {
  if (x.size() != d.dim()) {
    throw DimensionError("contains_point: point has " + std::to_string(x.size()) + " coordinates, DBM has " +
                         std::to_string(d.dim()) + " variables");
  }
  auto coord = [&](std::size_t i) { return i == 0 ? 0.0 : x[i - 1]; };
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      const Scalar b = d.bound(i, j);
      if (b.is_eps()) continue;
      const double diff = coord(i) - coord(j);
      const double bound = static_cast<double>(b.value());
      if (d.is_strict(i, j) ? !(diff > bound) : !(diff >= bound)) return false;
    }
  }
  return true;
}

}  // namespace mpl
