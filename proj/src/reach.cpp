#include "mpl/reach.hpp"

#include <string>

#include "mpl/error.hpp"
#include "mpl/op_counter.hpp"

namespace mpl {

namespace {

void check_mode(const Dbm& d, const FiniteCoefficient& g, const Matrix& region) {
  const std::size_t m = d.size();
  if (region.rows() != m || region.cols() != m) {
    throw DimensionError("region matrix is " + std::to_string(region.rows()) + "x" + std::to_string(region.cols()) +
                         ", DBM needs " + std::to_string(m) + "x" + std::to_string(m));
  }
  if (g.size() != m || g[0] != 0 || !is_finite_coefficient(region, g)) {
    throw InvalidCoefficientError("coefficient does not select the finite entries of the region matrix");
  }
}

std::vector<std::int64_t> offsets(const FiniteCoefficient& g, const Matrix& region) {
  std::vector<std::int64_t> c(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) c[i] = region(i, g[i]).value();
  return c;
}

Dbm empty_dbm(std::size_t n) {
  const Constraint contradiction{0, 0, 1, false};
  return canonical_form(Dbm::from_constraints(n, std::span(&contradiction, 1)));
}

void require_partition(const PwaSystem& pwa) {
  if (!pwa.partitioned()) throw ContractError("reachability requires a partitioned PWA system");
}

void require_dim(const Dbm& d, const PwaSystem& pwa) {
  if (d.dim() != pwa.dim()) {
    throw DimensionError("DBM over " + std::to_string(d.dim()) + " variables, system has " +
                         std::to_string(pwa.dim()));
  }
}

}  // namespace

DbmUnion::DbmUnion(const Dbm& d) : n_(d.dim()) { add(d); }

void DbmUnion::add(const Dbm& d) {
  if (d.dim() != n_) throw DimensionError("union part has the wrong number of variables");
  Dbm c = canonical_form(d);
  if (!is_empty(c)) parts_.push_back(std::move(c));
}

bool DbmUnion::contains(std::span<const double> x) const {
  for (const auto& p : parts_)
    if (contains_point(p, x)) return true;
  return false;
}

Dbm image_affine(const Dbm& d, const FiniteCoefficient& g, const Matrix& region) {
  if (!d.is_canonical()) throw ContractError("image_affine requires a canonical DBM");
  check_mode(d, g, region);
  detail::count_call<&OpCounts::images>();
  const std::size_t m = d.size();
  const auto c = offsets(g, region);
  Matrix bounds(m, m);
  std::vector<std::uint8_t> signs(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Scalar b = d.bound(g[i], g[j]);
      if (b.is_eps()) continue;
      bounds(i, j) = otimes(b, Scalar{c[i] - c[j]});
      signs[i * m + j] = d.sign(g[i], g[j]);
    }
  }
  detail::count_ops(m * m);
  return Dbm::from_parts(std::move(bounds), std::move(signs), true);
}

Matrix image_affine_tropical(const Dbm& d, const Matrix& region) {
  return mat_otimes(mat_otimes(region, d.bounds()), conjugate(region));
}

Dbm preimage_affine(const Dbm& dp, const FiniteCoefficient& g, const Matrix& region) {
  if (!dp.is_canonical()) throw ContractError("preimage_affine requires a canonical DBM");
  check_mode(dp, g, region);
  detail::count_call<&OpCounts::preimages>();
  const std::size_t m = dp.size();
  const auto c = offsets(g, region);
  Matrix bounds = Matrix::identity(m);
  std::vector<std::uint8_t> signs(m * m, 0);
  for (std::size_t k = 0; k < m; ++k) signs[k * m + k] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Scalar bp = dp.bound(i, j);
      if (bp.is_eps()) continue;
      const Scalar b = otimes(bp, Scalar{c[j] - c[i]});
      const std::uint8_t s = dp.sign(i, j);
      Scalar& cur = bounds(g[i], g[j]);
      std::uint8_t& cur_s = signs[g[i] * m + g[j]];
      if (b > cur) {
        cur = b;
        cur_s = s;
      } else if (b == cur) {
        cur_s = std::min(cur_s, s);
      }
    }
  }
  detail::count_ops(m * m);
  return Dbm::from_parts(std::move(bounds), std::move(signs));
}

Matrix preimage_affine_tropical(const Dbm& dp, const Matrix& region) {
  return mat_oplus(mat_otimes(mat_otimes(conjugate(region), dp.bounds()), region), Matrix::identity(dp.size()));
}

Dbm image_via_lifting(const Dbm& d, const FiniteCoefficient& g, const Matrix& region, Direction direction) {
  check_mode(d, g, region);
  detail::count_call<&OpCounts::liftings>();
  const std::size_t n = d.dim();
  const std::size_t m = 2 * n + 1;
  // Lifted index of x_k (k = 0..n) and of x'_k (x'_0 is x_0).
  auto cur = [](std::size_t k) { return k; };
  auto next = [n](std::size_t k) { return k == 0 ? std::size_t{0} : n + k; };
  const bool fwd = direction == Direction::forward;
  auto given = [&](std::size_t k) { return fwd ? cur(k) : next(k); };
  auto wanted = [&](std::size_t k) { return fwd ? next(k) : cur(k); };

  std::vector<Constraint> cs;
  cs.reserve((n + 1) * (n + 1) + 2 * n);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      if (d.bound(i, j).is_finite())
        cs.push_back({given(i), given(j), d.bound(i, j).value(), d.is_strict(i, j)});
  for (std::size_t i = 1; i <= n; ++i) {
    const std::int64_t c = region(i, g[i]).value();
    cs.push_back({next(i), cur(g[i]), c, false});
    cs.push_back({cur(g[i]), next(i), -c, false});
  }
  detail::count_ops(cs.size() + m * m);
  const Dbm lifted = canonical_form(Dbm::from_constraints(m - 1, cs));
  if (is_empty(lifted)) return empty_dbm(n);

  Matrix bounds(n + 1, n + 1);
  std::vector<std::uint8_t> signs((n + 1) * (n + 1), 0);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      bounds(i, j) = lifted.bound(wanted(i), wanted(j));
      signs[i * (n + 1) + j] = lifted.sign(wanted(i), wanted(j));
    }
  }
  return Dbm::from_parts(std::move(bounds), std::move(signs), true);
}

DbmUnion image_mpl(const Dbm& d, const PwaSystem& pwa, ImageMethod method) {
  require_partition(pwa);
  require_dim(d, pwa);
  DbmUnion out(pwa.dim());
  for (const auto& r : pwa.regions()) {
    const Dbm piece = canonical_form(intersect(d, r.zone));
    if (is_empty(piece)) continue;
    out.add(method == ImageMethod::direct ? image_affine(piece, r.coefficient, r.dynamics)
                                          : image_via_lifting(piece, r.coefficient, r.dynamics, Direction::forward));
  }
  return out;
}

DbmUnion image_mpl(const DbmUnion& u, const PwaSystem& pwa, ImageMethod method) {
  DbmUnion out(pwa.dim());
  for (const auto& p : u.parts()) {
    const DbmUnion step = image_mpl(p, pwa, method);
    for (const auto& q : step.parts()) out.add(q);
  }
  return out;
}

DbmUnion preimage_mpl(const Dbm& dp, const PwaSystem& pwa, ImageMethod method) {
  require_partition(pwa);
  require_dim(dp, pwa);
  DbmUnion out(pwa.dim());
  const Dbm target = canonical_form(dp);
  if (is_empty(target)) return out;
  for (const auto& r : pwa.regions()) {
    const Dbm pre = method == ImageMethod::direct
                        ? preimage_affine(target, r.coefficient, r.dynamics)
                        : image_via_lifting(target, r.coefficient, r.dynamics, Direction::backward);
    out.add(intersect(pre, r.zone));
  }
  return out;
}

DbmUnion preimage_mpl(const DbmUnion& u, const PwaSystem& pwa, ImageMethod method) {
  DbmUnion out(pwa.dim());
  for (const auto& p : u.parts()) {
    const DbmUnion step = preimage_mpl(p, pwa, method);
    for (const auto& q : step.parts()) out.add(q);
  }
  return out;
}

namespace {

template <class Step>
ReachSequence iterate(const DbmUnion& start, std::size_t steps, Step step) {
  ReachSequence seq;
  seq.steps.reserve(steps);
  DbmUnion current = start;
  for (std::size_t k = 1; k <= steps; ++k) {
    if (seq.empty_from) {
      seq.steps.emplace_back(start.dim());
      continue;
    }
    current = step(current);
    if (current.empty()) seq.empty_from = k;
    seq.steps.push_back(current);
  }
  return seq;
}

}  // namespace

ReachSequence forward_reach(const DbmUnion& x0, const PwaSystem& pwa, std::size_t steps, ImageMethod method) {
  return iterate(x0, steps, [&](const DbmUnion& u) { return image_mpl(u, pwa, method); });
}

ReachSequence backward_reach(const DbmUnion& y0, const PwaSystem& pwa, std::size_t steps, ImageMethod method) {
  return iterate(y0, steps, [&](const DbmUnion& u) { return preimage_mpl(u, pwa, method); });
}

}  // namespace mpl
