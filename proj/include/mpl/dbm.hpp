#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "mpl/matrix.hpp"

namespace mpl {

/// x_i - x_j >= bound (or > bound when strict). Index 0 is the dummy x_0 = 0.
struct Constraint {
  std::size_t i = 0;
  std::size_t j = 0;
  std::int64_t bound = 0;
  bool strict = false;
};

/// Difference-bound matrix over x_0..x_n with the lower-bound convention:
/// bounds(i,j) = d and sign(i,j) = 1 encode x_i - x_j >= d, sign 0 encodes
/// x_i - x_j > d. Unconstrained pairs are (eps, 0). The diagonal starts at
/// (0, 1).
///
/// Values are immutable; operations return new DBMs. A DBM carries a flag
/// saying its bounds are already the canonical (tightest) ones.
class Dbm {
 public:
  /// The whole space R^0.
  Dbm() : bounds_(Matrix::identity(1)), signs_{1}, canonical_(true) {}

  static Dbm full_space(std::size_t n);

  /// Repeated constraints on one pair keep the tighter: larger bound, and on
  /// equal bounds the strict one. A positive bound on i == j is accepted and
  /// makes the DBM empty.
  static Dbm from_constraints(std::size_t n, std::span<const Constraint> constraints);

  /// lo_i <= x_i <= hi_i. An inverted box (lo_i > hi_i) is still built; it
  /// is simply empty.
  static Dbm box(std::span<const std::int64_t> lo, std::span<const std::int64_t> hi);
  static Dbm box(std::size_t n, std::int64_t lo, std::int64_t hi);

  /// From raw matrices. `signs` is row-major (n+1)^2 with 1 = non-strict.
  /// Epsilon entries are normalised to sign 0. Throws DimensionError on
  /// shape mismatch.
  static Dbm from_parts(Matrix bounds, std::vector<std::uint8_t> signs, bool canonical = false);

  /// Number of variables excluding x_0.
  std::size_t dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return n_ + 1; }

  const Matrix& bounds() const noexcept { return bounds_; }
  Scalar bound(std::size_t i, std::size_t j) const { return bounds_(i, j); }
  /// 1 for >=, 0 for >.
  std::uint8_t sign(std::size_t i, std::size_t j) const { return signs_[i * (n_ + 1) + j]; }
  bool is_strict(std::size_t i, std::size_t j) const { return sign(i, j) == 0; }
  const std::vector<std::uint8_t>& signs() const noexcept { return signs_; }

  bool is_canonical() const noexcept { return canonical_; }

  /// Structural equality of bounds and signs (the canonical flag is ignored).
  friend bool operator==(const Dbm& a, const Dbm& b) {
    return a.n_ == b.n_ && a.bounds_ == b.bounds_ && a.signs_ == b.signs_;
  }

 private:
  friend Dbm canonical_form(const Dbm&);
  friend Dbm intersect(const Dbm&, const Dbm&);

  std::size_t n_ = 0;
  Matrix bounds_;
  std::vector<std::uint8_t> signs_;
  bool canonical_ = false;
};

std::ostream& operator<<(std::ostream& os, const Dbm& d);

/// Tightest bound per entry; equal bounds combine to the smaller sign.
/// Result is not canonicalised. Throws DimensionError on differing n.
Dbm intersect(const Dbm& a, const Dbm& b);

/// Floyd-Warshall longest-path closure with sign propagation: a path is
/// strict if any edge is, and among equally heavy paths the strict one wins.
/// Returns `d` unchanged if it is already canonical.
Dbm canonical_form(const Dbm& d);

/// The same closure computed purely algebraically as the (+)-sum of the
/// tropical powers 0..n+1 of the bound matrix. Bounds only.
Matrix canonical_bounds_by_powers(const Matrix& bounds);

/// True iff the canonical form has a positive diagonal bound or a zero one
/// that is strict.
bool is_empty(const Dbm& d);

/// per(bounds) == 0 with an all-zero diagonal. `d` must be canonical and
/// small enough for the brute-force permanent.
bool is_definite(const Dbm& d);

/// Checks every finite constraint at x (x_0 = 0). Throws DimensionError if
/// x.size() != dim().
bool contains_point(const Dbm& d, std::span<const double> x);

}  // namespace mpl
