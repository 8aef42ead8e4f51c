#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mpl/dbm.hpp"
#include "mpl/pwa.hpp"

namespace mpl {

/// Finite union of canonical, non-empty DBMs over the same variables. No
/// parts means the empty set. Parts are kept in insertion order and never
/// merged.
class DbmUnion {
 public:
  explicit DbmUnion(std::size_t n = 0) : n_(n) {}
  /// Canonicalises; empty DBMs contribute nothing.
  explicit DbmUnion(const Dbm& d);

  /// Canonicalises `d` and appends it unless empty. Throws DimensionError on
  /// a variable-count mismatch.
  void add(const Dbm& d);

  std::size_t dim() const noexcept { return n_; }
  bool empty() const noexcept { return parts_.empty(); }
  std::size_t size() const noexcept { return parts_.size(); }
  const std::vector<Dbm>& parts() const noexcept { return parts_; }

  bool contains(std::span<const double> x) const;

  friend bool operator==(const DbmUnion&, const DbmUnion&) = default;

 private:
  std::size_t n_;
  std::vector<Dbm> parts_;
};

// --- one affine mode ---------------------------------------------------------

/// Image under x' = A_g (x) x:
///   D'(i,j) = D(g_i, g_j) + A_g(i, g_i) - A_g(j, g_j),  S'(i,j) = S(g_i, g_j).
/// `d` must be canonical (ContractError) and is assumed to lie in R_g. The
/// result is canonical.
Dbm image_affine(const Dbm& d, const FiniteCoefficient& g, const Matrix& region);

/// Bounds of the same image as A_g (x) D (x) A_g^c.
Matrix image_affine_tropical(const Dbm& d, const Matrix& region);

/// Inverse image under x' = A_g (x) x: starting from the full space, the
/// bound of x_{g_i} - x_{g_j} is the tightest of
/// D'(i,j) + A_g(j, g_j) - A_g(i, g_i) over all (i,j) mapping there. Not
/// intersected with R_g and not canonicalised. `dp` must be canonical.
Dbm preimage_affine(const Dbm& dp, const FiniteCoefficient& g, const Matrix& region);

/// Bounds of the same inverse image as (A_g^c (x) D' (x) A_g) (+) I.
Matrix preimage_affine_tropical(const Dbm& dp, const Matrix& region);

enum class Direction { forward, backward };

/// Reference construction over the 2n+1 variables (x_0, x, x'): the input
/// DBM on x (forward) or x' (backward), the equalities
/// x'_i - x_{g_i} = A_g(i, g_i), a full canonicalisation, and projection on
/// the other half. O(n^3); used as an independent check of the O(n^2)
/// routines. The result is canonical.
Dbm image_via_lifting(const Dbm& d, const FiniteCoefficient& g, const Matrix& region, Direction direction);

// --- whole system --------------------------------------------------------------

enum class ImageMethod { direct, lifting };

/// Image under A (x) x: for each region, cf(D n R_g) mapped by its own
/// dynamics when non-empty. Requires a partitioned system.
DbmUnion image_mpl(const Dbm& d, const PwaSystem& pwa, ImageMethod method = ImageMethod::direct);
DbmUnion image_mpl(const DbmUnion& u, const PwaSystem& pwa, ImageMethod method = ImageMethod::direct);

/// Inverse image under A (x) x: for each region, cf(preimage n R_g) when
/// non-empty. Requires a partitioned system.
DbmUnion preimage_mpl(const Dbm& dp, const PwaSystem& pwa, ImageMethod method = ImageMethod::direct);
DbmUnion preimage_mpl(const DbmUnion& u, const PwaSystem& pwa, ImageMethod method = ImageMethod::direct);

/// Steps 1..N of a reach computation. For backward reach, `empty_from` is the
/// first k with Y_{-k} empty; all later steps are empty and not computed.
struct ReachSequence {
  std::vector<DbmUnion> steps;
  std::optional<std::size_t> empty_from;
};

/// X_k = image of X_{k-1}, k = 1..N.
ReachSequence forward_reach(const DbmUnion& x0, const PwaSystem& pwa, std::size_t steps,
                            ImageMethod method = ImageMethod::direct);

/// Y_{-k} = preimage of Y_{-k+1}, k = 1..N, stopping at the first empty set.
ReachSequence backward_reach(const DbmUnion& y0, const PwaSystem& pwa, std::size_t steps,
                             ImageMethod method = ImageMethod::direct);

}  // namespace mpl
