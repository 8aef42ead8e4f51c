#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mpl/dbm.hpp"
#include "mpl/matrix.hpp"

namespace mpl {

/// One affine mode of an MPL system: the zone where the finite coefficient
/// g attains every row maximum, and the region matrix A_g acting there.
/// Coefficient and dynamics are in augmented form (index 0 is the dummy
/// variable, g_0 = 0).
struct Region {
  FiniteCoefficient coefficient;
  Dbm zone;
  Matrix dynamics;

  /// g_1..g_n, 1-based, i.e. the coefficient without the dummy entry.
  std::vector<std::size_t> variable_coefficient() const;
};

/// PWA representation of x(k+1) = A (x) x(k): regions in lexicographic
/// coefficient order. `partitioned` marks output of generate_partition
/// (pairwise disjoint regions); generate_pwa regions may share boundaries.
class PwaSystem {
 public:
  PwaSystem(Matrix augmented_source, std::vector<Region> regions, bool partitioned);

  /// Variables excluding x_0.
  std::size_t dim() const noexcept { return source_.rows() - 1; }
  const Matrix& source() const noexcept { return source_; }
  const std::vector<Region>& regions() const noexcept { return regions_; }
  std::size_t size() const noexcept { return regions_.size(); }
  const Region& operator[](std::size_t i) const { return regions_[i]; }
  bool partitioned() const noexcept { return partitioned_; }

  /// Index of the region with this (augmented) coefficient, if non-empty.
  std::optional<std::size_t> find(const FiniteCoefficient& g) const;

 private:
  Matrix source_;
  std::vector<Region> regions_;
  bool partitioned_;
};

/// R_g = (A_g^c (x) A) (+) I as a DBM with every finite bound non-strict.
/// `augmented` must carry the dummy row/column and g_0 = 0; throws
/// InvalidCoefficientError otherwise.
Dbm region_zone(const Matrix& augmented, const FiniteCoefficient& g);

/// Sign matrix from the raw region bounds: non-strict iff the bound is
/// positive, or zero with i <= j. Unconstrained entries stay (eps, 0).
Dbm sign_rule(const Dbm& region);

/// All non-empty regions with non-strict boundaries (overlapping on faces).
/// Throws NotRowFiniteError / DimensionError.
PwaSystem generate_pwa(const Matrix& a, unsigned threads = 1);

/// Disjoint regions covering R^n, boundaries assigned by sign_rule. These
/// are the abstract states.
PwaSystem generate_partition(const Matrix& a, unsigned threads = 1);

/// R_g > R_g2: exactly one index with g_i > g2_i, all others equal. Both
/// must be non-empty regions of `pwa` (InvalidCoefficientError otherwise).
bool are_adjacent(const FiniteCoefficient& g, const FiniteCoefficient& g2, const PwaSystem& pwa);

/// Index of the unique region containing x. Requires a partitioned system
/// (ContractError); throws InvariantError if x is in zero or several regions.
std::size_t locate(std::span<const double> x, const PwaSystem& pwa);

}  // namespace mpl
