#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mpl/matrix.hpp"

namespace mpl::bench {

enum class Phase { states, transitions, image, image_lifting, forward, backward };

inline constexpr Phase kAllPhases[] = {Phase::states, Phase::image,   Phase::image_lifting,
                                       Phase::transitions, Phase::forward, Phase::backward};

std::string to_string(Phase p);
/// Throws std::invalid_argument on an unknown name.
Phase phase_from_string(const std::string& name);

struct BenchConfig {
  std::vector<std::size_t> dims{3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
  std::size_t trials = 10;
  std::size_t finite_per_row = 2;
  std::int64_t value_lo = 1;
  std::int64_t value_hi = 100;
  std::uint64_t seed = 2017;
  std::size_t horizon = 10;
  unsigned threads = 1;
  std::vector<Phase> phases{std::begin(kAllPhases), std::end(kAllPhases)};

  /// Throws std::invalid_argument naming the violated constraint.
  void validate() const;
};

// Instances are reproducible across platforms: the engine is std::mt19937_64
// (its output sequence is fixed by the standard) seeded from
// splitmix64(seed ^ n ^ trial), and all sampling below is done by hand rather
// than through std::*_distribution, whose algorithms are unspecified.

/// Uniform integer in [0, bound) by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

std::mt19937_64 instance_engine(std::uint64_t seed, std::size_t n, std::size_t trial);

/// n x n matrix with exactly finite_per_row finite entries per row. Columns:
/// Fisher-Yates shuffle of 0..n-1 (swap i with uniform_below(i+1), i from
/// n-1 down), first finite_per_row taken. Values uniform in [lo, hi].
Matrix random_row_finite(std::size_t n, const BenchConfig& cfg, std::size_t trial);

struct BenchRow {
  std::size_t n = 0;
  std::size_t trial = 0;
  Phase phase = Phase::states;
  double wall_ms = 0;
  std::uint64_t op_count = 0;
  std::size_t state_count = 0;
  std::size_t transition_count = 0;
  std::optional<std::size_t> terminated_at;  // backward reach: first empty step
};

struct BenchReport {
  std::vector<BenchRow> rows;  // sorted by (n, trial, phase)
};

/// Runs every configured phase on `trials` random systems per dimension.
/// Phases (per system): states = partition generation; transitions =
/// abstract transition relation; image = affine image of every abstract
/// state; image_lifting = the same images by the lifted construction;
/// forward = horizon steps from box(0,1)^n; backward = horizon steps from
/// box(90,100)^n with early termination. For the reach phases state_count
/// is the total number of DBM parts over all steps.
BenchReport bench_run(const BenchConfig& cfg);

/// Versioned CSV: a "# mpl-bench-csv v1" line, a header, the per-trial rows,
/// then per (n, phase) summary rows with trial = "mean" and "max".
void write_csv(std::ostream& os, const BenchReport& report);

}  // namespace mpl::bench
