#pragma once

#include <cstdint>

namespace mpl {

/// Instrumented operation counts. `scalar_ops` counts inner-loop entry
/// updates (one per (i,j) in the affine image, one per (i,j,k) relaxation in
/// Floyd-Warshall, ...); the other fields count calls.
struct OpCounts {
  std::uint64_t scalar_ops = 0;
  std::uint64_t images = 0;
  std::uint64_t preimages = 0;
  std::uint64_t liftings = 0;
  std::uint64_t intersections = 0;
  std::uint64_t canonicalizations = 0;

  OpCounts& operator+=(const OpCounts& o) {
    scalar_ops += o.scalar_ops;
    images += o.images;
    preimages += o.preimages;
    liftings += o.liftings;
    intersections += o.intersections;
    canonicalizations += o.canonicalizations;
    return *this;
  }
  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

/// Collects counts for everything executed on the current thread while it is
/// alive. Scopes nest: on destruction the totals are added to the enclosing
/// scope, if any. Work fanned out by parallel_chunks is credited back to the
/// scope of the calling thread.
class OpCounter {
 public:
  OpCounter();
  ~OpCounter();
  OpCounter(const OpCounter&) = delete;
  OpCounter& operator=(const OpCounter&) = delete;

  const OpCounts& counts() const noexcept { return counts_; }

 private:
  OpCounts counts_;
  OpCounts* previous_;
};

namespace detail {

/// Counts of the innermost live OpCounter on this thread, or nullptr.
OpCounts* active_counts() noexcept;

inline void count_ops(std::uint64_t n) noexcept {
  if (auto* c = active_counts()) c->scalar_ops += n;
}

template <auto Field>
void count_call() noexcept {
  if (auto* c = active_counts()) ++(c->*Field);
}

}  // namespace detail

}  // namespace mpl
