#include "mpl/op_counter.hpp"

namespace mpl {

namespace {
thread_local OpCounts* tl_active = nullptr;
}

OpCounter::OpCounter() : previous_(tl_active) { tl_active = &counts_; }

OpCounter::~OpCounter() {
  tl_active = previous_;
  if (previous_) *previous_ += counts_;
}

namespace detail {
OpCounts* active_counts() noexcept { return tl_active; }
}  // namespace detail

}  // namespace mpl
