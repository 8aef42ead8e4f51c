#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace mpl {

/// Element of the max-plus semiring: an exact 64-bit integer or the bottom
/// element epsilon (-infinity). Epsilon is a separate state, never a sentinel
/// number, so absorption is structural.
class Scalar {
 public:
  /// Default-constructed scalars are epsilon.
  constexpr Scalar() noexcept = default;
  constexpr Scalar(std::int64_t v) noexcept : value_(v), finite_(true) {}  // NOLINT: implicit by design of the algebra

  static constexpr Scalar eps() noexcept { return Scalar{}; }
  static constexpr Scalar unit() noexcept { return Scalar{0}; }

  constexpr bool is_finite() const noexcept { return finite_; }
  constexpr bool is_eps() const noexcept { return !finite_; }

  /// Finite value; throws std::domain_error on epsilon.
  std::int64_t value() const {
    if (!finite_) throw_eps_value();
    return value_;
  }

  // Epsilon compares below every finite value and equal to itself.
  friend constexpr bool operator==(Scalar a, Scalar b) noexcept {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Scalar a, Scalar b) noexcept {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  [[noreturn]] static void throw_eps_value();

  std::int64_t value_ = 0;
  bool finite_ = false;
};

inline constexpr Scalar eps{};

/// a (+) b = max(a, b)
constexpr Scalar oplus(Scalar a, Scalar b) noexcept { return a < b ? b : a; }

namespace detail {
[[noreturn]] void throw_otimes_overflow();
}

/// a (x) b = a + b, epsilon absorbing. Throws std::overflow_error if the
/// finite sum leaves the int64 range.
inline Scalar otimes(Scalar a, Scalar b) {
  if (a.is_eps() || b.is_eps()) return eps;
  std::int64_t r = 0;
  if (__builtin_add_overflow(a.value(), b.value(), &r)) detail::throw_otimes_overflow();
  return Scalar{r};
}

/// Tropical inverse of a finite scalar (-a). Throws std::domain_error on epsilon.
Scalar negate(Scalar a);

std::ostream& operator<<(std::ostream& os, Scalar s);

}  // namespace mpl
