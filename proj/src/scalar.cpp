#include "mpl/scalar.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace mpl {

void Scalar::throw_eps_value() { throw std::domain_error("value() of epsilon"); }

namespace detail {
void throw_otimes_overflow() { throw std::overflow_error("tropical product overflows int64"); }
}  // namespace detail

std::string Scalar::to_string() const { return finite_ ? std::to_string(value_) : std::string("eps"); }

Scalar negate(Scalar a) {
  if (a.is_eps()) throw std::domain_error("epsilon has no tropical inverse");
  if (a.value() == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("cannot negate int64 min");
  return Scalar{-a.value()};
}

std::ostream& operator<<(std::ostream& os, Scalar s) { return os << s.to_string(); }

}  // namespace mpl
