#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include "padic/errors.hpp"

namespace padic {

using Int = boost::multiprecision::cpp_int;

// x mod m in [0, m), m > 0.
inline Int mod_floor(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

inline Int pow_int(const Int& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

// nu_p(x): either a nonnegative integer or Infinity (only for x = 0).
class Valuation {
 public:
  static Valuation infinity() { return Valuation(true, 0); }
  static Valuation finite(long v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  long value() const {
    if (infinite_) throw Error("valuation is infinite");
    return value_;
  }

  friend bool operator==(const Valuation& lhs, const Valuation& rhs) {
    return lhs.infinite_ == rhs.infinite_ &&
           (lhs.infinite_ || lhs.value_ == rhs.value_);
  }
  friend bool operator==(const Valuation& lhs, long rhs) {
    return !lhs.infinite_ && lhs.value_ == rhs;
  }

  // Infinity compares greater than every finite valuation.
  friend bool operator<(const Valuation& lhs, const Valuation& rhs) {
    if (lhs.infinite_) return false;
    if (rhs.infinite_) return true;
    return lhs.value_ < rhs.value_;
  }
  bool at_least(long bound) const { return infinite_ || value_ >= bound; }

  std::string str() const {
    return infinite_ ? "inf" : std::to_string(value_);
  }

 private:
  Valuation(bool inf, long v) : infinite_(inf), value_(v) {}
  bool infinite_;
  long value_;
};

// A p-adic integer known modulo p^precision.
struct PadicApprox {
  Int residue;          // 0 <= residue < p^precision
  unsigned precision;   // >= 1
  Int prime;

  Int modulus() const { return pow_int(prime, precision); }

  // The same approximation truncated to a smaller precision.
  PadicApprox truncated(unsigned k) const {
    if (k > precision) throw Error("cannot truncate to higher precision");
    return PadicApprox{mod_floor(residue, pow_int(prime, k)), k, prime};
  }
};

}  // namespace padic
