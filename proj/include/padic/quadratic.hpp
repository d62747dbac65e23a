#pragma once

#include <string>

#include "padic/primality.hpp"
#include "padic/types.hpp"

namespace padic {

// f(n) = a n^2 + b n + c over the integers, studied p-adically.
struct Quadratic {
  Int a, b, c;
  Int p;

  Quadratic(Int a_, Int b_, Int c_, Int p_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), p(std::move(p_)) {
    if (a == 0) throw InvalidQuadratic("leading coefficient a must be nonzero");
    validate_odd_prime(p);
  }

  Int eval(const Int& n) const { return (a * n + b) * n + c; }
  Int derivative(const Int& n) const { return 2 * a * n + b; }
  Int discriminant() const { return b * b - 4 * a * c; }

  friend bool operator==(const Quadratic& lhs, const Quadratic& rhs) {
    return lhs.a == rhs.a && lhs.b == rhs.b && lhs.c == rhs.c &&
           lhs.p == rhs.p;
  }

  // e.g. "4n^2+160n-587"
  std::string str() const;
};

}  // namespace padic
