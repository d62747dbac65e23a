#pragma once

#include <utility>

#include "padic/quadratic.hpp"
#include "padic/types.hpp"

namespace padic {

// Largest k with p^k | x; Infinity for x = 0. Negative x valuates as |x|.
Valuation padic_valuation(const Int& x, const Int& p);

// y in [0, modulus) with x*y == 1 (mod modulus). Throws NotInvertible.
Int mod_inverse(const Int& x, const Int& modulus);

// Euler's criterion: 0 if p | a, +1 for a nonzero residue, -1 otherwise.
int legendre_symbol(const Int& a, const Int& p);

// The smaller of the two square roots of a mod p, in [1, p-1].
// Requires legendre_symbol(a, p) == +1; throws NotAResidue otherwise.
Int sqrt_mod_p(const Int& a, const Int& p);

// Lift of sqrt_mod_p(a, p) to a root of x^2 = a mod p^target_precision.
// Newton doubling; the residue mod p is preserved across precisions.
PadicApprox hensel_lift_sqrt(const Int& a, const Int& p,
                             unsigned target_precision);

// Square root of a nonzero a in Z_p: a = p^(2e) * d with d a residue;
// returns (u, e) with u^2 == d mod p^target_precision, so sqrt(a) = p^e * u.
// Throws NoSquareRoot when nu_p(a) is odd or d is a non-residue.
std::pair<PadicApprox, unsigned> padic_sqrt(const Int& a, const Int& p,
                                            unsigned target_precision);

// Unique lift of the simple root x0 of f mod p to mod p^target_precision.
// Requires f(x0) == 0 mod p and f'(x0) != 0 mod p; throws NotASimpleRoot.
PadicApprox hensel_lift_quadratic_root(const Quadratic& f, const Int& x0,
                                       unsigned target_precision);

}  // namespace padic
