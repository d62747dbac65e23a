#include "padic/core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace padic {

using boost::multiprecision::powm;

Valuation padic_valuation(const Int& x, const Int& p) {
  if (x == 0) return Valuation::infinity();
  Int d = abs(x);
  long k = 0;
  while (d % p == 0) {
    d /= p;
    ++k;
  }
  return Valuation::finite(k);
}

Int mod_inverse(const Int& x, const Int& modulus) {
  // extended Euclid
  Int r0 = modulus, r1 = mod_floor(x, modulus);
  Int t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    Int t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) {
    throw NotInvertible("no inverse of " + x.str() + " mod " + modulus.str());
  }
  return mod_floor(t0, modulus);
}

int legendre_symbol(const Int& a, const Int& p) {
  Int r = mod_floor(a, p);
  if (r == 0) return 0;
  Int e = powm(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

Int sqrt_mod_p(const Int& a, const Int& p) {
  if (legendre_symbol(a, p) != 1) {
    throw NotAResidue(a.str() + " is not a nonzero quadratic residue mod " +
                      p.str());
  }
  Int n = mod_floor(a, p);
  Int x;
  if (p % 4 == 3) {
    x = powm(n, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks
    Int q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    Int z = 2;
    while (legendre_symbol(z, p) != -1) ++z;
    Int m = s;
    Int c = powm(z, q, p);
    Int t = powm(n, q, p);
    x = powm(n, (q + 1) / 2, p);
    while (t != 1) {
      Int i = 0;
      Int tt = t;
      while (tt != 1) {
        tt = tt * tt % p;
        ++i;
      }
      Int b = c;
      for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
      m = i;
      c = b * b % p;
      t = t * c % p;
      x = x * b % p;
    }
  }
  return x <= p - x ? x : p - x;
}

PadicApprox hensel_lift_sqrt(const Int& a, const Int& p,
                             unsigned target_precision) {
  if (target_precision < 1) throw Error("target precision must be >= 1");
  Int x = sqrt_mod_p(a, p);  // throws NotAResidue when no root exists
  unsigned k = 1;
  while (k < target_precision) {
    k = std::min(2 * k, target_precision + 0u);
    // a mod-p^k root needs the Newton step taken mod p^k only
    Int m = pow_int(p, k);
    Int inv2 = mod_inverse(2, m);
    x = mod_floor((x + mod_floor(a, m) * mod_inverse(x, m)) * inv2, m);
  }
  return PadicApprox{mod_floor(x, pow_int(p, target_precision)),
                     target_precision, p};
}

std::pair<PadicApprox, unsigned> padic_sqrt(const Int& a, const Int& p,
                                            unsigned target_precision) {
  if (a == 0) throw Error("padic_sqrt requires nonzero input");
  Valuation nu = padic_valuation(a, p);
  long v = nu.value();
  if (v % 2 != 0) {
    throw NoSquareRoot("nu_p(" + a.str() + ") = " + std::to_string(v) +
                       " is odd");
  }
  Int d = a / pow_int(p, static_cast<unsigned>(v));
  if (legendre_symbol(d, p) != 1) {
    throw NoSquareRoot("unit part " + d.str() +
                       " is a quadratic non-residue mod " + p.str());
  }
  return {hensel_lift_sqrt(d, p, target_precision),
          static_cast<unsigned>(v / 2)};
}

PadicApprox hensel_lift_quadratic_root(const Quadratic& f, const Int& x0,
                                       unsigned target_precision) {
  const Int& p = f.p;
  if (mod_floor(f.eval(x0), p) != 0) {
    throw NotASimpleRoot("f(x0) != 0 mod p for x0 = " + x0.str());
  }
  if (mod_floor(f.derivative(x0), p) == 0) {
    throw NotASimpleRoot("f'(x0) == 0 mod p for x0 = " + x0.str());
  }
  Int x = mod_floor(x0, p);
  unsigned k = 1;
  while (k < target_precision) {
    k = std::min(2 * k, target_precision + 0u);
    Int m = pow_int(p, k);
    Int step = mod_floor(f.eval(x), m) * mod_inverse(f.derivative(x), m);
    x = mod_floor(x - step, m);
  }
  return PadicApprox{mod_floor(x, pow_int(p, target_precision)),
                     target_precision, p};
}

}  // namespace padic
