#include "st3/fp.hpp"

namespace st3 {

std::optional<mpq_class> rational_reconstruct(std::uint64_t r0, std::uint64_t r1) {
  const mpz_class p0(std::to_string(kPrimes[0].p)), p1(std::to_string(kPrimes[1].p));
  const mpz_class m = p0 * p1;
  // x = r0 + p0 * ((r1 - r0) * p0^-1 mod p1)
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), p0.get_mpz_t(), p1.get_mpz_t());
  mpz_class t = (mpz_class(std::to_string(r1)) - mpz_class(std::to_string(r0))) * inv % p1;
  if (t < 0) t += p1;
  mpz_class x = mpz_class(std::to_string(r0)) + p0 * t;

  // half-extended Euclid on (m, x) until the remainder drops below sqrt(m/2)
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class a0 = m, a1 = x, s0 = 0, s1 = 1;
  while (a1 > bound) {
    mpz_class q = a0 / a1;
    mpz_class a2 = a0 - q * a1, s2 = s0 - q * s1;
    a0 = a1; a1 = a2; s0 = s1; s1 = s2;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  mpq_class r(a1, s1);
  r.canonicalize();
  if (gcd(mpz_class(r.get_den()), m) != 1) return std::nullopt;
  return r;
}

}  // namespace st3
