#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "st3/cyclo.hpp"

namespace st3 {

// Prime field arithmetic for the fast averaging path.  Every prime is
// 1 mod kRootOrder so that Q(zeta_n) maps into F_p for n | kRootOrder.
inline constexpr std::uint64_t kRootOrder = 1058400;  // 2^5 3^3 5^2 7^2

struct PrimeData {
  std::uint64_t p;
  std::uint64_t zeta;  // element of exact order kRootOrder
};

inline constexpr PrimeData kPrimes[3] = {
    {2305843009180048801ULL, 1070874776012760704ULL},
    {2305843009169464801ULL, 1263477743568616264ULL},
    {2305843009160997601ULL, 1963234189917045089ULL},
};

template <int I>
struct Fp {
  static constexpr std::uint64_t P = kPrimes[I].p;
  std::uint64_t v = 0;

  Fp() = default;
  explicit constexpr Fp(std::uint64_t x, bool) : v(x) {}
  Fp(long x) {  // NOLINT(google-explicit-constructor)
    long r = x % static_cast<long>(P);
    v = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(P) : r);
  }

  bool is_zero() const { return v == 0; }
  Fp operator-() const { return Fp(v ? P - v : 0, true); }
  Fp& operator+=(Fp o) {
    v += o.v;
    if (v >= P) v -= P;
    return *this;
  }
  Fp& operator-=(Fp o) {
    v = v >= o.v ? v - o.v : v + P - o.v;
    return *this;
  }
  Fp& operator*=(Fp o) {
    v = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v) * o.v % P);
    return *this;
  }
  friend Fp operator+(Fp a, Fp b) { return a += b; }
  friend Fp operator-(Fp a, Fp b) { return a -= b; }
  friend Fp operator*(Fp a, Fp b) { return a *= b; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }

  Fp pow(std::uint64_t e) const {
    Fp r(1, true), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  Fp inverse() const { return pow(P - 2); }

  static Fp from_mpz(const mpz_class& z) {
    return Fp(mpz_fdiv_ui(z.get_mpz_t(), P), true);
  }
  static Fp from_mpq(const mpq_class& q) {
    Fp d = from_mpz(q.get_den());
    if (d.is_zero()) throw std::domain_error("denominator divisible by the prime");
    return from_mpz(q.get_num()) * d.inverse();
  }

  // Image of a cyclotomic number under e(1/n) -> zeta^(kRootOrder/n).
  static Fp from_cyclo(const CycloNum& z) {
    const int n = z.conductor();
    if (kRootOrder % static_cast<std::uint64_t>(n) != 0)
      throw std::domain_error("conductor does not divide the prime root order");
    Fp w = Fp(kPrimes[I].zeta, true).pow(kRootOrder / n);
    Fp s(0, true);
    for (const auto& [k, q] : z.terms()) s += from_mpq(q) * w.pow(k);
    return s;
  }
};

// CRT of residues mod the first two primes followed by rational
// reconstruction.  Returns nullopt if no fraction with |num|,den below
// sqrt(P0 P1 / 2) fits.
std::optional<mpq_class> rational_reconstruct(std::uint64_t r0, std::uint64_t r1);

}  // namespace st3
