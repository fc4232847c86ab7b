#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "st3/cyclo.hpp"
#include "st3/fp.hpp"

using namespace st3;

namespace {

CycloNum e(long a, long b) { return CycloNum::root_of_unity(a, b); }

CycloNum random_cyclo(std::mt19937& rng, long n) {
  std::uniform_int_distribution<long> k(0, n - 1), c(-3, 3), d(1, 4);
  CycloNum z;
  for (int i = 0; i < 4; ++i) z += e(k(rng), n) * CycloNum(mpq_class(c(rng), d(rng)));
  return z;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9 * (1 + std::abs(b)); }

}  // namespace

TEST_SUITE("cyclo") {
  TEST_CASE("roots of unity reduce") {
    CHECK(e(0, 1) == CycloNum(1));
    CHECK(e(1, 2) == CycloNum(-1));
    CHECK(e(3, 6) == CycloNum(-1));
    CHECK(e(1, 6).conductor() == 3);  // e(1/6) = -e(2/3)
    CHECK(e(-1, 5) == e(4, 5));
  }

  TEST_CASE("small identities") {
    CHECK(e(1, 3) + e(2, 3) == CycloNum(-1));
    CHECK(e(1, 4) * e(1, 4) == CycloNum(-1));
    CHECK(e(1, 5).conj() == e(4, 5));
    CycloNum s;
    for (int k = 1; k < 7; ++k) s += e(k, 7);
    CHECK(s == CycloNum(-1));
    CycloNum sqrt2 = e(1, 8) + e(-1, 8);
    CHECK(sqrt2 * sqrt2 == CycloNum(2));
  }

  TEST_CASE("abs_square") {
    CHECK((e(1, 7) + e(2, 7) + e(4, 7)).abs_square() == CycloNum(2));
    CHECK(CycloNum(3).abs_square() == CycloNum(9));
    CHECK((CycloNum(1) + e(1, 3) + e(2, 3)).abs_square().is_zero());
  }

  TEST_CASE("try_rational") {
    auto q = (e(1, 6) + e(5, 6)).try_rational();
    REQUIRE(q);
    CHECK(*q == 1);
    CHECK_FALSE(e(1, 8).try_rational());
    CHECK_FALSE((e(1, 5) + e(2, 5) + e(4, 5)).abs_square().try_rational());
  }

  TEST_CASE("field operations agree with the complex embedding") {
    std::mt19937 rng(5);
    for (long n : {3L, 4L, 5L, 7L, 8L, 9L, 12L, 15L, 21L, 24L, 36L, 90L}) {
      for (int trial = 0; trial < 6; ++trial) {
        CycloNum a = random_cyclo(rng, n), b = random_cyclo(rng, n);
        auto ca = a.to_complex(), cb = b.to_complex();
        CHECK(close((a + b).to_complex(), ca + cb));
        CHECK(close((a * b).to_complex(), ca * cb));
        CHECK(close(a.conj().to_complex(), std::conj(ca)));
        if (!a.is_zero()) {
          CHECK(a * a.inverse() == CycloNum(1));
          CHECK(close(a.inverse().to_complex(), 1.0 / ca));
        }
        CHECK(a * (b + CycloNum(1)) == a * b + a);
      }
    }
  }

  TEST_CASE("galois action permutes conjugates") {
    CycloNum z = e(1, 7) + e(2, 7) + e(4, 7);
    CHECK(z.galois(3) == z.conj());
    CHECK(z.galois(2) == z);
    // sqrt(-7)
    CycloNum s = z - z.conj();
    CHECK(s * s == CycloNum(-7));
  }

  TEST_CASE("parse and print round trip") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
      CycloNum a = random_cyclo(rng, 24);
      CHECK(CycloNum::parse(a.str()) == a);
    }
    CHECK(CycloNum::parse("-e(4/9)-e(7/9)") == e(1, 9));
    CHECK(parse_rational("-3/6") == mpq_class(-1, 2));
  }
}

TEST_SUITE("fp") {
  TEST_CASE("reduction is a ring homomorphism") {
    std::mt19937 rng(3);
    for (long n : {7L, 8L, 9L, 24L, 36L, 1058400L / 1050}) {
      for (int trial = 0; trial < 5; ++trial) {
        CycloNum a = random_cyclo(rng, n), b = random_cyclo(rng, n);
        CHECK(Fp<0>::from_cyclo(a * b) == Fp<0>::from_cyclo(a) * Fp<0>::from_cyclo(b));
        CHECK(Fp<1>::from_cyclo(a + b) == Fp<1>::from_cyclo(a) + Fp<1>::from_cyclo(b));
      }
    }
    CHECK(Fp<0>(kPrimes[0].zeta, true).pow(kRootOrder) == Fp<0>(1));
    CHECK_FALSE(Fp<0>(kPrimes[0].zeta, true).pow(kRootOrder / 2) == Fp<0>(1));
  }

  TEST_CASE("rational reconstruction inverts reduction") {
    std::mt19937 rng(4);
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 100000);
    for (int trial = 0; trial < 50; ++trial) {
      mpq_class q(num(rng), den(rng));
      q.canonicalize();
      auto r = rational_reconstruct(Fp<0>::from_mpq(q).v, Fp<1>::from_mpq(q).v);
      REQUIRE(r);
      CHECK(*r == q);
    }
  }
}
