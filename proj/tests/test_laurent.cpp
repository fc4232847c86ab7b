#include <doctest.h>

#include <map>
#include <random>

#include "st3/weylchar.hpp"

using namespace st3;

namespace {

LPoly mono(int rank, Exp3 e, long c = 1) { return LPoly::monomial(rank, e, CycloNum(c)); }

LPoly random_poly(std::mt19937& rng, int rank) {
  std::uniform_int_distribution<int> ex(-3, 3), c(-4, 4);
  LPoly p(rank);
  for (int i = 0; i < 6; ++i) {
    Exp3 e{0, 0, 0};
    for (int v = 0; v < rank; ++v) e[v] = ex(rng);
    p += mono(rank, e, c(rng));
  }
  return p;
}

// schoolbook product over a map, for comparison
std::map<Exp3, long> naive_mul(const LPoly& a, const LPoly& b) {
  std::map<Exp3, long> out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Exp3 ea = LPoly::unpack(ka), eb = LPoly::unpack(kb);
      Exp3 e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      out[e] += ca.try_rational()->get_num().get_si() * cb.try_rational()->get_num().get_si();
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("arithmetic") {
    LPoly s = mono(1, {1, 0, 0}) + mono(1, {-1, 0, 0});
    CHECK(s * s == mono(1, {2, 0, 0}) + mono(1, {0, 0, 0}, 2) + mono(1, {-2, 0, 0}));
    CHECK(s + LPoly(1) == s);
    CHECK(mono(2, {1, 1, 0}) * mono(2, {-1, -1, 0}) == mono(2, {0, 0, 0}));
    CHECK((s - s).is_zero());
  }

  TEST_CASE("products match schoolbook multiplication") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      LPoly a = random_poly(rng, 3), b = random_poly(rng, 3);
      auto want = naive_mul(a, b);
      LPoly got = a * b;
      REQUIRE(got.size() == want.size());
      for (const auto& [e, c] : want) CHECK(got.coeff(e) == CycloNum(c));
    }
  }

  TEST_CASE("coeff_slice") {
    LPoly p = mono(1, {1, 0, 0}) + mono(1, {0, 0, 0}, 3) + mono(1, {-1, 0, 0});
    CHECK(p.coeff_slice(0, 0) == LPoly::constant(0, CycloNum(3)));
    LPoly s = mono(1, {1, 0, 0}) + mono(1, {-1, 0, 0});
    CHECK((s * s).coeff_slice(0, 2) == LPoly::constant(0, CycloNum(1)));
    LPoly w3 = mono(3, {1, 0, 1}) * mono(3, {0, 1, 1}) * mono(3, {-1, -1, 1});
    CHECK(w3.coeff_slice(2, 0).is_zero());
  }

  TEST_CASE("substitute_u3") {
    CHECK(mono(3, {1, 1, 1}).substitute_u3() == mono(3, {0, 0, 3}));
    CHECK(mono(3, {1, -1, 0}).substitute_u3() == mono(3, {1, -1, 0}));
    LPoly sum = mono(3, {1, 0, 0}) + mono(3, {0, 1, 0}) + mono(3, {0, 0, 1});
    CHECK(sum.substitute_u3() == mono(3, {1, 0, 1}) + mono(3, {0, 1, 1}) + mono(3, {-1, -1, 1}));
  }

  TEST_CASE("apply_weyl") {
    SignedPerm swap;
    swap.perm = {1, 0, 2};
    CHECK(mono(3, {2, 1, 0}).apply_weyl(swap) == mono(3, {1, 2, 0}));
    SignedPerm inv;
    inv.sign = {-1, 1, 1};
    CHECK((mono(1, {1, 0, 0}) + mono(1, {0, 0, 0}, 2)).apply_weyl(inv) ==
          mono(1, {-1, 0, 0}) + mono(1, {0, 0, 0}, 2));
    std::mt19937 rng(2);
    LPoly p = random_poly(rng, 3);
    CHECK(p.apply_weyl(SignedPerm{}) == p);
    SignedPerm w;
    w.perm = {2, 0, 1};
    w.sign = {1, -1, -1};
    CHECK(p.apply_weyl(w).apply_weyl(w.inverse()) == p);
  }
}
