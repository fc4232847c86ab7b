#include <doctest.h>

#include "st3/reference.hpp"
#include "st3/weylchar.hpp"

using namespace st3;

namespace {

// Weyl dimension formula for USp(6), written out directly.
long usp6_dim(const Partition3& l) {
  const long rho[3] = {3, 2, 1};
  const long mu[3] = {l.l1 + 3, l.l2 + 2, l.l3 + 1};
  mpq_class d = 1;
  for (int i = 0; i < 3; ++i) d *= mpq_class(mu[i], rho[i]);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) d *= mpq_class(mu[i] * mu[i] - mu[j] * mu[j], rho[i] * rho[i] - rho[j] * rho[j]);
  d.canonicalize();
  return d.get_num().get_si();
}

long u3_dim(const Exp3& l) {
  mpq_class d = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) d *= mpq_class(l[i] - l[j] + j - i, j - i);
  d.canonicalize();
  return d.get_num().get_si();
}

LPoly evaluate(const APoly& f) {
  const auto& a = elementary_a();
  LPoly out(3);
  for (const auto& [e, c] : f) {
    LPoly m = LPoly::constant(3, CycloNum(c));
    for (int i = 0; i < 3; ++i) m *= a[i].pow(e[i]);
    out += m;
  }
  return out;
}

}  // namespace

TEST_SUITE("weylchar") {
  TEST_CASE("simple characters") {
    auto usp6 = ConnectedType::make(FactorId::USp6);
    CHECK(character(usp6, {0, 0, 0}) == LPoly::constant(3, CycloNum(1)));
    auto su2 = ConnectedType::make(FactorId::SU2);
    CHECK(character(su2, {1, 0, 0}) ==
          LPoly::monomial(1, {1, 0, 0}, CycloNum(1)) + LPoly::monomial(1, {-1, 0, 0}, CycloNum(1)));
    CHECK(usp6.weyl.size() == 48);
  }

  TEST_CASE("dimensions follow the Weyl dimension formula") {
    auto usp6 = ConnectedType::make(FactorId::USp6);
    for (const auto& l : partitions_333()) {
      LPoly chi = character(usp6, l.exp());
      CHECK(chi.sum_coeffs() == CycloNum(usp6_dim(l)));
      CHECK(usp6_dim(l) > 0);
    }
    auto u3 = ConnectedType::make(FactorId::U3);
    for (Exp3 l : {Exp3{0, 0, 0}, Exp3{1, 0, 0}, Exp3{2, 1, 0}, Exp3{3, 1, -2}, Exp3{2, 2, -1}})
      CHECK(character(u3, l).sum_coeffs() == CycloNum(u3_dim(l)));
  }

  TEST_CASE("characters are Weyl invariant") {
    for (FactorId id : {FactorId::USp6, FactorId::USp4, FactorId::U3}) {
      auto t = ConnectedType::make(id);
      for (const auto& l : partitions_333()) {
        Exp3 e = l.exp();
        if (id == FactorId::USp4 && e[2] != 0) continue;
        LPoly chi = character(t, e);
        for (const auto& w : t.weyl) CHECK(chi.apply_weyl(w) == chi);
      }
    }
  }

  TEST_CASE("char_in_coeffs expresses the character") {
    auto usp6 = ConnectedType::make(FactorId::USp6);
    for (const auto& l : partitions_333()) CHECK(evaluate(char_in_coeffs(l)) == character(usp6, l.exp()));
    CHECK(apoly_str(char_in_coeffs({1, 0, 0})) == "-a1");
    CHECK(char_in_coeffs({2, 1, 0}) == parse_apoly("-a1a2 + a1 + a3"));
    CHECK(char_in_coeffs({3, 3, 3}) ==
          parse_apoly("a1^2a3 - 3a1a2^2 + 2a1a2 + a1a3^2 + 2a2^2a3 - 2a2a3 - a3^3 + a3"));
  }

  TEST_CASE("reference characters: all rows but (3,2,2) agree, that row is negated") {
    for (const auto& row : reference_characters()) {
      APoly want = parse_apoly(row.poly), got = char_in_coeffs(row.lambda);
      if (row.lambda == Partition3{3, 2, 2}) {
        for (auto& [e, c] : got) c = -c;
        CHECK(got == want);
        // chi at the identity, a = (-6, 15, -20), is the dimension 378
        long at_one = 0;
        for (const auto& [e, c] : char_in_coeffs(row.lambda)) {
          long v = c;
          for (int i = 0; i < e[0]; ++i) v *= -6;
          for (int i = 0; i < e[1]; ++i) v *= 15;
          for (int i = 0; i < e[2]; ++i) v *= -20;
          at_one += v;
        }
        CHECK(at_one == 378);
      } else {
        CHECK_MESSAGE(got == want, row.lambda.str());
      }
    }
  }

  TEST_CASE("parse_apoly round trip") {
    for (const auto& l : partitions_333()) {
      APoly p = char_in_coeffs(l);
      CHECK(parse_apoly(apoly_str(p)) == p);
    }
    CHECK(parse_apoly("0").empty());
    CHECK_THROWS(parse_apoly("a4"));
    CHECK_THROWS(parse_apoly("2 a1 a2"));
  }

  TEST_CASE("trivial multiplicities") {
    auto su2 = ConnectedType::make(FactorId::SU2);
    LPoly s = character(su2, {1, 0, 0});
    CHECK(trivial_multiplicity(su2, s * s) == CycloNum(1));
    auto usp6 = ConnectedType::make(FactorId::USp6);
    CHECK(trivial_multiplicity(usp6, character(usp6, {1, 1, 0}) * character(usp6, {2, 1, 0})).is_zero());
    LPoly c = character(usp6, {3, 3, 1});
    CHECK(trivial_multiplicity(usp6, c * c) == CycloNum(1));
  }

  TEST_CASE("U(3) multiplicities") {
    CHECK(nu3_multiplicity({2, 0, 0}, false) == 1);
    CHECK(nu3_multiplicity({2, 0, 0}, true) == 0);
    CHECK(nu3_multiplicity({2, 2, 0}, true) == 1);
    const ConnectedGroup u3 = ConnectedGroup::single(FactorId::U3);
    auto usp6 = ConnectedType::make(FactorId::USp6);
    for (const auto& l : partitions_333())
      CHECK(trivial_multiplicity(u3, character(usp6, l.exp())) == CycloNum(nu3_multiplicity(l, false)));
  }
}
