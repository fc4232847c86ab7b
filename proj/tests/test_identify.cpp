#include <doctest.h>

#include "st3/identify.hpp"

using namespace st3;

namespace {

const STGroup& get(const std::string& name) {
  const STGroup* g = find_group(extended_catalog(), name);
  REQUIRE_MESSAGE(g != nullptr, name);
  return *g;
}

}  // namespace

TEST_SUITE("identify") {
  TEST_CASE("key layout") {
    CHECK(key_fields(KeyVariant::Conn2Simplex).size() == 4);
    CHECK(key_fields(KeyVariant::Diag3Select).size() == 3);
    CHECK(key_fields(KeyVariant::CompZNorm3Select).size() == 31);
    InvariantKey k = key(get("1.6.A.1.1a"), KeyVariant::Diag3Select);
    CHECK(k.values == std::vector<mpq_class>{1, 1, 1});
    CHECK(parse_variant("c") == KeyVariant::CompZNorm3Select);
    CHECK_THROWS(parse_variant("d"));
  }

  TEST_CASE("connected groups have distinct 2-simplices") {
    KeyAudit a = audit_keys(connected_groups(extended_catalog()), KeyVariant::Conn2Simplex);
    CHECK(a.groups == 14);
    CHECK(a.classes == 14);
  }

  TEST_CASE("the coincident pair") {
    const STGroup& j = get("J(C(3,3))");
    const STGroup& js = get("J_s(C(3,3))");
    CHECK(key(j, KeyVariant::Diag3Select) == key(js, KeyVariant::Diag3Select));
    CHECK(key(j, KeyVariant::CompZNorm3Select) != key(js, KeyVariant::CompZNorm3Select));
  }

  TEST_CASE("self match") {
    const KeyIndex& idx = default_index(KeyVariant::Diag3Select);
    for (std::size_t i = 0; i < idx.entries().size(); i += 23) {
      const auto& [label, k] = idx.entries()[i];
      auto m = idx.match(to_empirical(k), 0);
      REQUIRE(!m.empty());
      bool found = false;
      for (const auto& x : m) {
        CHECK(x.deviation < 1e-6);
        found |= x.label == label;
      }
      CHECK(found);
      if (label != "J(C(3,3))" && label != "J_s(C(3,3))") CHECK(m.size() == 1);
    }
    auto pair = match_empirical(to_empirical(key(get("J(C(3,3))"), KeyVariant::Diag3Select)), 0,
                                KeyVariant::Diag3Select);
    CHECK(pair.size() == 2);
  }

  TEST_CASE("variant c matches every group to itself alone") {
    const KeyIndex& idx = default_index(KeyVariant::CompZNorm3Select);
    for (const auto& [label, k] : idx.entries()) {
      auto m = idx.match(to_empirical(k), 0);
      REQUIRE(m.size() == 1);
      CHECK(m[0].label == label);
    }
  }

  TEST_CASE("perturbed and empty profiles") {
    EmpiricalKey usp6 = to_empirical(key(get("1.6.A.1.1a"), KeyVariant::Diag3Select));
    for (double& v : usp6.values) v += 0.001;
    auto m = match_empirical(usp6, 0.01, KeyVariant::Diag3Select);
    REQUIRE(m.size() == 1);
    CHECK(m[0].label == "1.6.A.1.1a");

    for (KeyVariant v : {KeyVariant::Conn2Simplex, KeyVariant::Diag3Select}) {
      EmpiricalKey zero;
      zero.variant = v;
      zero.values.assign(key_fields(v).size(), 0.0);
      CHECK(match_empirical(zero, 0.01, v).empty());
    }
  }

  TEST_CASE("ranking") {
    EmpiricalKey e = to_empirical(key(get("1.6.N.1.1a"), KeyVariant::Diag3Select));
    auto m = match_empirical(e, 1e12, KeyVariant::Diag3Select);
    CHECK(m.size() == 410);
    for (std::size_t i = 1; i < m.size(); ++i) CHECK(m[i - 1].deviation <= m[i].deviation);
    CHECK(get(m[0].label).answers_to("1.6.N.1.1a"));
  }
}
