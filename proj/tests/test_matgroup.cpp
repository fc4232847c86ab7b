#include <doctest.h>

#include <set>

#include "st3/catalog.hpp"
#include "st3/matgroup.hpp"

using namespace st3;

namespace {

Mat D(mpq_class a, mpq_class b, mpq_class c) { return Mat::diag_e({a, b, c}); }

// conjugacy classes by orbit enumeration straight from the table
std::multiset<std::size_t> brute_class_sizes(const TableGroup& t) {
  std::vector<bool> seen(t.n, false);
  std::multiset<std::size_t> sizes;
  for (int x = 0; x < t.n; ++x) {
    if (seen[x]) continue;
    std::set<int> orbit;
    for (int g = 0; g < t.n; ++g) orbit.insert(t.mul(t.mul(g, x), t.inv[g]));
    for (int y : orbit) seen[y] = true;
    sizes.insert(orbit.size());
  }
  return sizes;
}

std::multiset<std::size_t> class_sizes(const TableGroup& t) {
  std::multiset<std::size_t> s;
  for (const auto& c : t.conj_classes()) s.insert(c.size());
  return s;
}

}  // namespace

TEST_SUITE("matgroup") {
  TEST_CASE("closure orders") {
    CHECK(FiniteGroup::close({D(mpq_class(1, 3), mpq_class(1, 3), mpq_class(1, 3))}).order() == 3);
    CHECK(FiniteGroup::close(n_type_h_gens("E(216)")).order() == 648);
    CHECK(FiniteGroup::close(n_type_h_gens("A(6,6)")).order() == 108);
    CHECK_THROWS_AS(FiniteGroup::close(n_type_h_gens("E(216)"), 100), ClosureExceedsBound);
  }

  TEST_CASE("quotients by the identity component") {
    CHECK(n_type_group("E(216)").component_count() == 216);
    CHECK(n_type_group("J(E(168))").component_count() == 336);
    CHECK(n_type_group("J(E(216))").component_count() == 432);
    // D(1/21,16/21,4/21) has order 21; mu_3 lies in the scalar torus
    CHECK(n_type_group("A(1,7)").component_count() == 7);
    CHECK(n_type_group("D(4,4)").component_count() == 96);
  }

  TEST_CASE("conjugacy classes agree with orbit enumeration") {
    for (const char* name : {"A(6,6)", "B(T,1)", "C(3,1)", "J(C(3,3))", "J_s(C(3,3))", "D(4,4)"}) {
      const TableGroup& t = n_type_group(name).components.quotient;
      CHECK_MESSAGE(class_sizes(t) == brute_class_sizes(t), name);
    }
    const TableGroup& ab = n_type_group("A(6,6)").components.quotient;
    for (const auto& c : ab.conj_classes()) CHECK(c.size() == 1);
  }

  TEST_CASE("fingerprints") {
    const TableGroup& t = n_type_group("B(T,1)").components.quotient;
    Fingerprint f = t.fingerprint();
    CHECK(f.order == t.n);
    std::map<int, int> orders;
    for (int x = 0; x < t.n; ++x) ++orders[t.order_of(x)];
    CHECK(f.element_orders == orders);
    long center = 0;
    for (int x = 0; x < t.n; ++x) {
      bool central = true;
      for (int g = 0; g < t.n && central; ++g) central = t.mul(g, x) == t.mul(x, g);
      center += central;
    }
    CHECK(f.center_order == center);

    Fingerprint j = n_type_group("J(C(3,3))").components.quotient.fingerprint();
    Fingerprint js = n_type_group("J_s(C(3,3))").components.quotient.fingerprint();
    CHECK(j.order == js.order);
    CHECK(j != js);
  }

  TEST_CASE("extension kinds") {
    auto elems = [](const char* h) { return FiniteGroup::close(n_type_h_gens(h)).elements(); };
    CHECK(extension_kind(elems("A(2,2)"), Mat::identity(3)) == ExtensionKind::Standard);
    CHECK(extension_kind(elems("B(T,1)"), D(mpq_class(1, 4), mpq_class(1, 4), mpq_class(1, 2))) ==
          ExtensionKind::Split);
    Mat g = Mat::parse("1,0,0;0,0,1;0,-1,0");
    CHECK(extension_kind(elems("A(3,2)"), g) == ExtensionKind::Nonsplit);
    for (const auto& s : n_type_specs()) {
      if (s.ext == Extension::None) continue;
      auto want = s.ext == Extension::Standard ? ExtensionKind::Standard
                  : s.ext == Extension::Split  ? ExtensionKind::Split
                                               : ExtensionKind::Nonsplit;
      CHECK_MESSAGE(extension_kind(FiniteGroup::close(s.h_gens).elements(), s.g) == want, s.label);
    }
  }

  TEST_CASE("principal minors of a diagonal matrix are elementary symmetric") {
    std::vector<CycloNum> d;
    for (int i = 0; i < 6; ++i) d.push_back(CycloNum::root_of_unity(i + 1, 7));
    auto m = principal_minors(Mat::diag(d));
    for (int mask = 1; mask < 64; ++mask) {
      CycloNum p(1);
      for (int i = 0; i < 6; ++i)
        if (mask >> i & 1) p *= d[i];
      CHECK(m[mask] == p);
    }
  }

  TEST_CASE("embedding is unitary and symplectic") {
    for (const auto& s : n_type_specs())
      for (const auto& h : s.h_gens) {
        Mat e = Mat::embed(h);
        CHECK(e.is_unitary());
        CHECK(e.is_symplectic());
      }
    CHECK(Mat::symplectic_j().is_symplectic());
  }
}
