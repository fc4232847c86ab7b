#include <doctest.h>

#include <random>

#include "st3/catalog.hpp"
#include "st3/reference.hpp"
#include "st3/stats.hpp"

using namespace st3;

namespace {

const STGroup& get(const std::string& name) {
  const STGroup* g = find_group(extended_catalog(), name);
  REQUIRE_MESSAGE(g != nullptr, name);
  return *g;
}

APoly mono(int e1, int e2, int e3) { return APoly{{Exp3{e1, e2, e3}, 1}}; }

// mean of the exact per-component averages
mpq_class slow_average(const STGroup& g, const APoly& f) {
  mpq_class s = 0;
  for (std::size_t c = 0; c < g.component_count(); ++c) {
    auto q = component_average(component_profile(g, c), f).try_rational();
    REQUIRE(q);
    s += *q;
  }
  return s / static_cast<long>(g.component_count());
}

}  // namespace

TEST_SUITE("stats") {
  TEST_CASE("identity component profile") {
    const STGroup& a = get("1.6.A.1.1a");
    ComponentProfile p = component_profile(a, 0);
    CHECK(p.centrality == Centrality::Central);
    for (int i = 0; i < 3; ++i) CHECK(p.a[i] == elementary_a()[i]);
  }

  TEST_CASE("component averages") {
    ComponentProfile a = component_profile(get("1.6.A.1.1a"), 0);
    CHECK(component_average(a, mono(2, 0, 0)) == CycloNum(1));
    ComponentProfile n = component_profile(get("1.6.N.1.1a"), 0);
    CHECK(component_average(n, mono(2, 0, 0)) == CycloNum(18));
    const STGroup& g = get("J(C(3,3))");
    for (std::size_t c = 0; c < g.component_count(); c += 5)
      CHECK(component_average(component_profile(g, c), mono(0, 0, 0)) == CycloNum(1));
  }

  TEST_CASE("permuted SU(2) factors") {
    // the 3-cycle component: det(1 - gT) = 1 - tr(a) T^3 + T^6
    const STGroup& e = get("1.6.E.3.1a");
    REQUIRE(e.component_count() == 3);
    int cycles = 0;
    for (std::size_t c = 0; c < 3; ++c) {
      ComponentProfile p = component_profile(e, c);
      if (p.centrality != Centrality::CycleReduced) continue;
      ++cycles;
      CHECK(p.a[0].is_zero());
      CHECK(p.a[1].is_zero());
      CHECK(p.torus.rank == 1);
      LPoly x = LPoly::monomial(1, {1, 0, 0}, CycloNum(1)), xi = LPoly::monomial(1, {-1, 0, 0}, CycloNum(1));
      CHECK(p.a[2] == -(x + xi));
    }
    CHECK(cycles == 2);
  }

  TEST_CASE("N(U(3)) coset") {
    const STGroup& g = get("1.6.B.2.1a");
    REQUIRE(g.component_count() == 2);
    int closed = 0;
    for (std::size_t c = 0; c < 2; ++c) {
      ComponentProfile p = component_profile(g, c);
      if (p.centrality != Centrality::ClosedForm) continue;
      ++closed;
      CHECK(p.a[0].is_zero());
      CHECK(p.a[2].is_zero());
    }
    CHECK(closed == 1);
    ZMatrix z = densities(g);
    CHECK(z[1][0] == mpq_class(1, 2));
    CHECK(z[2][0] == mpq_class(1, 2));
    CHECK(z[3][0] == mpq_class(1, 2));
    for (const auto& l : partitions_333())
      CHECK(apoly_average(g, char_in_coeffs(l)) == nu3_multiplicity(l, true));
  }

  TEST_CASE("densities of USp(6)") {
    ZMatrix z = densities(get("1.6.A.1.1a"));
    CHECK(z[0][0] == 1);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 7; ++c)
        if (r || c) CHECK(z[r][c] == 0);
  }

  TEST_CASE("connected 3-diagonals") {
    CHECK(diagonal(get("1.6.B.1.1a"), 3).at({2, 2, 2}) == 10);
    CHECK(diagonal(get("1.6.N.1.1a"), 3).at({3, 3, 3}) == 20350);
    CHECK(diagonal(get("1.6.D.1.1a"), 3).at({3, 2, 1}) == 50);
    for (int c = 0; c < 14; ++c) {
      Diagonal d = diagonal(get(connected_label(c)), 3);
      for (const auto& row : reference_connected_diagonals())
        CHECK_MESSAGE(d.at(row.lambda) == row.norms[c], connected_label(c) << " " << row.lambda.str());
    }
  }

  TEST_CASE("exact per-component route agrees with the grid route") {
    std::mt19937 rng(17);
    auto ms = monomials_up_to(6);
    std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
    for (const char* name : {"1.6.E.6.1a", "1.6.F.4.2a", "H_{a,b,c}", "SU(2)xJ(E_3)", "N(U(1))xD_3",
                             "L(J(C_4),J(C_2))", "M(D_3)", "J_s(A(3,3))", "J(B(3,1))", "1.6.B.2.1a",
                             "1.6.D.2.1a", "J(J(E_2),E_2)"}) {
      const STGroup& g = get(name);
      for (int t = 0; t < 4; ++t) {
        Exp3 e = ms[pick(rng)];
        APoly f = mono(e[0], e[1], e[2]);
        CHECK_MESSAGE(slow_average(g, f) == moment(g, e[0], e[1], e[2]), name << " " << e[0] << e[1] << e[2]);
      }
    }
  }

  TEST_CASE("class representatives give the same averages as all components") {
    StatsOptions every;
    every.by_class = false;
    for (const char* name : {"J(C(3,3))", "SU(2)xO", "L(J(D_6),D_6)", "M(S_4)", "H_{a,b,c,s,t}"})
      CHECK_MESSAGE(monomial_averages(get(name), 10, every) == monomial_averages(get(name), 10), name);
  }

  TEST_CASE("simplex and norms") {
    const STGroup& g = get("J(E(168))");
    Simplex s = simplex(g, 6);
    CHECK(s.size() == monomials_up_to(6).size());
    CHECK(s.at({0, 0, 0}) == 1);
    CHECK(norm(g, {1, 0, 0}, {1, 0, 0}) == moment(g, 2, 0, 0));
    CHECK(norm(g, {0, 0, 0}, {1, 1, 0}) == apoly_average(g, char_in_coeffs({1, 1, 0})));
    CHECK(partitions_in_box(3).size() == 20);
    CHECK(partitions_in_box(2).size() == 10);
  }

  TEST_CASE("CSV output") {
    const STGroup& g = get("1.6.A.1.1a");
    std::string d = diagonal_csv(diagonal(g, 1));
    CHECK(d == "l1,l2,l3,value\n0,0,0,1\n1,0,0,1\n1,1,0,1\n1,1,1,1\n");
    CHECK(z_csv(densities(g)).substr(0, 14) == "1,0,0,0,0,0,0\n");
  }
}
