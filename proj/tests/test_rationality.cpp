#include <doctest.h>

#include <cmath>
#include <complex>
#include <set>

#include "st3/catalog.hpp"
#include "st3/rationality.hpp"
#include "st3/reference.hpp"

using namespace st3;

namespace {

bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-9; }

double sum_abs2(long u, long v, long n, long k) {
  auto e = [&](long a) { return std::polar(1.0, 2 * M_PI * static_cast<double>(a * k % n) / n); };
  return std::norm(e(u) + e(v) + e(2 * n - u - v));
}

std::set<std::string> as_set(const std::vector<UnityTriple>& v) {
  std::set<std::string> s;
  for (const auto& t : v) s.insert(t.str());
  return s;
}

}  // namespace

TEST_SUITE("rationality") {
  TEST_CASE("canonicalize") {
    CHECK(canonicalize(UnityTriple::parse("2/3,1/3,0")).str() == "0,1/3,2/3");
    CHECK(canonicalize(UnityTriple::parse("2/7,4/7,1/7")).str() == "1/7,2/7,4/7");
    // multiplying by 13 reaches a smaller representative than 1/18,7/18,5/9
    CHECK(canonicalize(UnityTriple::parse("5/9,7/18,1/18")).str() == "1/18,2/9,13/18");
    CHECK(canonicalize(UnityTriple::parse("1/18,7/18,5/9")) == canonicalize(UnityTriple::parse("1/18,2/9,13/18")));
  }

  TEST_CASE("class lists") {
    auto single = single_integrality_classes();
    auto cyc = cyclic_integrality_classes();
    CHECK(single.size() == 16);
    CHECK(cyc.size() == 23);
    std::vector<std::string> ref(reference_single_classes());
    std::vector<std::string> got;
    for (const auto& t : single) got.push_back(t.str());
    CHECK(got == ref);
    for (const auto& t : single) CHECK(single_rational(t));
    for (const auto& t : cyc) CHECK(cyclic_rational(t));
    for (std::size_t i = 1; i < cyc.size(); ++i) CHECK(cyc[i - 1].order() <= cyc[i].order());
  }

  TEST_CASE("numeric enumeration finds the same classes") {
    std::set<std::string> single, cyclic;
    for (long n = 1; n <= 42; ++n)
      for (long u = 0; u < n; ++u)
        for (long v = 0; v < n; ++v) {
          UnityTriple t(mpq_class(u, n), mpq_class(v, n), mpq_class(2 * n - u - v, n));
          if (t.order() != n || is_degenerate(t)) continue;
          if (!near_integer(sum_abs2(u, v, n, 1))) continue;
          single.insert(canonicalize(t).str());
          bool all = true;
          for (long k = 2; k <= n && all; ++k) all = near_integer(sum_abs2(u, v, n, k));
          if (all) cyclic.insert(canonicalize(t).str());
        }
    // order 90 lies beyond the sweep
    single.insert(canonicalize(UnityTriple::parse("1/90,19/90,7/9")).str());
    CHECK(single == as_set(single_integrality_classes()));
    std::set<std::string> cyc_nondeg;
    for (const auto& t : cyclic_integrality_classes())
      if (!is_degenerate(t)) cyc_nondeg.insert(t.str());
    CHECK(cyclic == cyc_nondeg);
    CHECK(single_rational(UnityTriple::parse("1/90,19/90,7/9")));
  }

  TEST_CASE("degenerate triples") {
    CHECK(is_degenerate(UnityTriple::parse("1/5,7/10,1/10")));
    CHECK_FALSE(is_degenerate(UnityTriple::parse("1/7,2/7,4/7")));
    CHECK_FALSE(single_rational(UnityTriple::parse("1/5,2/5,2/5")));
  }

  TEST_CASE("restricted rationality") {
    CHECK(restricted_rationality(FiniteGroup::close(n_type_h_gens("A(6,6)")).elements()));
    Mat bad = Mat::diag_e({0, mpq_class(1, 8), mpq_class(7, 8)});
    CHECK_FALSE(restricted_rationality(FiniteGroup::close({bad}).elements()));
    Mat witness = Mat::diag_e({mpq_class(2, 3), mpq_class(1, 24), mpq_class(7, 24)});
    CHECK_FALSE(restricted_rationality(FiniteGroup::close({witness}).elements()));
  }

  TEST_CASE("resultant sweep") {
    BeukersSmythReport r = beukers_smyth_check();
    CHECK(r.ok());
    CHECK(r.recovered.size() == 16);
  }
}
