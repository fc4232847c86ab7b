#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "st3/harness.hpp"
#include "st3/stats.hpp"

using namespace st3;

namespace {

const STGroup& get(const std::string& name) {
  const STGroup* g = find_group(extended_catalog(), name);
  REQUIRE_MESSAGE(g != nullptr, name);
  return *g;
}

bool sampler_supported(const STGroup& g) {
  for (const auto& f : g.connected.factors)
    if (f.type.id == FactorId::USp4 || f.type.id == FactorId::USp6) return false;
  return true;
}

EmpiricalProfile sampled(const STGroup& g, long n, std::uint64_t seed, int w = 18) {
  EmpiricalProfile p(w);
  Sampler s(g, seed);
  for (long i = 0; i < n; ++i) {
    auto a = s.next();
    p.add_normalized(a[0], a[1], a[2]);
  }
  return p;
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("records") {
    auto r = parse_record("2 0 0 0", 1);
    REQUIRE(r);
    EmpiricalProfile p(6);
    p.add(*r);
    CHECK(p.count == 1);
    CHECK(p.z[1][0] == 1);
    CHECK(p.z[2][0] == 1);
    CHECK(p.z[0][3] == 1);  // a2 = 0
    CHECK(p.moment({1, 0, 0}) == 0);

    auto q = parse_record("5 -4 8 -12  # comment", 2);
    REQUIRE(q);
    CHECK(q->normalized()[0] == doctest::Approx(-4 / std::sqrt(5.0)));
    CHECK(q->normalized()[0] == doctest::Approx(-1.7889).epsilon(1e-4));

    CHECK_FALSE(parse_record("   # only a comment", 3));
    CHECK_FALSE(parse_record("", 4));
  }

  TEST_CASE("rejections carry the line number") {
    auto fails_with = [](const std::string& line, const std::string& part) {
      try {
        parse_record(line, 42);
      } catch (const IngestError& e) {
        std::string w = e.what();
        return w.find("line 42") != std::string::npos && w.find(part) != std::string::npos;
      }
      return false;
    };
    CHECK(fails_with("7 20 0 0", "Weil"));
    CHECK(fails_with("7 0 106 0", "Weil"));
    CHECK(fails_with("7 0 0 371", "Weil"));
    CHECK(fails_with("8 0 0 0", "prime"));
    CHECK(fails_with("7 x 0 0", "integer"));
    CHECK(fails_with("7 1 2", "expected"));
    CHECK(parse_record("7 15 105 370", 1));  // on the bounds

    std::istringstream in("2 0 0 0\n3 1 1 1\n5 100 0 0\n");
    try {
      ingest(in);
      FAIL("expected a rejection");
    } catch (const IngestError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }

  TEST_CASE("merge is a fold") {
    std::istringstream a("2 0 0 0\n3 1 -1 2\n"), b("5 -4 8 -12\n7 2 7 0\n"), all("2 0 0 0\n3 1 -1 2\n5 -4 8 -12\n7 2 7 0\n");
    EmpiricalProfile pa = ingest(a, 8), pb = ingest(b, 8), pall = ingest(all, 8);
    pa.merge(pb);
    CHECK(pa.count == 4);
    CHECK(pa.z == pall.z);
    for (std::size_t k = 0; k < pa.sums.size(); ++k) CHECK(pa.sums[k] == doctest::Approx(pall.sums[k]));
    CHECK(pall.z[0][4] == 1);  // c2 = 7 = p at p = 7
  }

  TEST_CASE("sampling is deterministic") {
    const STGroup& g = get("J(C(3,3))");
    CHECK(sample(g, 50, 9) == sample(g, 50, 9));
    CHECK(sample(g, 50, 9) != sample(g, 50, 10));
    CHECK_THROWS_AS(Sampler(get("1.6.A.1.1a"), 1), UnsupportedSampler);
    CHECK_THROWS_AS(Sampler(get("1.6.D.1.1a"), 1), UnsupportedSampler);
  }

  TEST_CASE("samples lie in the Weil box and are symplectic") {
    for (const char* name : {"1.6.N.1.1a", "1.6.B.2.1a", "1.6.E.6.1a", "M(S_4)"})
      for (const auto& a : sample(get(name), 500, 3)) {
        CHECK(std::abs(a[0]) <= 6 + 1e-9);
        CHECK(std::abs(a[1]) <= 15 + 1e-9);
        CHECK(std::abs(a[2]) <= 20 + 1e-9);
      }
  }

  TEST_CASE("U(1)_3 mean of a2 within 3 sigma") {
    const STGroup& g = get("1.6.N.1.1a");
    const long n = 100000;
    EmpiricalProfile p = sampled(g, n, 77, 4);
    double m = moment(g, 0, 1, 0).get_d(), v = moment(g, 0, 2, 0).get_d() - m * m;
    CHECK(std::abs(p.moment({0, 1, 0}) - m) <= 3 * std::sqrt(v / n));
  }

  TEST_CASE("N(U(3)): half the samples have a1 = 0") {
    const long n = 20000;
    EmpiricalProfile p = sampled(get("1.6.B.2.1a"), n, 5, 2);
    double z1 = p.densities()[1][0];
    CHECK(std::abs(z1 - 0.5) <= 3 * std::sqrt(0.25 / n));
    CHECK(p.densities()[3][0] == doctest::Approx(z1));
  }

  TEST_CASE("point densities converge for 20 groups") {
    std::vector<const STGroup*> pool;
    for (const auto& g : extended_catalog())
      if (sampler_supported(g)) pool.push_back(&g);
    std::mt19937 rng(31);
    std::shuffle(pool.begin(), pool.end(), rng);
    const long n = 20000;
    for (int i = 0; i < 20; ++i) {
      const STGroup& g = *pool[i];
      double z1 = densities(g)[1][0].get_d();
      double emp = sampled(g, n, 100 + i, 2).densities()[1][0];
      CHECK_MESSAGE(std::abs(emp - z1) <= 3 * std::sqrt(z1 * (1 - z1) / n) + 1e-12, g.label);
    }
  }

  TEST_CASE("sampled N-type data ranks its group near the top") {
    // The degree-14 norms alone have sampling errors in the hundreds at this
    // n, far above any useful absolute tolerance.  The density columns
    // carry the discrimination, so rank by the key that includes them.
    int tested = 0;
    for (const auto& g : extended_catalog()) {
      if (g.abs_type != 'N' || !g.realizable || tested++ % 12) continue;
      EmpiricalProfile p = sampled(g, 100000, 11);
      auto m = match_empirical(p.key(KeyVariant::CompZNorm3Select), 1e12,
                              KeyVariant::CompZNorm3Select);
      std::size_t rank = m.size();
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i].label == g.label) rank = i;
      CHECK_MESSAGE(rank < 10, g.label << " ranked " << rank);
    }
  }
}
