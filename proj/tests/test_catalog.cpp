#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "st3/catalog.hpp"
#include "st3/stats.hpp"

using namespace st3;

namespace {

const STGroup& get(const std::string& name) {
  const STGroup* g = find_group(extended_catalog(), name);
  REQUIRE_MESSAGE(g != nullptr, name);
  return *g;
}

long count_type(char t, bool realizable_only) {
  long n = 0;
  for (const auto& g : extended_catalog()) n += g.abs_type == t && (!realizable_only || g.realizable);
  return n;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("connected groups") {
    STGroup a = connected_group('A');
    CHECK(a.connected.rank == 3);
    CHECK(a.connected.weyl().size() == 48);
    CHECK(a.component_count() == 1);
    STGroup n = connected_group('N');
    CHECK(n.connected.rank == 1);
    CHECK(connected_group('C').connected.name() == get("1.6.C.1.1a").connected.name());
    for (char t = 'A'; t <= 'N'; ++t) CHECK(get(std::string("1.6.") + t + ".1.1a").component_count() == 1);
  }

  TEST_CASE("catalog sizes") {
    CHECK(extended_catalog().size() == 433);
    long realizable = 0;
    for (const auto& g : extended_catalog()) realizable += g.realizable;
    CHECK(realizable == 410);
    CHECK(count_type('H', false) == 33);
    CHECK(count_type('H', true) == 13);
    CHECK(count_type('L', true) == 122);
    CHECK(count_type('N', true) == 171);
    CHECK(verify_counts(extended_catalog()).ok());
    std::set<std::string> labels;
    for (const auto& g : extended_catalog()) labels.insert(g.label);
    CHECK(labels.size() == 433);
  }

  TEST_CASE("products") {
    const STGroup& d = get("1.6.D.2.1a");
    CHECK(d.abs_type == 'D');
    CHECK(d.component_count() == 2);
    const STGroup& f = get("J(J(E_2),E_2)");
    CHECK(f.abs_type == 'J');
    // index 2 in N(U(1)) x J(E_2)
    CHECK(get("N(U(1))xJ(E_2)").component_count() == 8);
    CHECK(f.component_count() == 4);
    CHECK(get("SU(2)xJ(O)").component_count() == 48);
    for (const auto& g : extended_catalog())
      for (const auto& m : g.gens) {
        CHECK(m.is_unitary());
        CHECK(m.is_symplectic());
      }
  }

  TEST_CASE("type N components") {
    CHECK(get("A(1,7)").component_count() == 7);
    CHECK(get("J(E(216))").component_count() == 432);
    CHECK(get("J(C(3,3))").component_count() == get("J_s(C(3,3))").component_count());
  }

  TEST_CASE("cyclic groups of the same order are told apart") {
    for (auto [x, y] : {std::pair{"A(1,4)_1", "A(1,4)_2"}, std::pair{"A(1,6)_1", "A(1,6)_2"},
                        std::pair{"A(1,8)_1", "A(1,8)_2"}}) {
      CHECK(get(x).component_count() == get(y).component_count());
      CHECK(diagonal(get(x), 3) != diagonal(get(y), 3));
    }
  }

  TEST_CASE("M-type rotation orders") {
    CHECK(m_type_cyclic_orders() == std::vector<int>{1, 2, 3, 4, 6});
    CHECK(count_type('M', true) == 11);
  }

  TEST_CASE("blocks round trip") {
    auto builtin = builtin_genus2_blocks();
    CHECK(builtin.size() == 42);
    CHECK(parse_blocks(blocks_text(builtin)) == builtin);
    CHECK(load_blocks(default_blocks_path()) == builtin);
  }

  TEST_CASE("missing blocks are reported") {
    std::string path = "st3_partial_blocks.txt";
    auto blocks = builtin_genus2_blocks();
    std::erase_if(blocks, [](const Genus2Block& b) { return b.label == "E_3"; });
    {
      std::ofstream out(path);
      out << blocks_text(blocks);
    }
    std::vector<std::string> log;
    BuildOptions opt;
    opt.blocks_path = path;
    opt.log = [&](const std::string& s) { log.push_back(s); };
    auto cat = build_catalog(opt);
    std::remove(path.c_str());
    CHECK(cat.size() < 433);
    bool reported = false;
    for (const auto& l : log) reported |= l.find("lacks 1 SU2_2 blocks") != std::string::npos && l.find("E_3") != std::string::npos;
    CHECK(reported);
    CHECK_FALSE(verify_counts(cat).ok());
  }

  TEST_CASE("catalog round trip") {
    const auto& cat = extended_catalog();
    auto back = parse_catalog(catalog_text(cat));
    REQUIRE(back.size() == cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) {
      CHECK(back[i].record() == cat[i].record());
      CHECK(back[i].component_count() == cat[i].component_count());
      CHECK(back[i].components.quotient.fingerprint() == cat[i].components.quotient.fingerprint());
    }
    // profiles recomputed over every component agree with the class-wise originals
    StatsOptions every;
    every.by_class = false;
    for (std::size_t i = 0; i < cat.size(); i += 37)
      CHECK_MESSAGE(monomial_averages(back[i], 12, every) == monomial_averages(cat[i], 12), cat[i].label);
  }
}
