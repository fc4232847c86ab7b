// One PASS/FAIL line per acceptance criterion; failing items are listed
// underneath.  Exit status is nonzero if any criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "st3/catalog.hpp"
#include "st3/verify.hpp"

using namespace st3;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::function<std::vector<std::pair<std::string, CountReport>>()> run;
};

}  // namespace

int main() {
  const auto& cat = extended_catalog();
  std::vector<Criterion> criteria = {
      {1, "irreducible characters in a1, a2, a3", [] { return std::vector{std::pair{std::string("characters"), verify_characters()}}; }},
      {2, "3-diagonals of the connected groups",
       [&] { return std::vector{std::pair{std::string("diagonals"), verify_connected_diagonals(cat)}}; }},
      {3, "root-of-unity lists", [] { return std::vector{std::pair{std::string("roots"), verify_roots()}}; }},
      {4, "classification counts", [&] { return std::vector{std::pair{std::string("counts"), verify_counts(cat)}}; }},
      {5, "coincidences", [&] { return std::vector{std::pair{std::string("coincidences"), verify_coincidences(cat)}}; }},
      {6, "invariant key audits", [&] { return std::vector{std::pair{std::string("audits"), verify_audits(cat)}}; }},
      {7, "N(U(3)) closed forms", [&] { return std::vector{std::pair{std::string("nu3"), verify_nu3(cat)}}; }},
      {8, "property suite",
       [&] {
         return std::vector<std::pair<std::string, CountReport>>{
             {"orthonormality", check_orthonormality()},
             {"integrality", check_norm_integrality(cat)},
             {"monotonicity", check_monotonicity(cat)},
             {"weyl invariance", check_weyl_invariance(cat)},
             {"densities", check_density_identities(cat)},
             {"sampler", check_sampler(cat)},
         };
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    auto parts = c.run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = true;
    std::size_t items = 0;
    for (const auto& [name, r] : parts) {
      ok &= r.ok();
      items += r.lines.size();
    }
    std::printf("criterion %d: %s  %s  (%zu checks, %.1f s)\n", c.id, ok ? "PASS" : "FAIL", c.name.c_str(),
                items, secs);
    for (const auto& [name, r] : parts)
      for (const auto& l : r.lines)
        if (!l.ok)
          std::printf("    %s: %s: expected %s, got %s\n", name.c_str(), l.name.c_str(), l.expected.c_str(),
                      l.got.c_str());
    std::fflush(stdout);
    failed += !ok;
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
