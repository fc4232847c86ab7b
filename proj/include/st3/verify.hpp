#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "st3/catalog.hpp"

namespace st3 {

// Checks against published values and structural properties.  Each
// returns one line per item checked.

CountReport verify_characters();                               // 20 characters in a1, a2, a3
CountReport verify_connected_diagonals(const std::vector<STGroup>& cat);  // 14 x 20 norms
CountReport verify_roots();
CountReport verify_nu3(const std::vector<STGroup>& cat);
// Equal distributions with different component groups, and the L-type
// pair separated by one moment.
CountReport verify_coincidences(const std::vector<STGroup>& cat);
CountReport verify_audits(const std::vector<STGroup>& cat);

// property suite
CountReport check_orthonormality();
CountReport check_norm_integrality(const std::vector<STGroup>& cat);
const std::vector<std::pair<std::string, std::string>>& monotonicity_pairs();  // (sub, super)
CountReport check_monotonicity(const std::vector<STGroup>& cat);
CountReport check_weyl_invariance(const std::vector<STGroup>& cat);
CountReport check_density_identities(const std::vector<STGroup>& cat);
const std::vector<std::string>& sampler_groups();
CountReport check_sampler(const std::vector<STGroup>& cat, long n = 100000, std::uint64_t seed = 2024);

}  // namespace st3
