#pragma once

#include <array>
#include <string>
#include <vector>

#include "st3/weylchar.hpp"

namespace st3 {

// Published values that the computations are checked against.  Kept as
// transcribed, including a known sign slip in the (3,2,2) character.

struct CharRow {
  Partition3 lambda;
  const char* poly;  // in a1, a2, a3
};
const std::vector<CharRow>& reference_characters();

// Columns are the connected groups of types A..N in order.
struct DiagonalRow {
  Partition3 lambda;
  std::array<long, 14> norms;
};
const std::vector<DiagonalRow>& reference_connected_diagonals();
std::string connected_label(int column);  // "1.6.A.1.1a", ...

// Canonical representatives, sorted by order then lexicographically.
const std::vector<std::string>& reference_single_classes();  // 16
const std::vector<std::string>& reference_cyclic_classes();  // 23

}  // namespace st3
