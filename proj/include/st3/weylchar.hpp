#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "st3/cyclo.hpp"
#include "st3/laurent.hpp"

namespace st3 {

using LPoly = Laurent<CycloNum>;

enum class FactorId { U1, SU2, U3, USp4, USp6 };

// One simple or classical factor of an identity component, embedded
// diagonally d times (d only matters for U1 and SU2).
struct ConnectedType {
  FactorId id = FactorId::USp6;
  int d = 1;
  int rank = 3;
  // local eigenvalue slots: first half the "u" side, second half conjugates
  std::vector<Exp3> weight_map;
  std::vector<SignedPerm> weyl;
  Exp3 rho{0, 0, 0};

  static ConnectedType make(FactorId id, int d = 1);
  std::string name() const;
  bool operator==(const ConnectedType& o) const { return id == o.id && d == o.d; }
};

// Product of factors.  Global torus variables are assigned to factors in
// order; slot i of USp(6) is paired with slot i+3.
struct TorusFactor {
  ConnectedType type;
  int var = 0;             // first global variable
  std::vector<int> slots;  // global slot of each local slot
};

struct ConnectedGroup {
  std::vector<TorusFactor> factors;
  int rank = 0;
  std::array<Exp3, 6> slot_weight{};

  static ConnectedGroup make(std::vector<std::pair<ConnectedType, std::vector<int>>> parts);
  static ConnectedGroup single(FactorId id);  // on all six slots
  std::vector<SignedPerm> weyl() const;       // full product Weyl group
  std::string name() const;
};

struct Partition3 {
  int l1 = 0, l2 = 0, l3 = 0;
  bool valid() const { return l1 >= l2 && l2 >= l3 && l3 >= 0; }
  Exp3 exp() const { return {l1, l2, l3}; }
  std::string str() const;
  auto operator<=>(const Partition3&) const = default;
};

// The 20 partitions contained in (3,3,3), lexicographically increasing.
const std::vector<Partition3>& partitions_333();

// Weyl numerator sum_w sign(w) u^{w(mu)}.
LPoly alternant(const ConnectedType& t, const Exp3& mu);
LPoly divide_exact(const LPoly& num, const LPoly& den);

bool is_dominant(FactorId id, const Exp3& lambda);
LPoly character(const ConnectedType& t, const Exp3& lambda);

// Integer polynomial in a1,a2,a3 keyed by exponent triple.
using APoly = std::map<Exp3, long>;
APoly char_in_coeffs(const Partition3& lambda);
std::string apoly_str(const APoly& p);
// inverse of apoly_str; accepts terms like "-2a1^2a3" in any order
APoly parse_apoly(std::string_view text);
// a1,a2,a3 as Laurent polynomials on the USp(6) torus
const std::array<LPoly, 3>& elementary_a();

bool is_weyl_invariant(const ConnectedGroup& g, const LPoly& f);
CycloNum trivial_multiplicity(const ConnectedGroup& g, const LPoly& f);
CycloNum trivial_multiplicity(const ConnectedType& t, const LPoly& f);

int nu3_multiplicity(const Partition3& lambda, bool normalized);

}  // namespace st3
