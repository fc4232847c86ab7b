#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

#include "st3/catalog.hpp"

namespace st3 {

enum class Centrality { Central, CycleReduced, ClosedForm };
std::string centrality_name(Centrality c);

// Coefficients of det(1 - D(u) h T) as Laurent polynomials on the torus
// that is integrated over.  For cycle-reduced components the torus is the
// reduced one: each cycle of permuted SU(2) factors keeps the variable of
// its first factor only.
struct ComponentProfile {
  Mat h;
  std::array<LPoly, 3> a;
  Centrality centrality = Centrality::Central;
  ConnectedGroup torus;
  LPoly weyl_density;  // prod over positive roots of (1 - e^{-alpha})
  std::array<CycloNum, 64> minors;  // principal minors of h by slot mask
};

ComponentProfile component_profile(const STGroup& g, std::size_t component);
// Exact average of F(a1, a2, a3) over the component.
CycloNum component_average(const ComponentProfile& p, const APoly& f);

// Weyl density of a connected group in its global torus variables.
LPoly weyl_density(const ConnectedGroup& g);

// exponent triples with e1 + 2 e2 + 3 e3 <= w, e3 fastest
std::vector<Exp3> monomials_up_to(int w);

struct StatsOptions {
  bool by_class = true;  // one representative per conjugacy class
};

// Exact group averages of every monomial of weight <= w (cached).
const std::map<Exp3, mpq_class>& monomial_averages(const STGroup& g, int w = 18,
                                                   const StatsOptions& opt = {});

using Simplex = std::map<Exp3, mpq_class>;
using Diagonal = std::map<Partition3, mpq_class>;
using ZMatrix = std::array<std::array<mpq_class, 7>, 4>;

mpq_class moment(const STGroup& g, int e1, int e2, int e3);
Simplex simplex(const STGroup& g, int m = 12);
APoly apoly_mul(const APoly& x, const APoly& y);
mpq_class apoly_average(const STGroup& g, const APoly& f);
mpq_class norm(const STGroup& g, const Partition3& lambda, const Partition3& mu);
std::vector<Partition3> partitions_in_box(int m);
Diagonal diagonal(const STGroup& g, int m = 3);

// which of a1, a2, a3 are constant on a component, and a2's value
struct ComponentDensity {
  bool a1_zero = false, a3_zero = false;
  bool a2_constant = false;
  int a2_value = 0;
};
ComponentDensity component_density(const ComponentProfile& p);
ZMatrix densities(const STGroup& g);

extern const std::array<Partition3, 3> kNormSelect;  // (3,2,2), (3,3,0), (3,3,1)

struct StatProfile {
  Simplex simplex;
  Diagonal diagonal;
  std::array<mpq_class, 3> norms_select;
  ZMatrix z;
  Fingerprint fingerprint;
};
StatProfile stat_profile(const STGroup& g, int m = 12);

std::string simplex_csv(const Simplex& s);
std::string diagonal_csv(const Diagonal& d);
std::string z_csv(const ZMatrix& z);

// Integer averages of monomials over the non-identity component of
// N(U(3)), from the USp(6) decomposition.
const std::map<Exp3, long>& nu3_coset_averages(int w = 18);

}  // namespace st3
