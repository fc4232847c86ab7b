#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "st3/matgroup.hpp"
#include "st3/weylchar.hpp"

namespace st3 {

enum class Provenance { Builtin, Composed, Loaded };
std::string provenance_name(Provenance p);

// G = G^0 . <gens>, all generators 6x6 in the fixed slot layout:
// slot i is paired with slot i+3, genus-1 factors live on pairs,
// a genus-2 factor on slots {1,2,4,5}.
struct STGroup {
  std::string label;
  std::vector<std::string> aliases;
  char abs_type = 'N';
  ConnectedGroup connected;
  std::vector<Mat> gens;
  ComponentGroup components;
  bool realizable = true;
  Provenance provenance = Provenance::Builtin;

  std::size_t component_count() const { return components.size(); }
  bool answers_to(const std::string& name) const;
  // `label | abs_type | component_order | realizable | gen1 ; gen2 ; ...`
  std::string record() const;
};

ConnectedGroup identity_component(char abs_type);

// Closes the generators, divides by the identity component and checks
// the declared component count when one is given.
STGroup make_group(std::string label, char abs_type, std::vector<Mat> gens, bool realizable,
                   Provenance prov, long expected_components = -1);

STGroup connected_group(char abs_type);

// ---------------------------------------------------------------- type N

enum class Extension { None, Standard, Split, Nonsplit };

struct NTypeSpec {
  std::string label;      // "A(3,2)", "J(A(3,2))", "J_s(...)", "J_n(...)"
  std::string base;       // name of H
  std::string family;     // A, B, T (binary tetrahedral/octahedral), C, D, E
  Extension ext = Extension::None;
  std::vector<Mat> h_gens;  // 3x3, in SU(3)
  Mat g;                    // 3x3, extension element is J g
};

const std::vector<NTypeSpec>& n_type_specs();  // 171 entries
STGroup n_type_group(const std::string& label);
STGroup n_type_group(const NTypeSpec& spec);
// 3x3 generators of a named subgroup H of SU(3)
std::vector<Mat> n_type_h_gens(const std::string& base);

// ---------------------------------------------------------------- genus 2 blocks

// A genus-2 Sato-Tate group G2 acting on slots {1,2,4,5}, identity on {0,3}.
struct Genus2Block {
  std::string label;
  std::string kind;  // "U1_2" or "SU2_2"
  long order = 1;    // |G2 / G2^0|
  bool realizable = true;
  std::vector<Mat> gens;
  std::string record() const;
  friend bool operator==(const Genus2Block&, const Genus2Block&) = default;
};

std::vector<Genus2Block> builtin_genus2_blocks();
std::vector<Genus2Block> parse_blocks(const std::string& text);
std::vector<Genus2Block> load_blocks(const std::string& path);
std::string blocks_text(const std::vector<Genus2Block>& blocks);

// Invariant of a genus-2 group used to name index-2 subgroups: fingerprint
// plus the multiset of per-component averages of low-weight monomials.
std::string genus2_key(const STGroup& g2);

// ---------------------------------------------------------------- products

enum class Genus1 { U1, NU1, SU2 };
std::string genus1_name(Genus1 g);

STGroup compose_product(Genus1 g1, const Genus2Block& g2);
// N(U(1)) x_{C2} G2 over the index-2 subgroup with the given components
// (indices into the G2 component group).
STGroup fiber_product(const Genus2Block& g2, const std::vector<int>& kernel,
                      const std::string& kernel_label);
// All index-2 subgroups of a finite group given by its table.
std::vector<std::vector<int>> index2_subgroups(const TableGroup& t);

// ---------------------------------------------------------------- catalog

struct BuildOptions {
  bool extended = true;
  std::optional<std::string> blocks_path;  // default: bundled data file
  bool quiet = true;
  std::function<void(const std::string&)> log;
};

std::string default_blocks_path();
std::vector<STGroup> build_catalog(const BuildOptions& opt = {});
const std::vector<STGroup>& extended_catalog();  // cached, extended = true

const STGroup* find_group(const std::vector<STGroup>& cat, const std::string& name);

std::string catalog_text(const std::vector<STGroup>& cat);
std::vector<STGroup> parse_catalog(const std::string& text);

struct CheckLine {
  std::string name;
  std::string expected;
  std::string got;
  bool ok = false;
};
struct CountReport {
  std::vector<CheckLine> lines;
  bool ok() const;
  std::string str() const;
};
CountReport verify_counts(const std::vector<STGroup>& cat);

// allowed orders n of a cyclic rotation in the M-type component group:
// (1 + 2 cos(2 pi / n))^2 must be an integer
std::vector<int> m_type_cyclic_orders(int max_n = 24);

// Number of conjugacy classes of subgroups of a finite group.
std::vector<std::vector<int>> subgroup_class_reps(const TableGroup& t);

}  // namespace st3
