#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "st3/catalog.hpp"
#include "st3/stats.hpp"

namespace st3 {

// a: 2-simplex of moments, meant for connected groups.
// b: N_{l,l} at (3,2,2), (3,3,0), (3,3,1).
// c: component fingerprint, Z and N_{l,l} at (1,1,0), (1,1,1), (2,0,0).
enum class KeyVariant { Conn2Simplex, Diag3Select, CompZNorm3Select };
std::string variant_name(KeyVariant v);  // "a", "b", "c"
KeyVariant parse_variant(const std::string& s);

struct InvariantKey {
  KeyVariant variant = KeyVariant::Diag3Select;
  std::optional<Fingerprint> fingerprint;  // variant c only
  std::vector<mpq_class> values;
  std::string str() const;
  auto operator<=>(const InvariantKey&) const = default;
};

// Names of the entries of `values`, in order.
std::vector<std::string> key_fields(KeyVariant v);

InvariantKey key(const STGroup& g, KeyVariant v);

// Keys that coincide, as groups of labels.
struct KeyAudit {
  KeyVariant variant = KeyVariant::Diag3Select;
  std::size_t groups = 0;
  std::size_t classes = 0;
  std::vector<std::vector<std::string>> collisions;
  std::string str() const;
};
KeyAudit audit_keys(const std::vector<const STGroup*>& groups, KeyVariant v);

// Noisy counterpart of an InvariantKey.  A missing fingerprint is not
// compared.
struct EmpiricalKey {
  KeyVariant variant = KeyVariant::Diag3Select;
  std::optional<Fingerprint> fingerprint;
  std::vector<double> values;
};
EmpiricalKey to_empirical(const InvariantKey& k);

struct Match {
  std::string label;
  double deviation = 0;  // max absolute deviation over key entries
};

// Read-only after construction; queries may run concurrently.
class KeyIndex {
 public:
  KeyIndex(const std::vector<const STGroup*>& groups, KeyVariant v);
  KeyVariant variant() const { return variant_; }
  const std::vector<std::pair<std::string, InvariantKey>>& entries() const { return entries_; }
  // Candidates with every entry within tol, ranked by max deviation.
  std::vector<Match> match(const EmpiricalKey& e, double tol) const;

 private:
  KeyVariant variant_;
  std::vector<std::pair<std::string, InvariantKey>> entries_;
  std::vector<std::vector<double>> decimal_;
};

// Groups of the realizable catalog (or all with `extended`).
std::vector<const STGroup*> catalog_groups(const std::vector<STGroup>& cat, bool extended);
std::vector<const STGroup*> connected_groups(const std::vector<STGroup>& cat);

// Index over the connected groups (variant a) or the realizable catalog.
const KeyIndex& default_index(KeyVariant v);
std::vector<Match> match_empirical(const EmpiricalKey& e, double tol, KeyVariant v);

}  // namespace st3
