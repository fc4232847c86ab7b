#include "st3/identify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "st3/parallel.hpp"

namespace st3 {

namespace {

const std::array<Exp3, 4> kSimplex2 = {Exp3{0, 0, 0}, Exp3{1, 0, 0}, Exp3{2, 0, 0}, Exp3{0, 1, 0}};
const std::array<Partition3, 3> kLowNorms = {Partition3{1, 1, 0}, Partition3{1, 1, 1},
                                             Partition3{2, 0, 0}};
const char* const kZRows[4] = {"all", "a1=0", "a3=0", "a1=a3=0"};
const char* const kZCols[7] = {"frac", "a2const", "a2=-1", "a2=0", "a2=1", "a2=2", "a2=3"};

}  // namespace

std::string variant_name(KeyVariant v) {
  switch (v) {
    case KeyVariant::Conn2Simplex: return "a";
    case KeyVariant::Diag3Select: return "b";
    case KeyVariant::CompZNorm3Select: return "c";
  }
  return "?";
}

KeyVariant parse_variant(const std::string& s) {
  if (s == "a") return KeyVariant::Conn2Simplex;
  if (s == "b") return KeyVariant::Diag3Select;
  if (s == "c") return KeyVariant::CompZNorm3Select;
  throw std::invalid_argument("unknown key variant '" + s + "' (expected a, b or c)");
}

std::vector<std::string> key_fields(KeyVariant v) {
  std::vector<std::string> out;
  switch (v) {
    case KeyVariant::Conn2Simplex:
      for (const auto& e : kSimplex2)
        out.push_back("M" + std::to_string(e[0]) + std::to_string(e[1]) + std::to_string(e[2]));
      break;
    case KeyVariant::Diag3Select:
      for (const auto& l : kNormSelect) out.push_back("N" + l.str());
      break;
    case KeyVariant::CompZNorm3Select:
      for (const char* r : kZRows)
        for (const char* c : kZCols) out.push_back(std::string("z[") + r + "][" + c + "]");
      for (const auto& l : kLowNorms) out.push_back("N" + l.str());
      break;
  }
  return out;
}

std::string InvariantKey::str() const {
  std::ostringstream os;
  os << variant_name(variant) << ":";
  if (fingerprint) os << fingerprint->str() << "|";
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i].get_str();
  return os.str();
}

InvariantKey key(const STGroup& g, KeyVariant v) {
  InvariantKey k;
  k.variant = v;
  switch (v) {
    case KeyVariant::Conn2Simplex:
      for (const auto& e : kSimplex2) k.values.push_back(moment(g, e[0], e[1], e[2]));
      break;
    case KeyVariant::Diag3Select:
      for (const auto& l : kNormSelect) k.values.push_back(norm(g, l, l));
      break;
    case KeyVariant::CompZNorm3Select: {
      k.fingerprint = g.components.quotient.fingerprint();
      ZMatrix z = densities(g);
      for (const auto& row : z)
        for (const auto& x : row) k.values.push_back(x);
      for (const auto& l : kLowNorms) k.values.push_back(norm(g, l, l));
      break;
    }
  }
  return k;
}

std::string KeyAudit::str() const {
  std::ostringstream os;
  os << "variant " << variant_name(variant) << ": " << groups << " groups, " << classes
     << " key classes\n";
  for (const auto& c : collisions) {
    os << "  equal keys:";
    for (const auto& l : c) os << " " << l;
    os << "\n";
  }
  return os.str();
}

namespace {

std::vector<InvariantKey> keys_of(const std::vector<const STGroup*>& groups, KeyVariant v) {
  std::vector<InvariantKey> keys(groups.size());
  parallel_for(groups.size(), [&](std::size_t i) { keys[i] = key(*groups[i], v); });
  return keys;
}

}  // namespace

KeyAudit audit_keys(const std::vector<const STGroup*>& groups, KeyVariant v) {
  KeyAudit a;
  a.variant = v;
  a.groups = groups.size();
  std::vector<InvariantKey> keys = keys_of(groups, v);
  std::map<InvariantKey, std::vector<std::string>> by_key;
  for (std::size_t i = 0; i < groups.size(); ++i) by_key[keys[i]].push_back(groups[i]->label);
  a.classes = by_key.size();
  for (auto& [k, labels] : by_key)
    if (labels.size() > 1) a.collisions.push_back(labels);
  return a;
}

EmpiricalKey to_empirical(const InvariantKey& k) {
  EmpiricalKey e;
  e.variant = k.variant;
  e.fingerprint = k.fingerprint;
  for (const auto& x : k.values) e.values.push_back(x.get_d());
  return e;
}

KeyIndex::KeyIndex(const std::vector<const STGroup*>& groups, KeyVariant v) : variant_(v) {
  std::vector<InvariantKey> keys = keys_of(groups, v);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    decimal_.push_back(to_empirical(keys[i]).values);
    entries_.emplace_back(groups[i]->label, std::move(keys[i]));
  }
}

std::vector<Match> KeyIndex::match(const EmpiricalKey& e, double tol) const {
  if (e.variant != variant_) throw std::invalid_argument("match: key variant differs from index");
  if (!(tol >= 0)) throw std::invalid_argument("match: tolerance must be nonnegative");
  std::vector<Match> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& ref = decimal_[i];
    if (ref.size() != e.values.size()) throw std::invalid_argument("match: key length differs");
    if (e.fingerprint && entries_[i].second.fingerprint != e.fingerprint) continue;
    double dev = 0;
    for (std::size_t j = 0; j < ref.size(); ++j) dev = std::max(dev, std::abs(ref[j] - e.values[j]));
    // exact keys are rendered to double, so allow rounding on the tol = 0 path
    if (dev <= tol + 1e-9 * (1 + tol)) out.push_back({entries_[i].first, dev});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Match& x, const Match& y) { return x.deviation < y.deviation; });
  return out;
}

std::vector<const STGroup*> catalog_groups(const std::vector<STGroup>& cat, bool extended) {
  std::vector<const STGroup*> out;
  for (const auto& g : cat)
    if (extended || g.realizable) out.push_back(&g);
  return out;
}

std::vector<const STGroup*> connected_groups(const std::vector<STGroup>& cat) {
  std::vector<const STGroup*> out;
  for (char t = 'A'; t <= 'N'; ++t) {
    std::string id = std::string("1.6.") + t + ".1.1a";
    const STGroup* g = find_group(cat, id);
    if (!g) throw std::runtime_error("catalog lacks connected group " + id);
    out.push_back(g);
  }
  return out;
}

const KeyIndex& default_index(KeyVariant v) {
  static std::mutex mu;
  static std::map<KeyVariant, std::unique_ptr<KeyIndex>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[v];
  if (!slot) {
    const auto& cat = extended_catalog();
    auto groups = v == KeyVariant::Conn2Simplex ? connected_groups(cat) : catalog_groups(cat, false);
    slot = std::make_unique<KeyIndex>(groups, v);
  }
  return *slot;
}

std::vector<Match> match_empirical(const EmpiricalKey& e, double tol, KeyVariant v) {
  return default_index(v).match(e, tol);
}

}  // namespace st3
