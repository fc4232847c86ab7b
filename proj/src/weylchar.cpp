#include "st3/weylchar.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace st3 {

namespace {

std::vector<SignedPerm> perms_of(int n, bool with_signs) {
  std::vector<SignedPerm> out;
  std::array<int, 3> p{0, 1, 2};
  do {
    if (n < 3 && p[2] != 2) continue;
    if (n < 2 && p[1] != 1) continue;
    for (int mask = 0; mask < (with_signs ? (1 << n) : 1); ++mask) {
      SignedPerm w;
      w.perm = p;
      for (int i = 0; i < n; ++i) w.sign[i] = (mask >> i & 1) ? -1 : 1;
      out.push_back(w);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool lex_less(const Exp3& a, const Exp3& b) { return a < b; }

Exp3 lex_min_exp(const LPoly& p) { return LPoly::unpack(p.terms().front().first); }

}  // namespace

ConnectedType ConnectedType::make(FactorId id, int d) {
  ConnectedType t;
  t.id = id;
  t.d = d;
  switch (id) {
    case FactorId::U1:
    case FactorId::SU2:
      if (d < 1 || d > 3) throw std::invalid_argument("diagonal multiplicity out of range");
      t.rank = 1;
      for (int i = 0; i < d; ++i) t.weight_map.push_back({1, 0, 0});
      for (int i = 0; i < d; ++i) t.weight_map.push_back({-1, 0, 0});
      t.weyl = perms_of(1, id == FactorId::SU2);
      t.rho = {id == FactorId::SU2 ? 1 : 0, 0, 0};
      break;
    case FactorId::U3:
      t.rank = 3;
      t.weight_map = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
      t.weyl = perms_of(3, false);
      t.rho = {1, 0, -1};
      break;
    case FactorId::USp4:
      t.rank = 2;
      t.weight_map = {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}};
      t.weyl = perms_of(2, true);
      t.rho = {2, 1, 0};
      break;
    case FactorId::USp6:
      t.rank = 3;
      t.weight_map = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
      t.weyl = perms_of(3, true);
      t.rho = {3, 2, 1};
      break;
  }
  if (id != FactorId::U1 && id != FactorId::SU2 && d != 1)
    throw std::invalid_argument("only U(1) and SU(2) embed diagonally");
  return t;
}

std::string ConnectedType::name() const {
  std::string base;
  switch (id) {
    case FactorId::U1: base = "U(1)"; break;
    case FactorId::SU2: base = "SU(2)"; break;
    case FactorId::U3: base = "U(3)"; break;
    case FactorId::USp4: base = "USp(4)"; break;
    case FactorId::USp6: base = "USp(6)"; break;
  }
  if (d > 1) base += "_" + std::to_string(d);
  return base;
}

ConnectedGroup ConnectedGroup::make(
    std::vector<std::pair<ConnectedType, std::vector<int>>> parts) {
  ConnectedGroup g;
  std::array<bool, 6> used{};
  for (auto& [t, slots] : parts) {
    if (slots.size() != t.weight_map.size())
      throw std::invalid_argument("slot list does not match factor dimension");
    TorusFactor f{t, g.rank, slots};
    for (std::size_t i = 0; i < slots.size(); ++i) {
      int s = slots[i];
      if (s < 0 || s > 5 || used[s]) throw std::invalid_argument("bad or repeated slot");
      used[s] = true;
      Exp3 w{0, 0, 0};
      for (int j = 0; j < t.rank; ++j) w[g.rank + j] = t.weight_map[i][j];
      g.slot_weight[s] = w;
    }
    g.rank += t.rank;
    g.factors.push_back(std::move(f));
  }
  if (g.rank > 3) throw std::invalid_argument("torus rank exceeds 3");
  for (int s = 0; s < 3; ++s)
    for (int j = 0; j < 3; ++j)
      if (used[s] && g.slot_weight[s][j] != -g.slot_weight[s + 3][j])
        throw std::invalid_argument("slot weights violate the symplectic pairing");
  return g;
}

ConnectedGroup ConnectedGroup::single(FactorId id) {
  ConnectedType t = ConnectedType::make(id, id == FactorId::U1 || id == FactorId::SU2 ? 3 : 1);
  return make({{t, {0, 1, 2, 3, 4, 5}}});
}

std::vector<SignedPerm> ConnectedGroup::weyl() const {
  std::vector<SignedPerm> out{SignedPerm{}};
  for (const auto& f : factors) {
    std::vector<SignedPerm> next;
    for (const auto& base : out)
      for (const auto& w : f.type.weyl) {
        SignedPerm c = base;
        for (int i = 0; i < f.type.rank; ++i) {
          c.perm[f.var + i] = f.var + w.perm[i];
          c.sign[f.var + i] = w.sign[i];
        }
        next.push_back(c);
      }
    out = std::move(next);
  }
  return out;
}

std::string ConnectedGroup::name() const {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += " x ";
    s += f.type.name();
  }
  return s;
}

std::string Partition3::str() const {
  return "(" + std::to_string(l1) + "," + std::to_string(l2) + "," + std::to_string(l3) + ")";
}

const std::vector<Partition3>& partitions_333() {
  static const std::vector<Partition3> v = [] {
    std::vector<Partition3> out;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= a; ++b)
        for (int c = 0; c <= b; ++c) out.push_back({a, b, c});
    return out;
  }();
  return v;
}

LPoly alternant(const ConnectedType& t, const Exp3& mu) {
  std::vector<LPoly::Term> terms;
  for (const auto& w : t.weyl) terms.emplace_back(LPoly::pack(w.apply(mu)), CycloNum(w.det(t.rank)));
  return LPoly::from_terms(t.rank, std::move(terms));
}

LPoly divide_exact(const LPoly& num, const LPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  LPoly q(num.rank()), r = num;
  if (r.is_zero()) return q;
  const Exp3 dl = LPoly::unpack(den.leading().first);
  const CycloNum dinv = den.leading().second.inverse();
  Exp3 bound = lex_min_exp(num), dmin = lex_min_exp(den);
  for (int i = 0; i < 3; ++i) bound[i] -= dmin[i];
  while (!r.is_zero()) {
    Exp3 e = LPoly::unpack(r.leading().first);
    for (int i = 0; i < 3; ++i) e[i] -= dl[i];
    if (lex_less(e, bound)) throw std::logic_error("inexact polynomial division");
    CycloNum c = r.leading().second * dinv;
    q += LPoly::monomial(num.rank(), e, c);
    r -= den.shift(e).scale(c);
  }
  return q;
}

bool is_dominant(FactorId id, const Exp3& l) {
  switch (id) {
    case FactorId::U1: return true;
    case FactorId::SU2: return l[0] >= 0;
    case FactorId::U3: return l[0] >= l[1] && l[1] >= l[2];
    case FactorId::USp4: return l[0] >= l[1] && l[1] >= 0;
    case FactorId::USp6: return l[0] >= l[1] && l[1] >= l[2] && l[2] >= 0;
  }
  return false;
}

LPoly character(const ConnectedType& t, const Exp3& lambda) {
  for (int i = t.rank; i < 3; ++i)
    if (lambda[i] != 0) throw std::invalid_argument("weight has entries beyond the rank");
  if (!is_dominant(t.id, lambda)) throw std::invalid_argument("weight is not dominant");
  if (t.id == FactorId::U1) return LPoly::monomial(1, lambda);

  static std::mutex mu;
  static std::map<std::pair<int, Exp3>, LPoly> cache;
  auto key = std::make_pair(static_cast<int>(t.id), lambda);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Exp3 shifted{lambda[0] + t.rho[0], lambda[1] + t.rho[1], lambda[2] + t.rho[2]};
  LPoly chi = divide_exact(alternant(t, shifted), alternant(t, t.rho));
  std::lock_guard<std::mutex> lk(mu);
  cache.emplace(key, chi);
  return chi;
}

const std::array<LPoly, 3>& elementary_a() {
  static const std::array<LPoly, 3> a = [] {
    // expand prod (1 + x*t) over the six eigenvalue monomials t
    std::array<LPoly, 7> full;
    full.fill(LPoly(3));
    full[0] = LPoly::constant(3, 1);
    const ConnectedType t = ConnectedType::make(FactorId::USp6);
    for (const auto& w : t.weight_map) {
      LPoly m = LPoly::monomial(3, w);
      for (int k = 6; k >= 1; --k) full[k] += full[k - 1] * m;
    }
    return std::array<LPoly, 3>{-full[1], full[2], -full[3]};
  }();
  return a;
}

APoly char_in_coeffs(const Partition3& lambda) {
  if (!lambda.valid()) throw std::invalid_argument("not a partition");
  const auto& a = elementary_a();
  LPoly f = character(ConnectedType::make(FactorId::USp6), lambda.exp());
  APoly out;
  while (!f.is_zero()) {
    Exp3 l = LPoly::unpack(f.leading().first);
    auto c = f.leading().second.try_rational();
    if (!c || c->get_den() != 1) throw std::logic_error("non-integral character coefficient");
    int x = l[0] - l[1], y = l[1] - l[2], z = l[2];
    if (x < 0 || y < 0 || z < 0) throw std::logic_error("leading weight not dominant");
    long coef = c->get_num().get_si() * (((x + z) % 2) ? -1 : 1);
    out[{x, y, z}] += coef;
    LPoly m = a[0].pow(x) * a[1].pow(y) * a[2].pow(z);
    f -= m.scale(CycloNum(coef));
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string apoly_str(const APoly& p) {
  if (p.empty()) return "0";
  std::vector<std::pair<Exp3, long>> v(p.begin(), p.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    int dx = x.first[0] + 2 * x.first[1] + 3 * x.first[2];
    int dy = y.first[0] + 2 * y.first[1] + 3 * y.first[2];
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : v) {
    bool mono = e != Exp3{0, 0, 0};
    if (c < 0) os << (first ? "-" : " - ");
    else if (!first) os << " + ";
    long ac = c < 0 ? -c : c;
    if (ac != 1 || !mono) os << ac;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      os << "a" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
    first = false;
  }
  return os.str();
}

APoly parse_apoly(std::string_view text) {
  APoly out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() -> long {
    long v = 0;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    return i == start ? -1 : v;
  };
  auto fail = [&](const char* why) {
    throw std::invalid_argument("parse_apoly: " + std::string(why) + " at offset " +
                                std::to_string(i) + " in '" + std::string(text) + "'");
  };
  skip();
  if (text.substr(i) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) break;
    long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected sign");
    }
    long c = number();
    bool had_coeff = c >= 0;
    if (!had_coeff) c = 1;
    Exp3 e{0, 0, 0};
    bool mono = false;
    while (i < text.size() && text[i] == 'a') {
      ++i;
      if (i >= text.size() || text[i] < '1' || text[i] > '3') fail("bad variable");
      int var = text[i++] - '1';
      int pw = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        long v = number();
        if (v < 0) fail("bad exponent");
        pw = static_cast<int>(v);
      }
      e[var] += pw;
      mono = true;
    }
    if (!had_coeff && !mono) fail("empty term");
    out[e] += sign * c;
    if (out[e] == 0) out.erase(e);
    first = false;
  }
  return out;
}

bool is_weyl_invariant(const ConnectedGroup& g, const LPoly& f) {
  for (const auto& w : g.weyl())
    if (!(f.apply_weyl(w) == f)) return false;
  return true;
}

namespace {

// SU(3) character in (u, v) coordinates for highest weight (a, b, 0).
LPoly su3_character(int a, int b) {
  LPoly chi = character(ConnectedType::make(FactorId::U3), {a, b, 0});
  return chi.substitute_u3().coeff_slice(2, a + b);
}

// Peeling on the last remaining simple factor.
CycloNum peel(LPoly f, FactorId id) {
  CycloNum triv(0);
  const int rank = f.rank();
  auto dominant = [&](const Exp3& e) {
    if (id == FactorId::U3) return e[0] >= e[1] && e[1] >= 0;  // SU(3) after reduction
    return is_dominant(id, e);
  };
  bool have_prev = false;
  Exp3 prev{};
  while (!f.is_zero()) {
    const auto& t = f.terms();
    auto it = std::find_if(t.rbegin(), t.rend(),
                           [&](const LPoly::Term& x) { return dominant(LPoly::unpack(x.first)); });
    if (it == t.rend()) throw std::invalid_argument("input is not Weyl invariant");
    Exp3 l = LPoly::unpack(it->first);
    if (have_prev && !(l < prev)) throw std::logic_error("peeling did not decrease the highest weight");
    have_prev = true;
    prev = l;
    CycloNum c = it->second;
    if (l == Exp3{0, 0, 0}) triv += c;
    LPoly chi = id == FactorId::U3 ? su3_character(l[0], l[1])
                                   : character(ConnectedType::make(id), l);
    if (chi.rank() != rank) throw std::logic_error("rank mismatch while peeling");
    f -= chi.scale(c);
  }
  return triv;
}

}  // namespace

CycloNum trivial_multiplicity(const ConnectedGroup& g, const LPoly& f) {
  if (f.rank() != g.rank) throw std::invalid_argument("polynomial rank does not match torus");
  if (!is_weyl_invariant(g, f)) throw std::invalid_argument("input is not Weyl invariant");
  LPoly cur = f;
  std::vector<const TorusFactor*> order;
  for (const auto& fac : g.factors) order.push_back(&fac);
  std::sort(order.begin(), order.end(),
            [](const TorusFactor* x, const TorusFactor* y) { return x->var > y->var; });
  const TorusFactor* last = nullptr;
  for (const TorusFactor* fac : order) {
    switch (fac->type.id) {
      case FactorId::U1:
        cur = cur.coeff_slice(fac->var, 0);
        break;
      case FactorId::SU2:
        cur = cur.coeff_slice(fac->var, 0) - cur.coeff_slice(fac->var, 2);
        break;
      default:
        if (last) throw std::invalid_argument("more than one factor of rank above one");
        last = fac;
    }
  }
  if (!last) return cur.is_zero() ? CycloNum(0) : cur.leading().second;
  if (last->type.id == FactorId::U3) {
    cur = cur.substitute_u3().coeff_slice(2, 0);
    return peel(cur, FactorId::U3);
  }
  return peel(cur, last->type.id);
}

CycloNum trivial_multiplicity(const ConnectedType& t, const LPoly& f) {
  // first half of the slots on 0.., their partners on 3..
  int half = static_cast<int>(t.weight_map.size()) / 2;
  std::vector<int> slots;
  for (int i = 0; i < 2 * half; ++i) slots.push_back(i < half ? i : 3 + i - half);
  return trivial_multiplicity(ConnectedGroup::make({{t, slots}}), f);
}

int nu3_multiplicity(const Partition3& l, bool normalized) {
  bool even = l.l1 % 2 == 0 && l.l2 % 2 == 0 && l.l3 % 2 == 0;
  if (!even) return 0;
  if (normalized && (l.l1 + l.l2 + l.l3) % 4 != 0) return 0;
  return 1;
}

}  // namespace st3
