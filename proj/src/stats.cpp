#include "st3/stats.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "st3/fp.hpp"

namespace st3 {

std::string centrality_name(Centrality c) {
  switch (c) {
    case Centrality::Central: return "central";
    case Centrality::CycleReduced: return "cycle-reduced";
    case Centrality::ClosedForm: return "closed-form";
  }
  return "?";
}

namespace {

bool in_slots(const std::vector<int>& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); }

bool commutes(const Mat& x, const Mat& y) { return x * y == y * x; }

// 6x6 matrix acting as a generic torus element of the factor and as the
// identity elsewhere
Mat generic_torus(const TorusFactor& f) {
  static const long z[3] = {1, 2, 4};
  Mat m = Mat::identity(6);
  for (std::size_t i = 0; i < f.slots.size(); ++i) {
    long k = 0;
    for (int j = 0; j < f.type.rank; ++j) k += z[j] * f.type.weight_map[i][j];
    m(f.slots[i], f.slots[i]) = CycloNum::root_of_unity(k, 7);
  }
  return m;
}

// the Weyl element [[0, I_d], [-I_d, 0]] of SU(2)_d
Mat su2_weyl(const TorusFactor& f) {
  Mat m = Mat::identity(6);
  const int d = f.type.d;
  for (int i = 0; i < d; ++i) {
    int x = f.slots[i], y = f.slots[i + d];
    m(x, x) = CycloNum(0);
    m(y, y) = CycloNum(0);
    m(x, y) = CycloNum(1);
    m(y, x) = CycloNum(-1);
  }
  return m;
}

bool preserves(const Mat& h, const std::vector<int>& slots) {
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (in_slots(slots, i) != in_slots(slots, j) && !h(i, j).is_zero()) return false;
  return true;
}

// h preserves and centralizes the factor
bool centralizes(const Mat& h, const TorusFactor& f) {
  if (!preserves(h, f.slots)) return false;
  if (!commutes(h, generic_torus(f))) return false;
  switch (f.type.id) {
    case FactorId::U1: return true;
    case FactorId::SU2: return commutes(h, su2_weyl(f));
    case FactorId::U3: {
      // commutant is diag(a I3, b I3)
      for (int half = 0; half < 2; ++half)
        for (int i = 0; i < 3; ++i)
          if (!(h(f.slots[half * 3 + i], f.slots[half * 3 + i]) == h(f.slots[half * 3], f.slots[half * 3])))
            return false;
      return true;
    }
    case FactorId::USp4:
    case FactorId::USp6:
      for (int s : f.slots)
        if (!(h(s, s) == h(f.slots[0], f.slots[0]))) return false;
      return true;
  }
  return false;
}

bool is_scalar(const Mat& m) {
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (!(m(i, j) == (i == j ? m(0, 0) : CycloNum(0)))) return false;
  return true;
}

Mat restrict_to(const Mat& m, const std::vector<int>& slots) {
  Mat r(static_cast<int>(slots.size()));
  for (std::size_t i = 0; i < slots.size(); ++i)
    for (std::size_t j = 0; j < slots.size(); ++j) r(i, j) = m(slots[i], slots[j]);
  return r;
}

Mat power(const Mat& m, int k) {
  Mat r = Mat::identity(m.dim());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace

LPoly weyl_density(const ConnectedGroup& g) {
  LPoly d = LPoly::constant(g.rank, 1);
  for (const auto& f : g.factors) {
    if (f.type.id == FactorId::U1) continue;
    Exp3 neg{-f.type.rho[0], -f.type.rho[1], -f.type.rho[2]};
    LPoly local = alternant(f.type, f.type.rho).shift(neg);
    const int off = f.var, r = f.type.rank;
    d *= local.map_exponents(g.rank, [&](const Exp3& e) {
      Exp3 out{0, 0, 0};
      for (int j = 0; j < r; ++j) out[off + j] = e[j];
      return out;
    });
  }
  return d;
}

ComponentProfile component_profile(const STGroup& g, std::size_t component) {
  if (component >= g.component_count()) throw std::out_of_range(g.label + ": no such component");
  ComponentProfile p;
  p.h = g.components.rep(component);
  p.minors = principal_minors(p.h);
  const Mat& h = p.h;
  const auto& facs = g.connected.factors;

  bool closed = false;
  std::vector<char> keep(facs.size(), 1);
  bool reduced = false;
  for (std::size_t i = 0; i < facs.size(); ++i) {
    const auto& f = facs[i];
    if (f.type.id == FactorId::U1) continue;
    if (centralizes(h, f)) continue;
    if (f.type.id == FactorId::U3 && facs.size() == 1) {
      // h swaps the two halves of U(3): the J-coset of N(U(3))
      bool anti = true;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          if (!h(r, c).is_zero() || !h(r + 3, c + 3).is_zero()) anti = false;
      if (anti) {
        closed = true;
        continue;
      }
    }
    if (f.type.id == FactorId::SU2 && f.type.d == 1 && !preserves(h, f.slots)) {
      // follow the cycle of SU(2) factors through h
      auto image = [&](std::size_t from) {
        for (std::size_t j = 0; j < facs.size(); ++j) {
          const auto& fj = facs[j];
          if (fj.type.id != FactorId::SU2 || fj.type.d != 1) continue;
          for (int s : fj.slots)
            if (!h(s, facs[from].slots[0]).is_zero()) return j;
        }
        throw std::runtime_error(g.label + ": unclassifiable component " + h.str());
      };
      std::vector<std::size_t> cyc = {i};
      for (std::size_t cur = image(i); cur != i; cur = image(cur)) {
        if (cyc.size() > facs.size()) throw std::runtime_error(g.label + ": unclassifiable component " + h.str());
        cyc.push_back(cur);
      }
      if (*std::min_element(cyc.begin(), cyc.end()) != i) continue;
      // the cycle product must be central in SU(2)
      if (!is_scalar(restrict_to(power(h, static_cast<int>(cyc.size())), f.slots)))
        throw std::runtime_error(g.label + ": cycle product is not central in " + h.str());
      for (std::size_t j : cyc)
        if (j != i) keep[j] = 0;
      reduced = true;
      continue;
    }
    throw std::runtime_error(g.label + ": unclassifiable component " + h.str());
  }

  if (reduced) {
    std::vector<std::pair<ConnectedType, std::vector<int>>> parts;
    for (std::size_t i = 0; i < facs.size(); ++i)
      if (keep[i]) parts.emplace_back(facs[i].type, facs[i].slots);
    p.torus = ConnectedGroup::make(parts);
    p.centrality = Centrality::CycleReduced;
  } else {
    p.torus = g.connected;
    p.centrality = closed ? Centrality::ClosedForm : Centrality::Central;
  }
  std::vector<int> slots = {0, 1, 2, 3, 4, 5};
  std::vector<Exp3> w(p.torus.slot_weight.begin(), p.torus.slot_weight.end());
  auto ak = torus_charpoly(h, slots, w, p.torus.rank);
  for (int k = 0; k < 3; ++k) p.a[k] = ak[k];
  p.weyl_density = weyl_density(p.torus);
  return p;
}

namespace {

LPoly substitute(const APoly& f, const std::array<LPoly, 3>& a, int rank) {
  LPoly out(rank);
  for (const auto& [e, c] : f) {
    LPoly t = LPoly::constant(rank, CycloNum(c));
    for (int k = 0; k < 3; ++k) t *= a[k].pow(e[k]);
    out += t;
  }
  return out;
}

int apoly_weight(const APoly& f) {
  int w = 0;
  for (const auto& [e, c] : f) w = std::max(w, e[0] + 2 * e[1] + 3 * e[2]);
  return w;
}

}  // namespace

CycloNum component_average(const ComponentProfile& p, const APoly& f) {
  if (p.centrality == Centrality::ClosedForm) {
    const auto& tab = nu3_coset_averages(std::max(18, apoly_weight(f)));
    long s = 0;
    for (const auto& [e, c] : f) s += c * tab.at(e);
    return CycloNum(s);
  }
  return trivial_multiplicity(p.torus, substitute(f, p.a, p.torus.rank));
}

std::vector<Exp3> monomials_up_to(int w) {
  std::vector<Exp3> out;
  for (int e1 = 0; e1 <= w; ++e1)
    for (int e2 = 0; e1 + 2 * e2 <= w; ++e2)
      for (int e3 = 0; e1 + 2 * e2 + 3 * e3 <= w; ++e3) out.push_back({e1, e2, e3});
  return out;
}

// ------------------------------------------------------------ N(U(3)) coset

const std::map<Exp3, long>& nu3_coset_averages(int w) {
  static std::mutex mu;
  static std::map<int, std::map<Exp3, long>> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
  }
  // dense integer Laurent arrays on the USp(6) torus, exponents in [-w, w]
  const int side = 2 * w + 1;
  const long size = static_cast<long>(side) * side * side;
  auto lin = [&](const Exp3& e) { return (static_cast<long>(e[0] + w) * side + (e[1] + w)) * side + (e[2] + w); };
  struct Sparse {
    std::vector<std::pair<long, long>> t;  // linear offset, coefficient
  };
  std::array<Sparse, 3> a;
  for (int k = 0; k < 3; ++k)
    for (const auto& [key, c] : elementary_a()[k].terms()) {
      Exp3 e = LPoly::unpack(key);
      auto q = c.try_rational();
      if (!q || q->get_den() != 1) throw std::logic_error("non-integral symplectic coefficient");
      a[k].t.emplace_back((static_cast<long>(e[0]) * side + e[1]) * side + e[2], q->get_num().get_si());
    }
  auto mul = [&](const std::vector<long>& in, const Sparse& s) {
    std::vector<long> out(size, 0);
    for (long x = 0; x < size; ++x) {
      if (!in[x]) continue;
      for (const auto& [off, c] : s.t) out[x + off] += c * in[x];
    }
    return out;
  };
  // even dominant weights and their sign 2 nu_N - nu_U
  std::vector<std::pair<Exp3, long>> lambdas;
  for (int l1 = 0; l1 <= w; l1 += 2)
    for (int l2 = 0; l2 <= l1; l2 += 2)
      for (int l3 = 0; l3 <= l2; l3 += 2) {
        Partition3 l{l1, l2, l3};
        long s = 2 * nu3_multiplicity(l, true) - nu3_multiplicity(l, false);
        if (s) lambdas.push_back({{l1 + 3, l2 + 2, l3 + 1}, s});
      }
  const auto& weyl = ConnectedType::make(FactorId::USp6).weyl;
  const Exp3 rho{3, 2, 1};
  auto coset_value = [&](const std::vector<long>& f) {
    long total = 0;
    for (const auto& [lr, s] : lambdas) {
      // coefficient of x^{lambda+rho} in f * sum_w sign(w) x^{w rho}
      long c = 0;
      for (const auto& wp : weyl) {
        Exp3 wr = wp.apply(rho);
        Exp3 e{lr[0] - wr[0], lr[1] - wr[1], lr[2] - wr[2]};
        if (std::abs(e[0]) > w || std::abs(e[1]) > w || std::abs(e[2]) > w) continue;
        c += wp.det(3) * f[lin(e)];
      }
      total += s * c;
    }
    return total;
  };
  std::map<Exp3, long> out;
  std::vector<long> one(size, 0);
  one[lin({0, 0, 0})] = 1;
  std::vector<long> p1 = one;
  for (int e1 = 0; e1 <= w; ++e1) {
    std::vector<long> p12 = p1;
    for (int e2 = 0; e1 + 2 * e2 <= w; ++e2) {
      std::vector<long> p123 = p12;
      for (int e3 = 0; e1 + 2 * e2 + 3 * e3 <= w; ++e3) {
        out[{e1, e2, e3}] = coset_value(p123);
        if (e1 + 2 * e2 + 3 * (e3 + 1) <= w) p123 = mul(p123, a[2]);
      }
      if (e1 + 2 * (e2 + 1) <= w) p12 = mul(p12, a[1]);
    }
    if (e1 + 1 <= w) p1 = mul(p1, a[0]);
  }
  std::lock_guard<std::mutex> lk(mu);
  return cache.emplace(w, std::move(out)).first->second;
}

// ------------------------------------------------------------ fast averaging

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Mont {
  u64 p, ninv, r2;
  explicit Mont(u64 prime) : p(prime) {
    u64 x = p;
    for (int i = 0; i < 6; ++i) x *= 2 - p * x;
    ninv = ~x + 1;
    u64 r = static_cast<u64>((static_cast<u128>(1) << 64) % p);
    r2 = static_cast<u64>(static_cast<u128>(r) * r % p);
  }
  u64 redc(u128 t) const {
    u64 m = static_cast<u64>(t) * ninv;
    u64 u = static_cast<u64>((t + static_cast<u128>(m) * p) >> 64);
    return u >= p ? u - p : u;
  }
  u64 mul(u64 a, u64 b) const { return redc(static_cast<u128>(a) * b); }
  u64 to(u64 a) const { return redc(static_cast<u128>(a) * r2); }
  u64 from(u64 a) const { return redc(a); }
};

const std::vector<long>& root_orders() {
  static const std::vector<long> d = [] {
    std::vector<long> v;
    for (long n = 1; n <= 4096; ++n)
      if (kRootOrder % n == 0) v.push_back(n);
    return v;
  }();
  return d;
}

long grid_size_above(long bound) {
  for (long n : root_orders())
    if (n > bound) return n;
  throw std::overflow_error("exponent range too large for the grid");
}

struct TermData {
  int k;  // 1..3 for a_k, 0 for the Weyl density
  CycloNum c;
  Exp3 w;
};

struct GridPlan {
  int rank = 0;
  std::array<long, 3> n{1, 1, 1};
  std::vector<TermData> terms;
};

GridPlan plan_for(const ComponentProfile& p, const std::vector<Exp3>& monos) {
  GridPlan g;
  g.rank = p.torus.rank;
  std::array<std::array<int, 3>, 4> hi{}, lo{};  // [k][var]
  std::array<bool, 4> seen{};
  for (int mask = 1; mask < 64; ++mask) {
    const CycloNum& m = p.minors[mask];
    if (m.is_zero()) continue;
    int k = std::popcount(static_cast<unsigned>(mask));
    if (k > 3) continue;
    Exp3 w{0, 0, 0};
    for (int s = 0; s < 6; ++s)
      if (mask >> s & 1)
        for (int j = 0; j < 3; ++j) w[j] += p.torus.slot_weight[s][j];
    g.terms.push_back({k, k % 2 ? -m : m, w});
  }
  for (const auto& [key, c] : p.weyl_density.terms()) g.terms.push_back({0, c, LPoly::unpack(key)});
  for (const auto& t : g.terms)
    for (int j = 0; j < 3; ++j) {
      if (!seen[t.k]) hi[t.k][j] = lo[t.k][j] = t.w[j];
      hi[t.k][j] = std::max(hi[t.k][j], t.w[j]);
      lo[t.k][j] = std::min(lo[t.k][j], t.w[j]);
      if (j == 2) seen[t.k] = true;
    }
  for (int j = 0; j < g.rank; ++j) {
    long bound = 0;
    for (const auto& e : monos) {
      long h = hi[0][j], l = lo[0][j];
      for (int k = 1; k <= 3; ++k) {
        h += static_cast<long>(e[k - 1]) * hi[k][j];
        l += static_cast<long>(e[k - 1]) * lo[k][j];
      }
      bound = std::max({bound, h, -l});
    }
    g.n[j] = grid_size_above(bound);
  }
  return g;
}

// Residues (Montgomery form) of the component averages of all monomials.
template <int I>
std::vector<u64> grid_average(const GridPlan& plan, const std::vector<Exp3>& monos, int w) {
  const Mont mt(kPrimes[I].p);
  using F = Fp<I>;
  std::array<std::vector<u64>, 3> pw;
  for (int j = 0; j < 3; ++j) {
    F root = F(kPrimes[I].zeta, true).pow(kRootOrder / plan.n[j]);
    F x(1, true);
    for (long i = 0; i < plan.n[j]; ++i, x *= root) pw[j].push_back(mt.to(x.v));
  }
  struct T {
    int k;
    u64 c;
    std::array<long, 3> wm;
  };
  std::vector<T> ts;
  for (const auto& t : plan.terms) {
    T x{t.k, mt.to(F::from_cyclo(t.c).v), {0, 0, 0}};
    for (int j = 0; j < 3; ++j) x.wm[j] = ((t.w[j] % plan.n[j]) + plan.n[j]) % plan.n[j];
    ts.push_back(x);
  }
  std::vector<u128> acc(monos.size(), 0);
  const u64 one = mt.to(1);
  for (long j0 = 0; j0 < plan.n[0]; ++j0)
    for (long j1 = 0; j1 < plan.n[1]; ++j1)
      for (long j2 = 0; j2 < plan.n[2]; ++j2) {
        std::array<u64, 4> v{0, 0, 0, 0};
        for (const auto& t : ts) {
          u64 x = mt.mul(t.c, pw[0][t.wm[0] * j0 % plan.n[0]]);
          if (plan.rank > 1) x = mt.mul(x, pw[1][t.wm[1] * j1 % plan.n[1]]);
          if (plan.rank > 2) x = mt.mul(x, pw[2][t.wm[2] * j2 % plan.n[2]]);
          v[t.k] += x;
          if (v[t.k] >= mt.p) v[t.k] -= mt.p;
        }
        std::size_t idx = 0;
        u64 p1 = v[0];
        for (int e1 = 0; e1 <= w; ++e1) {
          u64 p12 = p1;
          for (int e2 = 0; e1 + 2 * e2 <= w; ++e2) {
            u64 p123 = p12;
            for (int e3 = 0; e1 + 2 * e2 + 3 * e3 <= w; ++e3) {
              acc[idx++] += p123;
              p123 = mt.mul(p123, v[3]);
            }
            p12 = mt.mul(p12, v[2]);
          }
          p1 = mt.mul(p1, v[1]);
        }
        (void)one;
      }
  F inv_points = F(plan.n[0] * plan.n[1] * plan.n[2]).inverse();
  const u64 scale = mt.to(inv_points.v);
  std::vector<u64> out(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) out[i] = mt.mul(static_cast<u64>(acc[i] % mt.p), scale);
  return out;
}

struct ClassRep {
  std::size_t component;
  long weight;  // number of components it stands for
};

std::vector<ClassRep> class_reps(const STGroup& g, bool by_class) {
  std::vector<ClassRep> out;
  const TableGroup& q = g.components.quotient;
  if (!by_class) {
    for (std::size_t c = 0; c < g.component_count(); ++c) out.push_back({c, 1});
    return out;
  }
  // classes of x and x^-1 share averages (symplectic char polys are palindromic)
  auto classes = q.conj_classes();
  std::vector<int> class_of(q.n);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (int x : classes[i]) class_of[x] = static_cast<int>(i);
  std::vector<char> done(classes.size(), 0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (done[i]) continue;
    done[i] = 1;
    long wgt = static_cast<long>(classes[i].size());
    int j = class_of[q.inv[classes[i][0]]];
    if (!done[j]) {
      done[j] = 1;
      wgt += static_cast<long>(classes[j].size());
    }
    out.push_back({static_cast<std::size_t>(*std::min_element(classes[i].begin(), classes[i].end())), wgt});
  }
  return out;
}

std::map<Exp3, mpq_class> compute_averages(const STGroup& g, int w, bool by_class) {
  const auto monos = monomials_up_to(w);
  const Mont m0(kPrimes[0].p), m1(kPrimes[1].p);
  std::vector<u64> s0(monos.size(), 0), s1(monos.size(), 0);
  auto add = [](const Mont& m, std::vector<u64>& s, const std::vector<u64>& v, long wgt) {
    u64 c = m.to(static_cast<u64>(wgt));
    for (std::size_t i = 0; i < s.size(); ++i) {
      s[i] += m.mul(v[i], c);
      if (s[i] >= m.p) s[i] -= m.p;
    }
  };
  for (const auto& rep : class_reps(g, by_class)) {
    ComponentProfile p = component_profile(g, rep.component);
    std::vector<u64> v0, v1;
    if (p.centrality == Centrality::ClosedForm) {
      const auto& tab = nu3_coset_averages(w);
      for (const auto& e : monos) {
        v0.push_back(m0.to(Fp<0>(tab.at(e)).v));
        v1.push_back(m1.to(Fp<1>(tab.at(e)).v));
      }
    } else {
      GridPlan plan = plan_for(p, monos);
      v0 = grid_average<0>(plan, monos, w);
      v1 = grid_average<1>(plan, monos, w);
    }
    add(m0, s0, v0, rep.weight);
    add(m1, s1, v1, rep.weight);
  }
  const long n = static_cast<long>(g.component_count());
  const u64 i0 = m0.to(Fp<0>(n).inverse().v), i1 = m1.to(Fp<1>(n).inverse().v);
  std::map<Exp3, mpq_class> out;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    auto q = rational_reconstruct(m0.from(m0.mul(s0[i], i0)), m1.from(m1.mul(s1[i], i1)));
    if (!q) throw std::runtime_error(g.label + ": group average is not a small rational");
    out[monos[i]] = *q;
  }
  return out;
}

}  // namespace

const std::map<Exp3, mpq_class>& monomial_averages(const STGroup& g, int w, const StatsOptions& opt) {
  static std::mutex mu;
  static std::map<std::string, std::map<Exp3, mpq_class>> cache;
  std::string key = g.record() + "#" + std::to_string(w) + (opt.by_class ? "c" : "a");
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto v = compute_averages(g, w, opt.by_class);
  std::lock_guard<std::mutex> lk(mu);
  return cache.emplace(key, std::move(v)).first->second;
}

// ------------------------------------------------------------ moments and norms

mpq_class moment(const STGroup& g, int e1, int e2, int e3) {
  int w = e1 + 2 * e2 + 3 * e3;
  return monomial_averages(g, std::max(18, w)).at({e1, e2, e3});
}

Simplex simplex(const STGroup& g, int m) {
  const auto& all = monomial_averages(g, std::max(18, m));
  Simplex s;
  for (const auto& e : monomials_up_to(m)) s[e] = all.at(e);
  return s;
}

APoly apoly_mul(const APoly& x, const APoly& y) {
  APoly r;
  for (const auto& [ex, cx] : x)
    for (const auto& [ey, cy] : y) r[{ex[0] + ey[0], ex[1] + ey[1], ex[2] + ey[2]}] += cx * cy;
  std::erase_if(r, [](const auto& t) { return t.second == 0; });
  return r;
}

mpq_class apoly_average(const STGroup& g, const APoly& f) {
  const auto& all = monomial_averages(g, std::max(18, apoly_weight(f)));
  mpq_class s = 0;
  for (const auto& [e, c] : f) s += all.at(e) * c;
  return s;
}

mpq_class norm(const STGroup& g, const Partition3& lambda, const Partition3& mu) {
  return apoly_average(g, apoly_mul(char_in_coeffs(lambda), char_in_coeffs(mu)));
}

std::vector<Partition3> partitions_in_box(int m) {
  std::vector<Partition3> out;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c) out.push_back({a, b, c});
  std::sort(out.begin(), out.end());
  return out;
}

Diagonal diagonal(const STGroup& g, int m) {
  Diagonal d;
  for (const auto& l : partitions_in_box(m)) d[l] = norm(g, l, l);
  return d;
}

// ------------------------------------------------------------ point densities

ComponentDensity component_density(const ComponentProfile& p) {
  ComponentDensity d;
  auto constant = [](const LPoly& f) -> std::optional<CycloNum> {
    if (f.is_zero()) return CycloNum(0);
    if (f.size() == 1 && f.terms()[0].first == LPoly::zero_key()) return f.terms()[0].second;
    return std::nullopt;
  };
  if (p.centrality == Centrality::ClosedForm) {
    // on [[0, A], [-conj A, 0]] only even powers of T occur and
    // a2 = tr(A conj A) moves (3 at A = 1, -1 at a quarter turn)
    d.a1_zero = p.a[0].is_zero();
    d.a3_zero = p.a[2].is_zero();
    return d;
  }
  auto c1 = constant(p.a[0]), c2 = constant(p.a[1]), c3 = constant(p.a[2]);
  if (c1 && !c1->is_zero()) throw std::runtime_error("a1 is a nonzero constant on a component");
  if (c3 && !c3->is_zero()) throw std::runtime_error("a3 is a nonzero constant on a component");
  d.a1_zero = c1.has_value();
  d.a3_zero = c3.has_value();
  if (c2) {
    auto q = c2->try_rational();
    if (!q || q->get_den() != 1 || *q < -1 || *q > 3)
      throw std::runtime_error("a2 is constant outside {-1,...,3} on a component: " + c2->str());
    d.a2_constant = true;
    d.a2_value = static_cast<int>(q->get_num().get_si());
  }
  return d;
}

ZMatrix densities(const STGroup& g) {
  ZMatrix z;
  for (auto& row : z)
    for (auto& x : row) x = 0;
  const mpq_class total = static_cast<long>(g.component_count());
  for (const auto& rep : class_reps(g, true)) {
    ComponentDensity d = component_density(component_profile(g, rep.component));
    const mpq_class w = mpq_class(rep.weight) / total;
    const bool rows[4] = {true, d.a1_zero, d.a3_zero, d.a1_zero && d.a3_zero};
    for (int r = 0; r < 4; ++r) {
      if (!rows[r]) continue;
      z[r][0] += w;
      if (d.a2_constant) {
        z[r][1] += w;
        z[r][2 + d.a2_value + 1] += w;
      }
    }
  }
  z[0][0] = 1;
  return z;
}

const std::array<Partition3, 3> kNormSelect = {Partition3{3, 2, 2}, Partition3{3, 3, 0}, Partition3{3, 3, 1}};

StatProfile stat_profile(const STGroup& g, int m) {
  StatProfile s;
  s.simplex = simplex(g, m);
  s.diagonal = diagonal(g, 3);
  for (int i = 0; i < 3; ++i) s.norms_select[i] = s.diagonal.at(kNormSelect[i]);
  s.z = densities(g);
  s.fingerprint = g.components.quotient.fingerprint();
  return s;
}

std::string simplex_csv(const Simplex& s) {
  std::ostringstream os;
  os << "e1,e2,e3,value\n";
  for (const auto& [e, v] : s) os << e[0] << "," << e[1] << "," << e[2] << "," << v.get_str() << "\n";
  return os.str();
}

std::string diagonal_csv(const Diagonal& d) {
  std::ostringstream os;
  os << "l1,l2,l3,value\n";
  for (const auto& [l, v] : d) os << l.l1 << "," << l.l2 << "," << l.l3 << "," << v.get_str() << "\n";
  return os.str();
}

std::string z_csv(const ZMatrix& z) {
  std::ostringstream os;
  for (const auto& row : z) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j].get_str();
    os << "\n";
  }
  return os.str();
}

}  // namespace st3
