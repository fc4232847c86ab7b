#include "st3/matgroup.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace st3 {

// ---------------------------------------------------------------- Mat

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = CycloNum(1);
  return m;
}

Mat Mat::diag(const std::vector<CycloNum>& d) {
  Mat m(static_cast<int>(d.size()));
  for (int i = 0; i < m.n_; ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::diag_e(const std::vector<mpq_class>& angles) {
  std::vector<CycloNum> d;
  for (const auto& q : angles) {
    mpq_class r = q;
    r.canonicalize();
    d.push_back(CycloNum::root_of_unity(r.get_num().get_si(), r.get_den().get_si()));
  }
  return diag(d);
}

Mat Mat::from_rows(const std::vector<std::vector<CycloNum>>& rows) {
  Mat m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.n_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.n_) throw std::invalid_argument("matrix is not square");
    for (int j = 0; j < m.n_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Mat Mat::parse(std::string_view text) {
  std::vector<std::vector<CycloNum>> rows;
  for (const auto& r : split(text, ';')) {
    std::vector<CycloNum> row;
    for (const auto& e : split(r, ',')) row.push_back(CycloNum::parse(e));
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

Mat Mat::symplectic_j() {
  Mat m(6);
  for (int i = 0; i < 3; ++i) {
    m(i, i + 3) = CycloNum(1);
    m(i + 3, i) = CycloNum(-1);
  }
  return m;
}

Mat Mat::embed(const Mat& a, bool with_j) {
  if (a.dim() != 3) throw std::invalid_argument("embed expects a 3x3 matrix");
  Mat m(6);
  Mat c = a.conj();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      m(i, j) = a(i, j);
      m(i + 3, j + 3) = c(i, j);
    }
  return with_j ? symplectic_j() * m : m;
}

Mat Mat::conj() const {
  Mat m(n_);
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!a_[k].is_zero()) m.a_[k] = a_[k].conj();
  return m;
}

Mat Mat::transpose() const {
  Mat m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Mat Mat::scaled(const CycloNum& c) const {
  Mat m(n_);
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!a_[k].is_zero()) m.a_[k] = a_[k] * c;
  return m;
}

Mat Mat::block(int r0, int c0, int size) const {
  Mat m(size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

CycloNum Mat::trace() const {
  CycloNum t(0);
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

CycloNum Mat::det() const {
  // Gaussian elimination over the field
  Mat m = *this;
  CycloNum d(1);
  for (int c = 0; c < n_; ++c) {
    int p = -1;
    for (int r = c; r < n_; ++r)
      if (!m(r, c).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) return CycloNum(0);
    if (p != c) {
      for (int j = 0; j < n_; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    CycloNum inv = m(c, c).inverse();
    for (int r = c + 1; r < n_; ++r) {
      if (m(r, c).is_zero()) continue;
      CycloNum f = m(r, c) * inv;
      for (int j = c; j < n_; ++j)
        if (!m(c, j).is_zero()) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

bool Mat::is_identity() const { return *this == identity(n_); }

bool Mat::is_unitary() const { return (*this * adjoint()).is_identity(); }

bool Mat::is_symplectic() const {
  if (n_ != 6) return false;
  Mat j = symplectic_j();
  return transpose() * j * *this == j;
}

std::vector<CycloNum> Mat::charpoly() const {
  // Faddeev-LeVerrier
  std::vector<CycloNum> c(n_ + 1);
  c[n_] = CycloNum(1);
  Mat mk(n_);  // M_0 = 0
  Mat id = identity(n_);
  for (int k = 1; k <= n_; ++k) {
    mk = *this * mk + id.scaled(c[n_ - k + 1]);
    c[n_ - k] = (*this * mk).trace() * CycloNum(mpq_class(-1, k));
  }
  return c;
}

std::string Mat::str() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (i) s += ";";
    for (int j = 0; j < n_; ++j) {
      if (j) s += ",";
      s += (*this)(i, j).str();
    }
  }
  return s;
}

std::size_t Mat::hash() const {
  std::size_t h = static_cast<std::size_t>(n_);
  for (const auto& x : a_) h = h * 1000003u ^ x.hash();
  return h;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("matrix size mismatch");
  const int n = x.n_;
  Mat m(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const CycloNum& a = x(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const CycloNum& b = y(k, j);
        if (!b.is_zero()) m(i, j) += a * b;
      }
    }
  return m;
}

Mat operator+(const Mat& x, const Mat& y) {
  Mat m = x;
  for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] += y.a_[k];
  return m;
}

Mat operator-(const Mat& x, const Mat& y) {
  Mat m = x;
  for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] -= y.a_[k];
  return m;
}

// ---------------------------------------------------------------- FpMat

FpMat FpMat::of(const Mat& m) {
  FpMat f;
  f.n = m.dim();
  f.v0.resize(static_cast<std::size_t>(f.n) * f.n);
  f.v1.resize(f.v0.size());
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j) {
      const CycloNum& z = m(i, j);
      if (z.is_zero()) continue;
      f.v0[i * f.n + j] = Fp<0>::from_cyclo(z).v;
      f.v1[i * f.n + j] = Fp<1>::from_cyclo(z).v;
    }
  return f;
}

namespace {

void mat_mul_mod(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                 std::vector<std::uint64_t>& out, int n, std::uint64_t p) {
  out.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      std::uint64_t x = a[i * n + k];
      if (!x) continue;
      for (int j = 0; j < n; ++j) {
        std::uint64_t y = b[k * n + j];
        if (!y) continue;
        std::uint64_t t = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
        std::uint64_t& o = out[i * n + j];
        o += t;
        if (o >= p) o -= p;
      }
    }
}

}  // namespace

FpMat operator*(const FpMat& x, const FpMat& y) {
  FpMat r;
  r.n = x.n;
  mat_mul_mod(x.v0, y.v0, r.v0, x.n, kPrimes[0].p);
  mat_mul_mod(x.v1, y.v1, r.v1, x.n, kPrimes[1].p);
  return r;
}

std::size_t FpMat::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : v0) h = (h ^ x) * 1099511628211ull;
  for (auto x : v1) h = (h ^ x) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------- FiniteGroup

void FiniteGroup::insert(Mat m, FpMat img) {
  index_[img.hash()].push_back(static_cast<int>(elems_.size()));
  elems_.push_back(std::move(m));
  imgs_.push_back(std::move(img));
}

int FiniteGroup::find(const FpMat& m) const {
  auto it = index_.find(m.hash());
  if (it == index_.end()) return -1;
  for (int i : it->second)
    if (imgs_[i] == m) return i;
  return -1;
}

int FiniteGroup::mul(int i, int j) const {
  int k = find(imgs_[i] * imgs_[j]);
  if (k < 0) throw std::logic_error("product left the group");
  return k;
}

FiniteGroup FiniteGroup::close(const std::vector<Mat>& gens, long bound) {
  if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
  const int n = gens[0].dim();
  FiniteGroup g;
  g.insert(Mat::identity(n), FpMat::of(Mat::identity(n)));
  std::vector<FpMat> gimg;
  for (const auto& m : gens) {
    if (m.dim() != n) throw std::invalid_argument("generator size mismatch");
    gimg.push_back(FpMat::of(m));
  }
  // breadth-first, right multiplication by generators; exact product only for new elements
  for (std::size_t head = 0; head < g.elems_.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      FpMat img = g.imgs_[head] * gimg[k];
      if (g.find(img) >= 0) continue;
      if (static_cast<long>(g.elems_.size()) >= bound)
        throw ClosureExceedsBound("closure exceeds bound " + std::to_string(bound));
      g.insert(g.elems_[head] * gens[k], std::move(img));
    }
  }
  for (const auto& m : gimg) g.gens_.push_back(g.find(m));
  return g;
}

// ---------------------------------------------------------------- TableGroup

int TableGroup::order_of(int a) const {
  int k = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::vector<int> TableGroup::subgroup_generated(const std::vector<int>& s) const {
  std::vector<char> in(n, 0);
  std::vector<int> out{0};
  in[0] = 1;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (int g : s) {
      int x = mul(out[head], g);
      if (!in[x]) {
        in[x] = 1;
        out.push_back(x);
      }
    }
  return out;
}

std::vector<std::vector<int>> TableGroup::conj_classes() const {
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    std::vector<int> c;
    for (int g = 0; g < n; ++g) {
      int y = mul(mul(g, x), inv[g]);
      if (cls[y] < 0) {
        cls[y] = static_cast<int>(out.size());
        c.push_back(y);
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

// Invariant factors of the finite abelian group with the given element orders
// (counts of elements whose order divides each integer suffice).
std::vector<long> abelian_invariants(const std::vector<int>& orders) {
  long n = static_cast<long>(orders.size());
  std::vector<long> factors;
  std::map<long, std::vector<int>> primary;  // p -> exponents
  long m = n;
  for (long p = 2; m > 1; ++p) {
    if (m % p) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    // c_k = #{x : x^{p^k} = 1} restricted to the p-part: log_p c_k = sum_i min(k, e_i)
    std::vector<int> lg(e + 2, 0);
    long pk = 1;
    for (int k = 0; k <= e; ++k) {
      long cnt = 0;
      for (int o : orders) {
        long q = o;
        while (q % p == 0) q /= p;
        long pp = o / q;  // p-part of the order
        if (pk % pp == 0) ++cnt;
      }
      // cnt counts elements with p-part dividing p^k: (p-part count) * |p'-part|
      long prest = n;
      while (prest % p == 0) prest /= p;
      long c = cnt / prest;
      int l = 0;
      while (c > 1) {
        c /= p;
        ++l;
      }
      lg[k] = l;
      pk *= p;
    }
    // number of cyclic factors of exponent >= k is lg[k] - lg[k-1]
    std::vector<int> exps;
    for (int k = 1; k <= e; ++k) {
      int ge_k = lg[k] - lg[k - 1];
      int ge_k1 = (k + 1 <= e) ? lg[k + 1] - lg[k] : 0;
      for (int t = 0; t < ge_k - ge_k1; ++t) exps.push_back(k);
    }
    primary[p] = exps;
  }
  // combine primary parts into invariant factors d_1 | d_2 | ...
  std::size_t len = 0;
  for (auto& [p, v] : primary) {
    std::sort(v.begin(), v.end(), std::greater<>());
    len = std::max(len, v.size());
  }
  factors.assign(len, 1);
  for (auto& [p, v] : primary)
    for (std::size_t i = 0; i < v.size(); ++i)
      for (int k = 0; k < v[i]; ++k) factors[i] *= p;
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace

Fingerprint TableGroup::fingerprint() const {
  Fingerprint f;
  f.order = n;
  std::vector<int> orders(n);
  for (int x = 0; x < n; ++x) {
    orders[x] = order_of(x);
    f.element_orders[orders[x]]++;
  }
  for (const auto& c : conj_classes()) f.class_sizes[static_cast<int>(c.size())]++;
  long center = 0;
  for (int x = 0; x < n; ++x) {
    bool z = true;
    for (int g = 0; g < n && z; ++g) z = mul(x, g) == mul(g, x);
    if (z) ++center;
  }
  f.center_order = center;
  std::set<int> comm;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) comm.insert(mul(mul(x, y), mul(inv[x], inv[y])));
  std::vector<int> d = subgroup_generated(std::vector<int>(comm.begin(), comm.end()));
  f.derived_order = static_cast<long>(d.size());
  // abelianization: element orders in G/D
  std::vector<int> coset(n, -1);
  std::vector<int> rep;
  for (int x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    for (int y : d) coset[mul(x, y)] = static_cast<int>(rep.size());
    rep.push_back(x);
  }
  std::vector<int> qorders;
  for (int r : rep) {
    int k = 1, x = r;
    while (coset[x] != coset[0]) {
      x = mul(x, r);
      ++k;
    }
    qorders.push_back(k);
  }
  f.abelianization = abelian_invariants(qorders);
  return f;
}

std::vector<std::vector<int>> conj_classes(const TableGroup& g) { return g.conj_classes(); }
Fingerprint fingerprint(const TableGroup& g) { return g.fingerprint(); }

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << "order=" << order << " orders={";
  bool first = true;
  for (auto [o, c] : element_orders) {
    os << (first ? "" : ",") << o << ":" << c;
    first = false;
  }
  os << "} classes={";
  first = true;
  for (auto [s, c] : class_sizes) {
    os << (first ? "" : ",") << s << ":" << c;
    first = false;
  }
  os << "} ab=[";
  for (std::size_t i = 0; i < abelianization.size(); ++i) os << (i ? "," : "") << abelianization[i];
  os << "] center=" << center_order << " derived=" << derived_order;
  return os.str();
}

// ---------------------------------------------------------------- torus quotient

bool in_identity_component(const ConnectedGroup& g0, const Mat& m) {
  if (m.dim() != 6) throw std::invalid_argument("identity-component test needs a 6x6 matrix");
  std::array<int, 6> owner{};
  owner.fill(-1);
  for (std::size_t f = 0; f < g0.factors.size(); ++f)
    for (int s : g0.factors[f].slots) owner[s] = static_cast<int>(f);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (owner[i] != owner[j] && !m(i, j).is_zero()) return false;
  for (const auto& f : g0.factors) {
    const auto& s = f.slots;
    const int k = static_cast<int>(s.size());
    auto at = [&](int i, int j) -> const CycloNum& { return m(s[i], s[j]); };
    switch (f.type.id) {
      case FactorId::U1: {
        const int d = k / 2;
        CycloNum x = at(0, 0);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) {
            if (i != j && !at(i, j).is_zero()) return false;
          }
        for (int i = 0; i < d; ++i)
          if (at(i, i) != x || at(i + d, i + d) != x.conj()) return false;
        break;
      }
      case FactorId::SU2: {
        const int d = k / 2;
        CycloNum q[2][2] = {{at(0, 0), at(0, d)}, {at(d, 0), at(d, d)}};
        for (int bi = 0; bi < 2; ++bi)
          for (int bj = 0; bj < 2; ++bj)
            for (int i = 0; i < d; ++i)
              for (int j = 0; j < d; ++j) {
                const CycloNum& v = at(bi * d + i, bj * d + j);
                if (i == j ? v != q[bi][bj] : !v.is_zero()) return false;
              }
        if (!(q[0][0] * q[1][1] - q[0][1] * q[1][0]).is_one()) return false;
        break;
      }
      case FactorId::U3:
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            if (!at(i, j + 3).is_zero() || !at(i + 3, j).is_zero()) return false;
            if (at(i + 3, j + 3) != at(i, j).conj()) return false;
          }
        break;
      case FactorId::USp4:
      case FactorId::USp6:
        break;
    }
  }
  return true;
}

std::array<CycloNum, 64> principal_minors(const Mat& m) {
  if (m.dim() != 6) throw std::invalid_argument("principal_minors expects a 6x6 matrix");
  std::array<CycloNum, 64> out;
  out[0] = CycloNum(1);
  for (int mask = 1; mask < 64; ++mask) {
    std::vector<int> s;
    for (int i = 0; i < 6; ++i)
      if (mask >> i & 1) s.push_back(i);
    Mat sub(static_cast<int>(s.size()));
    bool zero_row = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      bool any = false;
      for (std::size_t j = 0; j < s.size(); ++j) {
        sub(static_cast<int>(i), static_cast<int>(j)) = m(s[i], s[j]);
        any = any || !m(s[i], s[j]).is_zero();
      }
      zero_row = zero_row || !any;
    }
    out[mask] = zero_row ? CycloNum(0) : sub.det();
  }
  return out;
}

std::vector<LPoly> torus_charpoly(const Mat& m, const std::vector<int>& slots,
                                  const std::vector<Exp3>& weights, int rank) {
  const int k = static_cast<int>(slots.size());
  if (static_cast<int>(weights.size()) != k) throw std::invalid_argument("weights do not match slots");
  std::vector<std::vector<LPoly::Term>> terms(k);
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<int> s;
    Exp3 w{0, 0, 0};
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) {
        s.push_back(slots[i]);
        for (int j = 0; j < 3; ++j) w[j] += weights[i][j];
      }
    const int sz = static_cast<int>(s.size());
    Mat sub(sz);
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) sub(i, j) = m(s[i], s[j]);
    CycloNum d = sub.det();
    if (d.is_zero()) continue;
    if (sz % 2) d = -d;
    terms[sz - 1].emplace_back(LPoly::pack(w), d);
  }
  std::vector<LPoly> out;
  for (auto& t : terms) out.push_back(LPoly::from_terms(rank, std::move(t)));
  return out;
}

ComponentGroup quotient_by_torus(FiniteGroup h, const ConnectedGroup& g0) {
  ComponentGroup cg;
  const int n = static_cast<int>(h.order());
  std::vector<int> kernel;
  for (int i = 0; i < n; ++i)
    if (in_identity_component(g0, h.element(i))) kernel.push_back(i);
  // normality of H cap G^0 (G^0 is normalized by every component)
  for (int g : h.generators())
    for (int k : kernel) {
      int ginv = -1;
      for (int x = 0; x < n && ginv < 0; ++x)
        if (h.mul(g, x) == 0) ginv = x;
      int c = h.mul(h.mul(g, k), ginv);
      if (!in_identity_component(g0, h.element(c)))
        throw std::invalid_argument("element fails to normalize the identity component");
    }
  cg.coset_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (cg.coset_of[i] >= 0) continue;
    int c = static_cast<int>(cg.reps.size());
    for (int k : kernel) cg.coset_of[h.mul(i, k)] = c;
    cg.reps.push_back(i);
  }
  const int q = static_cast<int>(cg.reps.size());
  TableGroup& t = cg.quotient;
  t.n = q;
  t.table.resize(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) t.table[a * q + b] = cg.coset_of[h.mul(cg.reps[a], cg.reps[b])];
  t.inv.resize(q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (t.mul(a, b) == 0) t.inv[a] = b;
  for (int g : h.generators()) t.gens.push_back(cg.coset_of[g]);
  cg.h = std::move(h);
  return cg;
}

// ---------------------------------------------------------------- extensions

std::string extension_kind_name(ExtensionKind k) {
  switch (k) {
    case ExtensionKind::Standard: return "standard";
    case ExtensionKind::Split: return "split";
    case ExtensionKind::Nonsplit: return "nonsplit";
  }
  return "?";
}

ExtensionKind extension_kind(const std::vector<Mat>& h, const Mat& g) {
  if (g.dim() != 3) throw std::invalid_argument("extension_kind works in the 3x3 picture");
  // Jg acts on H by x -> g^-1 conj(x) g
  Mat ginv = g.adjoint();
  std::set<std::string> hs;
  for (const auto& x : h) hs.insert(x.str());
  auto in_pm_h = [&](const Mat& x) { return hs.count(x.str()) || hs.count(x.scaled(CycloNum(-1)).str()); };
  for (const auto& x : h)
    if (!hs.count((ginv * x.conj() * g).str()))
      throw std::invalid_argument("Jg does not normalize H: fails on " + x.str());
  Mat jg2 = (g.conj() * g).scaled(CycloNum(-1));  // (Jg)^2 in the 3x3 picture
  if (!in_pm_h(jg2)) throw std::invalid_argument("(Jg)^2 is not in +-H: " + jg2.str());
  // the standard class is g in U(1) H; whether another g gives a group
  // conjugate to J(H) is not decided here
  for (const auto& k : h) {
    Mat c = g * k.adjoint();
    bool scalar = true;
    for (int i = 0; i < 3 && scalar; ++i)
      for (int j = 0; j < 3 && scalar; ++j)
        if (!(c(i, j) == (i == j ? c(0, 0) : CycloNum(0)))) scalar = false;
    if (scalar) return ExtensionKind::Standard;
  }
  Mat gg = g.conj() * g;
  for (const auto& x : h)
    if (x.conj() * x == gg) return ExtensionKind::Split;
  return ExtensionKind::Nonsplit;
}

}  // namespace st3
