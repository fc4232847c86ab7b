#include "st3/rationality.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace st3 {

mpq_class frac_part(const mpq_class& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  mpq_class r = q - mpq_class(fl);
  r.canonicalize();
  return r;
}

UnityTriple::UnityTriple(mpq_class u, mpq_class v, mpq_class w)
    : t{frac_part(u), frac_part(v), frac_part(w)} {
  if (frac_part(t[0] + t[1] + t[2]) != 0) throw std::invalid_argument("triple does not sum to an integer");
}

UnityTriple UnityTriple::parse(const std::string& s) {
  std::array<mpq_class, 3> v;
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t next = s.find(',', pos);
    v[i] = parse_rational(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    pos = next == std::string::npos ? s.size() : next + 1;
  }
  return UnityTriple(v[0], v[1], v[2]);
}

long UnityTriple::order() const {
  long n = 1;
  for (const auto& q : t) n = lcm_l(n, q.get_den().get_si());
  return n;
}

std::string UnityTriple::str() const {
  return rational_str(t[0]) + "," + rational_str(t[1]) + "," + rational_str(t[2]);
}

UnityTriple canonicalize(const UnityTriple& x) {
  const long n = x.order();
  UnityTriple best;
  bool have = false;
  for (long m = 1; m <= n; ++m) {
    if (gcd_l(m, n) != 1) continue;
    std::array<mpq_class, 3> v;
    for (int i = 0; i < 3; ++i) v[i] = frac_part(x.t[i] * m);
    std::sort(v.begin(), v.end());
    UnityTriple c;
    c.t = v;
    if (!have || c < best) {
      best = c;
      have = true;
    }
  }
  return best;
}

bool is_degenerate(const UnityTriple& x) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (frac_part(x.t[i] - x.t[j]) == mpq_class(1, 2)) return true;
  return false;
}

namespace {

CycloNum e_of(const mpq_class& q) {
  mpq_class r = frac_part(q);
  return CycloNum::root_of_unity(r.get_num().get_si(), r.get_den().get_si());
}

bool integral_abs_square(const CycloNum& s) {
  auto q = s.abs_square().try_rational();
  return q && q->get_den() == 1;
}

}  // namespace

bool single_rational(const UnityTriple& x) {
  return integral_abs_square(e_of(x.t[0]) + e_of(x.t[1]) + e_of(x.t[2]));
}

bool cyclic_rational(const UnityTriple& x) {
  const long n = x.order();
  for (long k = 1; k <= n; ++k)
    if (!integral_abs_square(e_of(x.t[0] * k) + e_of(x.t[1] * k) + e_of(x.t[2] * k))) return false;
  return true;
}

void sort_classes(std::vector<UnityTriple>& v) {
  std::sort(v.begin(), v.end(), [](const UnityTriple& a, const UnityTriple& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a < b;
  });
}

// ------------------------------------------------------------ single classes

namespace {

using Q = mpq_class;

// Roots of unity x with x + 1/x in Z: orders 1, 2, 3, 4, 6.
const std::vector<Q>& integral_cos_angles() {
  static const std::vector<Q> r = {Q(0), Q(1, 2), Q(1, 4), Q(3, 4), Q(1, 3), Q(2, 3), Q(1, 6), Q(5, 6)};
  return r;
}

// all t with m t = c mod 1
std::vector<Q> solve_linear(int m, const Q& c) {
  std::vector<Q> out;
  int am = std::abs(m);
  for (int j = 0; j < am; ++j) out.push_back(frac_part((c + j) / Q(m)));
  return out;
}

struct SingleSolver {
  std::set<UnityTriple> found;
  long degenerate_hits = 0;

  // (x, y, z) = (a/b, b/c, c/a) in additive notation
  void from_xyz(const Q& x, const Q& y, const Q& z) {
    if (frac_part(x + y + z) != 0) return;
    for (int j = 0; j < 3; ++j) {
      Q a = frac_part((2 * x + y + j) / Q(3));
      Q b = frac_part(a - x);
      Q c = frac_part(b - y);
      UnityTriple t(a, b, c);
      if (is_degenerate(t)) {
        ++degenerate_hits;
        continue;
      }
      if (!single_rational(t)) throw std::logic_error("family produced a non-integral triple " + t.str());
      found.insert(canonicalize(t));
    }
  }
  void all_orders(std::array<Q, 3> v) {
    std::sort(v.begin(), v.end());
    do from_xyz(v[0], v[1], v[2]);
    while (std::next_permutation(v.begin(), v.end()));
  }
};

}  // namespace

std::vector<UnityTriple> single_integrality_classes() {
  SingleSolver s;
  const auto& R = integral_cos_angles();
  const Q half(1, 2);
  // (i) all three summands integral
  for (const auto& x : R)
    for (const auto& y : R)
      for (const auto& z : R) s.all_orders({x, y, z});
  // (ii) r in R, the other two summands cancel: (r, e t + s, e' t + s + 1/2).
  // With e' = -e the constraint forces r = 1/2 and gives the degenerate family a = -b.
  for (const auto& r : R)
    for (int e : {1, -1})
      for (const Q& sh : {Q(0), half}) {
        // r + 2 e t + 2 sh + 1/2 = 0
        for (const Q& t : solve_linear(2 * e, -(r + 2 * sh + half)))
          s.all_orders({r, frac_part(e * t + sh), frac_part(e * t + sh + half)});
      }
  // (iii) r in R, (y, z) equivalent to (e(1/5), e(2/5))
  for (const auto& r : R)
    for (int e1 : {1, -1})
      for (int e2 : {1, -1})
        for (const Q& sh : {Q(0), half})
          for (int g : {1, 2, 3, 4})
            s.all_orders({r, frac_part(Q(g * e1, 5) + sh), frac_part(Q(2 * g * e2, 5) + sh)});
  // (iv) (t, t + 1/3, t + 2/3) up to inversions and a global sign
  for (int e1 : {1, -1})
    for (int e2 : {1, -1})
      for (int e3 : {1, -1})
        for (const Q& sh : {Q(0), half}) {
          Q c = -(Q(e2, 3) + Q(2 * e3, 3) + 3 * sh);
          for (const Q& t : solve_linear(e1 + e2 + e3, c))
            s.all_orders({frac_part(e1 * t + sh), frac_part(e2 * (t + Q(1, 3)) + sh),
                          frac_part(e3 * (t + Q(2, 3)) + sh)});
        }
  // (v) the three sporadic triples, closed under inversions, global sign and Galois action
  const std::array<std::array<Q, 3>, 3> sporadic = {{{Q(1, 7), Q(2, 7), Q(4, 7)},
                                                      {Q(1, 15), Q(4, 15), Q(3, 10)},
                                                      {Q(1, 10), Q(2, 15), Q(7, 15)}}};
  for (const auto& tr : sporadic) {
    long n = 1;
    for (const auto& q : tr) n = lcm_l(n, q.get_den().get_si());
    n = lcm_l(n, 2);
    for (long m = 1; m < n; ++m) {
      if (gcd_l(m, n) != 1) continue;
      for (int mask = 0; mask < 8; ++mask)
        for (const Q& sh : {Q(0), half}) {
          std::array<Q, 3> v;
          for (int i = 0; i < 3; ++i) v[i] = frac_part(((mask >> i & 1) ? -1 : 1) * m * tr[i] + sh);
          s.all_orders(v);
        }
    }
  }
  std::vector<UnityTriple> out(s.found.begin(), s.found.end());
  sort_classes(out);
  return out;
}

// ------------------------------------------------------------ cyclic classes

std::vector<UnityTriple> cyclic_integrality_classes() {
  std::set<UnityTriple> found;
  // Search range for the two one-parameter families.  The admissible n are
  // those with a^3 (resp. a^6) of order dividing 4 or 6, all below 36.
  const long kRange = 144;
  // two equal entries: (1/n, 1/n, -2/n)
  for (long n = 1; n <= kRange; ++n) {
    UnityTriple t(Q(1, n), Q(1, n), Q(-2, n));
    if (cyclic_rational(t)) found.insert(canonicalize(t));
  }
  // two entries differing by 1/2: (1/2n, (n-2)/2n, (n+1)/2n)
  for (long n = 1; n <= kRange; ++n) {
    UnityTriple t(Q(1, 2 * n), Q(n - 2, 2 * n), Q(n + 1, 2 * n));
    if (cyclic_rational(t)) found.insert(canonicalize(t));
  }
  // neither: must already be a single-integrality class
  for (const auto& t : single_integrality_classes()) {
    bool equal_pair = t.t[0] == t.t[1] || t.t[1] == t.t[2] || t.t[0] == t.t[2];
    if (equal_pair || is_degenerate(t)) continue;
    if (cyclic_rational(t)) found.insert(t);
  }
  std::vector<UnityTriple> out(found.begin(), found.end());
  sort_classes(out);
  return out;
}

// ------------------------------------------------------------ Beukers-Smyth

namespace {

using ZPoly = std::vector<mpz_class>;  // coefficients, index = degree

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Bivariate: b[j] = coefficient of y^j as a polynomial in x.
using BPoly = std::vector<ZPoly>;

BPoly f_n(long n) {
  // x^3 y + x^4 y^3 + x y^3 + x^3 y^4 + x + y + (3-n) x^2 y^2
  std::map<std::pair<int, int>, long> t = {{{3, 1}, 1}, {{4, 3}, 1}, {{1, 3}, 1}, {{3, 4}, 1},
                                           {{1, 0}, 1}, {{0, 1}, 1}, {{2, 2}, 3 - n}};
  BPoly b(5, ZPoly(5));
  for (auto [k, c] : t) b[k.second][k.first] += c;
  for (auto& p : b) trim(p);
  return b;
}

// f(s1 x^e, s2 y^e)
BPoly twist(const BPoly& f, int s1, int s2, int e) {
  BPoly g(e * (f.size() - 1) + 1);
  for (std::size_t j = 0; j < f.size(); ++j)
    for (std::size_t i = 0; i < f[j].size(); ++i) {
      if (f[j][i] == 0) continue;
      mpz_class c = f[j][i];
      if (s1 < 0 && i % 2) c = -c;
      if (s2 < 0 && j % 2) c = -c;
      auto& row = g[e * j];
      if (row.size() < e * i + 1) row.resize(e * i + 1);
      row[e * i] += c;
    }
  for (auto& p : g) trim(p);
  return g;
}

BPoly swap_vars(const BPoly& f) {
  BPoly g;
  for (std::size_t j = 0; j < f.size(); ++j)
    for (std::size_t i = 0; i < f[j].size(); ++i) {
      if (f[j][i] == 0) continue;
      if (g.size() < i + 1) g.resize(i + 1);
      if (g[i].size() < j + 1) g[i].resize(j + 1);
      g[i][j] += f[j][i];
    }
  return g;
}

int deg_x(const BPoly& f) {
  int d = 0;
  for (const auto& p : f) d = std::max(d, static_cast<int>(p.size()) - 1);
  return d;
}

mpz_class eval(const ZPoly& p, const mpz_class& x) {
  mpz_class r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

mpz_class det_bareiss(std::vector<std::vector<mpz_class>> m) {
  const int n = static_cast<int>(m.size());
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Res_y(f, g) as a polynomial in x, by evaluation at integer points and
// Newton interpolation.  The Sylvester matrix has the formal y-degrees.
ZPoly resultant_y(const BPoly& f, const BPoly& g) {
  const int df = static_cast<int>(f.size()) - 1, dg = static_cast<int>(g.size()) - 1;
  const int bound = df * deg_x(g) + dg * deg_x(f);
  const int npts = bound + 1;
  std::vector<mpq_class> xs, ys;
  for (int k = 0; k < npts; ++k) {
    mpz_class x0 = (k % 2) ? -(k + 1) / 2 : k / 2;
    const int n = df + dg;
    std::vector<std::vector<mpz_class>> s(n, std::vector<mpz_class>(n));
    for (int r = 0; r < dg; ++r)
      for (int j = 0; j <= df; ++j) s[r][r + (df - j)] = eval(f[j], x0);
    for (int r = 0; r < df; ++r)
      for (int j = 0; j <= dg; ++j) s[dg + r][r + (dg - j)] = eval(g[j], x0);
    xs.emplace_back(x0);
    ys.emplace_back(det_bareiss(std::move(s)));
  }
  // Newton divided differences
  std::vector<mpq_class> c = ys;
  for (int j = 1; j < npts; ++j)
    for (int i = npts - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
  std::vector<mpq_class> p{c[npts - 1]};
  for (int i = npts - 2; i >= 0; --i) {
    // p = p * (x - xs[i]) + c[i]
    std::vector<mpq_class> q(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      q[k + 1] += p[k];
      q[k] -= p[k] * xs[i];
    }
    q[0] += c[i];
    p = std::move(q);
  }
  ZPoly out;
  for (auto& q : p) {
    if (q.get_den() != 1) throw std::logic_error("resultant interpolation is not integral");
    out.push_back(q.get_num());
  }
  trim(out);
  return out;
}

long euler_phi(long n) {
  long r = n;
  for (auto [p, e] : factor_small(static_cast<int>(n))) r = r / p * (p - 1);
  return r;
}

// exact division in Z[x] by a monic divisor; returns remainder-free flag
bool divides(const ZPoly& d, ZPoly p) {
  trim(p);
  const std::size_t dd = d.size() - 1;
  while (p.size() >= d.size()) {
    mpz_class c = p.back();
    std::size_t shift = p.size() - d.size();
    for (std::size_t i = 0; i <= dd; ++i) p[shift + i] -= c * d[i];
    trim(p);
  }
  return p.empty();
}

ZPoly poly_mul(const ZPoly& a, const ZPoly& b) {
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ZPoly poly_divexact(ZPoly p, const ZPoly& d) {
  ZPoly q(p.size() - d.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class c = p[k + d.size() - 1] / d.back();
    q[k] = c;
    for (std::size_t i = 0; i < d.size(); ++i) p[k + i] -= c * d[i];
  }
  return q;
}

const ZPoly& cyclotomic(long n) {
  static std::map<long, ZPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  ZPoly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divexact(p, cyclotomic(d));
  return cache[n] = p;
}

// Orders N of roots of unity that are roots of p.  Any such N has
// phi(N) <= deg p, and phi(N) >= sqrt(N/2), so N <= 2 deg^2.
std::vector<long> cyclotomic_orders(const ZPoly& p) {
  std::vector<long> out;
  const long deg = static_cast<long>(p.size()) - 1;
  for (long n = 1; n <= 2 * deg * deg + 2; ++n) {
    if (euler_phi(n) > deg) continue;
    if (divides(cyclotomic(n), p)) out.push_back(n);
  }
  return out;
}

std::complex<double> eval_c(const BPoly& f, std::complex<double> x, std::complex<double> y) {
  std::complex<double> r = 0, yp = 1;
  for (const auto& row : f) {
    std::complex<double> s = 0, xp = 1;
    for (const auto& c : row) {
      s += c.get_d() * xp;
      xp *= x;
    }
    r += s * yp;
    yp *= y;
  }
  return r;
}

CycloNum eval_exact(const BPoly& f, const CycloNum& x, const CycloNum& y) {
  CycloNum r(0), yp(1);
  for (const auto& row : f) {
    CycloNum s(0), xp(1);
    for (const auto& c : row) {
      if (c != 0) s += xp * CycloNum(mpq_class(c));
      xp *= x;
    }
    r += s * yp;
    yp *= y;
  }
  return r;
}

}  // namespace

BeukersSmythReport beukers_smyth_check() {
  BeukersSmythReport rep;
  {
    // f_1 = (x+y)(x^2 y+1)(x y^2+1), compared coefficientwise
    BPoly f1 = f_n(1);
    std::map<std::pair<int, int>, mpz_class> lhs, rhs;
    for (std::size_t j = 0; j < f1.size(); ++j)
      for (std::size_t i = 0; i < f1[j].size(); ++i)
        if (f1[j][i] != 0) lhs[{static_cast<int>(i), static_cast<int>(j)}] = f1[j][i];
    std::map<std::pair<int, int>, mpz_class> a = {{{1, 0}, 1}, {{0, 1}, 1}};
    std::map<std::pair<int, int>, mpz_class> b = {{{2, 1}, 1}, {{0, 0}, 1}};
    std::map<std::pair<int, int>, mpz_class> c = {{{1, 2}, 1}, {{0, 0}, 1}};
    auto mul = [](const auto& p, const auto& q) {
      std::map<std::pair<int, int>, mpz_class> r;
      for (const auto& [k1, v1] : p)
        for (const auto& [k2, v2] : q) r[{k1.first + k2.first, k1.second + k2.second}] += v1 * v2;
      std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
      return r;
    };
    rhs = mul(mul(a, b), c);
    rep.n1_factors = lhs == rhs;
  }
  std::set<UnityTriple> all;
  for (int n : {0, 2, 3, 4, 5, 6, 7, 8, 9}) {
    BeukersSmythReport::Row row;
    row.n = n;
    const BPoly f = f_n(n);
    std::set<UnityTriple> cls;
    for (int s1 : {1, -1})
      for (int s2 : {1, -1})
        for (int e : {1, 2}) {
          if (s1 == 1 && s2 == 1 && e == 1) continue;
          const BPoly g = twist(f, s1, s2, e);
          ZPoly rx = resultant_y(f, g);
          ZPoly ry = resultant_y(swap_vars(f), swap_vars(g));
          if (rx.empty() || ry.empty()) {
            ++row.vanishing_resultants;
            continue;
          }
          std::vector<long> nx = cyclotomic_orders(rx), ny = cyclotomic_orders(ry);
          for (long ox : nx)
            for (long kx = 0; kx < ox; ++kx) {
              if (gcd_l(kx, ox) != 1) continue;
              const double tx = 2 * M_PI * static_cast<double>(kx) / ox;
              std::complex<double> xc(std::cos(tx), std::sin(tx));
              for (long oy : ny)
                for (long ky = 0; ky < oy; ++ky) {
                  if (gcd_l(ky, oy) != 1) continue;
                  const double ty = 2 * M_PI * static_cast<double>(ky) / oy;
                  std::complex<double> yc(std::cos(ty), std::sin(ty));
                  if (std::abs(eval_c(f, xc, yc)) > 1e-6) continue;
                  CycloNum xe = CycloNum::root_of_unity(kx, ox), ye = CycloNum::root_of_unity(ky, oy);
                  if (!eval_exact(f, xe, ye).is_zero()) continue;
                  UnityTriple t(mpq_class(kx, ox), mpq_class(ky, oy), -mpq_class(kx, ox) - mpq_class(ky, oy));
                  if (is_degenerate(t)) continue;
                  cls.insert(canonicalize(t));
                }
            }
        }
    row.classes.assign(cls.begin(), cls.end());
    sort_classes(row.classes);
    all.insert(cls.begin(), cls.end());
    rep.rows.push_back(std::move(row));
  }
  rep.recovered.assign(all.begin(), all.end());
  sort_classes(rep.recovered);
  const auto expected = single_integrality_classes();
  std::set<UnityTriple> exp(expected.begin(), expected.end());
  for (const auto& t : exp)
    if (!all.count(t)) rep.missing.push_back(t);
  for (const auto& t : all)
    if (!exp.count(t)) rep.extra.push_back(t);
  return rep;
}

// ------------------------------------------------------------ restricted rationality

bool restricted_rationality(const std::vector<Mat>& elements) {
  for (const auto& m : elements) {
    CycloNum tr;
    if (m.dim() == 3) {
      tr = m.trace();
    } else {
      bool off = false;
      for (int i = 0; i < 3 && !off; ++i)
        for (int j = 0; j < 3; ++j)
          if (!m(i, j + 3).is_zero()) {
            off = true;
            break;
          }
      if (off) continue;  // J-coset
      tr = m.block(0, 0, 3).trace();
    }
    auto q = tr.abs_square().try_rational();
    if (!q || q->get_den() != 1) return false;
  }
  return true;
}

}  // namespace st3
