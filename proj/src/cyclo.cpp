#include "st3/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace st3 {

long gcd_l(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_l(long a, long b) {
  if (a == 0 || b == 0) return 0;
  long g = gcd_l(a, b);
  long r = (a / g) * b;
  if (r / b != a / g) throw std::overflow_error("lcm overflow");
  return r < 0 ? -r : r;
}

std::vector<std::pair<int, int>> factor_small(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; static_cast<long>(p) * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

namespace {

long mod_inv(long a, long m) {
  long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1) {
    long q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw std::domain_error("mod_inv: not invertible");
  return ((x % m) + m) % m;
}

// Per-conductor tables: expansion of each e(k/n) into basis exponents.
struct CondTable {
  int n;
  std::vector<std::pair<int, int>> primes;  // (p, e)
  std::vector<std::vector<std::pair<int, int>>> expand;  // k -> [(k', sign)]
  std::vector<char> is_basis;
};

CondTable build_table(int n) {
  CondTable t;
  t.n = n;
  t.primes = factor_small(n);
  t.expand.resize(n);
  t.is_basis.assign(n, 1);
  struct PInfo {
    int p, e, pe, inv, shift;
  };
  std::vector<PInfo> info;
  for (auto [p, e] : t.primes) {
    int pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    int m = n / pe;
    info.push_back({p, e, pe, static_cast<int>(mod_inv(m % pe, pe)), n / p});
  }
  auto good = [&](const PInfo& pi, int k) {
    long j = (static_cast<long>(k) * pi.inv) % pi.pe;
    long top = j / (pi.pe / pi.p);
    return pi.p == 2 ? top == 0 : top != 0;
  };
  for (int k = 0; k < n; ++k) {
    std::vector<std::pair<int, int>> cur{{k, 1}};
    for (const auto& pi : info) {
      std::vector<std::pair<int, int>> nxt;
      for (auto [kk, s] : cur) {
        if (good(pi, kk)) {
          nxt.emplace_back(kk, s);
        } else if (pi.p == 2) {
          nxt.emplace_back((kk + pi.shift) % n, -s);
        } else {
          for (int b = 1; b < pi.p; ++b)
            nxt.emplace_back(static_cast<int>((kk + static_cast<long>(b) * pi.shift) % n), -s);
        }
      }
      cur.swap(nxt);
    }
    if (!(cur.size() == 1 && cur[0].first == k && cur[0].second == 1)) t.is_basis[k] = 0;
    t.expand[k] = std::move(cur);
  }
  return t;
}

const CondTable& table_for(int n) {
  static std::mutex mu;
  static std::unordered_map<int, std::unique_ptr<CondTable>> cache;
  thread_local std::unordered_map<int, const CondTable*> local;
  auto it = local.find(n);
  if (it != local.end()) return *it->second;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<CondTable>(build_table(n));
  local[n] = slot.get();
  return *slot;
}

// Dense accumulation buffer reused per thread.
struct Accum {
  std::vector<mpq_class> buf;
  std::vector<char> mark;
  std::vector<int> touched;
  void reset(int n) {
    if (static_cast<int>(buf.size()) < n) {
      buf.resize(n);
      mark.resize(n, 0);
    }
    for (int k : touched) {
      buf[k] = 0;
      mark[k] = 0;
    }
    touched.clear();
  }
  void add(int k, const mpq_class& c, int sign) {
    if (!mark[k]) {
      mark[k] = 1;
      touched.push_back(k);
    }
    if (sign > 0)
      buf[k] += c;
    else
      buf[k] -= c;
  }
  std::vector<CycloNum::Term> take() {
    std::sort(touched.begin(), touched.end());
    std::vector<CycloNum::Term> out;
    for (int k : touched) {
      if (sgn(buf[k]) != 0) out.emplace_back(k, buf[k]);
      buf[k] = 0;
      mark[k] = 0;
    }
    touched.clear();
    return out;
  }
};

Accum& accum() {
  thread_local Accum a;
  return a;
}

}  // namespace

CycloNum::CycloNum(long v) {
  if (v != 0) terms_.emplace_back(0, mpq_class(v));
}

CycloNum::CycloNum(const mpq_class& q) {
  if (sgn(q) == 0) return;
  terms_.emplace_back(0, q);
  terms_[0].second.canonicalize();  // mpq_class(a, b) does not reduce
}

bool CycloNum::is_one() const {
  return n_ == 1 && terms_.size() == 1 && terms_[0].second == 1;
}

CycloNum CycloNum::from_terms(int n, std::vector<Term> terms) {
  if (n <= 0) throw std::invalid_argument("conductor must be positive");
  if (n % 4 == 2) {
    int h = n / 2;
    for (auto& [k, c] : terms) {
      k = ((k % n) + n) % n;
      if (k % 2 == 0) {
        k /= 2;
      } else {
        k = ((k + h) / 2) % h;
        c = -c;
      }
    }
    n = h;
  }
  const CondTable& t = table_for(n);
  Accum& acc = accum();
  acc.reset(n);
  for (auto& [k, c] : terms) {
    int kk = ((k % n) + n) % n;
    for (auto [k2, s] : t.expand[kk]) acc.add(k2, c, s);
  }
  CycloNum z;
  z.n_ = n;
  z.terms_ = acc.take();
  z.canonicalize();
  return z;
}

// Reduce to minimal conductor; assumes terms are basis exponents for n_.
void CycloNum::canonicalize() {
  if (terms_.empty()) {
    n_ = 1;
    return;
  }
  bool changed = true;
  while (changed && n_ > 1) {
    changed = false;
    for (auto [p, e] : factor_small(n_)) {
      if (p == 2 && e == 1) {
        for (auto& tm : terms_) tm.first /= 2;
        n_ /= 2;
        changed = true;
        break;
      }
      if (e >= 2) {
        bool all = std::all_of(terms_.begin(), terms_.end(),
                               [p = p](const Term& tm) { return tm.first % p == 0; });
        if (all) {
          for (auto& tm : terms_) tm.first /= p;
          n_ /= p;
          changed = true;
          break;
        }
        continue;
      }
      // p odd, exactly divides n_: fibers k mod (n_/p) must be constant.
      int m = n_ / p;
      std::map<int, std::vector<const Term*>> fibers;
      for (const auto& tm : terms_) fibers[tm.first % m].push_back(&tm);
      bool ok = true;
      for (auto& [r, v] : fibers) {
        if (static_cast<int>(v.size()) != p - 1) {
          ok = false;
          break;
        }
        for (auto* tp : v)
          if (tp->second != v[0]->second) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (!ok) continue;
      std::vector<Term> nt;
      for (auto& [r, v] : fibers) {
        // k0 = r (mod m), k0 = 0 (mod p)
        long k0 = r;
        while (k0 % p != 0) k0 += m;
        nt.emplace_back(static_cast<int>(k0 / p), -v[0]->second);
      }
      std::sort(nt.begin(), nt.end(),
                [](const Term& a, const Term& b) { return a.first < b.first; });
      terms_ = std::move(nt);
      n_ = m;
      changed = true;
      break;
    }
  }
}

CycloNum CycloNum::root_of_unity(long num, long den) {
  if (den < 1) throw std::invalid_argument("root_of_unity: den must be >= 1");
  long g = gcd_l(num, den);
  if (g == 0) g = 1;
  den /= g;
  num /= g;
  num = ((num % den) + den) % den;
  if (den > (1L << 30)) throw std::overflow_error("root_of_unity: denominator too large");
  return from_terms(static_cast<int>(den), {Term(static_cast<int>(num), mpq_class(1))});
}

CycloNum CycloNum::operator-() const {
  CycloNum z = *this;
  for (auto& tm : z.terms_) tm.second = -tm.second;
  return z;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (n_ == o.n_) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        out.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        out.push_back(o.terms_[j++]);
      } else {
        mpq_class c = terms_[i].second + o.terms_[j].second;
        if (sgn(c) != 0) out.emplace_back(terms_[i].first, c);
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    canonicalize();
    return *this;
  }
  long L = lcm_l(n_, o.n_);
  if (L > (1L << 24)) throw std::overflow_error("conductor too large");
  const CondTable& t = table_for(static_cast<int>(L));
  Accum& acc = accum();
  acc.reset(static_cast<int>(L));
  long s1 = L / n_, s2 = L / o.n_;
  for (auto& [k, c] : terms_)
    for (auto [k2, s] : t.expand[k * s1]) acc.add(k2, c, s);
  for (auto& [k, c] : o.terms_)
    for (auto [k2, s] : t.expand[k * s2]) acc.add(k2, c, s);
  n_ = static_cast<int>(L);
  terms_ = acc.take();
  canonicalize();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  if (a.is_zero() || b.is_zero()) return CycloNum();
  if (a.n_ == 1) {
    CycloNum z = b;
    const mpq_class& c = a.terms_[0].second;
    if (c != 1)
      for (auto& tm : z.terms_) tm.second *= c;
    return z;
  }
  if (b.n_ == 1) return b * a;
  long L = lcm_l(a.n_, b.n_);
  if (L > (1L << 24)) throw std::overflow_error("conductor too large");
  const CondTable& t = table_for(static_cast<int>(L));
  Accum& acc = accum();
  acc.reset(static_cast<int>(L));
  long s1 = L / a.n_, s2 = L / b.n_;
  mpq_class prod;
  for (auto& [k1, c1] : a.terms_) {
    for (auto& [k2, c2] : b.terms_) {
      long k = (k1 * s1 + k2 * s2) % L;
      prod = c1 * c2;
      for (auto [k3, s] : t.expand[k]) acc.add(k3, prod, s);
    }
  }
  CycloNum z;
  z.n_ = static_cast<int>(L);
  z.terms_ = acc.take();
  z.canonicalize();
  return z;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) { return *this = *this * o; }

bool operator==(const CycloNum& a, const CycloNum& b) {
  return a.n_ == b.n_ && a.terms_ == b.terms_;
}

CycloNum CycloNum::galois(long m) const {
  if (n_ == 1) return *this;
  long mm = ((m % n_) + n_) % n_;
  if (gcd_l(mm, n_) != 1) throw std::domain_error("galois: multiplier not coprime to conductor");
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (auto& [k, c] : terms_) t.emplace_back(static_cast<int>((k * mm) % n_), c);
  return from_terms(n_, std::move(t));
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycloNum: division by zero");
  if (n_ == 1) return CycloNum(mpq_class(1) / terms_[0].second);
  CycloNum y(1);
  for (long m = 2; m < n_; ++m)
    if (gcd_l(m, n_) == 1) y *= galois(m);
  CycloNum norm = *this * y;
  auto q = norm.try_rational();
  if (!q) throw std::logic_error("CycloNum::inverse: norm not rational");
  return y * CycloNum(mpq_class(1) / *q);
}

std::optional<mpq_class> CycloNum::try_rational() const {
  if (terms_.empty()) return mpq_class(0);
  if (n_ != 1) return std::nullopt;
  return terms_[0].second;
}

std::complex<long double> CycloNum::to_complex_ld() const {
  std::complex<long double> s = 0;
  for (auto& [k, c] : terms_) {
    long double ang = 2.0L * std::numbers::pi_v<long double> * k / n_;
    long double cv = static_cast<long double>(c.get_d());
    s += std::complex<long double>(cv * std::cos(ang), cv * std::sin(ang));
  }
  return s;
}

std::complex<double> CycloNum::to_complex() const {
  auto z = to_complex_ld();
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(std::string_view s) {
  std::string str(s);
  if (str.empty()) throw std::invalid_argument("empty rational");
  if (str[0] == '+') str.erase(0, 1);
  for (char ch : str)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-'))
      throw std::invalid_argument("bad rational: " + std::string(s));
  mpq_class q;
  if (q.set_str(str, 10) != 0) throw std::invalid_argument("bad rational: " + std::string(s));
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
  q.canonicalize();
  return q;
}

std::string CycloNum::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [k, c] : terms_) {
    std::string term;
    if (k == 0) {
      term = c.get_str();
    } else {
      long g = gcd_l(k, n_);
      std::string root = "e(" + std::to_string(k / g) + "/" + std::to_string(n_ / g) + ")";
      if (c == 1)
        term = root;
      else if (c == -1)
        term = "-" + root;
      else
        term = c.get_str() + "*" + root;
    }
    if (first)
      out = term;
    else if (term[0] == '-')
      out += term;
    else
      out += "+" + term;
    first = false;
  }
  return out;
}

CycloNum CycloNum::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty cyclotomic literal");
  CycloNum total;
  std::size_t i = 0;
  auto parse_root = [&](std::size_t& pos, bool& found) -> CycloNum {
    found = false;
    if (pos + 1 < s.size() && s[pos] == 'e' && s[pos + 1] == '(') {
      std::size_t close = s.find(')', pos);
      if (close == std::string::npos) throw std::invalid_argument("unterminated e( in: " + s);
      mpq_class x = parse_rational(std::string_view(s).substr(pos + 2, close - pos - 2));
      pos = close + 1;
      found = true;
      if (!x.get_num().fits_slong_p() || !x.get_den().fits_slong_p())
        throw std::overflow_error("root of unity exponent too large");
      return root_of_unity(x.get_num().get_si(), x.get_den().get_si());
    }
    return CycloNum(1);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw std::invalid_argument("expected + or - in: " + s);
    }
    if (i >= s.size()) throw std::invalid_argument("dangling sign in: " + s);
    CycloNum term;
    bool found = false;
    CycloNum root = parse_root(i, found);
    if (found) {
      term = root;
    } else {
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
      if (j == i) throw std::invalid_argument("expected term at position " + std::to_string(i) + " in: " + s);
      mpq_class q = parse_rational(std::string_view(s).substr(i, j - i));
      i = j;
      term = CycloNum(q);
      if (i < s.size() && s[i] == '*') {
        ++i;
        CycloNum r = parse_root(i, found);
        if (!found) throw std::invalid_argument("expected e(a/b) after '*' in: " + s);
        term = term * r;
      }
    }
    if (sign < 0) term = -term;
    total += term;
  }
  return total;
}

std::size_t CycloNum::hash() const {
  std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (auto& [k, c] : terms_) {
    mix(static_cast<std::size_t>(k));
    mix(mpz_get_ui(c.get_num_mpz_t()) ^ (static_cast<std::size_t>(sgn(c.get_num())) << 63));
    mix(mpz_get_ui(c.get_den_mpz_t()));
  }
  return h;
}

}  // namespace st3
