#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace st3 {

using Exp3 = std::array<int, 3>;

// Action on exponent vectors: variable i goes to u_{perm[i]}^{sign[i]}.
struct SignedPerm {
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> sign{1, 1, 1};

  Exp3 apply(const Exp3& e) const {
    Exp3 r{0, 0, 0};
    for (int i = 0; i < 3; ++i) r[perm[i]] += sign[i] * e[i];
    return r;
  }
  SignedPerm inverse() const {
    SignedPerm r;
    for (int i = 0; i < 3; ++i) {
      r.perm[perm[i]] = i;
      r.sign[perm[i]] = sign[i];
    }
    return r;
  }
  // determinant of the underlying signed permutation matrix
  int det(int rank) const {
    int s = 1;
    for (int i = 0; i < rank; ++i) {
      s *= sign[i];
      for (int j = i + 1; j < rank; ++j)
        if (perm[i] > perm[j]) s = -s;
    }
    return s;
  }
  bool operator==(const SignedPerm&) const = default;
};

// Sparse Laurent polynomial in up to three variables.  Exponents are
// packed into 16-bit biased fields with u1 most significant, so the key
// order is the lexicographic order on exponent vectors.
template <class C>
class Laurent {
 public:
  using Key = std::uint64_t;
  using Term = std::pair<Key, C>;
  static constexpr int kBias = 1 << 15;
  static constexpr int kMaxExp = 16000;

  explicit Laurent(int rank = 1) : rank_(rank) {
    if (rank < 0 || rank > 3) throw std::invalid_argument("Laurent rank out of range");
  }

  static Key pack(const Exp3& e) {
    Key k = 0;
    for (int i = 0; i < 3; ++i) {
      if (std::abs(e[i]) > kMaxExp) throw std::overflow_error("Laurent exponent overflow");
      k = (k << 16) | static_cast<Key>(e[i] + kBias);
    }
    return k;
  }
  static Exp3 unpack(Key k) {
    Exp3 e;
    for (int i = 2; i >= 0; --i) {
      e[i] = static_cast<int>(k & 0xffff) - kBias;
      k >>= 16;
    }
    return e;
  }
  static constexpr Key zero_key() {
    return (static_cast<Key>(kBias) << 32) | (static_cast<Key>(kBias) << 16) |
           static_cast<Key>(kBias);
  }

  static Laurent monomial(int rank, const Exp3& e, const C& c = C(1)) {
    Laurent p(rank);
    for (int i = rank; i < 3; ++i)
      if (e[i] != 0) throw std::invalid_argument("exponent beyond rank");
    if (!c.is_zero()) p.terms_.emplace_back(pack(e), c);
    return p;
  }
  static Laurent constant(int rank, const C& c) { return monomial(rank, {0, 0, 0}, c); }

  // Builds from unsorted, possibly repeated terms.
  static Laurent from_terms(int rank, std::vector<Term> t) {
    Laurent p(rank);
    std::sort(t.begin(), t.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& [k, c] : t) {
      if (!p.terms_.empty() && p.terms_.back().first == k)
        p.terms_.back().second += c;
      else
        p.terms_.emplace_back(k, std::move(c));
    }
    p.drop_zeros();
    return p;
  }

  int rank() const { return rank_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  C coeff(const Exp3& e) const {
    Key k = pack(e);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, Key key) { return t.first < key; });
    if (it != terms_.end() && it->first == k) return it->second;
    return C(0);
  }
  const Term& leading() const { return terms_.back(); }

  Laurent& operator+=(const Laurent& o) { return merge(o, false); }
  Laurent& operator-=(const Laurent& o) { return merge(o, true); }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  Laurent operator-() const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  Laurent scale(const C& c) const {
    Laurent r(rank_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [k, v] : terms_) r.terms_.emplace_back(k, v * c);
    r.drop_zeros();
    return r;
  }
  // multiply by a monomial
  Laurent shift(const Exp3& e) const {
    Laurent r(rank_);
    r.terms_.reserve(terms_.size());
    for (const auto& [k, v] : terms_) r.terms_.emplace_back(pack(add(unpack(k), e)), v);
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    check_rank(a, b);
    Laurent r(a.rank_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.max_abs() + b.max_abs() > kMaxExp) throw std::overflow_error("Laurent exponent overflow");
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) prod.emplace_back(ka + kb - zero_key(), ca * cb);
    return from_terms(a.rank_, std::move(prod));
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent pow(int e) const {
    Laurent r = constant(rank_, C(1));
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }

  // Terms whose exponent at var equals power, with that variable removed.
  Laurent coeff_slice(int var, int power) const {
    if (var < 0 || var >= rank_) throw std::invalid_argument("coeff_slice: bad variable");
    std::vector<Term> out;
    for (const auto& [k, c] : terms_) {
      Exp3 e = unpack(k);
      if (e[var] != power) continue;
      Exp3 f{0, 0, 0};
      int j = 0;
      for (int i = 0; i < 3; ++i)
        if (i != var) f[j++] = e[i];
      out.emplace_back(pack(f), c);
    }
    return from_terms(rank_ - 1, std::move(out));
  }

  // u1 -> u w, u2 -> v w, u3 -> w / (u v); variables of the result are (u, v, w).
  Laurent substitute_u3() const {
    if (rank_ != 3) throw std::invalid_argument("substitute_u3 needs rank 3");
    return map_exponents(3, [](const Exp3& e) {
      return Exp3{e[0] - e[2], e[1] - e[2], e[0] + e[1] + e[2]};
    });
  }

  Laurent apply_weyl(const SignedPerm& w) const {
    return map_exponents(rank_, [&](const Exp3& e) { return w.apply(e); });
  }

  template <class F>
  Laurent map_exponents(int new_rank, F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.emplace_back(pack(f(unpack(k))), c);
    return from_terms(new_rank, std::move(out));
  }

  template <class D, class F>
  Laurent<D> map_coeffs(F&& f) const {
    std::vector<typename Laurent<D>::Term> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.emplace_back(k, f(c));
    return Laurent<D>::from_terms(rank_, std::move(out));
  }

  C sum_coeffs() const {
    C s(0);
    for (const auto& t : terms_) s += t.second;
    return s;
  }

  int max_abs() const {
    int m = 0;
    for (const auto& t : terms_) {
      Exp3 e = unpack(t.first);
      for (int x : e) m = std::max(m, std::abs(x));
    }
    return m;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    if (a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].first != b.terms_[i].first || !(a.terms_[i].second == b.terms_[i].second))
        return false;
    return true;
  }

  // Debug form: coeff*u1^a u2^b u3^c joined by " + ".
  template <class Fmt>
  std::string str(Fmt&& fmt) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << fmt(it->second);
      Exp3 e = unpack(it->first);
      for (int i = 0; i < rank_; ++i)
        if (e[i] != 0) os << " u" << (i + 1) << "^" << e[i];
    }
    return os.str();
  }

 private:
  int rank_;
  std::vector<Term> terms_;

  static Exp3 add(const Exp3& a, const Exp3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
  static void check_rank(const Laurent& a, const Laurent& b) {
    if (a.rank_ != b.rank_) throw std::invalid_argument("Laurent rank mismatch");
  }
  void drop_zeros() {
    std::erase_if(terms_, [](const Term& t) { return t.second.is_zero(); });
  }
  Laurent& merge(const Laurent& o, bool negate) {
    check_rank(*this, o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        out.push_back(std::move(terms_[i++]));
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        out.emplace_back(o.terms_[j].first, negate ? -o.terms_[j].second : o.terms_[j].second);
        ++j;
      } else {
        C c = std::move(terms_[i].second);
        if (negate) c -= o.terms_[j].second;
        else c += o.terms_[j].second;
        if (!c.is_zero()) out.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }
};

}  // namespace st3
