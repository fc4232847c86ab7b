#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace st3 {

// Element of Q(zeta_n), stored in the Zumbroich basis of the minimal
// conductor n.  Value = sum q_k * e(k/n), e(x) = exp(2 pi i x).
class CycloNum {
 public:
  using Term = std::pair<int, mpq_class>;

  CycloNum() = default;
  CycloNum(long v);  // NOLINT(google-explicit-constructor)
  CycloNum(const mpq_class& q);  // NOLINT(google-explicit-constructor)

  static CycloNum root_of_unity(long num, long den);
  static CycloNum parse(std::string_view text);

  int conductor() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  CycloNum conj() const { return galois(-1); }
  CycloNum galois(long m) const;
  CycloNum abs_square() const { return *this * conj(); }
  CycloNum inverse() const;
  std::optional<mpq_class> try_rational() const;
  std::complex<double> to_complex() const;
  std::complex<long double> to_complex_ld() const;

  std::string str() const;
  std::size_t hash() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b) {
    return a * b.inverse();
  }
  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  // Raw constructor: arbitrary exponents mod n (not necessarily basis),
  // canonicalized on the way in.
  static CycloNum from_terms(int n, std::vector<Term> terms);

 private:
  int n_ = 1;
  std::vector<Term> terms_;  // sorted by exponent, nonzero coefficients

  void canonicalize();
};

// helpers on machine integers
long gcd_l(long a, long b);
long lcm_l(long a, long b);
std::vector<std::pair<int, int>> factor_small(int n);  // (p, e)

struct CycloHash {
  std::size_t operator()(const CycloNum& z) const { return z.hash(); }
};

std::string rational_str(const mpq_class& q);
mpq_class parse_rational(std::string_view s);

}  // namespace st3
