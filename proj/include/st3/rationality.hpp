#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "st3/matgroup.hpp"

namespace st3 {

// (u, v, w) with u + v + w in Z, entries reduced to [0, 1).
struct UnityTriple {
  std::array<mpq_class, 3> t;

  UnityTriple() = default;
  UnityTriple(mpq_class u, mpq_class v, mpq_class w);
  static UnityTriple parse(const std::string& s);  // "a/b,c/d,e/f"

  long order() const;  // lcm of denominators
  std::string str() const;
  bool operator==(const UnityTriple& o) const { return t == o.t; }
  bool operator<(const UnityTriple& o) const { return t < o.t; }
};

mpq_class frac_part(const mpq_class& q);

// Lexicographic minimum over Galois multipliers and permutations.
UnityTriple canonicalize(const UnityTriple& x);
// (a+b)(b+c)(c+a) = 0, i.e. two entries differ by 1/2
bool is_degenerate(const UnityTriple& x);
bool single_rational(const UnityTriple& x);  // |a+b+c|^2 in Z
bool cyclic_rational(const UnityTriple& x);  // |a^n+b^n+c^n|^2 in Z for all n
// sorted by multiplicative order, then lexicographically
void sort_classes(std::vector<UnityTriple>& v);

std::vector<UnityTriple> single_integrality_classes();
std::vector<UnityTriple> cyclic_integrality_classes();

struct BeukersSmythReport {
  struct Row {
    int n;
    std::vector<UnityTriple> classes;
    int vanishing_resultants = 0;
  };
  std::vector<Row> rows;
  std::vector<UnityTriple> recovered;  // union over n != 1, canonical, sorted
  std::vector<UnityTriple> missing, extra;
  bool n1_factors = false;  // f_1 = (x+y)(x^2 y+1)(x y^2+1)
  bool ok() const { return missing.empty() && extra.empty() && n1_factors; }
};
BeukersSmythReport beukers_smyth_check();

// |tr A|^2 in Z for every element.  6x6 input is reduced to its 3x3
// block; elements of the J-coset are skipped.
bool restricted_rationality(const std::vector<Mat>& elements);

}  // namespace st3
