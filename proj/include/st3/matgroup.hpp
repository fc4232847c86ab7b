#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "st3/cyclo.hpp"
#include "st3/fp.hpp"
#include "st3/weylchar.hpp"

namespace st3 {

// Square matrix over CycloNum (3x3 in the SU(3) picture, 6x6 otherwise).
class Mat {
 public:
  Mat() = default;
  explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static Mat identity(int n);
  static Mat diag(const std::vector<CycloNum>& d);
  static Mat diag_e(const std::vector<mpq_class>& angles);  // diag(e(u_i))
  static Mat from_rows(const std::vector<std::vector<CycloNum>>& rows);
  static Mat parse(std::string_view text);  // rows ';', entries ','
  static Mat symplectic_j();                // [[0, I3], [-I3, 0]]
  // A -> diag(A, conj A); with flag, J * diag(A, conj A)
  static Mat embed(const Mat& a, bool with_j = false);

  int dim() const { return n_; }
  const CycloNum& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  CycloNum& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  Mat conj() const;
  Mat transpose() const;
  Mat adjoint() const { return conj().transpose(); }
  Mat scaled(const CycloNum& c) const;
  Mat block(int r0, int c0, int size) const;
  CycloNum trace() const;
  CycloNum det() const;
  bool is_identity() const;
  bool is_unitary() const;
  bool is_symplectic() const;  // against symplectic_j(), 6x6 only
  std::vector<CycloNum> charpoly() const;  // coefficients c_0..c_n of det(xI - M), c_n = 1

  std::string str() const;
  std::size_t hash() const;
  friend Mat operator*(const Mat& x, const Mat& y);
  friend Mat operator+(const Mat& x, const Mat& y);
  friend Mat operator-(const Mat& x, const Mat& y);
  friend bool operator==(const Mat& x, const Mat& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

 private:
  int n_ = 0;
  std::vector<CycloNum> a_;
};

// Images of an exact matrix modulo the two reconstruction primes.
struct FpMat {
  int n = 0;
  std::vector<std::uint64_t> v0, v1;
  static FpMat of(const Mat& m);
  friend FpMat operator*(const FpMat& x, const FpMat& y);
  bool operator==(const FpMat& o) const { return v0 == o.v0 && v1 == o.v1; }
  std::size_t hash() const;
};

struct ClosureExceedsBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Fingerprint {
  long order = 0;
  std::map<int, int> element_orders;  // order -> count
  std::map<int, int> class_sizes;     // size -> count
  std::vector<long> abelianization;   // invariant factors, ascending
  long center_order = 0;
  long derived_order = 0;
  std::string str() const;
  auto operator<=>(const Fingerprint&) const = default;
};

// Finite group of exact matrices, closed under products.
class FiniteGroup {
 public:
  static FiniteGroup close(const std::vector<Mat>& gens, long bound = 10000);

  std::size_t order() const { return elems_.size(); }
  const std::vector<Mat>& elements() const { return elems_; }
  const Mat& element(std::size_t i) const { return elems_[i]; }
  const FpMat& image(std::size_t i) const { return imgs_[i]; }
  const std::vector<int>& generators() const { return gens_; }
  int dim() const { return elems_.empty() ? 0 : elems_[0].dim(); }
  // index of an element given by its image, or -1
  int find(const FpMat& m) const;
  int find(const Mat& m) const { return find(FpMat::of(m)); }
  int mul(int i, int j) const;  // index of element_i * element_j

 private:
  std::vector<Mat> elems_;
  std::vector<FpMat> imgs_;
  std::vector<int> gens_;
  std::unordered_map<std::size_t, std::vector<int>> index_;
  void insert(Mat m, FpMat img);
};

// Abstract finite group given by a multiplication table; element 0 is the identity.
struct TableGroup {
  int n = 0;
  std::vector<int> table;  // n*n
  std::vector<int> inv;
  std::vector<int> gens;
  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * n + b]; }
  int order_of(int a) const;
  std::vector<std::vector<int>> conj_classes() const;
  std::vector<int> subgroup_generated(const std::vector<int>& s) const;
  Fingerprint fingerprint() const;
};

// Component group G/G^0 for G = G^0 . H.
struct ComponentGroup {
  FiniteGroup h;
  std::vector<int> reps;      // index into h.elements() of each component's representative
  std::vector<int> coset_of;  // component of every element of h
  TableGroup quotient;

  std::size_t size() const { return reps.size(); }
  const Mat& rep(std::size_t c) const { return h.element(reps[c]); }
};

bool in_identity_component(const ConnectedGroup& g0, const Mat& m);

// Coefficients a_1..a_k of det(1 - D(t) M T) on the given slots, where
// D(t) = diag(t^{w_s}); a_k is (-1)^k times the sum of principal k-minors.
std::vector<LPoly> torus_charpoly(const Mat& m, const std::vector<int>& slots,
                                  const std::vector<Exp3>& weights, int rank);
// All 63 principal minors of a 6x6 matrix, indexed by slot bitmask.
std::array<CycloNum, 64> principal_minors(const Mat& m);
ComponentGroup quotient_by_torus(FiniteGroup h, const ConnectedGroup& g0);

std::vector<std::vector<int>> conj_classes(const TableGroup& g);
Fingerprint fingerprint(const TableGroup& g);

enum class ExtensionKind { Standard, Split, Nonsplit };
std::string extension_kind_name(ExtensionKind k);
// H given by its 3x3 elements in SU(3); g in U(3) with Jg normalizing H.
// Standard means g in U(1) H; otherwise split iff conj(g) g = conj(x) x for
// some x in H.
ExtensionKind extension_kind(const std::vector<Mat>& h, const Mat& g);

}  // namespace st3
