#include "st3/catalog.hpp"
#include "st3/parallel.hpp"
#include "st3/rationality.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#ifndef ST3_DATA_DIR
#define ST3_DATA_DIR "data"
#endif

namespace st3 {

namespace {

CycloNum e(long num, long den) { return CycloNum::root_of_unity(num, den); }
CycloNum rat(long n, long d = 1) { return CycloNum(mpq_class(n, d)); }

Mat D3(const char* u, const char* v, const char* w) {
  return Mat::diag_e({parse_rational(u), parse_rational(v), parse_rational(w)});
}

// R_{xi,alpha}
Mat R3(const CycloNum& xi, const CycloNum& alpha) {
  return Mat::from_rows({{-xi.conj(), 0, 0}, {0, 0, -alpha.conj()}, {0, -(xi * alpha), 0}});
}

Mat perm_s() { return Mat::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}); }

struct Quat {
  CycloNum a, b, c, d;
};

Mat quat2(const Quat& q) {
  CycloNum i = e(1, 4);
  return Mat::from_rows({{q.a + q.b * i, q.c + q.d * i}, {-q.c + q.d * i, q.a - q.b * i}});
}

// pi(u, A) = diag(u^2, u^-1 A)
Mat pi3(const CycloNum& u, const Quat& q) {
  Mat a = quat2(q);
  CycloNum ui = u.inverse();
  return Mat::from_rows({{u * u, 0, 0}, {0, ui * a(0, 0), ui * a(0, 1)}, {0, ui * a(1, 0), ui * a(1, 1)}});
}

CycloNum sqrt2() { return e(1, 8) + e(-1, 8); }
CycloNum inv_sqrt2() { return sqrt2() * rat(1, 2); }

const Quat kOne{1, 0, 0, 0};
const Quat kJ{0, 0, 1, 0};
Quat quat_w() { return {rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)}; }
Quat quat_o() { return {inv_sqrt2(), inv_sqrt2(), 0, 0}; }

// ------------------------------------------------------------ subgroup tables

struct ARow {
  const char* name;
  std::vector<std::array<const char*, 3>> gens;
};

const std::vector<ARow>& a_rows() {
  static const std::vector<ARow> rows = {
      {"A(1,1)", {{"1/3", "1/3", "1/3"}}},
      {"A(1,2)", {{"1/3", "5/6", "5/6"}}},
      {"A(1,3)", {{"1/9", "4/9", "4/9"}}},
      {"A(1,4)_1", {{"1/6", "5/12", "5/12"}}},
      {"A(1,4)_2", {{"1/3", "1/12", "7/12"}}},
      {"A(1,6)_1", {{"1/9", "17/18", "17/18"}}},
      {"A(1,6)_2", {{"1/18", "2/9", "13/18"}}},
      {"A(1,7)", {{"1/21", "16/21", "4/21"}}},
      {"A(1,8)_1", {{"1/6", "1/24", "19/24"}}},
      {"A(1,8)_2", {{"1/12", "5/24", "17/24"}}},
      {"A(1,12)", {{"1/9", "7/36", "25/36"}}},
      {"A(2,2)", {{"0", "1/2", "1/2"}, {"1/6", "1/6", "2/3"}}},
      {"A(2,4)", {{"1/2", "0", "1/2"}, {"1/6", "5/12", "5/12"}}},
      {"A(2,6)", {{"1/2", "0", "1/2"}, {"1/9", "17/18", "17/18"}}},
      {"A(3,1)", {{"1/3", "0", "2/3"}, {"1/3", "1/3", "1/3"}}},
      {"A(3,2)", {{"1/3", "0", "2/3"}, {"2/3", "1/6", "1/6"}}},
      {"A(3,3)", {{"0", "1/3", "2/3"}, {"1/9", "1/9", "7/9"}}},
      {"A(3,4)", {{"0", "1/3", "2/3"}, {"1/6", "5/12", "5/12"}}},
      {"A(3,6)", {{"0", "1/3", "2/3"}, {"1/9", "5/18", "11/18"}}},
      {"A(4,4)", {{"0", "1/4", "3/4"}, {"1/12", "1/12", "5/6"}}},
      {"A(6,2)", {{"1/6", "0", "5/6"}, {"2/3", "1/6", "1/6"}}},
      {"A(6,6)", {{"0", "1/6", "5/6"}, {"1/18", "1/18", "8/9"}}},
  };
  return rows;
}

std::vector<Mat> a_gens(const std::string& name) {
  for (const auto& r : a_rows())
    if (name == r.name) {
      std::vector<Mat> g;
      for (const auto& t : r.gens) g.push_back(D3(t[0], t[1], t[2]));
      return g;
    }
  throw std::invalid_argument("unknown abelian subgroup " + name);
}

// B(m,n;t)_* = <A(m,n)_*, T_t>
struct BRow {
  const char* name;
  const char* base;
  int t;
};
const std::vector<BRow>& b_rows() {
  static const std::vector<BRow> rows = {
      {"B(1,4)_2", "A(1,4)_2", 1},   {"B(1,8)_1", "A(1,8)_1", 1},   {"B(1,12)", "A(1,12)", 1},
      {"B(2,4)", "A(2,4)", 1},       {"B(3,1)", "A(3,1)", 1},       {"B(3,2)", "A(3,2)", 1},
      {"B(3,3)", "A(3,3)", 1},       {"B(3,4)", "A(3,4)", 1},       {"B(3,6)", "A(3,6)", 1},
      {"B(4,4)", "A(4,4)", 1},       {"B(6,2)", "A(6,2)", 1},       {"B(6,6)", "A(6,6)", 1},
      {"B(1,4;2)_2", "A(1,4)_2", 2}, {"B(1,12;2)", "A(1,12)", 2},   {"B(3,2;2)", "A(3,2)", 2},
      {"B(3,6;2)", "A(3,6)", 2},     {"B(2,4;4)", "A(2,4)", 4},     {"B(3,4;4)", "A(3,4)", 4},
  };
  return rows;
}

Mat t_matrix(int t) {
  switch (t) {
    case 1: return R3(1, 1);
    case 2: return R3(-1, e(1, 4));
    case 4: return R3(e(1, 4), e(3, 8));
  }
  throw std::invalid_argument("no T matrix for this index");
}

Mat t1() { return t_matrix(1); }

const char* const kCNames[] = {"C(1,7)", "C(2,2)", "C(3,1)", "C(3,3)", "C(4,4)", "C(6,2)", "C(6,6)"};
const char* const kDNames[] = {"D(2,2)", "D(3,1)", "D(3,3)", "D(4,4)", "D(6,2)", "D(6,6)"};

std::string inner_of(const std::string& name) {
  // "C(3,3)" -> "A(3,3)"
  return "A" + name.substr(1);
}

Mat e_g1() { return D3("0", "1/3", "2/3"); }
Mat e_g2() {
  CycloNum w = e(1, 3), w2 = e(2, 3);
  CycloNum s = (w - w2).inverse();
  return Mat::from_rows({{1, 1, 1}, {1, w, w2}, {1, w2, w}}).scaled(s);
}
Mat e_g3() { return D3("2/9", "2/9", "5/9"); }

Mat e168_m() {
  auto z = [](int k) { return e(k, 7); };
  CycloNum a = z(4) - z(3), b = z(2) - z(5), c = z(1) - z(6);
  CycloNum sq = z(1) + z(2) + z(4) - z(3) - z(5) - z(6);  // sqrt(-7)
  Mat m = Mat::from_rows({{a, b, c}, {b, c, a}, {c, a, b}}).scaled(sq.inverse());
  // the printed matrix is real orthogonal; take the sign with determinant 1
  if (!m.det().is_one()) m = m.scaled(CycloNum(-1));
  return m;
}

std::vector<Mat> h_gens_impl(const std::string& name) {
  if (name.rfind("A(", 0) == 0) return a_gens(name);
  for (const auto& r : b_rows())
    if (name == r.name) {
      auto g = a_gens(r.base);
      g.push_back(t_matrix(r.t));
      return g;
    }
  if (name.rfind("B(T,", 0) == 0 || name.rfind("B(O,", 0) == 0) {
    if (name == "B(T,1;1)") return {pi3(e(1, 18), quat_w()), pi3(1, kJ)};
    const bool oct = name[2] == 'O';
    const int n = name[4] - '0';
    std::vector<Mat> g = {pi3(e(1, 6 * n), kOne), pi3(1, kJ), pi3(1, quat_w())};
    if (oct) g.push_back(pi3(e(1, 12 * n), quat_o()));
    if ((oct && n > 2) || (!oct && n > 3)) throw std::invalid_argument("unknown group " + name);
    return g;
  }
  for (const char* c : kCNames)
    if (name == c) {
      auto g = a_gens(inner_of(name));
      g.push_back(perm_s());
      return g;
    }
  for (const char* d : kDNames)
    if (name == d) {
      auto g = a_gens(inner_of(name));
      g.push_back(perm_s());
      g.push_back(t1());
      return g;
    }
  if (name == "E(36)") return {e_g1(), e_g2()};
  if (name == "E(72)") return {e_g1(), e_g2(), e_g3() * e_g2() * e_g3().adjoint()};
  if (name == "E(216)") return {e_g1(), e_g2(), e_g3()};
  if (name == "E(168)") return {D3("1/3", "1/3", "1/3"), perm_s(), D3("1/7", "2/7", "4/7"), e168_m()};
  throw std::invalid_argument("unknown subgroup of SU(3): " + name);
}

std::vector<NTypeSpec> make_n_specs() {
  struct Base {
    std::string name, family;
  };
  std::vector<Base> bases;
  for (const auto& r : a_rows()) bases.push_back({r.name, "A"});
  for (const auto& r : b_rows()) bases.push_back({r.name, "B"});
  for (const char* n : {"B(T,1)", "B(T,2)", "B(T,3)", "B(T,1;1)", "B(O,1)", "B(O,2)"}) bases.push_back({n, "T"});
  for (const char* n : kCNames) bases.push_back({n, "C"});
  for (const char* n : kDNames) bases.push_back({n, "D"});
  for (const char* n : {"E(36)", "E(72)", "E(216)", "E(168)"}) bases.push_back({n, "E"});

  const std::set<std::string> split_t1 = {
      "A(1,4)_2", "A(1,8)_1", "A(1,8)_2", "A(1,12)", "A(2,2)", "A(2,4)", "A(2,6)", "A(3,1)", "A(3,2)",
      "A(3,3)",   "A(3,4)",   "A(3,6)",   "A(4,4)",  "A(6,2)", "A(6,6)", "C(2,2)", "C(3,3)", "C(4,4)",
      "C(6,2)",   "C(6,6)"};
  const std::set<std::string> split_quarter = {"B(2,4)",  "B(1,4;2)_2", "B(1,12;2)", "B(1,4)_2",
                                               "B(1,12)", "B(2,4;4)",   "B(T,1)",    "B(T,2)",
                                               "B(T,3)",  "B(T,1;1)"};
  const std::set<std::string> split_half = {"B(3,2)", "B(3,4)", "B(3,6)", "B(3,2;2)", "B(3,6;2)", "B(3,4;4)"};
  const std::set<std::string> nonsplit_a = {"A(1,2)", "A(1,4)_1", "A(1,6)_1", "A(3,2)", "A(3,4)", "A(3,6)"};
  const std::set<std::string> nonsplit_b = {"A(1,4)_2", "A(1,12)", "A(2,4)"};

  std::vector<NTypeSpec> out;
  for (const auto& b : bases) {
    auto gens = h_gens_impl(b.name);
    auto add = [&](Extension ext, std::string label, Mat g) {
      out.push_back({std::move(label), b.name, b.family, ext, gens, std::move(g)});
    };
    add(Extension::None, b.name, Mat::identity(3));
    if (b.name != "B(T,1;1)") add(Extension::Standard, "J(" + b.name + ")", Mat::identity(3));
    if (split_t1.count(b.name)) add(Extension::Split, "J_s(" + b.name + ")", t1());
    if (split_quarter.count(b.name)) add(Extension::Split, "J_s(" + b.name + ")", D3("1/4", "1/4", "1/2"));
    if (split_half.count(b.name)) add(Extension::Split, "J_s(" + b.name + ")", D3("1/2", "0", "1/2"));
    if (nonsplit_a.count(b.name))
      add(Extension::Nonsplit, "J_n(" + b.name + ")", Mat::from_rows({{1, 0, 0}, {0, 0, 1}, {0, -1, 0}}));
    if (nonsplit_b.count(b.name)) {
      CycloNum i = e(1, 4);
      add(Extension::Nonsplit, "J_n(" + b.name + ")", Mat::from_rows({{i, 0, 0}, {0, 0, i}, {0, 1, 0}}));
    }
    if (b.name == "E(36)") add(Extension::Nonsplit, "J_n(E(36))", e_g3() * e_g2() * e_g3().adjoint());
  }
  return out;
}

// ------------------------------------------------------------ 6x6 building blocks

Mat pair_j(int p) {  // J-block on pair (p, p+3)
  Mat m = Mat::identity(6);
  m(p, p) = CycloNum(0);
  m(p + 3, p + 3) = CycloNum(0);
  m(p, p + 3) = CycloNum(1);
  m(p + 3, p) = CycloNum(-1);
  return m;
}

// permutation of the three pairs: pair i goes to pair sigma[i]
Mat pair_perm(const std::array<int, 3>& sigma) {
  Mat m(6);
  for (int i = 0; i < 3; ++i) {
    m(sigma[i], i) = CycloNum(1);
    m(sigma[i] + 3, i + 3) = CycloNum(1);
  }
  return m;
}

// 4x4 local matrix on (x1, x2, y1, y2) placed on slots {1, 2, 4, 5}
Mat place4(const Mat& b) {
  static const int s[4] = {1, 2, 4, 5};
  Mat m = Mat::identity(6);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(s[i], s[j]) = b(i, j);
  return m;
}

// diag(A, conj A) for a 2x2 A
Mat diag_a_abar(const Mat& a) {
  Mat c = a.conj();
  return Mat::from_rows({{a(0, 0), a(0, 1), 0, 0}, {a(1, 0), a(1, 1), 0, 0}, {0, 0, c(0, 0), c(0, 1)}, {0, 0, c(1, 0), c(1, 1)}});
}

Mat diag_rr(const Mat& r) {
  return Mat::from_rows({{r(0, 0), r(0, 1), 0, 0}, {r(1, 0), r(1, 1), 0, 0}, {0, 0, r(0, 0), r(0, 1)}, {0, 0, r(1, 0), r(1, 1)}});
}

Mat j0_local() {
  // [[0, X], [-X, 0]], X = [[0,-1],[1,0]]
  return Mat::from_rows({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}});
}

// rotation by 2 pi k / n as a real 2x2 matrix
Mat rot2(long k, long n) {
  CycloNum c = (e(k, n) + e(-k, n)) * rat(1, 2);
  CycloNum s = (e(k, n) - e(-k, n)) * e(-1, 4) * rat(1, 2);
  return Mat::from_rows({{c, -s}, {s, c}});
}

ConnectedType ct(FactorId id, int d = 1) { return ConnectedType::make(id, d); }

std::vector<std::string> split_trim(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    auto b = cur.find_first_not_of(" \t");
    auto en = cur.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, en - b + 1));
  }
  return out;
}

std::string gens_text(const std::vector<Mat>& gens) {
  std::string s;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += " ; ";
    s += gens[i].str();
  }
  return s;
}

// generator rows are `;`-separated like matrix rows; regroup 6 (or n) at a time
std::vector<Mat> parse_gens(const std::string& field, int n = 6) {
  std::vector<Mat> out;
  if (field.empty()) return out;
  auto rows = split_trim(field, ';');
  if (rows.size() % n) throw std::invalid_argument("generator list is not a multiple of " + std::to_string(n) + " rows");
  for (std::size_t i = 0; i < rows.size(); i += n) {
    std::string m;
    for (int r = 0; r < n; ++r) {
      if (r) m += ";";
      m += rows[i + r];
    }
    out.push_back(Mat::parse(m));
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------ STGroup

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Builtin: return "builtin";
    case Provenance::Composed: return "composed";
    case Provenance::Loaded: return "loaded";
  }
  return "?";
}

bool STGroup::answers_to(const std::string& name) const {
  return name == label || std::find(aliases.begin(), aliases.end(), name) != aliases.end();
}

std::string STGroup::record() const {
  std::ostringstream os;
  os << label;
  for (const auto& a : aliases) os << " = " << a;
  os << " | " << abs_type << " | " << component_count() << " | " << (realizable ? 1 : 0) << " | "
     << gens_text(gens);
  return os.str();
}

ConnectedGroup identity_component(char t) {
  const std::vector<int> p0 = {0, 3}, p1 = {1, 4}, p2 = {2, 5}, g2 = {1, 2, 4, 5};
  switch (t) {
    case 'A': return ConnectedGroup::single(FactorId::USp6);
    case 'B': return ConnectedGroup::single(FactorId::U3);
    case 'C': return ConnectedGroup::make({{ct(FactorId::SU2), p0}, {ct(FactorId::USp4), g2}});
    case 'D': return ConnectedGroup::make({{ct(FactorId::U1), p0}, {ct(FactorId::USp4), g2}});
    case 'E':
      return ConnectedGroup::make({{ct(FactorId::SU2), p0}, {ct(FactorId::SU2), p1}, {ct(FactorId::SU2), p2}});
    case 'F':
      return ConnectedGroup::make({{ct(FactorId::U1), p0}, {ct(FactorId::SU2), p1}, {ct(FactorId::SU2), p2}});
    case 'G':
      return ConnectedGroup::make({{ct(FactorId::SU2), p0}, {ct(FactorId::U1), p1}, {ct(FactorId::U1), p2}});
    case 'H':
      return ConnectedGroup::make({{ct(FactorId::U1), p0}, {ct(FactorId::U1), p1}, {ct(FactorId::U1), p2}});
    case 'I': return ConnectedGroup::make({{ct(FactorId::SU2), p0}, {ct(FactorId::SU2, 2), g2}});
    case 'J': return ConnectedGroup::make({{ct(FactorId::U1), p0}, {ct(FactorId::SU2, 2), g2}});
    case 'K': return ConnectedGroup::make({{ct(FactorId::SU2), p0}, {ct(FactorId::U1, 2), g2}});
    case 'L': return ConnectedGroup::make({{ct(FactorId::U1), p0}, {ct(FactorId::U1, 2), g2}});
    case 'M': return ConnectedGroup::single(FactorId::SU2);
    case 'N': return ConnectedGroup::single(FactorId::U1);
  }
  throw std::invalid_argument(std::string("unknown absolute type ") + t);
}

namespace {

ConnectedGroup genus2_identity(const std::string& kind) {
  const std::vector<int> g2 = {1, 2, 4, 5};
  if (kind == "U1_2") return ConnectedGroup::make({{ct(FactorId::U1, 2), g2}});
  if (kind == "SU2_2") return ConnectedGroup::make({{ct(FactorId::SU2, 2), g2}});
  throw std::invalid_argument("unknown genus-2 identity component " + kind);
}

STGroup close_with(std::string label, char abs_type, ConnectedGroup g0, std::vector<Mat> gens,
                   bool realizable, Provenance prov, long expected) {
  STGroup g;
  g.label = std::move(label);
  g.abs_type = abs_type;
  g.connected = std::move(g0);
  g.gens = std::move(gens);
  g.realizable = realizable;
  g.provenance = prov;
  for (const auto& m : g.gens) {
    if (m.dim() != 6) throw std::invalid_argument(g.label + ": generators must be 6x6");
    if (!m.is_unitary() || !m.is_symplectic())
      throw std::invalid_argument(g.label + ": generator is not unitary symplectic: " + m.str());
  }
  std::vector<Mat> cl = g.gens;
  if (cl.empty()) cl.push_back(Mat::identity(6));
  g.components = quotient_by_torus(FiniteGroup::close(cl, 20000), g.connected);
  if (expected >= 0 && static_cast<long>(g.component_count()) != expected)
    throw std::runtime_error(g.label + ": expected " + std::to_string(expected) + " components, got " +
                             std::to_string(g.component_count()));
  return g;
}

STGroup block_group(const Genus2Block& b) {
  return close_with(b.label, '2', genus2_identity(b.kind), b.gens, b.realizable, Provenance::Loaded, b.order);
}

}  // namespace

STGroup make_group(std::string label, char abs_type, std::vector<Mat> gens, bool realizable, Provenance prov,
                   long expected_components) {
  return close_with(std::move(label), abs_type, identity_component(abs_type), std::move(gens), realizable, prov,
                    expected_components);
}

namespace {

const char* lmfdb_connected(char t) {
  switch (t) {
    case 'A': return "1.6.A.1.1a";
    case 'B': return "1.6.B.1.1a";
    case 'C': return "1.6.C.1.1a";
    case 'D': return "1.6.D.1.1a";
    case 'E': return "1.6.E.1.1a";
    case 'F': return "1.6.F.1.1a";
    case 'G': return "1.6.G.1.1a";
    case 'H': return "1.6.H.1.1a";
    case 'I': return "1.6.I.1.1a";
    case 'J': return "1.6.J.1.1a";
    case 'K': return "1.6.K.1.1a";
    case 'L': return "1.6.L.1.1a";
    case 'M': return "1.6.M.1.1a";
    case 'N': return "1.6.N.1.1a";
  }
  return "";
}

}  // namespace

STGroup connected_group(char t) {
  STGroup g = make_group(lmfdb_connected(t), t, {}, true, Provenance::Builtin, 1);
  g.aliases.push_back(g.connected.name());
  return g;
}

// ------------------------------------------------------------ type N

const std::vector<NTypeSpec>& n_type_specs() {
  static const std::vector<NTypeSpec> v = make_n_specs();
  return v;
}

std::vector<Mat> n_type_h_gens(const std::string& base) { return h_gens_impl(base); }

STGroup n_type_group(const NTypeSpec& s) {
  for (const auto& h : s.h_gens)
    if (!h.is_unitary() || !h.det().is_one()) throw std::logic_error(s.base + ": generator not in SU(3)");
  std::vector<Mat> gens;
  for (const auto& h : s.h_gens) gens.push_back(Mat::embed(h));
  if (s.ext != Extension::None) {
    // guard the transcribed extension element
    FiniteGroup h3 = FiniteGroup::close(s.h_gens, 5000);
    ExtensionKind k = extension_kind(h3.elements(), s.g);
    ExtensionKind want = s.ext == Extension::Standard ? ExtensionKind::Standard
                         : s.ext == Extension::Split  ? ExtensionKind::Split
                                                      : ExtensionKind::Nonsplit;
    if (k != want)
      throw std::logic_error(s.label + ": extension element is " + extension_kind_name(k) + ", expected " +
                             extension_kind_name(want));
    gens.push_back(Mat::embed(s.g, true));
  }
  return make_group(s.label, 'N', std::move(gens), true, Provenance::Builtin);
}

STGroup n_type_group(const std::string& label) {
  for (const auto& s : n_type_specs())
    if (s.label == label) return n_type_group(s);
  throw std::invalid_argument("unknown N-type label " + label);
}

// ------------------------------------------------------------ genus 2 blocks

std::string Genus2Block::record() const {
  return label + " | " + kind + " | " + std::to_string(order) + " | " + (realizable ? "1" : "0") + " | " +
         gens_text(gens);
}

std::vector<Genus2Block> builtin_genus2_blocks() {
  std::vector<Genus2Block> out;
  CycloNum i = e(1, 4);
  const Mat j0 = place4(j0_local());
  auto lift = [](const Mat& a2) { return place4(diag_a_abar(a2)); };
  auto cn = [&](int n) { return lift(Mat::diag({e(1, 2 * n), e(-1, 2 * n)})); };
  const Mat qj = lift(quat2(kJ));
  const Mat qi = lift(quat2({0, 1, 0, 0}));
  const Mat qw = lift(quat2(quat_w()));
  const Mat qo = lift(quat2(quat_o()));

  struct Def {
    std::string name;
    std::vector<Mat> gens;
    long order;
  };
  std::vector<Def> base;
  for (int n : {1, 2, 3, 4, 6}) base.push_back({"C_" + std::to_string(n), {cn(n)}, n});
  for (int n : {2, 3, 4, 6}) base.push_back({"D_" + std::to_string(n), {cn(n), qj}, 2 * n});
  base.push_back({"T", {qi, qj, qw}, 12});
  base.push_back({"O", {qi, qj, qw, qo}, 24});
  for (const auto& d : base) out.push_back({d.name, "U1_2", d.order, true, d.gens});
  for (const auto& d : base) {
    auto g = d.gens;
    g.push_back(j0);
    out.push_back({"J(" + d.name + ")", "U1_2", 2 * d.order, true, g});
  }
  // twisted: elements outside the named index-2 subgroup are multiplied by J0
  for (int n : {2, 4, 6}) out.push_back({"C_{" + std::to_string(n) + ",1}", "U1_2", n, true, {j0 * cn(n)}});
  for (int n : {2, 4, 6})
    out.push_back({"D_{" + std::to_string(n) + ",1}", "U1_2", 2 * n, true, {j0 * cn(n), qj}});
  for (int n : {3, 4, 6})
    out.push_back({"D_{" + std::to_string(n) + ",2}", "U1_2", 2 * n, true, {cn(n), j0 * qj}});
  out.push_back({"O_1", "U1_2", 24, true, {qi, qj, qw, j0 * qo}});

  // SU(2)_2: centralizer diag(R, R), R in O(2)
  const Mat refl = place4(diag_rr(Mat::diag({1, -1})));
  for (int n : {1, 2, 3, 4, 6}) {
    Mat r = place4(diag_rr(rot2(1, 2 * n)));
    out.push_back({"E_" + std::to_string(n), "SU2_2", n, true, {r}});
  }
  for (int n : {1, 2, 3, 4, 6}) {
    Mat r = place4(diag_rr(rot2(1, 2 * n)));
    out.push_back({"J(E_" + std::to_string(n) + ")", "SU2_2", 2 * n, true, {r, refl}});
  }
  (void)i;
  return out;
}

std::vector<Genus2Block> parse_blocks(const std::string& text) {
  std::vector<Genus2Block> out;
  std::istringstream is(text);
  std::string line;
  int ln = 0;
  while (std::getline(is, line)) {
    ++ln;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto f = split_trim(line, '|');
    if (f.size() != 5) throw std::invalid_argument("blocks line " + std::to_string(ln) + ": expected 5 fields");
    Genus2Block blk;
    blk.label = f[0];
    blk.kind = f[1];
    blk.order = std::stol(f[2]);
    blk.realizable = f[3] == "1";
    try {
      blk.gens = parse_gens(f[4]);
    } catch (const std::exception& ex) {
      throw std::invalid_argument("blocks line " + std::to_string(ln) + ": " + ex.what());
    }
    out.push_back(std::move(blk));
  }
  return out;
}

std::vector<Genus2Block> load_blocks(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open blocks file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_blocks(ss.str());
}

std::string blocks_text(const std::vector<Genus2Block>& blocks) {
  std::string s =
      "# genus-2 building blocks acting on slots {1,2,4,5}\n"
      "# label | identity component | component order | realizable | generators\n";
  for (const auto& b : blocks) s += b.record() + "\n";
  return s;
}

std::string genus2_key(const STGroup& g2) {
  // a_1..a_4 of the block on the torus x -> diag(x, x, 1/x, 1/x)
  const std::vector<int> slots = {1, 2, 4, 5};
  const std::vector<Exp3> w = {{1, 0, 0}, {1, 0, 0}, {-1, 0, 0}, {-1, 0, 0}};
  bool su2 = g2.connected.factors.at(0).type.id == FactorId::SU2;
  LPoly weyl = LPoly::constant(1, 1);
  if (su2) weyl -= LPoly::monomial(1, {-2, 0, 0});
  std::vector<std::array<int, 4>> monos;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; 2 * b + a <= 4; ++b)
      for (int c = 0; 3 * c + 2 * b + a <= 4; ++c)
        for (int d = 0; 4 * d + 3 * c + 2 * b + a <= 4; ++d)
          if (a + b + c + d > 0) monos.push_back({a, b, c, d});
  std::vector<std::string> comps;
  for (std::size_t k = 0; k < g2.component_count(); ++k) {
    auto ak = torus_charpoly(g2.components.rep(k), slots, w, 1);
    std::string s;
    for (const auto& m : monos) {
      LPoly f = LPoly::constant(1, 1);
      for (int v = 0; v < 4; ++v) f *= ak[v].pow(m[v]);
      s += (f * weyl).coeff({0, 0, 0}).str() + ",";
    }
    comps.push_back(s);
  }
  std::sort(comps.begin(), comps.end());
  std::string key = g2.components.quotient.fingerprint().str();
  for (const auto& c : comps) key += "|" + c;
  return key;
}

// ------------------------------------------------------------ products

std::string genus1_name(Genus1 g) {
  switch (g) {
    case Genus1::U1: return "U(1)";
    case Genus1::NU1: return "N(U(1))";
    case Genus1::SU2: return "SU(2)";
  }
  return "?";
}

STGroup compose_product(Genus1 g1, const Genus2Block& g2) {
  char t;
  if (g2.kind == "U1_2") t = g1 == Genus1::SU2 ? 'K' : 'L';
  else if (g2.kind == "SU2_2") t = g1 == Genus1::SU2 ? 'I' : 'J';
  else throw std::invalid_argument("unknown genus-2 identity component " + g2.kind);
  std::vector<Mat> gens = g2.gens;
  if (g1 == Genus1::NU1) gens.push_back(pair_j(0));
  long order = g2.order * (g1 == Genus1::NU1 ? 2 : 1);
  return make_group(genus1_name(g1) + "x" + g2.label, t, std::move(gens), g2.realizable, Provenance::Composed,
                    order);
}

std::vector<std::vector<int>> index2_subgroups(const TableGroup& t) {
  std::vector<int> sq;
  for (int x = 0; x < t.n; ++x) sq.push_back(t.mul(x, x));
  std::vector<int> s = t.subgroup_generated(sq);
  // basis of the elementary abelian quotient
  std::vector<int> basis;
  std::vector<char> in(t.n, 0);
  std::vector<int> cur = s;
  for (int x : cur) in[x] = 1;
  for (int x = 0; x < t.n; ++x) {
    if (in[x]) continue;
    basis.push_back(x);
    std::vector<int> g = s;
    g.insert(g.end(), basis.begin(), basis.end());
    cur = t.subgroup_generated(g);
    std::fill(in.begin(), in.end(), 0);
    for (int y : cur) in[y] = 1;
  }
  const int r = static_cast<int>(basis.size());
  std::vector<int> coord(t.n, -1);
  for (int c = 0; c < (1 << r); ++c) {
    int el = 0;
    for (int j = 0; j < r; ++j)
      if (c >> j & 1) el = t.mul(el, basis[j]);
    for (int y : s) coord[t.mul(el, y)] = c;
  }
  std::vector<std::vector<int>> out;
  for (int f = 1; f < (1 << r); ++f) {
    std::vector<int> k;
    for (int x = 0; x < t.n; ++x)
      if (std::popcount(static_cast<unsigned>(coord[x] & f)) % 2 == 0) k.push_back(x);
    out.push_back(std::move(k));
  }
  return out;
}

STGroup fiber_product(const Genus2Block& g2, const std::vector<int>& kernel, const std::string& kernel_label) {
  STGroup b = block_group(g2);
  std::set<int> ker(kernel.begin(), kernel.end());
  if (static_cast<std::size_t>(ker.size()) * 2 != b.component_count())
    throw std::invalid_argument("fiber product needs an index-2 subgroup");
  std::vector<Mat> gens;
  const Mat a = pair_j(0);
  for (int gi : b.components.h.generators()) {
    const Mat& g = b.components.h.element(gi);
    gens.push_back(ker.count(b.components.coset_of[gi]) ? g : a * g);
  }
  char t = g2.kind == "U1_2" ? 'L' : 'J';
  return make_group(std::string(1, t) + "(" + g2.label + "," + kernel_label + ")", t, std::move(gens),
                    g2.realizable, Provenance::Composed, g2.order);
}

// ------------------------------------------------------------ catalog

std::string default_blocks_path() { return std::string(ST3_DATA_DIR) + "/genus2_blocks.txt"; }

namespace {

using Job = std::function<STGroup()>;

void add_small_types(std::vector<Job>& jobs) {
  // connected groups of types I..N arise below as trivial products and blocks
  for (char t : std::string("ABCDEFGH")) jobs.push_back([t] { return connected_group(t); });
  jobs.push_back([] {
    STGroup g = make_group("1.6.B.2.1a", 'B', {Mat::symplectic_j()}, true, Provenance::Builtin, 2);
    g.aliases.push_back("N(U(3))");
    return g;
  });
  jobs.push_back([] {
    STGroup g = make_group("1.6.D.2.1a", 'D', {pair_j(0)}, true, Provenance::Builtin, 2);
    g.aliases.push_back("N(U(1))xUSp(4)");
    return g;
  });
  // E: permutations of three SU(2) factors
  const Mat t = pair_perm({1, 0, 2}), s = pair_perm({1, 2, 0});
  struct PG {
    const char* id;
    const char* name;
    std::vector<Mat> gens;
    long order;
  };
  for (const auto& p : std::vector<PG>{{"1.6.E.2.1a", "E_t", {t}, 2},
                                       {"1.6.E.3.1a", "E_s", {s}, 3},
                                       {"1.6.E.6.1a", "E_{s,t}", {s, t}, 6}})
    jobs.push_back([p] {
      STGroup g = make_group(p.id, 'E', p.gens, true, Provenance::Builtin, p.order);
      g.aliases.push_back(p.name);
      return g;
    });
  // F: U(1) x SU(2) x SU(2), a on the U(1), t swapping the SU(2)s
  const Mat a = pair_j(0), tf = pair_perm({0, 2, 1});
  for (const auto& p : std::vector<PG>{{"1.6.F.2.1c", "F_a", {a}, 2},
                                       {"1.6.F.2.1b", "F_t", {tf}, 2},
                                       {"1.6.F.2.1a", "F_{at}", {a * tf}, 2},
                                       {"1.6.F.4.2a", "F_{a,t}", {a, tf}, 4}})
    jobs.push_back([p] {
      STGroup g = make_group(p.id, 'F', p.gens, true, Provenance::Builtin, p.order);
      g.aliases.push_back(p.name);
      return g;
    });
}

Mat word_matrix(const std::string& w, const std::map<char, Mat>& letters) {
  Mat m = Mat::identity(6);
  for (char c : w) m = m * letters.at(c);
  return m;
}

std::vector<Mat> words(const std::string& spec, const std::map<char, Mat>& letters) {
  std::vector<Mat> out;
  if (spec.empty()) return out;
  for (const auto& w : split_trim(spec, ',')) out.push_back(word_matrix(w, letters));
  return out;
}

std::string sub_label(const std::string& base, const std::string& spec) {
  if (spec.empty()) return base;
  if (spec.find(',') == std::string::npos && spec.size() == 1) return base + "_" + spec;
  return base + "_{" + spec + "}";
}

void add_g_h_types(std::vector<Job>& jobs) {
  // G: SU(2) x (genus-2 group with identity component U(1) x U(1))
  std::map<char, Mat> gl = {{'a', pair_j(1)}, {'b', pair_j(2)}, {'c', pair_perm({0, 2, 1})}};
  struct Row {
    const char* spec;
    bool real;
    long order;
  };
  for (const auto& r : std::vector<Row>{{"a", true, 2},
                                        {"c", false, 2},
                                        {"ab", true, 2},
                                        {"ac", true, 4},
                                        {"ab,c", false, 4},
                                        {"a,b", true, 4},
                                        {"a,b,c", false, 8}})
    jobs.push_back([r, gl] {
      return make_group("SU(2)x" + sub_label("F", r.spec), 'G', words(r.spec, gl), r.real, Provenance::Builtin,
                        r.order);
    });
  // H: U(1)^3 with C2 wr S3 symmetries
  std::map<char, Mat> hl = {{'a', pair_j(0)},
                            {'b', pair_j(1)},
                            {'c', pair_j(2)},
                            {'t', pair_perm({1, 0, 2})},
                            {'s', pair_perm({1, 2, 0})}};
  for (const auto& r : std::vector<Row>{{"a", true, 2},
                                        {"ab", true, 2},
                                        {"abc", true, 2},
                                        {"s", true, 3},
                                        {"at", true, 4},
                                        {"act", true, 4},
                                        {"a,b", true, 4},
                                        {"a,bc", true, 4},
                                        {"ab,bc", true, 4},
                                        {"abc,s", true, 6},
                                        {"c,at", true, 8},
                                        {"a,b,c", true, 8},
                                        {"t", false, 2},
                                        {"ct", false, 2},
                                        {"c,t", false, 4},
                                        {"ab,t", false, 4},
                                        {"ab,ct", false, 4},
                                        {"abc,t", false, 4},
                                        {"s,t", false, 6},
                                        {"abct,s", false, 6},
                                        {"ab,c,t", false, 8},
                                        {"a,b,t", false, 8},
                                        {"ab,bc,t", false, 8},
                                        {"a,b,ct", false, 8},
                                        {"ab,bc,ct", false, 8},
                                        {"abc,s,t", false, 12},
                                        {"ab,bc,s", false, 12},
                                        {"a,b,c,t", false, 16},
                                        {"a,b,c,s", false, 24},
                                        {"ab,bc,s,t", false, 24},
                                        {"ab,bc,at,s", false, 24},
                                        {"a,b,c,s,t", false, 48}})
    jobs.push_back([r, hl] {
      return make_group(sub_label("H", r.spec), 'H', words(r.spec, hl), r.real, Provenance::Builtin, r.order);
    });
}

void add_m_type(std::vector<Job>& jobs) {
  auto rr = [](const Mat& r3) {
    Mat m(6);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        m(i, j) = r3(i, j);
        m(i + 3, j + 3) = r3(i, j);
      }
    return m;
  };
  auto rz = [&](int n) {
    Mat r2 = rot2(1, n);
    return rr(Mat::from_rows({{r2(0, 0), r2(0, 1), 0}, {r2(1, 0), r2(1, 1), 0}, {0, 0, 1}}));
  };
  const Mat flip = rr(Mat::diag({1, -1, -1}));
  const Mat flip2 = rr(Mat::diag({-1, -1, 1}));
  const Mat cyc = rr(Mat::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  const Mat quarter = rr(Mat::from_rows({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}));
  for (int n : m_type_cyclic_orders()) {
    jobs.push_back([=] { return make_group("M(C_" + std::to_string(n) + ")", 'M', {rz(n)}, true, Provenance::Builtin, n); });
    if (n > 1)
      jobs.push_back([=] {
        return make_group("M(D_" + std::to_string(n) + ")", 'M', {rz(n), flip}, true, Provenance::Builtin, 2 * n);
      });
  }
  jobs.push_back([=] { return make_group("M(A_4)", 'M', {flip, flip2, cyc}, true, Provenance::Builtin, 12); });
  jobs.push_back([=] { return make_group("M(S_4)", 'M', {flip, flip2, cyc, quarter}, true, Provenance::Builtin, 24); });
}

}  // namespace

std::vector<int> m_type_cyclic_orders(int max_n) {
  std::vector<int> out;
  for (int n = 1; n <= max_n; ++n) {
    CycloNum t = CycloNum(1) + e(1, n) + e(-1, n);
    auto q = (t * t).try_rational();
    if (q && q->get_den() == 1) out.push_back(n);
  }
  return out;
}

std::vector<STGroup> build_catalog(const BuildOptions& opt) {
  auto log = [&](const std::string& s) {
    if (opt.log) opt.log(s);
  };
  std::vector<Job> jobs;
  add_small_types(jobs);
  add_g_h_types(jobs);
  add_m_type(jobs);
  for (const auto& s : n_type_specs()) jobs.push_back([&s] { return n_type_group(s); });

  std::vector<Genus2Block> blocks;
  std::string path = opt.blocks_path.value_or(default_blocks_path());
  try {
    blocks = load_blocks(path);
  } catch (const std::exception& ex) {
    log(std::string("genus-2 blocks unavailable (") + ex.what() + "); types I, J, K, L are missing");
  }
  if (!blocks.empty()) {
    std::map<std::string, std::vector<std::string>> missing;  // kind -> labels
    for (const auto& b : builtin_genus2_blocks())
      if (std::none_of(blocks.begin(), blocks.end(), [&](const Genus2Block& x) { return x.label == b.label; }))
        missing[b.kind].push_back(b.label);
    for (const auto& [kind, labels] : missing) {
      std::string l;
      for (const auto& x : labels) l += " " + x;
      log(path + " lacks " + std::to_string(labels.size()) + " " + kind + " blocks (types " +
          (kind == "U1_2" ? "K, L" : "I, J") + " incomplete):" + l);
    }
  }
  for (const auto& b : blocks) {
    const Genus1 g1s[] = {Genus1::U1, Genus1::NU1, Genus1::SU2};
    for (Genus1 g1 : g1s) jobs.push_back([b, g1] { return compose_product(g1, b); });
  }
  log("building " + std::to_string(jobs.size()) + " groups");
  std::vector<STGroup> groups(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) { groups[i] = jobs[i](); });

  // fiber products: index-2 subgroups named after the block they are conjugate to
  if (!blocks.empty()) {
    std::vector<STGroup> bg(blocks.size());
    std::vector<std::string> keys(blocks.size());
    parallel_for(blocks.size(), [&](std::size_t i) {
      bg[i] = block_group(blocks[i]);
      keys[i] = genus2_key(bg[i]);
    });
    for (std::size_t i = 0; i < keys.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (keys[i] == keys[j] && blocks[i].kind == blocks[j].kind)
          throw std::runtime_error("genus-2 blocks " + blocks[i].label + " and " + blocks[j].label +
                                   " share an invariant key");
    struct Fiber {
      std::size_t block;
      std::vector<int> kernel;
      std::string label;
    };
    std::vector<Fiber> fibers;
    std::vector<std::string> unnamed;
    std::mutex mu;
    parallel_for(blocks.size(), [&](std::size_t i) {
      const auto& q = bg[i].components.quotient;
      std::map<std::string, std::vector<int>> named;
      for (const auto& k : index2_subgroups(q)) {
        std::vector<Mat> gens;
        for (int c : k) gens.push_back(bg[i].components.rep(c));
        STGroup sub = close_with("sub", '2', bg[i].connected, gens, true, Provenance::Composed, -1);
        std::string key = genus2_key(sub);
        std::string label;
        for (std::size_t j = 0; j < blocks.size(); ++j)
          if (blocks[j].kind == blocks[i].kind && keys[j] == key) label = blocks[j].label;
        if (label.empty()) {
          // the matching block is absent from the loaded set
          std::lock_guard<std::mutex> lk(mu);
          unnamed.push_back(blocks[i].label);
          continue;
        }
        named.emplace(label, k);
      }
      std::lock_guard<std::mutex> lk(mu);
      for (auto& [l, k] : named) fibers.push_back({i, k, l});
    });
    if (!unnamed.empty()) {
      std::sort(unnamed.begin(), unnamed.end());
      std::string l;
      for (const auto& x : unnamed) l += " " + x;
      log("skipped " + std::to_string(unnamed.size()) + " fiber products over unlisted subgroups of:" + l);
    }
    std::sort(fibers.begin(), fibers.end(), [](const Fiber& x, const Fiber& y) {
      return std::tie(x.block, x.label) < std::tie(y.block, y.label);
    });
    std::vector<STGroup> fg(fibers.size());
    parallel_for(fibers.size(), [&](std::size_t i) {
      fg[i] = fiber_product(blocks[fibers[i].block], fibers[i].kernel, fibers[i].label);
    });
    for (auto& g : fg) groups.push_back(std::move(g));
  }

  const std::pair<const char*, char> trivial[] = {{"SU(2)xE_1", 'I'}, {"U(1)xE_1", 'J'}, {"SU(2)xC_1", 'K'},
                                                  {"U(1)xC_1", 'L'},  {"M(C_1)", 'M'},   {"A(1,1)", 'N'}};
  for (auto [name, t] : trivial)
    for (auto& g : groups)
      if (g.label == name) {
        g.aliases.push_back(lmfdb_connected(t));
        g.aliases.push_back(g.connected.name());
      }

  const std::string order = "ABCDEFGHIJKLMN";
  std::stable_sort(groups.begin(), groups.end(), [&](const STGroup& x, const STGroup& y) {
    return order.find(x.abs_type) < order.find(y.abs_type);
  });
  if (!opt.extended) std::erase_if(groups, [](const STGroup& g) { return !g.realizable; });
  log("built " + std::to_string(groups.size()) + " groups");
  return groups;
}

const std::vector<STGroup>& extended_catalog() {
  static const std::vector<STGroup> cat = build_catalog();
  return cat;
}

const STGroup* find_group(const std::vector<STGroup>& cat, const std::string& name) {
  for (const auto& g : cat)
    if (g.answers_to(name)) return &g;
  return nullptr;
}

std::string catalog_text(const std::vector<STGroup>& cat) {
  std::string s = "# label[ = alias ...] | abs_type | component_order | realizable | generators\n";
  for (const auto& g : cat) s += g.record() + "\n";
  return s;
}

std::vector<STGroup> parse_catalog(const std::string& text) {
  std::vector<STGroup> out;
  std::istringstream is(text);
  std::string line;
  int ln = 0;
  while (std::getline(is, line)) {
    ++ln;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto f = split_trim(line, '|');
    auto where = [&] { return "catalog line " + std::to_string(ln) + ": "; };
    if (f.size() != 5 || f[1].size() != 1) throw std::invalid_argument(where() + "malformed record");
    auto names = split_trim(f[0], '=');
    try {
      STGroup g = make_group(names[0], f[1][0], parse_gens(f[4]), f[3] == "1", Provenance::Loaded, std::stol(f[2]));
      g.aliases.assign(names.begin() + 1, names.end());
      out.push_back(std::move(g));
    } catch (const std::exception& ex) {
      throw std::invalid_argument(where() + ex.what());
    }
  }
  return out;
}

// ------------------------------------------------------------ counts

bool CountReport::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.ok; });
}

std::string CountReport::str() const {
  std::string s;
  for (const auto& l : lines)
    s += (l.ok ? "ok   " : "FAIL ") + l.name + ": expected " + l.expected + ", got " + l.got + "\n";
  return s;
}

std::vector<std::vector<int>> subgroup_class_reps(const TableGroup& t) {
  using Bits = std::vector<bool>;
  auto to_bits = [&](const std::vector<int>& v) {
    Bits b(t.n, false);
    for (int x : v) b[x] = true;
    return b;
  };
  auto conj_bits = [&](const Bits& b, int g) {
    Bits c(t.n, false);
    for (int x = 0; x < t.n; ++x)
      if (b[x]) c[t.mul(t.mul(g, x), t.inv[g])] = true;
    return c;
  };
  std::vector<std::vector<int>> reps;
  std::set<Bits> seen;  // every conjugate of every rep
  auto add = [&](const std::vector<int>& elems) {
    Bits b = to_bits(elems);
    if (seen.count(b)) return false;
    for (int g = 0; g < t.n; ++g) seen.insert(conj_bits(b, g));
    auto s = elems;
    std::sort(s.begin(), s.end());
    reps.push_back(s);
    return true;
  };
  add({0});
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (int x = 0; x < t.n; ++x) {
      if (std::binary_search(reps[i].begin(), reps[i].end(), x)) continue;
      auto g = reps[i];
      g.push_back(x);
      add(t.subgroup_generated(g));
    }
  return reps;
}

namespace {

std::string count_str(std::size_t n) { return std::to_string(n); }

}  // namespace

CountReport verify_counts(const std::vector<STGroup>& cat) {
  CountReport r;
  auto check = [&](const std::string& name, const std::string& want, const std::string& got) {
    r.lines.push_back({name, want, got, want == got});
  };
  auto count_if = [&](auto pred) {
    return static_cast<std::size_t>(std::count_if(cat.begin(), cat.end(), pred));
  };

  // type N classification tables
  const auto& specs = n_type_specs();
  std::map<std::string, std::size_t> fam;
  std::array<std::size_t, 4> cols{};
  for (const auto& s : specs) {
    if (s.ext == Extension::None) fam[s.family]++;
    cols[static_cast<int>(s.ext)]++;
  }
  check("abelian subgroups (type A)", "22", count_str(fam["A"]));
  check("dihedral-type subgroups (type B)", "18", count_str(fam["B"]));
  check("binary tetrahedral/octahedral subgroups", "6", count_str(fam["T"]));
  check("C-type subgroups", "7", count_str(fam["C"]));
  check("D-type subgroups", "6", count_str(fam["D"]));
  check("exceptional subgroups", "4", count_str(fam["E"]));
  check("extension columns H/J/J_s/J_n", "63/62/36/10",
        count_str(cols[0]) + "/" + count_str(cols[1]) + "/" + count_str(cols[2]) + "/" + count_str(cols[3]));
  check("type N total", "171", count_str(specs.size()));

  // exclusion witnesses: each fails restricted rationality
  const char* witnesses[][3] = {{"2/3", "1/24", "7/24"}, {"7/12", "5/24", "5/24"}, {"11/18", "7/36", "7/36"},
                                {"0", "1/12", "11/12"},  {"3/4", "5/24", "1/24"},  {"4/9", "7/36", "13/36"},
                                {"1/3", "5/12", "1/4"}};
  std::size_t failing = 0;
  for (const auto& w : witnesses) {
    FiniteGroup g = FiniteGroup::close({D3(w[0], w[1], w[2])}, 1000);
    if (!restricted_rationality(g.elements())) ++failing;
  }
  check("exclusion witnesses failing restricted rationality", "7", count_str(failing));

  std::size_t n_rat = 0, n_groups = 0;
  for (const auto& g : cat)
    if (g.abs_type == 'N') {
      ++n_groups;
      std::vector<Mat> reps;
      for (std::size_t k = 0; k < g.component_count(); ++k) reps.push_back(g.components.rep(k));
      if (restricted_rationality(reps)) ++n_rat;
    }
  check("type N groups satisfying restricted rationality", count_str(n_groups), count_str(n_rat));

  // subgroups of the wreath product, and M-type
  auto h_total = count_if([](const STGroup& g) { return g.abs_type == 'H'; });
  auto h_real = count_if([](const STGroup& g) { return g.abs_type == 'H' && g.realizable; });
  check("type H groups / realizable", "33/13", count_str(h_total) + "/" + count_str(h_real));
  if (const STGroup* h = find_group(cat, "H_{a,b,c,s,t}")) {
    check("conjugacy classes of subgroups of C2 wr S3", "33",
          count_str(subgroup_class_reps(h->components.quotient).size()));
  }
  std::string ms;
  for (int n : m_type_cyclic_orders()) ms += (ms.empty() ? "" : ",") + std::to_string(n);
  check("M-type cyclic orders", "1,2,3,4,6", ms);
  check("type M groups", "11", count_str(count_if([](const STGroup& g) { return g.abs_type == 'M'; })));

  const std::map<char, std::pair<int, int>> table1 = {
      {'A', {1, 1}},   {'B', {2, 2}},   {'C', {1, 1}},     {'D', {2, 2}},   {'E', {4, 4}},
      {'F', {5, 5}},   {'G', {8, 5}},   {'H', {33, 13}},   {'I', {10, 10}}, {'J', {31, 31}},
      {'K', {32, 32}}, {'L', {122, 122}}, {'M', {11, 11}}, {'N', {171, 171}}};
  for (auto [t, c] : table1) {
    auto all = count_if([t](const STGroup& g) { return g.abs_type == t; });
    auto real = count_if([t](const STGroup& g) { return g.abs_type == t && g.realizable; });
    check(std::string("type ") + t + " extended/realizable", std::to_string(c.first) + "/" + std::to_string(c.second),
          count_str(all) + "/" + count_str(real));
  }
  check("total extended/realizable", "433/410",
        count_str(cat.size()) + "/" + count_str(count_if([](const STGroup& g) { return g.realizable; })));
  return r;
}

}  // namespace st3
