#include "st3/harness.hpp"

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <fstream>
#include <random>
#include <sstream>

#include "st3/parallel.hpp"
#include "st3/stats.hpp"

namespace st3 {

// ---------------------------------------------------------------- records

bool LPolyRecord::within_weil_bounds() const {
  using i128 = __int128;
  const i128 P = p;
  if (static_cast<i128>(c1) * c1 > 36 * P) return false;
  if (std::abs(c2) > 15 * P) return false;
  return static_cast<i128>(c3) * c3 <= 400 * P * P * P;
}

std::array<double, 3> LPolyRecord::normalized() const {
  const double s = std::sqrt(static_cast<double>(p));
  return {c1 / s, c2 / static_cast<double>(p), c3 / (s * s * s)};
}

std::optional<LPolyRecord> parse_record(const std::string& line, long line_no) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream is(body);
  std::vector<std::string> tok;
  for (std::string t; is >> t;) tok.push_back(t);
  if (tok.empty()) return std::nullopt;
  auto fail = [&](const std::string& why) -> IngestError {
    return IngestError("line " + std::to_string(line_no) + ": " + why + ": '" + line + "'");
  };
  if (tok.size() != 4) throw fail("expected 'p c1 c2 c3'");
  long v[4];
  for (int i = 0; i < 4; ++i) {
    std::size_t used = 0;
    try {
      v[i] = std::stol(tok[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok[i].size()) throw fail("not an integer '" + tok[i] + "'");
  }
  LPolyRecord r{v[0], v[1], v[2], v[3]};
  if (r.p < 2 || mpz_probab_prime_p(mpz_class(r.p).get_mpz_t(), 25) == 0)
    throw fail("p is not prime");
  if (!r.within_weil_bounds()) throw fail("violates the Weil bounds");
  return r;
}

// ---------------------------------------------------------------- profile

EmpiricalProfile::EmpiricalProfile(int w) : weight(w), monomials(monomials_up_to(w)) {
  sums.assign(monomials.size(), 0.0);
}

void EmpiricalProfile::add_monomials(double a1, double a2, double a3) {
  const int w = weight;
  std::vector<double> p1(w + 1, 1.0), p2(w / 2 + 1, 1.0), p3(w / 3 + 1, 1.0);
  for (std::size_t i = 1; i < p1.size(); ++i) p1[i] = p1[i - 1] * a1;
  for (std::size_t i = 1; i < p2.size(); ++i) p2[i] = p2[i - 1] * a2;
  for (std::size_t i = 1; i < p3.size(); ++i) p3[i] = p3[i - 1] * a3;
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    const Exp3& e = monomials[k];
    sums[k] += p1[e[0]] * p2[e[1]] * p3[e[2]];
  }
  ++count;
}

void EmpiricalProfile::add_flags(bool a1_zero, bool a3_zero, int a2_value) {
  const bool rows[4] = {true, a1_zero, a3_zero, a1_zero && a3_zero};
  const bool a2_const = a2_value >= -1 && a2_value <= 3;
  for (int r = 0; r < 4; ++r) {
    if (!rows[r]) continue;
    ++z[r][0];
    if (a2_const) {
      ++z[r][1];
      ++z[r][2 + a2_value + 1];
    }
  }
}

void EmpiricalProfile::add(const LPolyRecord& r) {
  auto a = r.normalized();
  add_monomials(a[0], a[1], a[2]);
  int t = 99;
  if (r.c2 % r.p == 0) t = static_cast<int>(r.c2 / r.p);
  add_flags(r.c1 == 0, r.c3 == 0, t);
}

void EmpiricalProfile::add_normalized(double a1, double a2, double a3, double zero_tol) {
  add_monomials(a1, a2, a3);
  const double t = std::round(a2);
  add_flags(std::abs(a1) < zero_tol, std::abs(a3) < zero_tol,
            std::abs(a2 - t) < zero_tol ? static_cast<int>(t) : 99);
}

void EmpiricalProfile::merge(const EmpiricalProfile& o) {
  if (o.weight != weight) throw std::invalid_argument("merge: profiles of different weight");
  count += o.count;
  for (std::size_t k = 0; k < sums.size(); ++k) sums[k] += o.sums[k];
  for (int r = 0; r < 4; ++r)
    for (int j = 0; j < 7; ++j) z[r][j] += o.z[r][j];
}

double EmpiricalProfile::moment(const Exp3& e) const {
  if (e[0] + 2 * e[1] + 3 * e[2] > weight)
    throw std::out_of_range("moment beyond the accumulated weight");
  if (count == 0) return 0;
  auto it = std::lower_bound(monomials.begin(), monomials.end(), e);
  return sums[static_cast<std::size_t>(it - monomials.begin())] / static_cast<double>(count);
}

double EmpiricalProfile::apoly_average(const APoly& f) const {
  double s = 0;
  for (const auto& [e, c] : f) s += static_cast<double>(c) * moment(e);
  return s;
}

double EmpiricalProfile::norm(const Partition3& lambda) const {
  APoly chi = char_in_coeffs(lambda);
  return apoly_average(apoly_mul(chi, chi));
}

std::array<std::array<double, 7>, 4> EmpiricalProfile::densities() const {
  std::array<std::array<double, 7>, 4> out{};
  for (int r = 0; r < 4; ++r)
    for (int j = 0; j < 7; ++j)
      out[r][j] = count ? static_cast<double>(z[r][j]) / static_cast<double>(count) : 0.0;
  out[0][0] = 1;
  return out;
}

EmpiricalKey EmpiricalProfile::key(KeyVariant v) const {
  EmpiricalKey k;
  k.variant = v;
  switch (v) {
    case KeyVariant::Conn2Simplex:
      for (const Exp3& e : {Exp3{0, 0, 0}, Exp3{1, 0, 0}, Exp3{2, 0, 0}, Exp3{0, 1, 0}})
        k.values.push_back(count ? moment(e) : 0.0);
      break;
    case KeyVariant::Diag3Select:
      for (const auto& l : kNormSelect) k.values.push_back(norm(l));
      break;
    case KeyVariant::CompZNorm3Select:
      for (const auto& row : densities())
        for (double x : row) k.values.push_back(x);
      for (const auto& l : {Partition3{1, 1, 0}, Partition3{1, 1, 1}, Partition3{2, 0, 0}})
        k.values.push_back(norm(l));
      break;
  }
  return k;
}

EmpiricalProfile ingest(std::istream& in, int weight) {
  EmpiricalProfile prof(weight);
  std::string line;
  for (long no = 1; std::getline(in, line); ++no)
    if (auto r = parse_record(line, no)) prof.add(*r);
  return prof;
}

EmpiricalProfile ingest_file(const std::string& path, int weight) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open " + path);
  try {
    return ingest(in, weight);
  } catch (const IngestError& e) {
    throw IngestError(path + ": " + e.what());
  }
}

EmpiricalProfile ingest_files(const std::vector<std::string>& paths, int weight) {
  std::vector<EmpiricalProfile> parts(paths.size(), EmpiricalProfile(weight));
  parallel_for(paths.size(), [&](std::size_t i) { parts[i] = ingest_file(paths[i], weight); });
  EmpiricalProfile total(weight);
  for (const auto& p : parts) total.merge(p);
  return total;
}

// ---------------------------------------------------------------- sampler

namespace {

using cd = std::complex<double>;
using CMat = std::array<cd, 36>;

CMat cmul(const CMat& x, const CMat& y) {
  CMat r{};
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) {
      const cd xik = x[i * 6 + k];
      if (xik == cd(0)) continue;
      for (int j = 0; j < 6; ++j) r[i * 6 + j] += xik * y[k * 6 + j];
    }
  return r;
}

cd ctrace(const CMat& x) { return x[0] + x[7] + x[14] + x[21] + x[28] + x[35]; }

}  // namespace

struct Sampler::Impl {
  std::vector<CMat> reps;
  std::vector<TorusFactor> factors;
  std::mt19937_64 rng;
  std::normal_distribution<double> gauss{0.0, 1.0};
  std::uniform_real_distribution<double> angle{0.0, 2 * M_PI};

  void haar_u3(std::array<cd, 9>& a) {
    // Gram-Schmidt on a complex Gaussian matrix, columns
    for (auto& x : a) x = cd(gauss(rng), gauss(rng));
    for (int c = 0; c < 3; ++c) {
      for (int k = 0; k < c; ++k) {
        cd dot = 0;
        for (int r = 0; r < 3; ++r) dot += std::conj(a[r * 3 + k]) * a[r * 3 + c];
        for (int r = 0; r < 3; ++r) a[r * 3 + c] -= dot * a[r * 3 + k];
      }
      double nrm = 0;
      for (int r = 0; r < 3; ++r) nrm += std::norm(a[r * 3 + c]);
      nrm = std::sqrt(nrm);
      for (int r = 0; r < 3; ++r) a[r * 3 + c] /= nrm;
    }
  }

  CMat draw_identity_component() {
    CMat x{};
    for (const auto& f : factors) {
      const auto& s = f.slots;
      const int d = f.type.d;
      switch (f.type.id) {
        case FactorId::U1: {
          cd u = std::polar(1.0, angle(rng));
          for (int i = 0; i < d; ++i) {
            x[s[i] * 6 + s[i]] = u;
            x[s[d + i] * 6 + s[d + i]] = std::conj(u);
          }
          break;
        }
        case FactorId::SU2: {
          double q[4], n = 0;
          for (double& v : q) n += (v = gauss(rng)) * v;
          n = std::sqrt(n);
          cd a(q[0] / n, q[1] / n), b(q[2] / n, q[3] / n);
          for (int i = 0; i < d; ++i) {
            int p = s[i], r = s[d + i];
            x[p * 6 + p] = a;
            x[p * 6 + r] = b;
            x[r * 6 + p] = -std::conj(b);
            x[r * 6 + r] = std::conj(a);
          }
          break;
        }
        case FactorId::U3: {
          std::array<cd, 9> a;
          haar_u3(a);
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
              x[s[i] * 6 + s[j]] = a[i * 3 + j];
              x[s[3 + i] * 6 + s[3 + j]] = std::conj(a[i * 3 + j]);
            }
          break;
        }
        case FactorId::USp4:
        case FactorId::USp6:
          throw UnsupportedSampler("no sampler for " + f.type.name() + " factors");
      }
    }
    return x;
  }
};

Sampler::Sampler(const STGroup& g, std::uint64_t seed) : impl_(std::make_shared<Impl>()) {
  for (const auto& f : g.connected.factors)
    if (f.type.id == FactorId::USp4 || f.type.id == FactorId::USp6)
      throw UnsupportedSampler(g.label + ": no sampler for " + f.type.name() + " factors");
  impl_->factors = g.connected.factors;
  impl_->rng.seed(seed);
  for (std::size_t c = 0; c < g.component_count(); ++c) {
    const Mat& h = g.components.rep(c);
    CMat m{};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m[i * 6 + j] = h(i, j).to_complex();
    impl_->reps.push_back(m);
  }
}

std::array<double, 3> Sampler::next() {
  auto& im = *impl_;
  std::uniform_int_distribution<std::size_t> pick(0, im.reps.size() - 1);
  const CMat& h = im.reps[pick(im.rng)];
  CMat g = cmul(im.draw_identity_component(), h);
  CMat g2 = cmul(g, g);
  cd p1 = ctrace(g), p2 = ctrace(g2), p3 = ctrace(cmul(g2, g));
  cd e1 = p1, e2 = (p1 * p1 - p2) / 2.0, e3 = (p1 * p1 * p1 - 3.0 * p1 * p2 + 2.0 * p3) / 6.0;
  return {-e1.real(), e2.real(), -e3.real()};
}

std::vector<std::array<double, 3>> sample(const STGroup& g, long n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample: n must be positive");
  Sampler s(g, seed);
  std::vector<std::array<double, 3>> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) out.push_back(s.next());
  return out;
}

}  // namespace st3
