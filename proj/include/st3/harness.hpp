#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "st3/catalog.hpp"
#include "st3/identify.hpp"

namespace st3 {

// L_p(T) = 1 + c1 T + c2 T^2 + c3 T^3 + p c2 T^4 + p^2 c1 T^5 + p^3 T^6
struct LPolyRecord {
  long p = 0;
  long c1 = 0, c2 = 0, c3 = 0;
  bool within_weil_bounds() const;
  std::array<double, 3> normalized() const;  // c1/sqrt p, c2/p, c3/p^(3/2)
};

struct IngestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// `p c1 c2 c3`; blank lines and `#` comments yield nothing.
std::optional<LPolyRecord> parse_record(const std::string& line, long line_no);

struct EmpiricalProfile {
  int weight = 18;
  long count = 0;
  std::vector<Exp3> monomials;  // monomials_up_to(weight)
  std::vector<double> sums;
  // point-density counters, laid out like ZMatrix
  std::array<std::array<long, 7>, 4> z{};

  explicit EmpiricalProfile(int w = 18);
  void add(const LPolyRecord& r);
  // a1 = 0, a3 = 0, a2 = t decided with threshold zero_tol
  void add_normalized(double a1, double a2, double a3, double zero_tol = 1e-9);
  void merge(const EmpiricalProfile& o);

  double moment(const Exp3& e) const;
  double apoly_average(const APoly& f) const;
  double norm(const Partition3& lambda) const;  // mean of chi_lambda^2
  std::array<std::array<double, 7>, 4> densities() const;
  EmpiricalKey key(KeyVariant v) const;

 private:
  void add_monomials(double a1, double a2, double a3);
  void add_flags(bool a1_zero, bool a3_zero, int a2_value);  // a2_value outside -1..3: none
};

EmpiricalProfile ingest(std::istream& in, int weight = 18);
EmpiricalProfile ingest_file(const std::string& path, int weight = 18);
// files fold in parallel, then merge
EmpiricalProfile ingest_files(const std::vector<std::string>& paths, int weight = 18);

struct UnsupportedSampler : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Haar sampler for groups whose identity component is built from U(1),
// SU(2) and U(3) factors.  Deterministic for a fixed seed.
class Sampler {
 public:
  Sampler(const STGroup& g, std::uint64_t seed);
  std::array<double, 3> next();  // normalized (a1, a2, a3)

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

std::vector<std::array<double, 3>> sample(const STGroup& g, long n, std::uint64_t seed);

}  // namespace st3
