#pragma once

#include <functional>
#include <memory>

#include "mftop/metrize.hpp"

namespace mftop {

// One triple <p, <a, r>>: the basic open p carries the space into the ball
// of radius r around the dense-set element a.
struct FunctionTriple {
  RatInterval p;
  Rat a;
  Rat r;
};

// A continuous-function code: a lazy enumerator of triples. at(n) yields
// the n-th triple or nullopt once the enumeration is exhausted.
class FunctionCode {
 public:
  using Producer = std::function<std::optional<FunctionTriple>(std::size_t)>;
  explicit FunctionCode(Producer at) : at_(std::move(at)) {}
  std::optional<FunctionTriple> at(std::size_t n) const { return at_(n); }

 private:
  Producer at_;
};

// Certified oscillation bound of f over the points of p: the least chain
// level covering p minus the greatest level missing p, clamped to [0,1].
Rat oscillation_upper(const DyadicChain& chain, const RatInterval& p);

// Certified upper bound for the metric diameter
// sup { d(a,b) : a, b in A n N_p }, by exact endpoint analysis per chain
// plus the truncation tail. Never below the family's resolution floor.
Rat diam_upper(const MetricFamily& fams, const RatInterval& p);

// The embedding code: triples <w, <a, 2^-j>> where a runs over the dense
// rationals and w is a dyadic window around a whose certified diameter
// drops below 2^-j. Enumerated in diagonal (j, a) order; total at every
// point because the windows shrink with j down to the family floor.
FunctionCode embedding_code(const MetricFamily& fams);

// A point of the completion: successive dense-set approximants with
// certified radii, r strictly decreasing.
struct CauchyCode {
  std::vector<std::pair<Rat, Rat>> approx;  // (a_i, r_i)
  bool complete = true;                     // false: budget ran dry
  Rat final_radius() const { return approx.empty() ? Rat(2) : approx.back().second; }
};

// Evaluates a function code at a point: scans the triples for members of
// the filter with shrinking radii until 2^-k is reached. Deferred
// (incomplete) when the scan or query budget runs out first.
CauchyCode apply_function_code(const FunctionCode& code, PointCode& m, int k,
                               std::size_t scan_budget = 20000,
                               int refines_per_query = 40);

}  // namespace mftop
