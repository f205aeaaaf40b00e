#pragma once

#include <memory>
#include <vector>

#include "mftop/interval.hpp"
#include "mftop/rng.hpp"

namespace mftop {

// A point of the presented space: a maximal filter of rational intervals,
// exposed through membership queries against the current localization
// state. Queries never mutate; refine() shrinks the localization window by
// a factor of at least 2 and is serialized by the caller.
class PointCode {
 public:
  enum class Ans { member, nonmember, deferred };
  virtual ~PointCode() = default;

  virtual Ans query(const RatInterval& i) const = 0;
  virtual void refine() = 0;
  // Current localization window; an interval of the coded filter.
  virtual RatInterval bracket() const = 0;
  // Successive localization windows, all members of the coded filter.
  virtual const std::vector<RatInterval>& trace() const = 0;
  virtual std::optional<Rat> exact() const { return std::nullopt; }
};

// Queries resolved by refining up to `max_refines` extra steps.
PointCode::Ans resolve(PointCode& m, const RatInterval& i, int max_refines);
PointCode::Ans resolve(PointCode& m, const FiniteUnion& u, int max_refines);

// The genuine maximal filter of intervals containing an exact rational.
std::unique_ptr<PointCode> point_at(const Rat& x);

// The hybrid presentation of [0,1]: L = finite unions of rational
// subintervals, P = the rational subintervals, <=_P = closure containment.
// All operations are exact; the structure itself is stateless apart from a
// cached prefix of the fixed enumeration of P.
class IntervalSpace {
 public:
  using Lat = FiniteUnion;
  using Basic = RatInterval;

  IntervalSpace() : enum_(std::make_shared<IntervalEnumeration>()) {}

  Lat zero() const { return FiniteUnion::zero(); }
  Lat one() const { return FiniteUnion::one(); }
  bool is_zero(const Lat& x) const { return x.is_zero(); }
  bool leq_l(const Lat& x, const Lat& y) const { return x.subset_of(y); }
  Lat meet(const Lat& x, const Lat& y) const { return x.meet(y); }
  Lat join(const Lat& x, const Lat& y) const { return x.join(y); }
  Lat pc(const Lat& x) const { return x.pc(); }
  Lat lift(const Basic& p) const { return FiniteUnion(p); }
  bool leq_p(const Basic& i, const Basic& j) const { return mftop::leq_p(i, j); }

  // Fixed enumeration of P; infinite, so never nullopt.
  std::optional<Basic> basic_at(std::size_t n) const { return enum_->at(n); }

  // cl(N_r) inside the open coded by x: the pc condition pc(r) v x = 1.
  bool shrinks_into(const Basic& r, const Lat& x) const {
    return lift(r).pc().join(x).is_one();
  }

 private:
  std::shared_ptr<IntervalEnumeration> enum_;
};

// Dense-set recursion: a maximal filter located inside p, built by
// repeatedly selecting the least enumerated interval whose closure sits in
// the current window and whose width is at most half of it.
std::unique_ptr<PointCode> build_point_in(const RatInterval& p);

// The computable dense set: point codes at the fixed enumeration of the
// rationals in [0,1].
class DenseSet {
 public:
  Rat rational_at(std::size_t n) { return rats_.at(n); }
  std::unique_ptr<PointCode> at(std::size_t n) { return point_at(rats_.at(n)); }
  // Least enumeration index whose rational lies in i: the explicit density
  // index bound.
  std::size_t first_index_hitting(const RatInterval& i);
  std::size_t index_of(const Rat& q) { return rats_.index_of(q); }

 private:
  RationalEnumeration rats_;
};

// Sampled-but-exact validation of the hybrid axioms on the presentation;
// every check is decided with exact rational arithmetic. Axiom 1 is judged
// against point semantics (the maximal filters are the points of [0,1]),
// axiom 2 in the unrelaxed form via an injective shrinking enumerator, and
// axiom 5 as basis soundness plus point-level completeness.
AxiomReport validate_interval_axioms(std::size_t samples, std::uint64_t seed);

// Deterministic samplers shared by the validation and test harnesses.
RatInterval sample_interval(DetRng& rng, unsigned long max_den);
FiniteUnion sample_union(DetRng& rng, unsigned long max_den, int max_parts);

struct PresentedBudget {
  std::size_t sampled_elements = 64;   // how many enumerated basics to test
  std::size_t witness_samples = 24;    // how many D_p members per element
  int refines_per_query = 40;          // localization steps per decision
};

struct PresentedVerdict {
  Verdict verdict = Verdict::holds;
  std::string note;
};

// Arithmetic maximality for presented points, three-valued under budget.
// `fails` needs a finite certificate: a non-member p whose witness set D_p
// contains a member of the filter.
PresentedVerdict is_maximal_filter_arithmetic(const IntervalSpace& space,
                                              PointCode& m,
                                              const PresentedBudget& budget = {});

}  // namespace mftop
