#pragma once

#include <optional>
#include <vector>

#include "mftop/approx.hpp"
#include "mftop/hybrid.hpp"
#include "mftop/interval_space.hpp"

namespace mftop {

// e(W, n): the witness elements under an open code, enumerated in the
// fixed order of P. Memoizes its prefix; pure given the model.
template <class M>
class WitnessEnumeration {
 public:
  WitnessEnumeration(const M& model, typename M::Lat target)
      : model_(&model), target_(std::move(target)) {}

  std::optional<typename M::Basic> at(std::size_t n) {
    constexpr std::size_t kScanCap = 500000;
    while (found_.size() <= n) {
      auto cand = model_->basic_at(scanned_);
      if (!cand) return std::nullopt;  // finite enumeration exhausted
      ++scanned_;
      if (model_->shrinks_into(*cand, target_)) found_.push_back(*cand);
      if (scanned_ > kScanCap) {
        throw resource_error("witness enumeration scan budget exhausted");
      }
    }
    return found_[n];
  }

 private:
  const M* model_;
  typename M::Lat target_;
  std::vector<typename M::Basic> found_;
  std::size_t scanned_ = 0;
};

// The normality functionals. Given open codes U, V with disjoint closures,
// nu1 = {V(n)} covers cl(U), nu2 = {U(n)} covers cl(V), where
//   U(n) = e(U^c, n) ^ pc(e(V^c, 0)) ^ ... ^ pc(e(V^c, n)),
//   V(n) = e(V^c, n) ^ pc(e(U^c, 0)) ^ ... ^ pc(e(U^c, n)).
// Terms are produced lazily; disjointness U(n) ^ V(m) = 0 holds exactly for
// every constructed pair. An empty input side yields an empty output
// stream on its side.
template <class M>
class NuPair {
 public:
  using Lat = typename M::Lat;

  NuPair(const M& model, const std::vector<Lat>& u_gens,
         const std::vector<Lat>& v_gens)
      : model_(&model),
        u_empty_(all_zero(model, u_gens)),
        v_empty_(all_zero(model, v_gens)),
        e_u_(model, model.pc(join_all(model, u_gens))),
        e_v_(model, model.pc(join_all(model, v_gens))) {}

  // nu1 enumerates V(n); it covers cl(U).
  std::optional<Lat> nu1_term(std::size_t n) {
    if (u_empty_) return std::nullopt;
    auto base = e_v_.at(n);
    if (!base) return std::nullopt;
    return model_->meet(model_->lift(*base), u_clip(n));
  }
  // nu2 enumerates U(n); it covers cl(V).
  std::optional<Lat> nu2_term(std::size_t n) {
    if (v_empty_) return std::nullopt;
    auto base = e_u_.at(n);
    if (!base) return std::nullopt;
    return model_->meet(model_->lift(*base), v_clip(n));
  }

 private:
  static bool all_zero(const M& m, const std::vector<Lat>& gens) {
    for (const auto& g : gens) {
      if (!m.is_zero(g)) return false;
    }
    return true;
  }
  static Lat join_all(const M& m, const std::vector<Lat>& gens) {
    Lat acc = m.zero();
    for (const auto& g : gens) acc = m.join(acc, g);
    return acc;
  }
  // Cumulative meet of pc(e(U^c, i)) for i <= n (clips nu1 terms).
  Lat u_clip(std::size_t n) {
    extend_clip(e_u_, clip_u_, n);
    return clip_u_.empty() ? model_->one()
                           : clip_u_[std::min(n, clip_u_.size() - 1)];
  }
  Lat v_clip(std::size_t n) {
    extend_clip(e_v_, clip_v_, n);
    return clip_v_.empty() ? model_->one()
                           : clip_v_[std::min(n, clip_v_.size() - 1)];
  }
  void extend_clip(WitnessEnumeration<M>& e, std::vector<Lat>& clip,
                   std::size_t n) {
    while (clip.size() <= n) {
      auto next = e.at(clip.size());
      if (!next) return;  // stream ended; the last clip stays in force
      Lat cut = model_->pc(model_->lift(*next));
      clip.push_back(clip.empty() ? cut : model_->meet(clip.back(), cut));
    }
  }

  const M* model_;
  bool u_empty_, v_empty_;
  WitnessEnumeration<M> e_u_, e_v_;
  std::vector<Lat> clip_u_, clip_v_;
};

// Finite-instance precondition for nu: a point in both closures, if any.
std::optional<int> disjoint_closures_violation(const FiniteHybrid& h,
                                               const FiniteOpenCode& u,
                                               const FiniteOpenCode& v);

// Urysohn chain on the interval presentation: opens U(k) for every dyadic
// k = j/2^depth with U(0) = {q}, U(1) = {p} and cl(U(k)) inside U(k')
// exactly for k < k', certified by the pc condition. Construction is the
// normality interpolation specialized to exact finite unions; levels are
// deterministic.
class DyadicChain {
 public:
  static DyadicChain build(const IntervalSpace& sp, const RatInterval& p,
                           const RatInterval& q, int depth);

  int depth() const { return depth_; }
  std::size_t level_count() const { return levels_.size(); }
  const FiniteUnion& level(std::size_t j) const { return levels_[j]; }
  Rat level_value(std::size_t j) const;
  const RatInterval& top() const { return p_; }
  const RatInterval& bottom() const { return q_; }

  // pc(U(j)) v U(k) = 1, exactly.
  bool pc_condition(std::size_t j, std::size_t k) const;
  // Every pair j < k, exactly; the chain invariant.
  bool check_all_pairs() const;

 private:
  int depth_ = 0;
  RatInterval p_, q_;
  std::vector<FiniteUnion> levels_;
};

struct EvalResult {
  ApproxReal value;
  bool complete = true;  // false: point budget exhausted, partial bracket
};

// f_{p,q}(x) = inf { k dyadic : x in U(k) }, evaluated to within 2^-k via
// binary search over the chain levels. Returns exact 0 on N_q, exact 1
// off N_p.
EvalResult urysohn_eval(const DyadicChain& chain, PointCode& x, int k,
                        int refines_per_query = 40);

// The reindexed family f_n: chains for the first `count` pairs (p, q) with
// q in D_p under the diagonal pairing of the fixed enumeration of P.
struct MetricFamily {
  int depth = 0;
  std::vector<DyadicChain> chains;

  static MetricFamily build(const IntervalSpace& sp, std::size_t count,
                            int depth);
};

// d(x, y) = sum 2^-n |f_n(x) - f_n(y)|, truncated at N = k + 2 terms with
// tail bracket [0, 2^-N+1]; the result is a certified bracket of width at
// most 2^-k+1 (radius 2^-k).
EvalResult metric_eval(const MetricFamily& fams, PointCode& x, PointCode& y,
                       int k, int refines_per_query = 40);

}  // namespace mftop
