#include "mftop/metrize.hpp"

namespace mftop {

std::optional<int> disjoint_closures_violation(const FiniteHybrid& h,
                                               const FiniteOpenCode& u,
                                               const FiniteOpenCode& v) {
  const auto& o = h.oracle();
  Mask u_elems = 0, v_elems = 0;
  for (auto g : u.gens) u_elems |= h.basis(g);
  for (auto g : v.gens) v_elems |= h.basis(g);
  Mask both = o.closure_extent(h.base(), u_elems) & o.closure_extent(h.base(), v_elems);
  if (both == 0) return std::nullopt;
  return std::countr_zero(both);
}

namespace {

// The interpolation step: an exact finite union M with cl(a) inside M and
// cl(M) inside c, placed at the rational midpoints of the surrounding gaps.
FiniteUnion between(const FiniteUnion& a, const FiniteUnion& c) {
  std::vector<RatInterval> parts;
  for (const auto& pa : a.parts()) {
    // cl(pa) = [lo, hi] is connected, so it sits inside a single part of c.
    const RatInterval* host = nullptr;
    for (const auto& pc_part : c.parts()) {
      if (pc_part.contains(pa.lo) && pc_part.contains(pa.hi)) {
        host = &pc_part;
        break;
      }
    }
    if (!host) throw witness_error("interpolation: closure escapes the outer open");
    Rat lo = (host->lo + pa.lo) / 2;
    Rat hi = (host->hi + pa.hi) / 2;
    bool clo = (lo == 0) && host->closed_lo;
    bool chi = (hi == 1) && host->closed_hi;
    parts.emplace_back(lo, hi, clo, chi);
  }
  return FiniteUnion::canonical(std::move(parts));
}

}  // namespace

DyadicChain DyadicChain::build(const IntervalSpace& sp, const RatInterval& p,
                               const RatInterval& q, int depth) {
  if (depth < 0) throw input_error("negative chain depth");
  if (!sp.shrinks_into(q, sp.lift(p))) {
    throw witness_error("chain endpoints unordered: " + q.str() +
                        " is not a strong-regularity witness under " + p.str());
  }
  DyadicChain ch;
  ch.depth_ = depth;
  ch.p_ = p;
  ch.q_ = q;
  const std::size_t n = (std::size_t{1} << depth);
  ch.levels_.assign(n + 1, FiniteUnion::zero());
  ch.levels_[0] = sp.lift(q);
  ch.levels_[n] = sp.lift(p);
  for (int d = 1; d <= depth; ++d) {
    const std::size_t step = n >> d;
    for (std::size_t j = step; j < n; j += 2 * step) {
      ch.levels_[j] = between(ch.levels_[j - step], ch.levels_[j + step]);
    }
  }
  return ch;
}

Rat DyadicChain::level_value(std::size_t j) const {
  Rat v(static_cast<long>(j), static_cast<long>(std::size_t{1} << depth_));
  v.canonicalize();
  return v;
}

bool DyadicChain::pc_condition(std::size_t j, std::size_t k) const {
  return levels_[j].pc().join(levels_[k]).is_one();
}

bool DyadicChain::check_all_pairs() const {
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    for (std::size_t k = j + 1; k < levels_.size(); ++k) {
      if (!pc_condition(j, k)) return false;
    }
  }
  return true;
}

EvalResult urysohn_eval(const DyadicChain& chain, PointCode& x, int k,
                        int refines_per_query) {
  if (chain.depth() < k) {
    throw input_error("chain depth below the requested precision exponent");
  }
  const std::size_t last = chain.level_count() - 1;
  auto q0 = resolve(x, chain.level(0), refines_per_query);
  if (q0 == PointCode::Ans::member) return {ApproxReal::exact(Rat(0)), true};
  auto q1 = resolve(x, chain.level(last), refines_per_query);
  if (q1 == PointCode::Ans::nonmember) return {ApproxReal::exact(Rat(1)), true};
  if (q0 == PointCode::Ans::deferred || q1 == PointCode::Ans::deferred) {
    return {ApproxReal::from_bounds(Rat(0), Rat(1)), false};
  }
  // x is outside U(0) and inside U(1): binary search the boundary.
  std::size_t lo = 0, hi = last;
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    auto qm = resolve(x, chain.level(mid), refines_per_query);
    if (qm == PointCode::Ans::member) {
      hi = mid;
    } else if (qm == PointCode::Ans::nonmember) {
      lo = mid;
    } else {
      return {ApproxReal::from_bounds(chain.level_value(lo), chain.level_value(hi)),
              false};
    }
  }
  return {ApproxReal::from_bounds(chain.level_value(lo), chain.level_value(hi)),
          true};
}

MetricFamily MetricFamily::build(const IntervalSpace& sp, std::size_t count,
                                 int depth) {
  MetricFamily fam;
  fam.depth = depth;
  constexpr std::size_t kDiagonalCap = 4000;
  for (std::size_t s = 0; fam.chains.size() < count; ++s) {
    if (s > kDiagonalCap) throw resource_error("metric family pairing cap hit");
    for (std::size_t i = 0; i <= s && fam.chains.size() < count; ++i) {
      RatInterval p = *sp.basic_at(i);
      RatInterval q = *sp.basic_at(s - i);
      if (sp.shrinks_into(q, sp.lift(p))) {
        fam.chains.push_back(DyadicChain::build(sp, p, q, depth));
      }
    }
  }
  return fam;
}

EvalResult metric_eval(const MetricFamily& fams, PointCode& x, PointCode& y,
                       int k, int refines_per_query) {
  if (k < 1) throw input_error("precision exponent must be at least 1");
  const std::size_t terms = static_cast<std::size_t>(k) + 2;
  if (fams.chains.size() < terms) {
    throw input_error("metric family needs at least k + 2 chains");
  }
  if (fams.depth < k + 2) {
    throw input_error("metric family depth below k + 2");
  }
  ApproxReal acc = ApproxReal::exact(Rat(0));
  bool complete = true;
  for (std::size_t n = 0; n < terms; ++n) {
    EvalResult fx = urysohn_eval(fams.chains[n], x, k + 2, refines_per_query);
    EvalResult fy = urysohn_eval(fams.chains[n], y, k + 2, refines_per_query);
    complete = complete && fx.complete && fy.complete;
    acc = acc + (fx.value - fy.value).abs().scaled(pow2_neg(static_cast<unsigned>(n)));
  }
  // Tail over the truncated indices: each term lies in [0, 2^-n].
  acc = acc + ApproxReal(pow2_neg(static_cast<unsigned>(terms)),
                         pow2_neg(static_cast<unsigned>(terms)));
  return {acc, complete};
}

}  // namespace mftop
