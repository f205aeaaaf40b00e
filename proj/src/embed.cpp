#include "mftop/embed.hpp"

#include <algorithm>

namespace mftop {

Rat oscillation_upper(const DyadicChain& chain, const RatInterval& p) {
  FiniteUnion lifted(p);
  const std::size_t last = chain.level_count() - 1;
  // sup f over p: the least level whose open covers p, or 1 when none does.
  Rat sup_f(1);
  if (lifted.subset_of(chain.level(last))) {
    std::size_t lo = 0, hi = last;
    if (lifted.subset_of(chain.level(0))) {
      sup_f = 0;
    } else {
      while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (lifted.subset_of(chain.level(mid))) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      sup_f = chain.level_value(hi);
    }
  }
  // inf f over p: the greatest level whose open misses p, or 0 when even
  // the bottom open meets it.
  Rat inf_f(0);
  if (lifted.meet(chain.level(last)).is_zero()) {
    inf_f = 1;
  } else if (!lifted.meet(chain.level(0)).is_zero()) {
    inf_f = 0;
  } else {
    std::size_t lo = 0, hi = last;
    while (hi - lo > 1) {
      std::size_t mid = lo + (hi - lo) / 2;
      if (lifted.meet(chain.level(mid)).is_zero()) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    inf_f = chain.level_value(lo);
  }
  Rat osc = sup_f - inf_f;
  if (osc < 0) osc = 0;
  if (osc > 1) osc = 1;
  return osc;
}

Rat diam_upper(const MetricFamily& fams, const RatInterval& p) {
  Rat total(0);
  for (std::size_t n = 0; n < fams.chains.size(); ++n) {
    total += pow2_neg(static_cast<unsigned>(n)) * oscillation_upper(fams.chains[n], p);
  }
  // Tail of the metric series beyond the built chains.
  total += pow2_neg(static_cast<unsigned>(fams.chains.size())) * 2;
  return total;
}

namespace {

std::optional<RatInterval> window_around(const Rat& a, unsigned width_exp) {
  Rat w = pow2_neg(width_exp);
  Rat lo = a - w / 2;
  Rat hi = a + w / 2;
  if (lo < 0) {
    lo = 0;
    hi = w;
  } else if (hi > 1) {
    hi = 1;
    lo = Rat(1) - w;
  }
  return RatInterval(lo, hi, lo == 0, hi == 1);
}

}  // namespace

FunctionCode embedding_code(const MetricFamily& fams) {
  // Shared across calls to at(): the producer memoizes the qualifying
  // triples it has found and the diagonal position of the scan.
  struct State {
    MetricFamily fams;
    RationalEnumeration dense;
    std::vector<FunctionTriple> found;
    std::size_t diag = 0, step = 0;
  };
  auto st = std::make_shared<State>();
  st->fams = fams;
  const unsigned max_j = fams.chains.size() > 3
                             ? static_cast<unsigned>(fams.chains.size() - 2)
                             : 1u;
  return FunctionCode([st, max_j](std::size_t n) -> std::optional<FunctionTriple> {
    while (st->found.size() <= n) {
      if (st->diag > 600) return std::nullopt;  // enumeration floor reached
      // Diagonal order over (j, dense index).
      unsigned j = 1 + static_cast<unsigned>(st->step);
      std::size_t ai = st->diag - st->step;
      if (++st->step > st->diag) {
        st->step = 0;
        ++st->diag;
      }
      if (j > max_j) continue;
      Rat a = st->dense.at(ai);
      Rat r = pow2_neg(j);
      // Shrink the window until the certified diameter drops under r.
      for (unsigned c = j + 3; c <= j + 9; ++c) {
        auto w = window_around(a, c);
        if (!w) break;
        if (diam_upper(st->fams, *w) < r) {
          st->found.push_back({*w, a, r});
          break;
        }
      }
    }
    return st->found[n];
  });
}

CauchyCode apply_function_code(const FunctionCode& code, PointCode& m, int k,
                               std::size_t scan_budget, int refines_per_query) {
  CauchyCode out;
  Rat target = pow2_neg(static_cast<unsigned>(k));
  Rat best(2);
  for (std::size_t n = 0; n < scan_budget; ++n) {
    auto triple = code.at(n);
    if (!triple) break;
    if (triple->r >= best) continue;
    if (resolve(m, triple->p, refines_per_query) == PointCode::Ans::member) {
      out.approx.emplace_back(triple->a, triple->r);
      best = triple->r;
      if (best <= target) return out;
    }
  }
  out.complete = false;
  return out;
}

}  // namespace mftop
