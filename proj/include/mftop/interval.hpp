#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mftop/rat.hpp"
#include "mftop/report.hpp"

namespace mftop {

// A nonempty rational subinterval of [0,1], relatively open: endpoints are
// excluded except that 0 and 1 may be included. Canonical form enforces
// closed_lo -> lo == 0 and closed_hi -> hi == 1.
struct RatInterval {
  Rat lo, hi;
  bool closed_lo = false, closed_hi = false;

  RatInterval() : lo(0), hi(1), closed_lo(true), closed_hi(true) {}
  RatInterval(Rat lo_, Rat hi_, bool clo, bool chi);

  bool contains(const Rat& x) const;
  Rat width() const { return hi - lo; }
  bool operator==(const RatInterval& o) const = default;

  // Point-set containment of relatively open intervals.
  bool subset_of(const RatInterval& o) const;
  // Closure containment cl(*this) = [lo,hi] inside o: the basic order <=_P.
  bool closure_inside(const RatInterval& o) const {
    return o.contains(lo) && o.contains(hi);
  }
  bool intersects(const RatInterval& o) const;
  std::optional<RatInterval> intersect(const RatInterval& o) const;

  std::string str() const;
};

// <=_P: the closure of i sits inside j.
inline bool leq_p(const RatInterval& i, const RatInterval& j) {
  return i.closure_inside(j);
}

// An element of the open-set lattice L: a finite union of rational
// subintervals in canonical form (parts sorted, pairwise disjoint, no two
// mergeable). The empty list codes 0; the single part [0,1] codes 1.
class FiniteUnion {
 public:
  FiniteUnion() = default;  // 0
  explicit FiniteUnion(const RatInterval& i) : parts_{i} {}
  static FiniteUnion canonical(std::vector<RatInterval> raw);
  static FiniteUnion zero() { return FiniteUnion(); }
  static FiniteUnion one() { return FiniteUnion(RatInterval()); }

  const std::vector<RatInterval>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  bool is_one() const;
  bool contains(const Rat& x) const;
  bool operator==(const FiniteUnion& o) const = default;

  bool subset_of(const FiniteUnion& o) const;  // <=_L (containment)
  FiniteUnion meet(const FiniteUnion& o) const;
  FiniteUnion join(const FiniteUnion& o) const;
  // Pseudo-complement: the interior of the set complement relative to
  // [0,1], i.e. [0,1] minus the closure.
  FiniteUnion pc() const;
  // int(cl(.)) = pc(pc(.)): fills isolated missing points.
  FiniteUnion regularize() const { return pc().pc(); }

  // Closure as closed rational intervals [lo,hi].
  std::vector<std::pair<Rat, Rat>> closure_parts() const;
  bool closure_contains(const Rat& x) const;

  std::string str() const;

 private:
  std::vector<RatInterval> parts_;
};

// Parsing for the CLI/file syntax: intervals `(a/b,c/d)`, `[0,c/d)`,
// `(a/b,1]`, unions as `+`-joined interval lists, `0` for the empty union.
RatInterval parse_interval(const std::string& text);
FiniteUnion parse_union(const std::string& text);

// The fixed enumeration of the rationals in [0,1]: by height
// (denominator), then numerically within a height. Index 0 is 0, index 1
// is 1, index 2 is 1/2, ...
class RationalEnumeration {
 public:
  const Rat& at(std::size_t n);
  // Index of q in the enumeration.
  std::size_t index_of(const Rat& q);

 private:
  void extend();
  std::vector<Rat> items_;
  unsigned long next_height_ = 1;
};

// The fixed enumeration of P: intervals ordered by height (max endpoint
// denominator), then by (lo, hi, closed_lo, closed_hi). All four closure
// flag variants appear where 0 or 1 is an endpoint.
class IntervalEnumeration {
 public:
  const RatInterval& at(std::size_t n);
  // Every interval of height exactly h, in the within-height order.
  static std::vector<RatInterval> at_height(unsigned long h);
  // All rationals in [0,1] with height <= h.
  static std::vector<Rat> rationals_upto(unsigned long h);

 private:
  void extend();
  std::vector<RatInterval> items_;
  unsigned long next_height_ = 0;
};

}  // namespace mftop
