#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mftop/report.hpp"

namespace mftop {

// Element sets (and filters, and extents) are bitmasks over element indices.
using Mask = std::uint64_t;
constexpr std::size_t kMaxPosetElements = 64;
constexpr std::size_t kDefaultOracleBound = 20;

inline int mask_count(Mask m) { return std::popcount(m); }
inline bool mask_has(Mask m, int i) { return (m >> i) & 1u; }
inline Mask mask_bit(int i) { return Mask{1} << i; }

// Iterates set bits low to high.
template <typename F>
void mask_for_each(Mask m, F&& f) {
  while (m) {
    int i = std::countr_zero(m);
    f(i);
    m &= m - 1;
  }
}

struct FilterCheck {
  enum class Fail { none, empty, not_upward_closed, not_directed };
  Fail fail = Fail::none;
  int a = -1, b = -1;  // witness pair for the first violated clause
  bool ok() const { return fail == Fail::none; }
};

// A finite poset with a validated reflexive, antisymmetric, transitive
// order. Values are immutable after construction; all operations are pure.
class FinitePoset {
 public:
  // `pairs` lists i <= j edges; the constructor takes the reflexive
  // transitive closure and rejects antisymmetry violations and empty
  // carriers.
  static FinitePoset from_relations(std::string name,
                                    std::vector<std::string> element_names,
                                    const std::vector<std::pair<int, int>>& pairs);

  // Line-oriented text format: `poset <name>`, `elem <id>`, `le <id> <id>`,
  // '#' comments. Closure on load, reflexivity implicit.
  static FinitePoset load(std::istream& in);
  static FinitePoset load_file(const std::string& path);
  void save(std::ostream& out) const;

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& element_name(int i) const { return names_[i]; }
  std::optional<int> index_of(const std::string& id) const;
  int require_index(const std::string& id) const;

  bool leq(int i, int j) const { return mask_has(up_[i], j); }
  Mask up_set(int i) const { return up_[i]; }      // {j : i <= j}, includes i
  Mask down_set(int i) const { return down_[i]; }  // {j : j <= i}, includes i
  Mask all_elements() const {
    return size() == 64 ? ~Mask{0} : (mask_bit(size()) - 1);
  }

  // ucl(S): idempotent, contains S.
  Mask upward_closure(Mask s) const;

  // Common lower bound anywhere in the poset.
  bool compatible(int i, int j) const { return (down_[i] & down_[j]) != 0; }

  // Nonempty + upward closed + every pair has a common lower bound in the
  // set. The returned check names the first violated clause and a witness
  // pair. Directedness is downward: see the docs on the order convention.
  FilterCheck check_filter(Mask s) const;
  bool is_filter(Mask s) const { return check_filter(s).ok(); }

  // Exhaustive maximal-filter enumeration: sweeps every subset (memoizing
  // upward closures via the filter test on canonical masks), keeps the
  // inclusion-maximal filters, sorted ascending by mask. This is the
  // ground-truth oracle; do not shortcut it.
  std::vector<Mask> maximal_filters(std::size_t bound = kDefaultOracleBound) const;

  // m in cl(N_U): every q in m is compatible with some p in U.
  bool in_closure(Mask filter, Mask u) const;

  std::string mask_names(Mask m) const;

 private:
  FinitePoset() = default;
  std::string name_;
  std::vector<std::string> names_;
  std::vector<Mask> up_, down_;
};

// Enumerated points (maximal filters) plus per-element extents; the concrete
// denotation of the space at desk scale. Holds no reference to the poset so
// that owners can copy both freely.
struct MfOracle {
  std::vector<Mask> points;    // element-masks, canonical order
  std::vector<Mask> extent;    // extent[p] = point-mask of N_p

  static MfOracle build(const FinitePoset& p,
                        std::size_t bound = kDefaultOracleBound);

  int point_count() const { return static_cast<int>(points.size()); }
  Mask full() const {
    return points.size() == 64 ? ~Mask{0} : (mask_bit(static_cast<int>(points.size())) - 1);
  }
  // N_U for a set of elements.
  Mask extent_of_set(Mask elems) const;
  // Point-mask of cl(N_U), via the membership predicate.
  Mask closure_extent(const FinitePoset& p, Mask elems) const;
  std::optional<int> point_index(Mask filter) const;
};

}  // namespace mftop
