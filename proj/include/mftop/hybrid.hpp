#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mftop/poset.hpp"

namespace mftop {

// A finite hybrid space: a bounded pseudo-complemented lattice L of opens
// together with a distinguished basic subposet (P, <=_P) whose maximal
// filters are the points. Two representations share this type:
//
//  - extent form (from `upgrade`): L is the family of unions of basic
//    extents, stored as point-masks; meet/join/pc are mask operations.
//  - table form (from `load`): an explicit carrier with relation and
//    operation tables, as read from a hybrid file.
//
// Values are immutable after construction and all operations are pure.
class FiniteHybrid {
 public:
  using Lat = int;    // index into the carrier
  using Basic = int;  // index into the basic subposet

  // Extent-lattice upgrade of a finite poset: carrier = distinct extents of
  // unions of basic opens ordered by inclusion, meet = intersection,
  // join = union, pc = largest open disjoint from the argument.
  static FiniteHybrid upgrade(const FinitePoset& base,
                              std::size_t oracle_bound = kDefaultOracleBound);

  // Text format: `hybrid <name>`, `latt <id>`, `basic <id>`, `le <id> <id>`,
  // `meet <a> <b> <c>`, `join <a> <b> <c>`, `pc <a> <b>`, `zero <id>`,
  // `one <id>`. Omitted meets/joins are computed from <=_L when unique;
  // gaps surface as structural errors in validate_axioms. <=_P is <=_L
  // restricted to the basic elements.
  static FiniteHybrid load(std::istream& in);
  static FiniteHybrid load_file(const std::string& path);

  const std::string& name() const { return name_; }
  int lat_size() const { return static_cast<int>(lat_names_.size()); }
  const std::string& lat_name(Lat x) const { return lat_names_[x]; }
  std::optional<Lat> lat_index(const std::string& id) const;

  bool leq_l(Lat x, Lat y) const;
  Lat meet(Lat x, Lat y) const;
  Lat join(Lat x, Lat y) const;
  Lat pc(Lat x) const;
  Lat zero() const { return zero_; }
  Lat one() const { return one_; }
  bool is_zero(Lat x) const { return x == zero_; }

  // The basic subposet and its brute-force point oracle.
  const FinitePoset& base() const { return base_; }
  const MfOracle& oracle() const { return oracle_; }
  int basic_count() const { return base_.size(); }
  Lat lift(int p) const { return lift_[p]; }
  std::optional<Basic> basic_at(std::size_t n) const {
    if (n >= static_cast<std::size_t>(base_.size())) return std::nullopt;
    return static_cast<Basic>(n);
  }

  // Point-mask denotation of a lattice element: the points lying in some
  // basic open below it.
  Mask denotation(Lat x) const { return denot_[x]; }
  // B(x) as a mask over basic elements.
  Mask basis(Lat x) const;

  // cl(N_r) subseteq the open coded by x, via the pc condition
  // pc(r) v x = 1.
  bool shrinks_into(int r, Lat x) const { return join(pc(lift(r)), x) == one_; }

  // Tables are mutable only through this test hook (axiom-violation
  // fixtures).
  FiniteHybrid with_pc_override(Lat x, Lat value) const;

  bool extent_form() const { return extent_form_; }
  Mask extent_mask(Lat x) const { return extent_form_ ? masks_[x] : denot_[x]; }

 private:
  FiniteHybrid() = default;
  void finish_setup();

  std::string name_;
  bool extent_form_ = false;
  std::vector<std::string> lat_names_;
  std::vector<Mask> masks_;            // extent form: carrier masks over points
  std::vector<std::vector<bool>> leq_; // table form
  std::vector<std::vector<Lat>> meet_tab_, join_tab_;
  std::vector<Lat> pc_tab_;
  Lat zero_ = -1, one_ = -1;
  std::vector<Lat> lift_;
  std::vector<Mask> denot_;
  FinitePoset base_ = FinitePoset::from_relations("unit", {"_"}, {});
  MfOracle oracle_;
  std::unordered_map<Mask, Lat> mask_index_;
};

// Open sets coded by finitely many lattice generators.
struct FiniteOpenCode {
  std::vector<FiniteHybrid::Lat> gens;
};

Mask code_denotation(const FiniteHybrid& h, const FiniteOpenCode& u);

// All basic elements meeting every generator of U in 0, lifted to L.
// Its denotation is the exterior of cl(U).
FiniteOpenCode open_complement(const FiniteHybrid& h, const FiniteOpenCode& u);

// The strong-regularity witness D, derived from the pc condition.
struct FiniteWitness {
  const FiniteHybrid* space = nullptr;
  std::vector<std::vector<int>> d;  // d[p] = sorted basics r with cl(N_r) in N_p

  static FiniteWitness build(const FiniteHybrid& h);
  bool contains(int p, int r) const { return space->shrinks_into(r, space->lift(p)); }
};

// Checks lattice laws first (associativity, absorption, distributivity,
// bounds), then the eight hybrid axioms against the point oracle. Axiom 2
// is checked in its finite relaxation: nonzero elements sit above at least
// one basic. Axiom 5 splits into the basis soundness inclusion
// B(x) u B(y) subseteq B(x v y) plus point-level completeness; the literal
// basis equality is unsatisfiable for joins that merge opens (see the
// validator notes in the docs).
AxiomReport validate_axioms(const FiniteHybrid& h);

struct ArithVerdict {
  Verdict verdict = Verdict::holds;  // holds = maximal
  std::string reason;
};

// Arithmetic maximality test: M is maximal iff it is a filter and every
// p outside M either meets some member in 0 (clause 1) or has every
// witness r in D_p meeting some member in 0 (clause 2). Exact on finite
// instances; agrees with the brute-force oracle.
ArithVerdict is_maximal_filter_arithmetic(const FiniteHybrid& h,
                                          const FiniteWitness& w, Mask filter);

}  // namespace mftop
