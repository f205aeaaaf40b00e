#pragma once

#include <string>
#include <vector>

#include "mftop/poset.hpp"

namespace mftop {

// A poset as a relation matrix in canonical (iso-pruned) form.
// up[i] is the mask {j : i <= j}, including i.
struct PosetShape {
  std::vector<Mask> up;
  int size() const { return static_cast<int>(up.size()); }

  FinitePoset realize(const std::string& name) const;
};

// Canonical relabeling: lexicographically minimal flattened relation matrix
// over all permutations consistent with an iterated degree refinement.
std::vector<Mask> canonical_relation(const std::vector<Mask>& up);

// Every poset with exactly n elements, one representative per isomorphism
// class, in a deterministic order. Grown by attaching a fresh maximal
// element above each down-closed subset of each (n-1)-poset.
std::vector<PosetShape> all_posets(int n);

// All posets with 1..n elements.
std::vector<PosetShape> all_posets_upto(int n);

// Named fixtures used across the test suites.
FinitePoset chain_poset(int n);
FinitePoset antichain_poset(int n);
FinitePoset v_poset();        // a <= c, b <= c
FinitePoset lambda_poset();   // z <= x, z <= y
FinitePoset diamond_poset();  // bot <= a,b <= top

}  // namespace mftop
