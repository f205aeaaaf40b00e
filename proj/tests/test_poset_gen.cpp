#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mftop/poset_gen.hpp"

using namespace mftop;

TEST_CASE("poset counts match the known isomorphism-class sizes") {
  // Unlabeled poset counts for n = 1..6 are classical reference values.
  CHECK(all_posets(1).size() == 1);
  CHECK(all_posets(2).size() == 2);
  CHECK(all_posets(3).size() == 5);
  CHECK(all_posets(4).size() == 16);
  CHECK(all_posets(5).size() == 63);
  CHECK(all_posets(6).size() == 318);
}

TEST_CASE("larger counts used by the acceptance corpus") {
  CHECK(all_posets(7).size() == 2045);
}

TEST_CASE("canonical relation is isomorphism invariant") {
  // Relabeled V poset: same canonical matrix.
  std::vector<Mask> v1 = {mask_bit(0) | mask_bit(2), mask_bit(1) | mask_bit(2), mask_bit(2)};
  std::vector<Mask> v2 = {mask_bit(0), mask_bit(1) | mask_bit(0), mask_bit(2) | mask_bit(0)};
  CHECK(canonical_relation(v1) == canonical_relation(v2));
  // And distinct from the 3-chain.
  std::vector<Mask> chain = {mask_bit(0) | mask_bit(1) | mask_bit(2),
                             mask_bit(1) | mask_bit(2), mask_bit(2)};
  CHECK(canonical_relation(v1) != canonical_relation(chain));
}

TEST_CASE("generated posets are valid and distinct") {
  auto shapes = all_posets_upto(5);
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    FinitePoset p = shapes[i].realize("g");  // validates order axioms
    CHECK(p.size() == shapes[i].size());
  }
  for (std::size_t i = 0; i + 1 < shapes.size(); ++i) {
    for (std::size_t j = i + 1; j < shapes.size(); ++j) {
      if (shapes[i].size() == shapes[j].size()) CHECK(shapes[i].up != shapes[j].up);
    }
  }
}
