#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mftop/poset.hpp"
#include "mftop/poset_gen.hpp"
#include "mftop/rng.hpp"

using namespace mftop;

namespace {

Mask mask_of(const FinitePoset& p, std::initializer_list<const char*> ids) {
  Mask m = 0;
  for (auto* id : ids) m |= mask_bit(p.require_index(id));
  return m;
}

}  // namespace

TEST_CASE("upward closure on the V poset") {
  FinitePoset p = v_poset();
  CHECK(p.upward_closure(mask_of(p, {"a"})) == mask_of(p, {"a", "c"}));
  CHECK(p.upward_closure(0) == 0);
  CHECK(p.upward_closure(p.all_elements()) == p.all_elements());
  // Idempotent and extensive.
  Mask s = mask_of(p, {"b"});
  Mask u = p.upward_closure(s);
  CHECK((u & s) == s);
  CHECK(p.upward_closure(u) == u);
}

TEST_CASE("filter checks with reasons") {
  FinitePoset p = v_poset();
  CHECK(p.is_filter(mask_of(p, {"a", "c"})));
  auto c1 = p.check_filter(mask_of(p, {"a", "b", "c"}));
  CHECK(!c1.ok());
  CHECK(c1.fail == FilterCheck::Fail::not_directed);
  // Witness pair is a,b in some order.
  Mask w = mask_bit(c1.a) | mask_bit(c1.b);
  CHECK(w == mask_of(p, {"a", "b"}));
  auto c2 = p.check_filter(0);
  CHECK(c2.fail == FilterCheck::Fail::empty);
  auto c3 = p.check_filter(mask_of(p, {"a"}));
  CHECK(c3.fail == FilterCheck::Fail::not_upward_closed);
}

TEST_CASE("maximal filter enumeration on the named posets") {
  FinitePoset chain = chain_poset(3);
  auto mf_chain = chain.maximal_filters();
  REQUIRE(mf_chain.size() == 1);
  CHECK(mf_chain[0] == chain.all_elements());

  FinitePoset anti = antichain_poset(2);
  auto mf_anti = anti.maximal_filters();
  REQUIRE(mf_anti.size() == 2);
  CHECK(mf_anti[0] == mask_of(anti, {"a"}));
  CHECK(mf_anti[1] == mask_of(anti, {"b"}));

  FinitePoset v = v_poset();
  auto mf_v = v.maximal_filters();
  REQUIRE(mf_v.size() == 2);
  CHECK(mf_v[0] == mask_of(v, {"a", "c"}));
  CHECK(mf_v[1] == mask_of(v, {"b", "c"}));
}

TEST_CASE("extents on the V poset") {
  FinitePoset v = v_poset();
  MfOracle o = MfOracle::build(v);
  REQUIRE(o.point_count() == 2);
  CHECK(o.extent[v.require_index("c")] == o.full());
  CHECK(o.extent[v.require_index("a")] == mask_bit(*o.point_index(mask_of(v, {"a", "c"}))));
  FinitePoset one = FinitePoset::from_relations("single", {"p"}, {});
  MfOracle o1 = MfOracle::build(one);
  CHECK(o1.point_count() == 1);
  CHECK(o1.extent[0] == 1);
}

TEST_CASE("closure membership on the V poset") {
  FinitePoset v = v_poset();
  CHECK(!v.in_closure(mask_of(v, {"b", "c"}), mask_of(v, {"a"})));
  CHECK(v.in_closure(mask_of(v, {"a", "c"}), mask_of(v, {"a"})));
  auto mf = v.maximal_filters();
  for (Mask m : mf) CHECK(v.in_closure(m, v.all_elements()));
}

TEST_CASE("oracle bound produces a resource error") {
  FinitePoset big = antichain_poset(5);
  CHECK_THROWS_AS(big.maximal_filters(4), resource_error);
  try {
    big.maximal_filters(4);
  } catch (const resource_error& e) {
    CHECK(std::string(e.what()).find("4") != std::string::npos);
  }
}

TEST_CASE("empty poset and bad input rejected") {
  CHECK_THROWS_AS(FinitePoset::from_relations("e", {}, {}), input_error);
  CHECK_THROWS_AS(FinitePoset::from_relations("dup", {"a", "a"}, {}), input_error);
  // Antisymmetry violation after closure.
  CHECK_THROWS_AS(FinitePoset::from_relations("cyc", {"a", "b"}, {{0, 1}, {1, 0}}),
                  input_error);
  FinitePoset v = v_poset();
  CHECK_THROWS_AS(v.require_index("nope"), input_error);
}

TEST_CASE("text format round trip") {
  std::istringstream in(
      "# V-shaped example\n"
      "poset vee\n"
      "elem a\n"
      "elem b\n"
      "elem c\n"
      "le a c\n"
      "le b c\n");
  FinitePoset p = FinitePoset::load(in);
  CHECK(p.name() == "vee");
  CHECK(p.size() == 3);
  CHECK(p.leq(p.require_index("a"), p.require_index("c")));
  CHECK(!p.leq(p.require_index("a"), p.require_index("b")));
  std::ostringstream out;
  p.save(out);
  std::istringstream in2(out.str());
  FinitePoset p2 = FinitePoset::load(in2);
  CHECK(p2.size() == p.size());
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) CHECK(p.leq(i, j) == p2.leq(i, j));
  }
}

TEST_CASE("transitive closure is taken on load") {
  std::istringstream in("poset t\nelem x\nelem y\nelem z\nle x y\nle y z\n");
  FinitePoset p = FinitePoset::load(in);
  CHECK(p.leq(p.require_index("x"), p.require_index("z")));
}

TEST_CASE("parse errors carry line numbers") {
  std::istringstream in("poset t\nelem x\nbogus y\n");
  try {
    FinitePoset::load(in);
    CHECK(false);
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  std::istringstream in2("poset t\nelem x\nle x missing\n");
  CHECK_THROWS_AS(FinitePoset::load(in2), input_error);
}

// Property sweeps over the generated corpus.
TEST_CASE("corpus properties: closure of a pre-filter is a filter") {
  auto shapes = all_posets_upto(5);
  DetRng rng(7);
  for (const auto& shape : shapes) {
    FinitePoset p = shape.realize("g");
    const Mask limit = p.all_elements();
    for (Mask s = 1; s <= limit; ++s) {
      // Pre-filter: nonempty and pairwise compatible within the set.
      bool pre = true;
      mask_for_each(s, [&](int x) {
        mask_for_each(s, [&](int y) {
          if ((p.down_set(x) & p.down_set(y) & s) == 0) pre = false;
        });
      });
      if (pre) CHECK(p.is_filter(p.upward_closure(s)));
    }
  }
}

TEST_CASE("corpus properties: enumerated maximal filters are exactly the maximal ones") {
  auto shapes = all_posets_upto(5);
  for (const auto& shape : shapes) {
    FinitePoset p = shape.realize("g");
    auto mf = p.maximal_filters();
    const Mask limit = p.all_elements();
    for (Mask f : mf) {
      CHECK(p.is_filter(f));
      for (Mask g = 1; g <= limit; ++g) {
        if (g != f && (f & g) == f) CHECK(!p.is_filter(g));
      }
    }
    // Every filter extends to an enumerated maximal one.
    for (Mask g = 1; g <= limit; ++g) {
      if (!p.is_filter(g)) continue;
      bool extended = false;
      for (Mask f : mf) extended = extended || ((g & f) == g);
      CHECK(extended);
    }
  }
}

TEST_CASE("corpus properties: closure agrees with the extent-level complement") {
  auto shapes = all_posets_upto(5);
  for (const auto& shape : shapes) {
    FinitePoset p = shape.realize("g");
    MfOracle o = MfOracle::build(p);
    for (int u = 0; u < p.size(); ++u) {
      Mask uset = mask_bit(u);
      // Elements incompatible with all of U code the exterior.
      Mask exterior = 0;
      for (int r = 0; r < p.size(); ++r) {
        bool incompat_all = true;
        mask_for_each(uset, [&](int q) { incompat_all = incompat_all && !p.compatible(r, q); });
        if (incompat_all) exterior |= o.extent[r];
      }
      Mask cl = o.closure_extent(p, uset);
      CHECK(cl == (o.full() & ~exterior));
    }
  }
}

TEST_CASE("corpus properties: extent monotone in the order") {
  auto shapes = all_posets_upto(5);
  for (const auto& shape : shapes) {
    FinitePoset p = shape.realize("g");
    MfOracle o = MfOracle::build(p);
    for (int i = 0; i < p.size(); ++i) {
      for (int j = 0; j < p.size(); ++j) {
        if (p.leq(i, j)) CHECK((o.extent[i] & ~o.extent[j]) == 0);
      }
    }
  }
}
