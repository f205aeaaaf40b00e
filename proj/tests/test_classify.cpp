#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mftop/classify.hpp"
#include "mftop/interval.hpp"
#include "mftop/poset_gen.hpp"

using namespace mftop;

TEST_CASE("properness on the named posets") {
  {
    FinitePoset p = antichain_poset(2);
    MfOracle o = MfOracle::build(p);
    CHECK(is_proper(p, o).verdict == Verdict::holds);
  }
  {
    // z below both x and y: N_x = N_y = the single point, but x, y are
    // incomparable, so the order misses the extent inclusion.
    FinitePoset p = lambda_poset();
    MfOracle o = MfOracle::build(p);
    ClassReport r = is_proper(p, o);
    CHECK(r.verdict == Verdict::fails);
    // The equal-extent pair (x, y) is a violation; the checker may surface
    // it through any pair whose order disagrees with extent inclusion.
    CHECK((o.extent[p.require_index("x")] == o.extent[p.require_index("y")]));
    // Replay the returned witness: the violation is real.
    bool order = p.leq(r.wa, r.wb);
    bool incl = (o.extent[r.wa] & ~o.extent[r.wb]) == 0;
    CHECK(order != incl);
  }
  {
    FinitePoset p = v_poset();
    MfOracle o = MfOracle::build(p);
    CHECK(is_proper(p, o).verdict == Verdict::holds);
  }
}

TEST_CASE("comparable reading stays available behind the flag") {
  FinitePoset p = v_poset();
  MfOracle o = MfOracle::build(p);
  CHECK(is_proper(p, o, ProperReading::compatible).verdict == Verdict::holds);
  CHECK(is_proper(p, o, ProperReading::comparable).verdict == Verdict::holds);
}

TEST_CASE("clopen basis checks") {
  {
    FinitePoset p = FinitePoset::from_relations("one", {"p"}, {});
    MfOracle o = MfOracle::build(p);
    CHECK(clopen_basis_check(p, o).verdict == Verdict::holds);
  }
  // Finite restrictions of the interval space: properness can fail while
  // the basis stays clopen (finite spaces always have clopen bases: the
  // minimal generator of a point is incompatible with every other point's
  // generator).
  {
    // (1/3,1/2) below (1/4,3/4): one point, two basics with equal extents.
    FinitePoset p = FinitePoset::from_relations("sub", {"i1", "i2"}, {{0, 1}});
    MfOracle o = MfOracle::build(p);
    CHECK(is_proper(p, o).verdict == Verdict::fails);
    CHECK(clopen_basis_check(p, o).verdict == Verdict::holds);
  }
}

TEST_CASE("proper implies clopen and regular over the corpus") {
  for (const auto& shape : all_posets_upto(6)) {
    FinitePoset p = shape.realize("g");
    MfOracle o = MfOracle::build(p);
    if (is_proper(p, o).verdict == Verdict::holds) {
      CHECK(clopen_basis_check(p, o).verdict == Verdict::holds);
      CHECK(is_regular(p, o).verdict == Verdict::holds);
    }
  }
}

TEST_CASE("regularity of the named posets") {
  FinitePoset one = FinitePoset::from_relations("one", {"p"}, {});
  MfOracle o1 = MfOracle::build(one);
  CHECK(is_regular(one, o1).verdict == Verdict::holds);
  FinitePoset v = v_poset();
  MfOracle ov = MfOracle::build(v);
  CHECK(is_regular(v, ov).verdict == Verdict::holds);
  // Every finite MF space in the small corpus is regular: the minimal
  // generator of each point has a singleton closed extent.
  for (const auto& shape : all_posets_upto(5)) {
    FinitePoset p = shape.realize("g");
    MfOracle o = MfOracle::build(p);
    CHECK(is_regular(p, o).verdict == Verdict::holds);
  }
}

TEST_CASE("strong regularity via the pc condition") {
  FiniteHybrid h = FiniteHybrid::upgrade(v_poset());
  CHECK(is_strongly_regular(h).verdict == Verdict::holds);
  CHECK(interval_strongly_regular(64, 5).verdict == Verdict::holds);
}

TEST_CASE("normality with basic witnesses and the nu route") {
  FinitePoset anti = antichain_poset(2);
  MfOracle o = MfOracle::build(anti);
  CHECK(is_normal(anti, o).verdict == Verdict::holds);
  FinitePoset one = FinitePoset::from_relations("one", {"p"}, {});
  MfOracle o1 = MfOracle::build(one);
  CHECK(is_normal(one, o1).verdict == Verdict::holds);  // vacuous
  // Hybrid route across the small corpus.
  for (const auto& shape : all_posets_upto(5)) {
    FinitePoset p = shape.realize("g");
    FiniteHybrid h = FiniteHybrid::upgrade(p);
    CHECK(is_normal_hybrid(h).verdict == Verdict::holds);
  }
}

TEST_CASE("discreteness and covers") {
  FinitePoset anti = antichain_poset(2);
  MfOracle oa = MfOracle::build(anti);
  CHECK(is_discrete(anti, oa).verdict == Verdict::holds);
  FinitePoset v = v_poset();
  MfOracle ov = MfOracle::build(v);
  Mask ab = mask_bit(v.require_index("a")) | mask_bit(v.require_index("b"));
  CHECK(covers(v, ov, ab).verdict == Verdict::holds);
  ClassReport r = covers(v, ov, mask_bit(v.require_index("a")));
  CHECK(r.verdict == Verdict::fails);
  CHECK(r.witness.find("b") != std::string::npos);
  CHECK(r.witness.find("c") != std::string::npos);
  // Replay: the uncovered point really misses a.
  CHECK((ov.points[r.wa] & mask_bit(v.require_index("a"))) == 0);
}

TEST_CASE("fails witnesses replay through the oracle") {
  for (const auto& shape : all_posets_upto(5)) {
    FinitePoset p = shape.realize("g");
    MfOracle o = MfOracle::build(p);
    ClassReport r = is_discrete(p, o);
    if (r.verdict == Verdict::fails) {
      // The witness point is isolated by no basic open.
      for (int e = 0; e < p.size(); ++e) CHECK(o.extent[e] != mask_bit(r.wa));
    }
    ClassReport pr = is_proper(p, o);
    if (pr.verdict == Verdict::fails && pr.witness.find("mismatch") != std::string::npos) {
      bool order = p.leq(pr.wa, pr.wb);
      bool incl = (o.extent[pr.wa] & ~o.extent[pr.wb]) == 0;
      CHECK(order != incl);
    }
  }
}
