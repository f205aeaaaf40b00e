#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mftop/poset_gen.hpp"
#include "mftop/trees.hpp"

using namespace mftop;

namespace {
TreeNode nd(const char* s) { return parse_tree_node(s); }
}  // namespace

TEST_CASE("phi on the smallest tree") {
  PresentedTree t = PresentedTree::explicit_tree({});
  CHECK(t.nodes().size() == 1);
  PresentedTree ph = phi(t);
  CHECK(ph.nodes().size() == 2);
  CHECK(ph.member(nd("e")));
  CHECK(ph.member(nd("*")));
  // One maximal filter: the single starred branch.
  FinitePoset p = tree_poset(ph);
  auto mf = p.maximal_filters();
  CHECK(mf.size() == 1);
}

TEST_CASE("phi doubles explicit trees and stars only terminally") {
  for (const auto& t : all_trees_upto(6)) {
    PresentedTree ph = phi(t);
    CHECK(ph.nodes().size() == 2 * t.nodes().size());
    for (const auto& n : ph.nodes()) {
      for (std::size_t i = 0; i + 1 < n.size(); ++i) CHECK(n[i] != kStar);
    }
  }
}

TEST_CASE("phi membership on the full binary tree") {
  PresentedTree t = PresentedTree::full_kary(2);
  CHECK(t.member(nd("0.1.0")));
  CHECK(!t.member(nd("0.2")));
  PresentedTree ph = phi(t);
  CHECK(ph.member(nd("0.1.0")));
  CHECK(ph.member(nd("0.1.*")));
  CHECK(!ph.member(nd("0.2.*")));
  CHECK(!ph.member(nd("0.*.1")));
}

TEST_CASE("discreteness of the coded space tracks well-foundedness") {
  // Explicit depth-3 chain: discrete.
  PresentedTree chain = PresentedTree::explicit_tree({nd("0.0.0")});
  CHECK(tree_discreteness(chain).verdict == Verdict::holds);
  // Full binary tree: the leftmost path witnesses a limit point.
  ClassReport bin = tree_discreteness(PresentedTree::full_kary(2));
  CHECK(bin.verdict == Verdict::fails);
  CHECK(bin.witness.find("path:0,0,0") != std::string::npos);
  // Comb: the spine is the witness.
  ClassReport comb = tree_discreteness(PresentedTree::comb(0));
  CHECK(comb.verdict == Verdict::fails);
  CHECK(comb.witness.find("path:0,0,0") != std::string::npos);
}

TEST_CASE("star cover tracks well-foundedness, cross-checked by brute force") {
  PresentedTree single = PresentedTree::explicit_tree({});
  CHECK(star_cover_check(single).verdict == Verdict::holds);
  PresentedTree chain = PresentedTree::explicit_tree({nd("0.0")});
  CHECK(star_cover_check(chain).verdict == Verdict::holds);
  CHECK(star_cover_check(PresentedTree::full_kary(2)).verdict == Verdict::fails);
  CHECK(star_cover_check(PresentedTree::comb(1)).verdict == Verdict::fails);
}

TEST_CASE("user predicate trees answer three-valued") {
  // A finite user tree: exhaustive search concludes well-foundedness.
  auto fin_member = [](const TreeNode& n) { return n.size() <= 3; };
  auto fin_branch = [](std::size_t) -> std::uint32_t { return 1; };
  PresentedTree fin = PresentedTree::user(fin_member, fin_branch);
  CHECK(tree_discreteness(fin).verdict == Verdict::holds);
  // An infinite user tree: the bounded search reports budget, never holds.
  auto inf_member = [](const TreeNode& n) {
    for (auto l : n) {
      if (l != 0) return false;
    }
    return true;
  };
  PresentedTree inf = PresentedTree::user(inf_member, fin_branch);
  TreeSearchBudget small;
  small.depth = 12;
  ClassReport r = tree_discreteness(inf, small);
  CHECK(r.verdict == Verdict::budget);
  CHECK(r.witness.find("deepest:") != std::string::npos);
}

TEST_CASE("tree posets put maximal filters on maximal branches") {
  for (const auto& t : all_trees_upto(6)) {
    FinitePoset p = tree_poset(t);
    auto mf = p.maximal_filters();
    // Leaves are the minimal elements; branches are their up-sets.
    std::size_t leaves = 0;
    for (const auto& n : t.nodes()) {
      bool has_child = false;
      for (const auto& m : t.nodes()) {
        if (m.size() == n.size() + 1 && std::equal(n.begin(), n.end(), m.begin())) {
          has_child = true;
          break;
        }
      }
      if (!has_child) ++leaves;
    }
    CHECK(mf.size() == leaves);
    for (Mask f : mf) {
      // Each maximal filter is a chain under the prefix order: any two
      // members are comparable.
      mask_for_each(f, [&](int i) {
        mask_for_each(f, [&](int j) { CHECK((p.leq(i, j) || p.leq(j, i))); });
      });
    }
  }
}

TEST_CASE("the naive prefix direction is wrong for points") {
  // Flipping the order (shorter below longer) makes the whole tree one
  // filter, collapsing the space to a single point; branches are lost.
  PresentedTree t = PresentedTree::explicit_tree({nd("0"), nd("1")});
  const auto& nodes = t.nodes();
  std::vector<std::string> names;
  for (const auto& n : nodes) names.push_back(tree_node_str(n));
  std::vector<std::pair<int, int>> naive_pairs;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (i != j && nodes[i].size() < nodes[j].size() &&
          std::equal(nodes[i].begin(), nodes[i].end(), nodes[j].begin())) {
        naive_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  FinitePoset naive = FinitePoset::from_relations("naive", names, naive_pairs);
  CHECK(naive.maximal_filters().size() == 1);  // one point, not two branches
  CHECK(tree_poset(t).maximal_filters().size() == 2);
}

TEST_CASE("tree upgrades: order agreement, axioms, properness") {
  PresentedTree chain = PresentedTree::explicit_tree({nd("0.0")});
  FiniteHybrid h1 = tree_to_hybrid(chain);
  CHECK(h1.oracle().point_count() == 1);

  // Full binary of depth 2: four isolated points.
  PresentedTree bin = PresentedTree::explicit_tree(
      {nd("0.0"), nd("0.1"), nd("1.0"), nd("1.1")});
  FiniteHybrid h2 = tree_to_hybrid(bin);
  CHECK(h2.oracle().point_count() == 4);
  CHECK(is_discrete(h2.base(), h2.oracle()).verdict == Verdict::holds);

  // Raw trees upgrade to valid regular hybrid spaces.
  for (const auto& t : all_trees_upto(5)) {
    FiniteHybrid h = tree_to_hybrid(t);
    CHECK(validate_axioms(h).all_pass());
    CHECK(is_regular(h.base(), h.oracle()).verdict == Verdict::holds);
  }
  // The prefix order coincides with extent inclusion exactly on branching
  // trees: a node with a single child c has N_sigma = N_c while the order
  // keeps them strictly apart. Properness has the same characterization
  // (the meet clause always holds: compatible nodes are comparable).
  for (const auto& raw : all_trees_upto(5)) {
    for (const PresentedTree* tp : {&raw}) {
      for (int phase = 0; phase < 2; ++phase) {
        PresentedTree t = phase == 0 ? *tp : phi(*tp);
        bool single_child = false;
        for (const auto& n : t.nodes()) {
          int children = 0;
          for (const auto& m : t.nodes()) {
            if (m.size() == n.size() + 1 &&
                std::equal(n.begin(), n.end(), m.begin())) {
              ++children;
            }
          }
          if (children == 1) single_child = true;
        }
        FiniteHybrid h = tree_to_hybrid(t);
        const FinitePoset& base = h.base();
        bool coincide = true;
        for (int i = 0; i < base.size(); ++i) {
          for (int j = 0; j < base.size(); ++j) {
            if (base.leq(i, j) != h.leq_l(h.lift(i), h.lift(j))) coincide = false;
          }
        }
        CHECK(coincide == !single_child);
        CHECK((is_proper(base, h.oracle()).verdict == Verdict::holds) == !single_child);
      }
    }
  }
  // The branching binary tree of depth 2 realizes the coincidence.
  {
    PresentedTree bin = PresentedTree::explicit_tree(
        {nd("0.0"), nd("0.1"), nd("1.0"), nd("1.1")});
    FiniteHybrid h = tree_to_hybrid(bin);
    const FinitePoset& base = h.base();
    for (int i = 0; i < base.size(); ++i) {
      for (int j = 0; j < base.size(); ++j) {
        CHECK(base.leq(i, j) == h.leq_l(h.lift(i), h.lift(j)));
      }
    }
    CHECK(is_proper(base, h.oracle()).verdict == Verdict::holds);
  }
}

TEST_CASE("phi of a finite tree isolates points by starred basics") {
  PresentedTree t = PresentedTree::explicit_tree({nd("0"), nd("1")});
  PresentedTree ph = phi(t);
  FiniteHybrid h = tree_to_hybrid(ph);
  const FinitePoset& base = h.base();
  const auto& o = h.oracle();
  for (int e = 0; e < base.size(); ++e) {
    if (base.element_name(e).find('*') != std::string::npos) {
      CHECK(mask_count(o.extent[e]) == 1);
    }
  }
  CHECK(is_discrete(base, o).verdict == Verdict::holds);
}

TEST_CASE("tree text format") {
  std::istringstream in(
      "tree sample\n"
      "node 0.1\n"
      "node 0.0.*\n");
  PresentedTree t = PresentedTree::load(in);
  CHECK(t.member(nd("e")));
  CHECK(t.member(nd("0")));
  CHECK(t.member(nd("0.1")));
  CHECK(t.member(nd("0.0.*")));
  CHECK(t.phi_applied());
  std::istringstream fam("tree b\nfamily full-binary\n");
  PresentedTree fb = PresentedTree::load(fam);
  CHECK(fb.family() == PresentedTree::Family::full_kary);
  CHECK(fb.kary() == 2);
  std::istringstream comb_in("tree c\nfamily comb spine=3\n");
  PresentedTree cb = PresentedTree::load(comb_in);
  CHECK(cb.spine() == 3);
  CHECK(cb.member(nd("3.3.3")));
  CHECK(cb.member(nd("3.3.0")));
  CHECK(!cb.member(nd("3.0.3")));
}

TEST_CASE("tree corpus counts match the rooted-tree reference values") {
  CHECK(all_trees(1).size() == 1);
  CHECK(all_trees(2).size() == 1);
  CHECK(all_trees(3).size() == 2);
  CHECK(all_trees(4).size() == 4);
  CHECK(all_trees(5).size() == 9);
  CHECK(all_trees(6).size() == 20);
  CHECK(all_trees(7).size() == 48);
  CHECK(all_trees(8).size() == 115);
}

TEST_CASE("differential: discreteness, star cover, and well-foundedness agree") {
  for (const auto& t : all_trees_upto(7)) {
    auto d = tree_discreteness(t);
    auto s = star_cover_check(t);
    CHECK(d.verdict == Verdict::holds);  // finite trees are well-founded
    CHECK(s.verdict == Verdict::holds);
  }
  for (std::uint32_t k = 2; k <= 3; ++k) {
    CHECK(tree_discreteness(PresentedTree::full_kary(k)).verdict == Verdict::fails);
    CHECK(star_cover_check(PresentedTree::full_kary(k)).verdict == Verdict::fails);
  }
  CHECK(tree_discreteness(PresentedTree::comb(2)).verdict == Verdict::fails);
  CHECK(star_cover_check(PresentedTree::comb(2)).verdict == Verdict::fails);
}
