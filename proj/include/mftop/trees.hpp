#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "mftop/classify.hpp"
#include "mftop/hybrid.hpp"

namespace mftop {

// Nodes are finite sequences over the naturals, possibly ending in the
// star symbol after the coding map has been applied.
constexpr std::uint32_t kStar = 0xffffffffu;
using TreeNode = std::vector<std::uint32_t>;

std::string tree_node_str(const TreeNode& n);
TreeNode parse_tree_node(const std::string& text);

// A tree as a decidable membership predicate plus a branching bound per
// depth; the family tag selects a sound well-foundedness oracle where one
// exists. Explicit trees store their nodes.
class PresentedTree {
 public:
  enum class Family { explicit_finite, full_kary, comb, user_predicate };

  static PresentedTree explicit_tree(std::vector<TreeNode> nodes);
  static PresentedTree full_kary(std::uint32_t k);
  static PresentedTree comb(std::uint32_t spine_label);
  static PresentedTree user(std::function<bool(const TreeNode&)> member,
                            std::function<std::uint32_t(std::size_t)> branching);

  // Text format: `tree <name>`, `node 0.1.1` lines (dot-separated labels,
  // `*` allowed as a final label), or a `family full-binary`,
  // `family full-ary k=<k>`, `family comb spine=<s>` line.
  static PresentedTree load(std::istream& in);
  static PresentedTree load_file(const std::string& path);

  Family family() const { return family_; }
  const std::string& name() const { return name_; }
  bool phi_applied() const { return phi_applied_; }
  bool member(const TreeNode& n) const;
  std::uint32_t branching_bound(std::size_t depth) const;
  // Explicit trees only: all nodes including the root.
  const std::vector<TreeNode>& nodes() const;
  std::uint32_t kary() const { return k_; }
  std::uint32_t spine() const { return spine_; }

  friend PresentedTree phi(const PresentedTree& t);

 private:
  PresentedTree() = default;
  Family family_ = Family::explicit_finite;
  std::string name_ = "tree";
  bool phi_applied_ = false;
  std::vector<TreeNode> nodes_;  // explicit form, sorted
  std::uint32_t k_ = 0, spine_ = 0;
  std::function<bool(const TreeNode&)> user_member_;
  std::function<std::uint32_t(std::size_t)> user_branching_;
};

// The coding map: adds a terminal star child to every node of T.
PresentedTree phi(const PresentedTree& t);

struct TreeSearchBudget {
  std::size_t depth = 64;
  std::size_t nodes = 100000;
};

// Discreteness of the coded space, equivalent to well-foundedness of the
// tree. Family oracles answer the known-infinite families with the witness
// limit scheme; user-predicate trees get a bounded search and never a
// holds-by-search claim beyond exhaustion within the branching bounds.
ClassReport tree_discreteness(const PresentedTree& t,
                              const TreeSearchBudget& budget = {});

// Whether the star children cover the coded space; the same
// well-foundedness dichotomy, cross-checked by brute force on explicit
// finite trees.
ClassReport star_cover_check(const PresentedTree& t,
                             const TreeSearchBudget& budget = {});

// The tree as a poset: longer sequences are smaller, so maximal filters
// are maximal branches.
FinitePoset tree_poset(const PresentedTree& t);

// Extent-lattice upgrade of an explicit finite tree.
FiniteHybrid tree_to_hybrid(const PresentedTree& t);

// Every rooted tree with exactly n nodes, one representative per
// isomorphism class, children in canonical order.
std::vector<PresentedTree> all_trees(int n);
std::vector<PresentedTree> all_trees_upto(int n);

}  // namespace mftop
