#include "mftop/trees.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace mftop {

std::string tree_node_str(const TreeNode& n) {
  if (n.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i) out += '.';
    out += (n[i] == kStar) ? "*" : std::to_string(n[i]);
  }
  return out;
}

TreeNode parse_tree_node(const std::string& text) {
  TreeNode node;
  if (text == "e" || text.empty()) return node;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto dot = text.find('.', pos);
    if (dot == std::string::npos) dot = text.size();
    std::string label = text.substr(pos, dot - pos);
    if (label == "*") {
      node.push_back(kStar);
    } else {
      try {
        node.push_back(static_cast<std::uint32_t>(std::stoul(label)));
      } catch (...) {
        throw input_error("malformed tree node label: " + label);
      }
    }
    pos = dot + 1;
    if (dot == text.size()) break;
  }
  return node;
}

PresentedTree PresentedTree::explicit_tree(std::vector<TreeNode> nodes) {
  std::set<TreeNode> closed;
  closed.insert(TreeNode{});
  for (auto& n : nodes) {
    for (std::size_t len = 1; len <= n.size(); ++len) {
      TreeNode prefix(n.begin(), n.begin() + static_cast<long>(len));
      closed.insert(prefix);
    }
  }
  for (const auto& n : closed) {
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
      if (n[i] == kStar) throw input_error("star label must be terminal: " + tree_node_str(n));
    }
  }
  PresentedTree t;
  t.family_ = Family::explicit_finite;
  t.nodes_.assign(closed.begin(), closed.end());
  for (const auto& n : t.nodes_) {
    if (!n.empty() && n.back() == kStar) {
      t.phi_applied_ = true;
      break;
    }
  }
  return t;
}

PresentedTree PresentedTree::full_kary(std::uint32_t k) {
  if (k == 0) throw input_error("branching factor must be positive");
  PresentedTree t;
  t.family_ = Family::full_kary;
  t.k_ = k;
  t.name_ = "full-" + std::to_string(k) + "-ary";
  return t;
}

PresentedTree PresentedTree::comb(std::uint32_t spine_label) {
  PresentedTree t;
  t.family_ = Family::comb;
  t.spine_ = spine_label;
  t.name_ = "comb";
  return t;
}

PresentedTree PresentedTree::user(std::function<bool(const TreeNode&)> member,
                                  std::function<std::uint32_t(std::size_t)> branching) {
  PresentedTree t;
  t.family_ = Family::user_predicate;
  t.user_member_ = std::move(member);
  t.user_branching_ = std::move(branching);
  t.name_ = "user";
  return t;
}

namespace {
std::uint32_t comb_tooth(std::uint32_t spine) { return spine == 0 ? 1 : 0; }
}  // namespace

bool PresentedTree::member(const TreeNode& n) const {
  if (family_ == Family::explicit_finite) {
    return std::binary_search(nodes_.begin(), nodes_.end(), n);
  }
  TreeNode base = n;
  if (phi_applied_ && !base.empty() && base.back() == kStar) base.pop_back();
  for (auto label : base) {
    if (label == kStar) return false;  // star is only a terminal phi label
  }
  switch (family_) {
    case Family::full_kary:
      for (auto label : base) {
        if (label >= k_) return false;
      }
      return true;
    case Family::comb: {
      // The spine s^j, plus one tooth leaf per spine node.
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (base[i] == spine_) continue;
        if (base[i] == comb_tooth(spine_) && i + 1 == base.size()) return true;
        return false;
      }
      return true;
    }
    case Family::user_predicate:
      return user_member_(base);
    default:
      return false;
  }
}

std::uint32_t PresentedTree::branching_bound(std::size_t depth) const {
  switch (family_) {
    case Family::explicit_finite: {
      std::uint32_t mx = 0;
      for (const auto& n : nodes_) {
        if (n.size() == depth + 1 && n.back() != kStar) mx = std::max(mx, n.back());
      }
      return mx;
    }
    case Family::full_kary:
      return k_ - 1;
    case Family::comb:
      return std::max(spine_, comb_tooth(spine_));
    case Family::user_predicate:
      return user_branching_(depth);
  }
  return 0;
}

const std::vector<TreeNode>& PresentedTree::nodes() const {
  if (family_ != Family::explicit_finite) {
    throw input_error("node list is only available for explicit trees");
  }
  return nodes_;
}

PresentedTree phi(const PresentedTree& t) {
  if (t.phi_applied_) throw input_error("coding map already applied");
  if (t.family_ == PresentedTree::Family::explicit_finite) {
    std::vector<TreeNode> doubled = t.nodes_;
    for (const auto& n : t.nodes_) {
      TreeNode starred = n;
      starred.push_back(kStar);
      doubled.push_back(starred);
    }
    PresentedTree out = PresentedTree::explicit_tree(std::move(doubled));
    out.name_ = t.name_;
    out.phi_applied_ = true;
    return out;
  }
  PresentedTree out = t;
  out.phi_applied_ = true;
  return out;
}

PresentedTree PresentedTree::load(std::istream& in) {
  std::string line, name = "tree";
  std::vector<TreeNode> nodes;
  std::optional<PresentedTree> family;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "tree") {
      ls >> name;
    } else if (kw == "node") {
      std::string spec;
      if (!(ls >> spec)) throw input_error("line " + std::to_string(lineno) + ": node needs labels");
      nodes.push_back(parse_tree_node(spec));
    } else if (kw == "family") {
      std::string fam;
      if (!(ls >> fam)) throw input_error("line " + std::to_string(lineno) + ": family needs a tag");
      if (fam == "full-binary") {
        family = full_kary(2);
      } else if (fam == "full-ary") {
        std::string arg;
        ls >> arg;
        if (arg.rfind("k=", 0) != 0) throw input_error("full-ary needs k=<n>");
        family = full_kary(static_cast<std::uint32_t>(std::stoul(arg.substr(2))));
      } else if (fam == "comb") {
        std::string arg;
        ls >> arg;
        std::uint32_t spine = 0;
        if (arg.rfind("spine=", 0) == 0) spine = static_cast<std::uint32_t>(std::stoul(arg.substr(6)));
        family = comb(spine);
      } else {
        throw input_error("line " + std::to_string(lineno) + ": unknown family '" + fam + "'");
      }
    } else {
      throw input_error("line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
    }
  }
  if (family) {
    family->name_ = name;
    return *family;
  }
  PresentedTree t = explicit_tree(std::move(nodes));
  t.name_ = name;
  return t;
}

PresentedTree PresentedTree::load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open tree file: " + path);
  return load(f);
}

namespace {

// Bounded depth-first search for an infinite path; three-valued.
struct DfsResult {
  Verdict verdict;
  TreeNode deepest;
};

DfsResult bounded_path_search(const PresentedTree& t, const TreeSearchBudget& budget) {
  TreeNode path;
  TreeNode deepest;
  std::size_t visited = 0;
  bool truncated = false;
  std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
    if (depth >= budget.depth) return true;  // suspiciously deep: report budget
    if (++visited > budget.nodes) {
      truncated = true;
      return false;
    }
    std::uint32_t bound = t.branching_bound(depth);
    for (std::uint32_t label = 0; label <= bound; ++label) {
      path.push_back(label);
      if (t.member(path)) {
        if (path.size() > deepest.size()) deepest = path;
        if (dfs(depth + 1)) return true;
      }
      path.pop_back();
      if (truncated) return false;
    }
    return false;
  };
  if (dfs(0)) return {Verdict::budget, deepest};
  if (truncated) return {Verdict::budget, deepest};
  return {Verdict::holds, deepest};
}

std::string limit_witness(std::uint32_t label) {
  std::string l = std::to_string(label);
  return "path:" + l + "," + l + "," + l + ",...";
}

// Well-foundedness of the underlying tree, family-dispatched; holds means
// well-founded.
ClassReport well_founded_oracle(const PresentedTree& t, const TreeSearchBudget& budget) {
  ClassReport rep;
  rep.property = "well-founded";
  switch (t.family()) {
    case PresentedTree::Family::explicit_finite:
      return rep;
    case PresentedTree::Family::full_kary:
      rep.verdict = Verdict::fails;
      rep.witness = limit_witness(0);
      return rep;
    case PresentedTree::Family::comb:
      rep.verdict = Verdict::fails;
      rep.witness = limit_witness(t.spine());
      return rep;
    case PresentedTree::Family::user_predicate: {
      auto r = bounded_path_search(t, budget);
      rep.verdict = r.verdict;
      if (r.verdict != Verdict::holds) {
        rep.witness = "deepest:" + tree_node_str(r.deepest);
      }
      return rep;
    }
  }
  return rep;
}

Mask star_elements(const FinitePoset& p, const PresentedTree& ph) {
  Mask stars = 0;
  const auto& nodes = ph.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].empty() && nodes[i].back() == kStar) stars |= mask_bit(static_cast<int>(i));
  }
  static_cast<void>(p);
  return stars;
}

}  // namespace

ClassReport tree_discreteness(const PresentedTree& t, const TreeSearchBudget& budget) {
  ClassReport rep = well_founded_oracle(t, budget);
  rep.property = "discrete";
  if (rep.verdict != Verdict::holds) return rep;
  if (t.family() == PresentedTree::Family::explicit_finite) {
    // Cross-check by brute force when the oracle bound allows: in the
    // coded space every point must be isolated.
    PresentedTree ph = t.phi_applied() ? t : phi(t);
    if (ph.nodes().size() <= kDefaultOracleBound) {
      FinitePoset poset = tree_poset(ph);
      MfOracle o = MfOracle::build(poset);
      ClassReport iso = is_discrete(poset, o);
      if (iso.verdict != Verdict::holds) {
        rep.verdict = iso.verdict;
        rep.witness = "brute-force cross-check: " + iso.witness;
      }
    }
  }
  return rep;
}

ClassReport star_cover_check(const PresentedTree& t, const TreeSearchBudget& budget) {
  ClassReport rep = well_founded_oracle(t, budget);
  rep.property = "star-cover";
  if (rep.verdict != Verdict::holds) return rep;
  if (t.family() == PresentedTree::Family::explicit_finite) {
    PresentedTree ph = t.phi_applied() ? t : phi(t);
    if (ph.nodes().size() <= kDefaultOracleBound) {
      FinitePoset poset = tree_poset(ph);
      MfOracle o = MfOracle::build(poset);
      ClassReport cov = covers(poset, o, star_elements(poset, ph));
      if (cov.verdict != Verdict::holds) {
        rep.verdict = cov.verdict;
        rep.witness = "brute-force cross-check: " + cov.witness;
      }
    }
  }
  return rep;
}

FinitePoset tree_poset(const PresentedTree& t) {
  const auto& nodes = t.nodes();
  std::vector<std::string> names;
  names.reserve(nodes.size());
  for (const auto& n : nodes) names.push_back(tree_node_str(n));
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (i == j) continue;
      // sigma <= tau iff tau is a prefix of sigma: longer nodes are smaller.
      const TreeNode& sigma = nodes[i];
      const TreeNode& tau = nodes[j];
      if (tau.size() < sigma.size() && std::equal(tau.begin(), tau.end(), sigma.begin())) {
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return FinitePoset::from_relations(t.name() + ".poset", std::move(names), pairs);
}

FiniteHybrid tree_to_hybrid(const PresentedTree& t) {
  return FiniteHybrid::upgrade(tree_poset(t), std::max<std::size_t>(kDefaultOracleBound,
                                                                    t.nodes().size()));
}

namespace {

// Canonical encodings of rooted trees by size: a tree is "(" + the sorted
// encodings of its subtrees + ")".
const std::vector<std::string>& tree_encodings(int n) {
  static std::vector<std::vector<std::string>> by_size = {{}};  // index 0 unused
  while (static_cast<int>(by_size.size()) <= n) {
    int size = static_cast<int>(by_size.size());
    std::vector<std::string> out;
    if (size == 1) {
      out.push_back("()");
    } else {
      // Child sequences with non-decreasing encodings summing to size-1.
      std::vector<std::string> acc;
      std::function<void(int, const std::string&)> rec = [&](int remaining,
                                                             const std::string& min_enc) {
        if (remaining == 0) {
          std::string enc = "(";
          for (const auto& c : acc) enc += c;
          enc += ")";
          out.push_back(enc);
          return;
        }
        for (int child = 1; child <= remaining; ++child) {
          for (const auto& enc : by_size[child]) {
            if (enc < min_enc) continue;
            acc.push_back(enc);
            rec(remaining - child, enc);
            acc.pop_back();
          }
        }
      };
      rec(size - 1, "");
    }
    std::sort(out.begin(), out.end());
    by_size.push_back(std::move(out));
  }
  return by_size[n];
}

void materialize(const std::string& enc, std::size_t& pos, TreeNode& path,
                 std::vector<TreeNode>& nodes) {
  // pos sits just after the '(' of this subtree.
  nodes.push_back(path);
  std::uint32_t label = 0;
  while (enc[pos] == '(') {
    ++pos;
    path.push_back(label++);
    materialize(enc, pos, path, nodes);
    path.pop_back();
  }
  ++pos;  // consume ')'
}

}  // namespace

std::vector<PresentedTree> all_trees(int n) {
  std::vector<PresentedTree> out;
  if (n < 1) return out;
  for (const auto& enc : tree_encodings(n)) {
    std::vector<TreeNode> nodes;
    TreeNode path;
    std::size_t pos = 1;
    materialize(enc, pos, path, nodes);
    out.push_back(PresentedTree::explicit_tree(std::move(nodes)));
  }
  return out;
}

std::vector<PresentedTree> all_trees_upto(int n) {
  std::vector<PresentedTree> out;
  for (int k = 1; k <= n; ++k) {
    auto sized = all_trees(k);
    out.insert(out.end(), sized.begin(), sized.end());
  }
  return out;
}

}  // namespace mftop
