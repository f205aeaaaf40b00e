#include "mftop/poset_gen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mftop {

FinitePoset PosetShape::realize(const std::string& name) const {
  std::vector<std::string> names;
  for (int i = 0; i < size(); ++i) names.push_back("p" + std::to_string(i));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < size(); ++i) {
    mask_for_each(up[i], [&](int j) {
      if (j != i) pairs.emplace_back(i, j);
    });
  }
  return FinitePoset::from_relations(name, std::move(names), pairs);
}

namespace {

// Iterated refinement signature per element: start from (|down|, |up|) and
// fold in the sorted class ids of the up-set until stable.
std::vector<int> refine_classes(const std::vector<Mask>& up) {
  const int n = static_cast<int>(up.size());
  std::vector<Mask> down(n, 0);
  for (int i = 0; i < n; ++i) {
    mask_for_each(up[i], [&](int j) { down[j] |= mask_bit(i); });
  }
  std::vector<int> cls(n, 0);
  {
    std::vector<std::pair<int, int>> deg(n);
    for (int i = 0; i < n; ++i) deg[i] = {mask_count(down[i]), mask_count(up[i])};
    std::vector<std::pair<int, int>> sorted = deg;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int i = 0; i < n; ++i) {
      cls[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), deg[i]) - sorted.begin());
    }
  }
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (int i = 0; i < n; ++i) {
      sig[i].push_back(cls[i]);
      std::vector<int> ups, downs;
      mask_for_each(up[i], [&](int j) { ups.push_back(cls[j]); });
      mask_for_each(down[i], [&](int j) { downs.push_back(cls[j]); });
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      sig[i].push_back(-1);
      sig[i].insert(sig[i].end(), ups.begin(), ups.end());
      sig[i].push_back(-2);
      sig[i].insert(sig[i].end(), downs.begin(), downs.end());
    }
    std::vector<std::vector<int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) {
      next[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
    }
    if (next == cls) break;
    cls = next;
  }
  return cls;
}

// Flattened matrix as a comparable key under permutation perm
// (perm[i] = new position of old element i).
std::vector<Mask> apply_perm(const std::vector<Mask>& up, const std::vector<int>& perm) {
  const int n = static_cast<int>(up.size());
  std::vector<Mask> out(n, 0);
  for (int i = 0; i < n; ++i) {
    mask_for_each(up[i], [&](int j) { out[perm[i]] |= mask_bit(perm[j]); });
  }
  return out;
}

void minimal_perm_search(const std::vector<Mask>& up, const std::vector<int>& cls,
                         std::vector<int>& perm, std::vector<bool>& used, int pos,
                         std::vector<Mask>& best) {
  const int n = static_cast<int>(up.size());
  if (pos == n) {
    std::vector<Mask> cand = apply_perm(up, perm);
    if (best.empty() || cand < best) best = cand;
    return;
  }
  // Candidates for new position `pos`: unused elements of the smallest
  // eligible class; ordering classes keeps the search tame.
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    bool skip = false;
    for (int j = 0; j < n; ++j) {
      if (!used[j] && j != i && cls[j] < cls[i]) {
        skip = true;  // strictly smaller class must be placed first
        break;
      }
    }
    if (skip) continue;
    used[i] = true;
    perm[i] = pos;
    minimal_perm_search(up, cls, perm, used, pos + 1, best);
    used[i] = false;
  }
}

}  // namespace

std::vector<Mask> canonical_relation(const std::vector<Mask>& up) {
  const int n = static_cast<int>(up.size());
  std::vector<int> cls = refine_classes(up);
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::vector<Mask> best;
  minimal_perm_search(up, cls, perm, used, 0, best);
  return best;
}

namespace {

std::vector<PosetShape> grow_posets(const std::vector<PosetShape>& smaller) {
  std::set<std::vector<Mask>> seen;
  std::vector<PosetShape> out;
  for (const PosetShape& base : smaller) {
    const int m = base.size();
    // Enumerate down-closed subsets of the base.
    std::vector<Mask> down(m, 0);
    for (int i = 0; i < m; ++i) {
      mask_for_each(base.up[i], [&](int j) { down[j] |= mask_bit(i); });
    }
    const Mask limit = (m == 64) ? ~Mask{0} : (mask_bit(m) - 1);
    for (Mask d = 0;; ++d) {
      bool closed = true;
      mask_for_each(d, [&](int j) {
        if ((down[j] & ~d) != 0) closed = false;
      });
      if (closed) {
        std::vector<Mask> up = base.up;
        up.push_back(mask_bit(m));  // new maximal element
        mask_for_each(d, [&](int j) { up[j] |= mask_bit(m); });
        std::vector<Mask> canon = canonical_relation(up);
        if (seen.insert(canon).second) out.push_back(PosetShape{std::move(canon)});
      }
      if (d == limit) break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PosetShape& a, const PosetShape& b) { return a.up < b.up; });
  return out;
}

}  // namespace

std::vector<PosetShape> all_posets(int n) {
  if (n < 1) return {};
  std::vector<PosetShape> cur = {PosetShape{{mask_bit(0)}}};
  for (int k = 2; k <= n; ++k) cur = grow_posets(cur);
  return cur;
}

std::vector<PosetShape> all_posets_upto(int n) {
  if (n < 1) return {};
  std::vector<PosetShape> out;
  std::vector<PosetShape> cur = {PosetShape{{mask_bit(0)}}};
  out.insert(out.end(), cur.begin(), cur.end());
  for (int k = 2; k <= n; ++k) {
    cur = grow_posets(cur);
    out.insert(out.end(), cur.begin(), cur.end());
  }
  return out;
}

FinitePoset chain_poset(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    if (i + 1 < n) pairs.emplace_back(i, i + 1);
  }
  return FinitePoset::from_relations("chain" + std::to_string(n), std::move(names), pairs);
}

FinitePoset antichain_poset(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return FinitePoset::from_relations("antichain" + std::to_string(n), std::move(names), {});
}

FinitePoset v_poset() {
  return FinitePoset::from_relations("vposet", {"a", "b", "c"}, {{0, 2}, {1, 2}});
}

FinitePoset lambda_poset() {
  return FinitePoset::from_relations("lambda", {"z", "x", "y"}, {{0, 1}, {0, 2}});
}

FinitePoset diamond_poset() {
  return FinitePoset::from_relations("diamond", {"bot", "a", "b", "top"},
                                     {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

}  // namespace mftop
