#include "mftop/poset.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mftop {

std::optional<int> FinitePoset::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == id) return static_cast<int>(i);
  }
  return std::nullopt;
}

int FinitePoset::require_index(const std::string& id) const {
  auto i = index_of(id);
  if (!i) throw input_error("unknown element identifier: " + id);
  return *i;
}

FinitePoset FinitePoset::from_relations(
    std::string name, std::vector<std::string> element_names,
    const std::vector<std::pair<int, int>>& pairs) {
  const int n = static_cast<int>(element_names.size());
  if (n == 0) throw input_error("empty poset rejected: no maximal filters exist");
  if (element_names.size() > kMaxPosetElements) {
    throw resource_error("poset exceeds " + std::to_string(kMaxPosetElements) +
                         " elements");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (element_names[i] == element_names[j]) {
        throw input_error("duplicate element identifier: " + element_names[i]);
      }
    }
  }
  std::vector<Mask> up(n);
  for (int i = 0; i < n; ++i) up[i] = mask_bit(i);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw input_error("relation index out of range");
    up[a] |= mask_bit(b);
  }
  // Transitive closure (Warshall over masks).
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      Mask grown = up[i];
      mask_for_each(up[i], [&](int j) { grown |= up[j]; });
      if (grown != up[i]) {
        up[i] = grown;
        changed = true;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && mask_has(up[i], j) && mask_has(up[j], i)) {
        throw input_error("antisymmetry violated between '" + element_names[i] +
                          "' and '" + element_names[j] + "'");
      }
    }
  }
  FinitePoset p;
  p.name_ = std::move(name);
  p.names_ = std::move(element_names);
  p.up_ = std::move(up);
  p.down_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    mask_for_each(p.up_[i], [&](int j) { p.down_[j] |= mask_bit(i); });
  }
  return p;
}

FinitePoset FinitePoset::load(std::istream& in) {
  std::string name = "unnamed";
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> rel_names;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "poset") {
      ls >> name;
    } else if (kw == "elem") {
      std::string id;
      if (!(ls >> id)) throw input_error("line " + std::to_string(lineno) + ": elem needs an identifier");
      elems.push_back(id);
    } else if (kw == "le") {
      std::string a, b;
      if (!(ls >> a >> b)) throw input_error("line " + std::to_string(lineno) + ": le needs two identifiers");
      rel_names.emplace_back(a, b);
    } else {
      throw input_error("line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
    }
  }
  std::vector<std::pair<int, int>> pairs;
  auto find = [&](const std::string& id, int lineno_hint) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i] == id) return static_cast<int>(i);
    }
    static_cast<void>(lineno_hint);
    throw input_error("unknown element identifier: " + id);
  };
  for (auto& [a, b] : rel_names) pairs.emplace_back(find(a, 0), find(b, 0));
  return from_relations(name, elems, pairs);
}

FinitePoset FinitePoset::load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open poset file: " + path);
  return load(f);
}

void FinitePoset::save(std::ostream& out) const {
  out << "poset " << name_ << "\n";
  for (auto& id : names_) out << "elem " << id << "\n";
  for (int i = 0; i < size(); ++i) {
    mask_for_each(up_[i], [&](int j) {
      if (j != i) out << "le " << names_[i] << " " << names_[j] << "\n";
    });
  }
}

Mask FinitePoset::upward_closure(Mask s) const {
  if ((s & ~all_elements()) != 0) throw input_error("element set contains unknown indices");
  Mask out = 0;
  mask_for_each(s, [&](int i) { out |= up_[i]; });
  return out;
}

FilterCheck FinitePoset::check_filter(Mask s) const {
  FilterCheck c;
  if (s == 0) {
    c.fail = FilterCheck::Fail::empty;
    return c;
  }
  Mask ucl = upward_closure(s);
  if (ucl != s) {
    // Witness: some x in s with x <= y, y missing.
    Mask missing = ucl & ~s;
    int y = std::countr_zero(missing);
    mask_for_each(s, [&](int x) {
      if (c.fail == FilterCheck::Fail::none && leq(x, y)) {
        c.fail = FilterCheck::Fail::not_upward_closed;
        c.a = x;
        c.b = y;
      }
    });
    return c;
  }
  bool bad = false;
  mask_for_each(s, [&](int x) {
    if (bad) return;
    mask_for_each(s, [&](int y) {
      if (bad || y < x) return;
      if ((down_[x] & down_[y] & s) == 0) {
        c.fail = FilterCheck::Fail::not_directed;
        c.a = x;
        c.b = y;
        bad = true;
      }
    });
  });
  return c;
}

std::vector<Mask> FinitePoset::maximal_filters(std::size_t bound) const {
  if (static_cast<std::size_t>(size()) > bound) {
    throw resource_error("maximal-filter oracle bound exceeded: " +
                         std::to_string(size()) + " elements > bound " +
                         std::to_string(bound));
  }
  // Exhaustive subset sweep. Subsets are canonicalized through their upward
  // closure first, so the filter test runs once per candidate closure.
  const Mask limit = all_elements();
  std::vector<Mask> filters;
  std::vector<bool> seen(static_cast<std::size_t>(limit) + 1, false);
  for (Mask s = 1; ; ++s) {
    Mask ucl = upward_closure(s);
    if (!seen[ucl]) {
      seen[ucl] = true;
      if (check_filter(ucl).ok()) filters.push_back(ucl);
    }
    if (s == limit) break;
  }
  std::vector<Mask> maximal;
  for (Mask f : filters) {
    bool dominated = false;
    for (Mask g : filters) {
      if (g != f && (f & g) == f) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(f);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

bool FinitePoset::in_closure(Mask filter, Mask u) const {
  bool ok = true;
  mask_for_each(filter, [&](int q) {
    if (!ok) return;
    bool hit = false;
    mask_for_each(u, [&](int p) { hit = hit || compatible(q, p); });
    ok = hit;
  });
  return ok;
}

std::string FinitePoset::mask_names(Mask m) const {
  std::string out = "{";
  bool first = true;
  mask_for_each(m, [&](int i) {
    if (!first) out += ",";
    out += names_[i];
    first = false;
  });
  out += "}";
  return out;
}

MfOracle MfOracle::build(const FinitePoset& p, std::size_t bound) {
  MfOracle o;
  o.points = p.maximal_filters(bound);
  o.extent.assign(p.size(), 0);
  for (int e = 0; e < p.size(); ++e) {
    for (std::size_t m = 0; m < o.points.size(); ++m) {
      if (mask_has(o.points[m], e)) o.extent[e] |= mask_bit(static_cast<int>(m));
    }
  }
  return o;
}

Mask MfOracle::extent_of_set(Mask elems) const {
  Mask out = 0;
  mask_for_each(elems, [&](int p) { out |= extent[p]; });
  return out;
}

Mask MfOracle::closure_extent(const FinitePoset& p, Mask elems) const {
  Mask out = 0;
  for (std::size_t m = 0; m < points.size(); ++m) {
    if (p.in_closure(points[m], elems)) out |= mask_bit(static_cast<int>(m));
  }
  return out;
}

std::optional<int> MfOracle::point_index(Mask filter) const {
  for (std::size_t m = 0; m < points.size(); ++m) {
    if (points[m] == filter) return static_cast<int>(m);
  }
  return std::nullopt;
}

}  // namespace mftop
