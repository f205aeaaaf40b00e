#include "mftop/hybrid.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <sstream>

namespace mftop {

namespace {

std::string point_set_name(Mask m) {
  std::string out = "{";
  bool first = true;
  mask_for_each(m, [&](int i) {
    if (!first) out += ",";
    out += "m" + std::to_string(i);
    first = false;
  });
  return out + "}";
}

}  // namespace

FiniteHybrid FiniteHybrid::upgrade(const FinitePoset& base, std::size_t oracle_bound) {
  FiniteHybrid h;
  h.name_ = base.name() + ".upgrade";
  h.extent_form_ = true;
  h.base_ = base;
  h.oracle_ = MfOracle::build(h.base_, oracle_bound);

  // Close the basic extents under union, breadth first.
  std::vector<Mask> worklist = {Mask{0}};
  std::unordered_map<Mask, bool> seen;
  seen[0] = true;
  constexpr std::size_t kLatticeCap = std::size_t{1} << 16;
  for (std::size_t i = 0; i < worklist.size(); ++i) {
    Mask cur = worklist[i];
    for (int p = 0; p < base.size(); ++p) {
      Mask next = cur | h.oracle_.extent[p];
      if (!seen.count(next)) {
        seen[next] = true;
        worklist.push_back(next);
        if (worklist.size() > kLatticeCap) {
          throw resource_error("upgrade lattice exceeds " +
                               std::to_string(kLatticeCap) + " elements");
        }
      }
    }
  }
  std::sort(worklist.begin(), worklist.end());
  h.masks_ = std::move(worklist);
  for (std::size_t i = 0; i < h.masks_.size(); ++i) {
    h.mask_index_[h.masks_[i]] = static_cast<Lat>(i);
    h.lat_names_.push_back(point_set_name(h.masks_[i]));
  }
  h.zero_ = h.mask_index_.at(0);
  h.one_ = h.mask_index_.at(h.oracle_.full());
  h.lift_.resize(base.size());
  for (int p = 0; p < base.size(); ++p) h.lift_[p] = h.mask_index_.at(h.oracle_.extent[p]);
  h.denot_ = h.masks_;
  return h;
}

std::optional<FiniteHybrid::Lat> FiniteHybrid::lat_index(const std::string& id) const {
  for (std::size_t i = 0; i < lat_names_.size(); ++i) {
    if (lat_names_[i] == id) return static_cast<Lat>(i);
  }
  return std::nullopt;
}

bool FiniteHybrid::leq_l(Lat x, Lat y) const {
  if (extent_form_) return (masks_[x] & ~masks_[y]) == 0;
  return leq_[x][y];
}

FiniteHybrid::Lat FiniteHybrid::meet(Lat x, Lat y) const {
  if (extent_form_) {
    auto it = mask_index_.find(masks_[x] & masks_[y]);
    if (it == mask_index_.end()) throw witness_error("meet left the extent lattice");
    return it->second;
  }
  Lat m = meet_tab_[x][y];
  if (m < 0) throw witness_error("meet undefined for " + lat_names_[x] + ", " + lat_names_[y]);
  return m;
}

FiniteHybrid::Lat FiniteHybrid::join(Lat x, Lat y) const {
  if (extent_form_) {
    auto it = mask_index_.find(masks_[x] | masks_[y]);
    if (it == mask_index_.end()) throw witness_error("join left the extent lattice");
    return it->second;
  }
  Lat m = join_tab_[x][y];
  if (m < 0) throw witness_error("join undefined for " + lat_names_[x] + ", " + lat_names_[y]);
  return m;
}

FiniteHybrid::Lat FiniteHybrid::pc(Lat x) const {
  if (extent_form_) {
    Mask out = 0;
    for (int p = 0; p < base_.size(); ++p) {
      if ((oracle_.extent[p] & masks_[x]) == 0) out |= oracle_.extent[p];
    }
    return mask_index_.at(out);
  }
  Lat m = pc_tab_[x];
  if (m < 0) throw witness_error("pc undefined for " + lat_names_[x]);
  return m;
}

Mask FiniteHybrid::basis(Lat x) const {
  Mask out = 0;
  for (int p = 0; p < base_.size(); ++p) {
    if (leq_l(lift_[p], x)) out |= mask_bit(p);
  }
  return out;
}

FiniteHybrid FiniteHybrid::with_pc_override(Lat x, Lat value) const {
  FiniteHybrid h = *this;
  if (h.extent_form_) {
    // Materialize tables so a single entry can be tampered with.
    const int n = lat_size();
    if (n > 512) throw resource_error("pc override requires a small carrier");
    h.extent_form_ = false;
    h.leq_.assign(n, std::vector<bool>(n, false));
    h.meet_tab_.assign(n, std::vector<Lat>(n, -1));
    h.join_tab_.assign(n, std::vector<Lat>(n, -1));
    h.pc_tab_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
      h.pc_tab_[i] = pc(i);
      for (int j = 0; j < n; ++j) {
        h.leq_[i][j] = leq_l(i, j);
        h.meet_tab_[i][j] = meet(i, j);
        h.join_tab_[i][j] = join(i, j);
      }
    }
  }
  h.pc_tab_[x] = value;
  return h;
}

void FiniteHybrid::finish_setup() {
  oracle_ = MfOracle::build(base_);
  denot_.assign(lat_size(), 0);
  for (Lat x = 0; x < lat_size(); ++x) {
    for (int p = 0; p < base_.size(); ++p) {
      if (leq_[lift_[p]][x]) denot_[x] |= oracle_.extent[p];
    }
  }
}

FiniteHybrid FiniteHybrid::load(std::istream& in) {
  FiniteHybrid h;
  h.name_ = "unnamed";
  std::vector<std::string> latt, basic;
  std::vector<std::pair<std::string, std::string>> les;
  std::vector<std::array<std::string, 3>> meets, joins;
  std::vector<std::pair<std::string, std::string>> pcs;
  std::string zero_id, one_id;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    auto need = [&](int k) {
      std::vector<std::string> ids(k);
      for (int i = 0; i < k; ++i) {
        if (!(ls >> ids[i])) {
          throw input_error("line " + std::to_string(lineno) + ": " + kw +
                            " needs " + std::to_string(k) + " identifiers");
        }
      }
      return ids;
    };
    if (kw == "hybrid") {
      ls >> h.name_;
    } else if (kw == "latt") {
      latt.push_back(need(1)[0]);
    } else if (kw == "basic") {
      basic.push_back(need(1)[0]);
    } else if (kw == "le") {
      auto v = need(2);
      les.emplace_back(v[0], v[1]);
    } else if (kw == "meet") {
      auto v = need(3);
      meets.push_back({v[0], v[1], v[2]});
    } else if (kw == "join") {
      auto v = need(3);
      joins.push_back({v[0], v[1], v[2]});
    } else if (kw == "pc") {
      auto v = need(2);
      pcs.emplace_back(v[0], v[1]);
    } else if (kw == "zero") {
      zero_id = need(1)[0];
    } else if (kw == "one") {
      one_id = need(1)[0];
    } else {
      throw input_error("line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
    }
  }
  if (latt.empty()) throw input_error("hybrid file declares no lattice elements");
  const int n = static_cast<int>(latt.size());
  auto idx = [&](const std::string& id) {
    for (int i = 0; i < n; ++i) {
      if (latt[i] == id) return i;
    }
    throw input_error("unknown lattice identifier: " + id);
  };
  h.lat_names_ = latt;
  h.leq_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) h.leq_[i][i] = true;
  for (auto& [a, b] : les) h.leq_[idx(a)][idx(b)] = true;
  for (bool changed = true; changed;) {  // transitive closure
    changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!h.leq_[i][j]) continue;
        for (int k = 0; k < n; ++k) {
          if (h.leq_[j][k] && !h.leq_[i][k]) {
            h.leq_[i][k] = true;
            changed = true;
          }
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && h.leq_[i][j] && h.leq_[j][i]) {
        throw input_error("lattice order not antisymmetric: " + latt[i] + ", " + latt[j]);
      }
    }
  }

  auto unique_bound = [&](int x, int y, bool lower) -> Lat {
    std::vector<int> bounds;
    for (int z = 0; z < n; ++z) {
      bool is_bound = lower ? (h.leq_[z][x] && h.leq_[z][y]) : (h.leq_[x][z] && h.leq_[y][z]);
      if (is_bound) bounds.push_back(z);
    }
    for (int z : bounds) {
      bool extreme = true;
      for (int w : bounds) {
        if (lower ? !h.leq_[w][z] : !h.leq_[z][w]) extreme = false;
      }
      if (extreme) return z;
    }
    return -1;
  };
  h.meet_tab_.assign(n, std::vector<Lat>(n, -1));
  h.join_tab_.assign(n, std::vector<Lat>(n, -1));
  for (auto& m : meets) h.meet_tab_[idx(m[0])][idx(m[1])] = h.meet_tab_[idx(m[1])][idx(m[0])] = idx(m[2]);
  for (auto& j : joins) h.join_tab_[idx(j[0])][idx(j[1])] = h.join_tab_[idx(j[1])][idx(j[0])] = idx(j[2]);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (h.meet_tab_[i][j] < 0) h.meet_tab_[i][j] = unique_bound(i, j, true);
      if (h.join_tab_[i][j] < 0) h.join_tab_[i][j] = unique_bound(i, j, false);
    }
  }
  h.pc_tab_.assign(n, -1);
  for (auto& [a, b] : pcs) h.pc_tab_[idx(a)] = idx(b);

  h.zero_ = -1;
  h.one_ = -1;
  if (!zero_id.empty()) h.zero_ = idx(zero_id);
  if (!one_id.empty()) h.one_ = idx(one_id);
  for (int z = 0; z < n; ++z) {
    bool bot = true, top = true;
    for (int w = 0; w < n; ++w) {
      bot = bot && h.leq_[z][w];
      top = top && h.leq_[w][z];
    }
    if (bot && zero_id.empty()) h.zero_ = z;
    if (top && one_id.empty()) h.one_ = z;
  }
  if (h.zero_ < 0 || h.one_ < 0) throw input_error("lattice bounds undetermined; add zero/one lines");

  // Fill missing pseudo-complements where the carrier determines them:
  // the largest y with x ^ y = 0.
  for (int x = 0; x < n; ++x) {
    if (h.pc_tab_[x] >= 0) continue;
    std::vector<int> disj;
    for (int y = 0; y < n; ++y) {
      if (h.meet_tab_[x][y] == h.zero_) disj.push_back(y);
    }
    for (int y : disj) {
      bool top_of = true;
      for (int w : disj) top_of = top_of && h.leq_[w][y];
      if (top_of) {
        h.pc_tab_[x] = y;
        break;
      }
    }
  }

  if (basic.empty()) throw input_error("hybrid file declares no basic elements");
  std::vector<std::pair<int, int>> base_pairs;
  std::vector<int> basic_idx;
  for (auto& b : basic) basic_idx.push_back(idx(b));
  for (std::size_t i = 0; i < basic_idx.size(); ++i) {
    for (std::size_t j = 0; j < basic_idx.size(); ++j) {
      if (i != j && h.leq_[basic_idx[i]][basic_idx[j]]) {
        base_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  h.base_ = FinitePoset::from_relations(h.name_ + ".basics", basic, base_pairs);
  h.lift_ = basic_idx;
  h.finish_setup();
  return h;
}

FiniteHybrid FiniteHybrid::load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open hybrid file: " + path);
  return load(f);
}

Mask code_denotation(const FiniteHybrid& h, const FiniteOpenCode& u) {
  Mask out = 0;
  for (auto g : u.gens) out |= h.denotation(g);
  return out;
}

FiniteOpenCode open_complement(const FiniteHybrid& h, const FiniteOpenCode& u) {
  FiniteOpenCode out;
  for (int p = 0; p < h.basic_count(); ++p) {
    bool disjoint = true;
    for (auto g : u.gens) {
      if (h.meet(h.lift(p), g) != h.zero()) disjoint = false;
    }
    if (disjoint) out.gens.push_back(h.lift(p));
  }
  return out;
}

FiniteWitness FiniteWitness::build(const FiniteHybrid& h) {
  FiniteWitness w;
  w.space = &h;
  w.d.resize(h.basic_count());
  for (int p = 0; p < h.basic_count(); ++p) {
    for (int r = 0; r < h.basic_count(); ++r) {
      if (h.shrinks_into(r, h.lift(p))) w.d[p].push_back(r);
    }
  }
  return w;
}

namespace {

// Deterministic index subsample for carriers too large for full pair loops.
std::vector<int> sample_indices(int n, int cap) {
  std::vector<int> out;
  if (n <= cap) {
    out.resize(n);
    for (int i = 0; i < n; ++i) out[i] = i;
  } else {
    int step = n / cap;
    for (int i = 0; i < n; i += step) out.push_back(i);
  }
  return out;
}

}  // namespace

AxiomReport validate_axioms(const FiniteHybrid& h) {
  AxiomReport rep;
  const int n = h.lat_size();

  // Lattice laws before any axiom. Mask carriers satisfy them by
  // representation; table carriers are swept exhaustively.
  if (!h.extent_form()) {
    for (int x = 0; x < n && rep.structural_ok; ++x) {
      for (int y = 0; y < n && rep.structural_ok; ++y) {
        FiniteHybrid::Lat m, j;
        try {
          m = h.meet(x, y);
          j = h.join(x, y);
        } catch (const witness_error& e) {
          rep.structural_ok = false;
          rep.structural_witness = e.what();
          break;
        }
        if (h.meet(y, x) != m || h.join(y, x) != j) {
          rep.structural_ok = false;
          rep.structural_witness =
              "commutativity fails at " + h.lat_name(x) + ", " + h.lat_name(y);
        } else if (h.meet(x, h.join(x, y)) != x || h.join(x, h.meet(x, y)) != x) {
          rep.structural_ok = false;
          rep.structural_witness =
              "absorption fails at " + h.lat_name(x) + ", " + h.lat_name(y);
        }
      }
    }
    for (int x = 0; x < n && rep.structural_ok; ++x) {
      for (int y = 0; y < n && rep.structural_ok; ++y) {
        for (int z = 0; z < n && rep.structural_ok; ++z) {
          if (h.meet(h.meet(x, y), z) != h.meet(x, h.meet(y, z)) ||
              h.join(h.join(x, y), z) != h.join(x, h.join(y, z))) {
            rep.structural_ok = false;
            rep.structural_witness = "associativity fails at " + h.lat_name(x) +
                                     ", " + h.lat_name(y) + ", " + h.lat_name(z);
          } else if (h.meet(x, h.join(y, z)) !=
                     h.join(h.meet(x, y), h.meet(x, z))) {
            rep.structural_ok = false;
            rep.structural_witness = "distributivity fails at " + h.lat_name(x) +
                                     ", " + h.lat_name(y) + ", " + h.lat_name(z);
          }
        }
      }
    }
    for (int x = 0; x < n && rep.structural_ok; ++x) {
      if (h.meet(x, h.one()) != x || h.join(x, h.zero()) != x) {
        rep.structural_ok = false;
        rep.structural_witness = "bound identities fail at " + h.lat_name(x);
      }
    }
  }
  if (!rep.structural_ok) return rep;

  const auto& oracle = h.oracle();
  auto lat_sample = sample_indices(n, 2048);
  std::vector<Mask> basis_of(n);
  for (int x = 0; x < n; ++x) basis_of[x] = h.basis(x);

  auto add = [&](int axiom, bool pass, std::string witness) {
    rep.axioms.push_back({axiom, pass, pass ? std::string() : std::move(witness)});
  };

  // 1: the order on P matches the point oracle.
  {
    bool pass = true;
    std::string wit;
    for (int p = 0; p < h.basic_count() && pass; ++p) {
      for (int q = 0; q < h.basic_count() && pass; ++q) {
        bool lhs = h.leq_l(h.lift(p), h.lift(q));
        bool rhs = (oracle.extent[p] & ~oracle.extent[q]) == 0;
        if (lhs != rhs) {
          pass = false;
          wit = h.base().element_name(p) + " vs " + h.base().element_name(q);
        }
      }
    }
    add(1, pass, wit);
  }
  // 2 (finite relaxation): nonzero elements sit above at least one basic.
  {
    bool pass = true;
    std::string wit;
    for (int x = 0; x < n && pass; ++x) {
      if (x != h.zero() && basis_of[x] == 0) {
        pass = false;
        wit = h.lat_name(x);
      }
    }
    add(2, pass, wit);
  }
  // 3: order is basis containment.
  {
    bool pass = true;
    std::string wit;
    for (int xi : lat_sample) {
      for (int yi : lat_sample) {
        bool lhs = h.leq_l(xi, yi);
        bool rhs = (basis_of[xi] & ~basis_of[yi]) == 0;
        if (lhs != rhs) {
          pass = false;
          wit = h.lat_name(xi) + " vs " + h.lat_name(yi);
          break;
        }
      }
      if (!pass) break;
    }
    add(3, pass, wit);
  }
  // 4: B(x ^ y) = B(x) n B(y).
  {
    bool pass = true;
    std::string wit;
    for (int xi : lat_sample) {
      for (int yi : lat_sample) {
        if (basis_of[h.meet(xi, yi)] != (basis_of[xi] & basis_of[yi])) {
          pass = false;
          wit = h.lat_name(xi) + " ^ " + h.lat_name(yi);
          break;
        }
      }
      if (!pass) break;
    }
    add(4, pass, wit);
  }
  // 5: B(x) u B(y) subseteq B(x v y), plus point-level completeness:
  // no point of x v y escapes x u y. The literal basis equality is
  // unsatisfiable once a join merges two opens into a larger basic.
  {
    bool pass = true;
    std::string wit;
    for (int xi : lat_sample) {
      for (int yi : lat_sample) {
        int j = h.join(xi, yi);
        bool sound = ((basis_of[xi] | basis_of[yi]) & ~basis_of[j]) == 0;
        bool complete =
            (h.denotation(j) & ~(h.denotation(xi) | h.denotation(yi))) == 0;
        if (!sound || !complete) {
          pass = false;
          wit = h.lat_name(xi) + " v " + h.lat_name(yi);
          break;
        }
      }
      if (!pass) break;
    }
    add(5, pass, wit);
  }
  // 6: empty basis of a meet forces the meet to 0.
  {
    bool pass = true;
    std::string wit;
    for (int xi : lat_sample) {
      for (int yi : lat_sample) {
        int m = h.meet(xi, yi);
        if (basis_of[m] == 0 && m != h.zero()) {
          pass = false;
          wit = h.lat_name(xi) + " ^ " + h.lat_name(yi);
          break;
        }
      }
      if (!pass) break;
    }
    add(6, pass, wit);
  }
  // 7: a join every point passes through is 1.
  {
    bool pass = true;
    std::string wit;
    for (int xi : lat_sample) {
      for (int yi : lat_sample) {
        int j = h.join(xi, yi);
        if (h.denotation(j) == oracle.full() && j != h.one()) {
          pass = false;
          wit = h.lat_name(xi) + " v " + h.lat_name(yi);
          break;
        }
      }
      if (!pass) break;
    }
    add(7, pass, wit);
  }
  // 8: B(pc(x)) is exactly the set of basics meeting x in 0.
  {
    bool pass = true;
    std::string wit;
    for (int x = 0; x < n && pass; ++x) {
      Mask disjoint = 0;
      for (int y = 0; y < h.basic_count(); ++y) {
        if (h.meet(x, h.lift(y)) == h.zero()) disjoint |= mask_bit(y);
      }
      Mask b = basis_of[h.pc(x)];
      if (b != disjoint) {
        pass = false;
        Mask diff = b ^ disjoint;
        int y = std::countr_zero(diff);
        wit = "pc(" + h.lat_name(x) + ") disagrees at basic " +
              h.base().element_name(y);
      }
    }
    add(8, pass, wit);
  }
  return rep;
}

ArithVerdict is_maximal_filter_arithmetic(const FiniteHybrid& h,
                                          const FiniteWitness& w, Mask filter) {
  auto fc = h.base().check_filter(filter);
  if (!fc.ok()) return {Verdict::fails, "not a filter"};
  for (int p = 0; p < h.basic_count(); ++p) {
    if (mask_has(filter, p)) continue;
    bool clause1 = false;
    mask_for_each(filter, [&](int m) {
      if (h.meet(h.lift(p), h.lift(m)) == h.zero()) clause1 = true;
    });
    if (clause1) continue;
    if (static_cast<std::size_t>(p) >= w.d.size()) {
      throw witness_error("missing D_p entry for basic " + h.base().element_name(p));
    }
    bool clause2 = true;
    for (int r : w.d[p]) {
      bool hit = false;
      mask_for_each(filter, [&](int nmem) {
        if (h.meet(h.lift(r), h.lift(nmem)) == h.zero()) hit = true;
      });
      if (!hit) {
        clause2 = false;
        break;
      }
    }
    if (!clause2) {
      return {Verdict::fails,
              "element " + h.base().element_name(p) + " refutes both clauses"};
    }
  }
  return {Verdict::holds, ""};
}

}  // namespace mftop
