#include "mftop/interval.hpp"

#include <algorithm>
#include <sstream>

namespace mftop {

RatInterval::RatInterval(Rat lo_, Rat hi_, bool clo, bool chi)
    : lo(std::move(lo_)), hi(std::move(hi_)), closed_lo(clo), closed_hi(chi) {
  if (lo < 0 || hi > 1 || !(lo < hi)) {
    throw input_error("interval out of range or empty: " + str());
  }
  if (closed_lo && lo != 0) throw input_error("closed lower endpoint must be 0");
  if (closed_hi && hi != 1) throw input_error("closed upper endpoint must be 1");
}

bool RatInterval::contains(const Rat& x) const {
  if (x < lo || x > hi) return false;
  if (x == lo) return closed_lo;
  if (x == hi) return closed_hi;
  return true;
}

bool RatInterval::subset_of(const RatInterval& o) const {
  bool lo_ok = (o.lo < lo) || (o.lo == lo && (o.closed_lo || !closed_lo));
  bool hi_ok = (hi < o.hi) || (hi == o.hi && (o.closed_hi || !closed_hi));
  return lo_ok && hi_ok;
}

bool RatInterval::intersects(const RatInterval& o) const {
  return intersect(o).has_value();
}

std::optional<RatInterval> RatInterval::intersect(const RatInterval& o) const {
  Rat l = std::max(lo, o.lo);
  Rat h = std::min(hi, o.hi);
  if (!(l < h)) return std::nullopt;
  bool clo = contains(l) && o.contains(l);
  bool chi = contains(h) && o.contains(h);
  return RatInterval(l, h, clo, chi);
}

std::string RatInterval::str() const {
  std::string out;
  out += closed_lo ? '[' : '(';
  out += rat_str(lo);
  out += ',';
  out += rat_str(hi);
  out += closed_hi ? ']' : ')';
  return out;
}

FiniteUnion FiniteUnion::canonical(std::vector<RatInterval> raw) {
  std::sort(raw.begin(), raw.end(), [](const RatInterval& a, const RatInterval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.closed_lo != b.closed_lo) return a.closed_lo;  // closed endpoint first
    if (a.hi != b.hi) return a.hi < b.hi;
    return a.closed_hi && !b.closed_hi;
  });
  FiniteUnion u;
  for (const RatInterval& i : raw) {
    if (u.parts_.empty()) {
      u.parts_.push_back(i);
      continue;
    }
    RatInterval& last = u.parts_.back();
    // Mergeable iff the point sets overlap (a shared interior endpoint
    // alone leaves a pinhole because interior endpoints are open).
    bool overlap = i.lo < last.hi || (i.lo == last.hi && (last.closed_hi || i.closed_lo));
    if (overlap) {
      bool chi = (i.hi > last.hi) ? i.closed_hi
                                  : (i.hi == last.hi ? (i.closed_hi || last.closed_hi)
                                                     : last.closed_hi);
      Rat hi = std::max(last.hi, i.hi);
      last = RatInterval(last.lo, hi, last.closed_lo, chi);
    } else {
      u.parts_.push_back(i);
    }
  }
  return u;
}

bool FiniteUnion::is_one() const {
  return parts_.size() == 1 && parts_[0] == RatInterval();
}

bool FiniteUnion::contains(const Rat& x) const {
  for (const auto& p : parts_) {
    if (p.contains(x)) return true;
  }
  return false;
}

bool FiniteUnion::subset_of(const FiniteUnion& o) const {
  // Parts are connected and o's parts pairwise separated, so each part
  // must land inside a single part of o.
  for (const auto& p : parts_) {
    bool inside = false;
    for (const auto& q : o.parts_) {
      if (p.subset_of(q)) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

FiniteUnion FiniteUnion::meet(const FiniteUnion& o) const {
  std::vector<RatInterval> out;
  for (const auto& p : parts_) {
    for (const auto& q : o.parts_) {
      if (auto i = p.intersect(q)) out.push_back(*i);
    }
  }
  return canonical(std::move(out));
}

FiniteUnion FiniteUnion::join(const FiniteUnion& o) const {
  std::vector<RatInterval> out = parts_;
  out.insert(out.end(), o.parts_.begin(), o.parts_.end());
  return canonical(std::move(out));
}

FiniteUnion FiniteUnion::pc() const {
  // Complement of the closure. Part closures are [lo,hi]; the gaps are
  // relatively open with closed flags exactly at 0 and 1.
  std::vector<RatInterval> out;
  Rat cursor(0);
  bool at_start = true;
  for (const auto& p : parts_) {
    if (cursor < p.lo) out.emplace_back(cursor, p.lo, at_start, false);
    cursor = p.hi;
    at_start = false;
  }
  if (cursor < 1) out.emplace_back(cursor, Rat(1), at_start, true);
  return canonical(std::move(out));
}

std::vector<std::pair<Rat, Rat>> FiniteUnion::closure_parts() const {
  std::vector<std::pair<Rat, Rat>> out;
  for (const auto& p : parts_) out.emplace_back(p.lo, p.hi);
  return out;
}

bool FiniteUnion::closure_contains(const Rat& x) const {
  for (const auto& p : parts_) {
    if (p.lo <= x && x <= p.hi) return true;
  }
  return false;
}

std::string FiniteUnion::str() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += '+';
    out += parts_[i].str();
  }
  return out;
}

RatInterval parse_interval(const std::string& text) {
  if (text.size() < 5) throw input_error("malformed interval: " + text);
  char open = text.front(), close = text.back();
  if ((open != '(' && open != '[') || (close != ')' && close != ']')) {
    throw input_error("malformed interval: " + text);
  }
  std::string body = text.substr(1, text.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string::npos) throw input_error("malformed interval: " + text);
  Rat lo = parse_rat(body.substr(0, comma));
  Rat hi = parse_rat(body.substr(comma + 1));
  return RatInterval(lo, hi, open == '[', close == ']');
}

FiniteUnion parse_union(const std::string& text) {
  if (text == "0" || text.empty()) return FiniteUnion::zero();
  std::vector<RatInterval> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto next = text.find('+', pos);
    if (next == std::string::npos) next = text.size();
    parts.push_back(parse_interval(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return FiniteUnion::canonical(std::move(parts));
}

const Rat& RationalEnumeration::at(std::size_t n) {
  while (items_.size() <= n) extend();
  return items_[n];
}

std::size_t RationalEnumeration::index_of(const Rat& q) {
  for (std::size_t i = 0;; ++i) {
    if (at(i) == q) return i;
    if (rat_height(items_[i]) > rat_height(q)) {
      throw input_error("rational not in [0,1] enumeration: " + rat_str(q));
    }
  }
}

void RationalEnumeration::extend() {
  if (next_height_ == 1) {
    items_.push_back(Rat(0));
    items_.push_back(Rat(1));
    next_height_ = 2;
    return;
  }
  unsigned long h = next_height_++;
  for (unsigned long num = 1; num < h; ++num) {
    Rat q(static_cast<long>(num), static_cast<long>(h));
    q.canonicalize();
    if (rat_height(q) == h) items_.push_back(q);
  }
}

std::vector<Rat> IntervalEnumeration::rationals_upto(unsigned long h) {
  std::vector<Rat> out;
  out.push_back(Rat(0));
  out.push_back(Rat(1));
  for (unsigned long den = 2; den <= h; ++den) {
    for (unsigned long num = 1; num < den; ++num) {
      Rat q(static_cast<long>(num), static_cast<long>(den));
      q.canonicalize();
      if (rat_height(q) == den) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RatInterval> IntervalEnumeration::at_height(unsigned long h) {
  std::vector<Rat> rats = rationals_upto(h);
  std::vector<RatInterval> out;
  for (std::size_t i = 0; i < rats.size(); ++i) {
    for (std::size_t j = i + 1; j < rats.size(); ++j) {
      const Rat& lo = rats[i];
      const Rat& hi = rats[j];
      if (std::max(rat_height(lo), rat_height(hi)) != h) continue;
      for (int clo = 0; clo < 2; ++clo) {
        if (clo && lo != 0) continue;
        for (int chi = 0; chi < 2; ++chi) {
          if (chi && hi != 1) continue;
          out.emplace_back(lo, hi, clo != 0, chi != 0);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RatInterval& a, const RatInterval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.hi != b.hi) return a.hi < b.hi;
    if (a.closed_lo != b.closed_lo) return !a.closed_lo;
    return !a.closed_hi && b.closed_hi;
  });
  return out;
}

const RatInterval& IntervalEnumeration::at(std::size_t n) {
  while (items_.size() <= n) extend();
  return items_[n];
}

void IntervalEnumeration::extend() {
  ++next_height_;
  auto block = at_height(next_height_);
  items_.insert(items_.end(), block.begin(), block.end());
}

}  // namespace mftop
