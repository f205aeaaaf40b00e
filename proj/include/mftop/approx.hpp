#pragma once

#include <algorithm>

#include "mftop/rat.hpp"
#include "mftop/report.hpp"

namespace mftop {

// A certified bracket: the represented real lies in
// [center - radius, center + radius]. Arithmetic widens soundly and stays
// exact (rational endpoints).
struct ApproxReal {
  Rat center{0};
  Rat radius{0};

  ApproxReal() = default;
  ApproxReal(Rat c, Rat r) : center(std::move(c)), radius(std::move(r)) {
    if (radius < 0) throw input_error("negative bracket radius");
  }
  static ApproxReal exact(Rat v) { return ApproxReal(std::move(v), Rat(0)); }
  static ApproxReal from_bounds(const Rat& lo, const Rat& hi) {
    if (hi < lo) throw input_error("inverted bracket");
    return ApproxReal((lo + hi) / 2, (hi - lo) / 2);
  }

  Rat lower() const { return center - radius; }
  Rat upper() const { return center + radius; }

  ApproxReal operator+(const ApproxReal& o) const {
    return ApproxReal(center + o.center, radius + o.radius);
  }
  ApproxReal operator-(const ApproxReal& o) const {
    return ApproxReal(center - o.center, radius + o.radius);
  }
  ApproxReal abs() const {
    Rat lo = lower(), hi = upper();
    if (lo >= 0) return *this;
    if (hi <= 0) return ApproxReal(-center, radius);
    return from_bounds(Rat(0), std::max(Rat(-lo), hi));
  }
  ApproxReal scaled(const Rat& s) const {
    return ApproxReal(center * s, radius * rat_abs(s));
  }
  // Reciprocal; requires a bracket strictly above zero.
  ApproxReal recip() const {
    if (!(lower() > 0)) throw domain_error("reciprocal of a bracket touching zero");
    return from_bounds(Rat(1) / upper(), Rat(1) / lower());
  }
  ApproxReal min_with(const Rat& cap) const {
    return from_bounds(std::min(lower(), cap), std::min(upper(), cap));
  }

  bool contains(const Rat& v) const { return lower() <= v && v <= upper(); }
  bool excludes_zero() const { return lower() > 0; }

  std::string str() const { return rat_str(center) + " \xc2\xb1 " + rat_str(radius); }
};

}  // namespace mftop
