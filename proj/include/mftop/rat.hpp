#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mftop {

// Exact rational arithmetic. All kernel computations that touch the unit
// interval go through mpq_class; nothing in the numeric pipeline rounds.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// 2^-k as an exact rational, k >= 0.
inline Rat pow2_neg(unsigned k) {
  mpz_class den = mpz_class(1) << k;
  Rat q(1, den);
  q.canonicalize();
  return q;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Parses "a/b" or "a". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& text);

std::string rat_str(const Rat& q);

// Height of a reduced rational in [0,1]: its denominator (0 and 1 have
// height 1). Drives the fixed enumerations of rationals and intervals.
unsigned long rat_height(const Rat& q);

// The rational with the smallest height strictly inside (lo, hi),
// ties broken toward the smaller value. Stern-Brocot descent; requires
// lo < hi.
Rat simplest_between(const Rat& lo, const Rat& hi);

}  // namespace mftop
