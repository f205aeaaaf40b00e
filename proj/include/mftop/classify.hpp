#pragma once

#include <cstdint>
#include <string>

#include "mftop/hybrid.hpp"

namespace mftop {

// Checker outcome; a fails verdict always carries a replayable witness
// (element indices in wa/wb where meaningful).
struct ClassReport {
  std::string property;
  Verdict verdict = Verdict::holds;
  std::string witness;
  int wa = -1, wb = -1;
};

// The proper-space meet clause quantifies over compatible pairs by
// default; the comparable reading is kept behind the flag.
enum class ProperReading { compatible, comparable };

// (i) the order coincides with extent inclusion, and (ii) every
// compatible (or comparable) pair of basics has an exact basic meet.
ClassReport is_proper(const FinitePoset& p, const MfOracle& o,
                      ProperReading reading = ProperReading::compatible);

// cl(N_y) = N_y for every basic y.
ClassReport clopen_basis_check(const FinitePoset& p, const MfOracle& o);

// Every point inside a basic open has a basic neighborhood whose closure
// stays inside.
ClassReport is_regular(const FinitePoset& p, const MfOracle& o);

// The pc-derived witness family, validated for soundness and coverage.
ClassReport is_strongly_regular(const FiniteHybrid& h);

// Interval-presentation route: D_p nonempty for sampled nonempty p, with
// the pc condition checked exactly.
ClassReport interval_strongly_regular(std::size_t samples, std::uint64_t seed);

// Basic-pair separation: disjoint-closure pairs get disjoint basic
// neighborhoods of their closures.
ClassReport is_normal(const FinitePoset& p, const MfOracle& o);

// The hybrid route: separates every disjoint-closure basic pair through
// the normality functionals and reports the separating codes.
ClassReport is_normal_hybrid(const FiniteHybrid& h);

// Every point is isolated by a basic open with singleton extent.
ClassReport is_discrete(const FinitePoset& p, const MfOracle& o);

// Every point contains one of the listed elements.
ClassReport covers(const FinitePoset& p, const MfOracle& o, Mask elems);

}  // namespace mftop
