#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mftop {

// Malformed files, unknown identifiers, out-of-range arguments.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Desk-scale oracle limits exceeded (poset size, depth bounds).
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A required witness entry was missing or invalid.
struct witness_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A precondition on the mathematical domain failed (point escaped an open,
// non-cover input); carries the witness in what().
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Verdict { holds, fails, budget };

inline const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::budget: return "budget";
  }
  return "?";
}

struct AxiomResult {
  int axiom = 0;
  bool pass = true;
  std::string witness;
};

struct AxiomReport {
  bool structural_ok = true;
  std::string structural_witness;
  std::vector<AxiomResult> axioms;
  bool all_pass() const {
    if (!structural_ok) return false;
    for (auto& a : axioms) {
      if (!a.pass) return false;
    }
    return true;
  }
};

// One key=value record; fields keep insertion order so line output is stable.
class Record {
 public:
  Record& put(std::string key, std::string value) {
    fields_.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Record& put(std::string key, long long value) {
    return put(std::move(key), std::to_string(value));
  }
  Record& put(std::string key, Verdict v) {
    return put(std::move(key), std::string(verdict_str(v)));
  }

  const std::vector<std::pair<std::string, std::string>>& fields() const {
    return fields_;
  }

  std::string line() const {
    std::string out;
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      if (i) out += ' ';
      out += fields_[i].first;
      out += '=';
      out += fields_[i].second;
    }
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace mftop
