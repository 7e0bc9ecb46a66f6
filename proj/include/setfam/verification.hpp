#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "setfam/bigint.hpp"
#include "setfam/family.hpp"
#include "setfam/rational.hpp"

namespace setfam {

/// A value recorded in a verification report. Everything is exact: integers,
/// rationals, big integers, or plain strings for structural notes.
using ReportValue = std::variant<std::int64_t, Rational, BigInt, bool, std::string>;

/// Machine-readable outcome of one theorem/claim check on one instance.
/// `runtime_ms` is volatile (excluded from the comparable payload when
/// serialised); everything else is deterministic for a given instance.
struct VerificationReport {
  std::string claim_id;
  std::string instance;
  std::map<std::string, ReportValue> computed;
  std::map<std::string, SetFamily> witness_families;
  std::map<std::string, std::vector<SetFamily>> witness_tuples;
  bool passed = false;
  std::uint64_t runtime_ms = 0;

  VerificationReport() = default;
  VerificationReport(std::string claim, std::string inst)
      : claim_id(std::move(claim)), instance(std::move(inst)) {}

  void set(const std::string& key, ReportValue v) { computed[key] = std::move(v); }
  void set_int(const std::string& key, std::int64_t v) { computed[key] = v; }

  /// Records a failed check with a reason; passed stays false.
  void fail(const std::string& reason) {
    passed = false;
    computed["failure"] = reason;
  }
};

}  // namespace setfam
