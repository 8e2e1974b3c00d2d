#pragma once

#include <string>
#include <vector>

namespace hullcode {

// One row of the built-in worked-example suite. Each row rebuilds a small
// frozen instance from scratch — a specific code, construction, or identity —
// and re-derives every recorded fact about it. Nothing is cached between
// runs, so a row only passes when the library still computes the same
// parameters, hulls, determinants, and witnesses that were frozen when the
// row was written.
struct VerifyResult {
  std::string id;       // stable row identifier, e.g. "lcd-gf8-n10"
  std::string summary;  // one line saying what the row covers
  bool pass;
  std::string detail;   // first mismatch when failing; check count when passing
};

// Row identifiers in execution order.
std::vector<std::string> verify_ids();

// Runs the whole suite, or a single row when `only` names one.
// Unknown `only` -> PreconditionError listing the known ids.
std::vector<VerifyResult> run_verify(const std::string& only = "");

}  // namespace hullcode
