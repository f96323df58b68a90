#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "netfield/solver.hpp"

namespace netfield {

struct ClaimResult {
  std::string claim;
  bool pass = false;
  std::string detail;
};

struct PresetReport {
  std::string name;
  std::vector<ClaimResult> claims;

  bool ok() const;
};

/// lemma-fig2a, lemma-fig2b, swirl-example, swirl-theorem, gap-corollary,
/// lowerbound-theorem, combination-fig1, growth-lemma.
const std::vector<std::string>& preset_names();

/// Runs every claim of a preset against its bundled expectations.
/// Throws Error(InvalidParam) for an unknown name.
PresetReport run_preset(std::string_view name, const SearchOptions& options = {});

}  // namespace netfield
