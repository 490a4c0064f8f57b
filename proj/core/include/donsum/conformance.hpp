#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "donsum/kmseries.hpp"
#include "donsum/qh2.hpp"

namespace donsum {

struct CheckResult {
  std::string id;
  std::string section;
  int criterion = 0;
  std::string description;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// Image of the point class used by the x-insertion check.
  MuXConvention mu_x = MuXConvention::Corrected;
  /// Empty means every section.
  std::vector<std::string> sections;
  std::uint64_t seed = 0x5eed2024;
  /// Random instances per property check (at least 20 are always used).
  unsigned instances = 100;
};

/// ring, matrices, cap, gluing, witten, series.
const std::vector<std::string>& conformance_sections();

/// Throws InvalidArgument for an unknown section name.
std::vector<CheckResult> run_conformance(const VerifyOptions& opts = {});

/// K3 blown up twice, on the reduced lattice (S, E1, E2, D) with S^2 = 2,
/// E_i^2 = -1, S.D = 1: Sigma = S - E1 - E2, w = E1, dbar = D and basic
/// classes +-E1 +-E2 with DD = e^{Q/2} cosh(E2) sinh(E1). SW values are -1.
StructureSeries reference_k3_blowup();

}  // namespace donsum
