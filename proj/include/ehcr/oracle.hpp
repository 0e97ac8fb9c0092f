// Exhaustive exact solver for small instances: enumerates the K^N complete
// channel assignments and grid-optimizes the harvesting ratios per
// assignment. Ground truth for the heuristic's optimality gap.
#pragma once

#include "ehcr/instant.hpp"

namespace ehcr {

struct OracleConfig {
  int mu_grid_points = 64;
  long max_assignments = 2'000'000;
  int coordinate_descent_rounds = 3;
  // Joint grid^K search instead of coordinate descent; K <= 3 only.
  bool strict_joint_grid = false;
};

struct OracleResult {
  Allocation allocation;
  SolveReport report;
};

OracleResult solve_oracle(const Scenario& scenario, const OracleConfig& config = {});

// 100 * (oracle - instant) / oracle, clamped below at the oracle's
// grid-resolution tolerance. Throws MismatchedScenario when the reports come
// from different scenarios.
double gap_percent(const SolveReport& instant_report, const SolveReport& oracle_report);

}  // namespace ehcr
