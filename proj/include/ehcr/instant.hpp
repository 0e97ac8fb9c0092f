// Two-phase greedy solver: minimum-rate channel pass, marginal-objective
// channel pass, then per-user harvesting-ratio local optimization behind a
// feasibility gate.
#pragma once

#include "ehcr/objective.hpp"
#include "ehcr/scenario.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ehcr {

struct AssignmentEvent {
  int channel = 0;
  int user = 0;
  double rate_bps = 0.0;     // winning user's running rate at decision time
  bool min_rate_pass = true; // false for the marginal-objective pass
};

struct MuDecision {
  int user = 0;
  double mu_before = 0.0;
  double mu_candidate = 0.0;
  bool accepted = false;
  std::string rejection_reason;  // empty when accepted
};

struct SolverTrace {
  std::vector<AssignmentEvent> assignment_events;  // exactly N entries
  std::vector<MuDecision> mu_decisions;            // exactly K entries
  long allocation_phase_evaluations = 0;           // bounded by K*N
  long mu_phase_evaluations = 0;
};

struct SolveReport {
  std::string solver;
  double objective = 0.0;
  Eigen::VectorXd ee_per_user;
  Eigen::VectorXd se_per_user;
  Eigen::VectorXd rate_per_user;
  FeasibilityReport feasibility;
  bool min_rate_satisfiable = true;  // channel pass covered every C1 target
  double wall_seconds = 0.0;
  std::uint64_t scenario_fingerprint = 0;
  // Exact-solver extras.
  long assignments_enumerated = 0;
  double grid_objective_tolerance = 0.0;  // objective variation across one mu grid step
};

struct InstantResult {
  Allocation allocation;
  SolveReport report;
  SolverTrace trace;
};

InstantResult solve_instant(const Scenario& scenario);

// Maximizer of user k's ee + se over [mu_min + eps, 1 - eps] with the channel
// set fixed: 256-point grid then golden-section refinement to 1e-6 on mu,
// ties toward smaller mu.
double optimize_mu_local(const Scenario& scenario, const Allocation& allocation, int k);

}  // namespace ehcr
