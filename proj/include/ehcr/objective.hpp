// The EE/SE tradeoff objective, the imperfect-sensing interference model and
// full feasibility checking with per-constraint slacks.
#pragma once

#include "ehcr/rates.hpp"
#include "ehcr/scenario.hpp"

namespace ehcr {

struct ObjectiveBreakdown {
  Eigen::VectorXd ee_per_user;  // bits/s/J
  Eigen::VectorXd se_per_user;  // eta-weighted tail probabilities
  double total = 0.0;           // sum of both, in user index order
};

struct ConstraintStatus {
  double slack = 0.0;  // native units; >= 0 means satisfied
  bool ok = true;
};

struct FeasibilityReport {
  ConstraintStatus c1_min_rate;        // slack: worst R_k - h(E[X_k]) in bits/s
  ConstraintStatus c2_causality;       // Joules
  ConstraintStatus c3_ap_budget;       // Joules
  ConstraintStatus c4_pu_interference; // Watts, worst PU
  ConstraintStatus c5_channel_once;    // -(count of columns not summing to 1)
  ConstraintStatus c6_binary;          // -(count of non-binary entries)
  ConstraintStatus c7_transmit_energy; // Joules, worst device
  ConstraintStatus c8_mu_interval;     // min distance of mu to {0,1}; ok iff > 0
  Eigen::VectorXd c1_slack_per_user;
  Eigen::VectorXd c4_slack_per_pu;
  bool feasible = false;
};

// R_k divided by the per-user consumption rho*mu*t_d + e_res - e_sen + e_idle.
// Throws DegenerateDenominator when the consumption is <= 0.
double energy_efficiency(const Allocation& allocation, int k, const Scenario& scenario);

// P(X >= bits) for the buffered-bits distribution.
double tail_probability(const BufferDistribution& dist, double bits);

// eta_k * P(X_k >= deliverable bits).
double se_term(const Allocation& allocation, int k, const Scenario& scenario);

// Sensing-error-weighted interference factor of user k at PU m (per Watt
// transmitted); the C4 aggregate multiplies by the transmit power.
double pu_interference(const Allocation& allocation, int k, int m, const Scenario& scenario);

ObjectiveBreakdown evaluate(const Allocation& allocation, const Scenario& scenario);
ObjectiveBreakdown evaluate(const RateContext& ctx, const Allocation& allocation,
                            const Scenario& scenario);

// One user's ee + se contribution; the hot path for solver inner loops.
double user_objective_term(const RateContext& ctx, const Allocation& allocation, int k,
                           const Scenario& scenario);

FeasibilityReport check_feasibility(const Allocation& allocation, const Scenario& scenario);

}  // namespace ehcr
