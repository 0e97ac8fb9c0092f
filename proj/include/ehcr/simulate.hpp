// Multi-slot dynamics: per-slot solve, stochastic harvest realizations and
// the residual-energy recursion.
#pragma once

#include "ehcr/oracle.hpp"
#include "ehcr/scenario.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ehcr {

struct SimConfig {
  int slots = 1;
  std::uint64_t seed = 0;

  enum class HarvestModel { kDeterministicMean, kIidUniform };
  HarvestModel harvest_model = HarvestModel::kDeterministicMean;
  // iid model draws rho uniform on [1-spread, 1+spread] * rho_av.
  double harvest_spread = 0.5;

  bool buffer_arrivals = false;  // draw and record a buffer realization per slot

  enum class Solver { kInstant, kOracle };
  Solver solver = Solver::kInstant;
  OracleConfig oracle;
};

struct DeviceSlotRecord {
  double e_res_start_j = 0.0;
  double e_har_j = 0.0;       // realized harvest
  double e_tr_j = 0.0;        // realized transmit energy
  double e_sen_spent_j = 0.0; // zero when the device sat out the slot
  double e_res_end_j = 0.0;
  double rate_bps = 0.0;      // rate at the realized transmit energy
  double mu = 0.0;
  bool dormant = false;       // could not sense or could never transmit
  double buffer_bits = 0.0;   // realized arrival draw when enabled
};

struct SlotRecord {
  int slot = 0;
  std::vector<DeviceSlotRecord> devices;
  double objective = 0.0;  // planned objective from the slot's solve
  bool feasible = false;
  bool solver_ok = true;
  std::string solver_error;
};

std::vector<SlotRecord> run_simulation(const Scenario& scenario, const SimConfig& config);

}  // namespace ehcr
