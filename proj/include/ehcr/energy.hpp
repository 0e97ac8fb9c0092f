// Per-slot energy bookkeeping: harvest, causality budget, transmit power and
// the residual-energy recursion.
#pragma once

#include "ehcr/scenario.hpp"

namespace ehcr {

struct EnergyLedger {
  double e_har_j = 0.0;
  double e_tr_j = 0.0;
  double e_idle_j = 0.0;
  double e_con_j = 0.0;      // e_tr + e_sen + e_idle
  double e_res_next_j = 0.0; // residual at the start of the next slot
};

// rho_av * mu * t_d.
double harvested_energy(double rho_av_w, double mu, double t_d_s);

// Causality budget e_res + e_har(mu) - 2*e_sen. May be negative; a negative
// value is the C7 infeasibility signal, not an error.
double max_transmit_energy(const Device& device, double mu, const SlotTiming& timing);

// Root of max_transmit_energy in mu, clamped to [eps, 1-eps].
// Throws InfeasibleDevice when the unclamped root is >= 1.
double min_harvesting_ratio(const Device& device, const SlotTiming& timing);

// max_transmit_energy spread over the transmit window (1-mu)*t_d.
double transmit_power(const Device& device, double mu, const SlotTiming& timing);

// Full ledger with the transmit energy at its causality budget, so that
// e_res_next lands exactly on e_sen. Throws InfeasibleMu when the budget is
// negative.
EnergyLedger ledger_for_device(const Device& device, double mu, const SlotTiming& timing);

}  // namespace ehcr
