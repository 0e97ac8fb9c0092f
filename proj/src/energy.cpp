#include "ehcr/energy.hpp"

#include <algorithm>
#include <cmath>

namespace ehcr {

double harvested_energy(double rho_av_w, double mu, double t_d_s) {
  return rho_av_w * mu * t_d_s;
}

double max_transmit_energy(const Device& device, double mu, const SlotTiming& timing) {
  return device.e_res_j + harvested_energy(device.rho_av_w, mu, timing.t_d_s) -
         2.0 * device.e_sen_j;
}

double min_harvesting_ratio(const Device& device, const SlotTiming& timing) {
  const double root =
      (2.0 * device.e_sen_j - device.e_res_j) / (device.rho_av_w * timing.t_d_s);
  if (root >= 1.0) {
    throw InfeasibleDevice("device " + std::to_string(device.id) +
                           " can never afford transmission (mu_min = " +
                           std::to_string(root) + ")");
  }
  return std::clamp(root, kMuEpsilon, 1.0 - kMuEpsilon);
}

double transmit_power(const Device& device, double mu, const SlotTiming& timing) {
  if (mu >= 1.0) throw InfeasibleMu("transmit power undefined at mu >= 1");
  return max_transmit_energy(device, mu, timing) / ((1.0 - mu) * timing.t_d_s);
}

EnergyLedger ledger_for_device(const Device& device, double mu, const SlotTiming& timing) {
  EnergyLedger ledger;
  ledger.e_har_j = harvested_energy(device.rho_av_w, mu, timing.t_d_s);
  ledger.e_tr_j = max_transmit_energy(device, mu, timing);
  if (ledger.e_tr_j < 0.0) {
    throw InfeasibleMu("negative transmit budget at mu = " + std::to_string(mu));
  }
  ledger.e_idle_j = device.idle_energy_j(timing);
  ledger.e_con_j = ledger.e_tr_j + device.e_sen_j + ledger.e_idle_j;
  ledger.e_res_next_j =
      device.e_res_j + ledger.e_har_j - ledger.e_tr_j - device.e_sen_j;
  return ledger;
}

}  // namespace ehcr
