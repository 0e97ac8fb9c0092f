// Per-channel and per-user transmission rates plus deliverable bits.
#pragma once

#include "ehcr/scenario.hpp"

namespace ehcr {

// Effective gains H(k,n) = |h|^2 / (Gamma * (N0 + I_k)), precomputed once per
// scenario and shared read-only by the solvers.
struct RateContext {
  Eigen::MatrixXd effective_gain;  // K x N, 1/W
  double t_s = 0.0;
  double t_d_s = 0.0;
  double bandwidth_hz = 0.0;
  bool include_bandwidth = true;

  double transmit_window_s(double mu) const { return (1.0 - mu) * t_d_s; }
};

RateContext make_rate_context(const Scenario& scenario);

// (t_tr/T) * B * log2(1 + H * E_tr / t_tr) in bits/s; without the bandwidth
// factor the result is the bits/s/Hz form. Throws InfeasibleMu when the
// transmit energy is negative.
double subchannel_rate(double effective_gain, double mu, const Device& device,
                       const SlotTiming& timing, double bandwidth_hz,
                       bool include_bandwidth = true);

double user_rate(const Allocation& allocation, int k, const Scenario& scenario);
double user_rate(const RateContext& ctx, const Allocation& allocation, int k,
                 const Scenario& scenario);

// Bits deliverable this slot, fed into the buffer tail probability.
double delivered_bits(const Allocation& allocation, int k, const Scenario& scenario);
double delivered_bits(const RateContext& ctx, const Allocation& allocation, int k,
                      const Scenario& scenario);

}  // namespace ehcr
