#include "ehcr/rates.hpp"

#include "ehcr/energy.hpp"

#include <cmath>

namespace ehcr {

RateContext make_rate_context(const Scenario& scenario) {
  RateContext ctx;
  const int K = scenario.num_devices();
  const int N = scenario.num_channels;
  ctx.effective_gain.resize(K, N);
  for (int k = 0; k < K; ++k) {
    const Device& dev = scenario.devices[static_cast<size_t>(k)];
    const double denom = scenario.snr_gap * (scenario.noise_power_w + dev.i_pu_w);
    ctx.effective_gain.row(k) = dev.gains.transpose() / denom;
  }
  ctx.t_s = scenario.timing.t_s;
  ctx.t_d_s = scenario.timing.t_d_s;
  ctx.bandwidth_hz = scenario.bandwidth_hz;
  ctx.include_bandwidth = scenario.rate_includes_bandwidth;
  return ctx;
}

double subchannel_rate(double effective_gain, double mu, const Device& device,
                       const SlotTiming& timing, double bandwidth_hz,
                       bool include_bandwidth) {
  const double e_tr = max_transmit_energy(device, mu, timing);
  if (e_tr < 0.0) {
    throw InfeasibleMu("negative transmit energy at mu = " + std::to_string(mu));
  }
  const double t_tr = (1.0 - mu) * timing.t_d_s;
  const double scale = (t_tr / timing.t_s) * (include_bandwidth ? bandwidth_hz : 1.0);
  return scale * std::log2(1.0 + effective_gain * e_tr / t_tr);
}

namespace {

// Shared inner sum; callers guarantee e_tr >= 0.
double rate_over_channels(const RateContext& ctx, const Allocation& allocation, int k,
                          double e_tr) {
  const double mu = allocation.mu[k];
  const double t_tr = ctx.transmit_window_s(mu);
  const double power = e_tr / t_tr;
  double log_sum = 0.0;
  for (Eigen::Index n = 0; n < allocation.g.cols(); ++n) {
    if (allocation.g(k, n) != 0) {
      log_sum += std::log2(1.0 + ctx.effective_gain(k, n) * power);
    }
  }
  const double scale = (t_tr / ctx.t_s) * (ctx.include_bandwidth ? ctx.bandwidth_hz : 1.0);
  return scale * log_sum;
}

}  // namespace

double user_rate(const RateContext& ctx, const Allocation& allocation, int k,
                 const Scenario& scenario) {
  const Device& dev = scenario.devices[static_cast<size_t>(k)];
  const double e_tr = max_transmit_energy(dev, allocation.mu[k], scenario.timing);
  if (e_tr < 0.0) {
    throw InfeasibleMu("negative transmit energy for device " + std::to_string(k));
  }
  return rate_over_channels(ctx, allocation, k, e_tr);
}

double user_rate(const Allocation& allocation, int k, const Scenario& scenario) {
  return user_rate(make_rate_context(scenario), allocation, k, scenario);
}

double delivered_bits(const RateContext& ctx, const Allocation& allocation, int k,
                      const Scenario& scenario) {
  const double rate = user_rate(ctx, allocation, k, scenario);
  const double window =
      scenario.bits_definition == Scenario::BitsDefinition::kTransmitWindow
          ? ctx.transmit_window_s(allocation.mu[k])
          : ctx.t_s;
  return rate * window;
}

double delivered_bits(const Allocation& allocation, int k, const Scenario& scenario) {
  return delivered_bits(make_rate_context(scenario), allocation, k, scenario);
}

}  // namespace ehcr
