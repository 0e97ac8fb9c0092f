#include "ehcr/objective.hpp"

#include "ehcr/energy.hpp"

#include <algorithm>
#include <cmath>

namespace ehcr {

namespace {

double consumption_j(const Device& dev, double mu, const SlotTiming& timing) {
  return dev.rho_av_w * mu * timing.t_d_s + dev.e_res_j - dev.e_sen_j +
         dev.idle_energy_j(timing);
}

// Rate that reports 0 instead of throwing when the transmit budget is
// negative; feasibility reporting must stay total.
double guarded_rate(const RateContext& ctx, const Allocation& allocation, int k,
                    const Scenario& scenario) {
  const Device& dev = scenario.devices[static_cast<size_t>(k)];
  if (max_transmit_energy(dev, allocation.mu[k], scenario.timing) < 0.0) return 0.0;
  return user_rate(ctx, allocation, k, scenario);
}

}  // namespace

double energy_efficiency(const Allocation& allocation, int k, const Scenario& scenario) {
  const Device& dev = scenario.devices[static_cast<size_t>(k)];
  const double denom = consumption_j(dev, allocation.mu[k], scenario.timing);
  if (denom <= 0.0) {
    throw DegenerateDenominator("non-positive consumption for device " + std::to_string(k));
  }
  return user_rate(allocation, k, scenario) / denom;
}

double tail_probability(const BufferDistribution& dist, double bits) {
  if (dist.kind == BufferDistribution::Kind::kUniform) {
    if (bits <= dist.a_bits) return 1.0;
    if (bits >= dist.b_bits) return 0.0;
    return (dist.b_bits - bits) / (dist.b_bits - dist.a_bits);
  }
  return std::exp(-dist.lambda_per_bit * bits);
}

double se_term(const Allocation& allocation, int k, const Scenario& scenario) {
  const Device& dev = scenario.devices[static_cast<size_t>(k)];
  return scenario.eta[k] * tail_probability(dev.buffer, delivered_bits(allocation, k, scenario));
}

double pu_interference(const Allocation& /*allocation*/, int k, int m,
                       const Scenario& scenario) {
  const Device& dev = scenario.devices[static_cast<size_t>(k)];
  const SensingModel& sensing = scenario.sensing;
  double factor = 0.0;
  for (size_t i = 0; i < sensing.sensed_unavailable.size(); ++i) {
    factor += sensing.p_correct_busy[static_cast<Eigen::Index>(i)] *
              dev.cross_interference(sensing.sensed_unavailable[i], m);
  }
  for (size_t i = 0; i < sensing.sensed_available.size(); ++i) {
    factor += sensing.p_missed_busy[static_cast<Eigen::Index>(i)] *
              dev.cross_interference(sensing.sensed_available[i], m);
  }
  return factor;
}

double user_objective_term(const RateContext& ctx, const Allocation& allocation, int k,
                           const Scenario& scenario) {
  const Device& dev = scenario.devices[static_cast<size_t>(k)];
  const double denom = consumption_j(dev, allocation.mu[k], scenario.timing);
  if (denom <= 0.0) {
    throw DegenerateDenominator("non-positive consumption for device " + std::to_string(k));
  }
  const double rate = user_rate(ctx, allocation, k, scenario);
  const double window =
      scenario.bits_definition == Scenario::BitsDefinition::kTransmitWindow
          ? ctx.transmit_window_s(allocation.mu[k])
          : ctx.t_s;
  return rate / denom + scenario.eta[k] * tail_probability(dev.buffer, rate * window);
}

ObjectiveBreakdown evaluate(const RateContext& ctx, const Allocation& allocation,
                            const Scenario& scenario) {
  const int K = scenario.num_devices();
  ObjectiveBreakdown out;
  out.ee_per_user.resize(K);
  out.se_per_user.resize(K);
  out.total = 0.0;
  for (int k = 0; k < K; ++k) {
    const Device& dev = scenario.devices[static_cast<size_t>(k)];
    const double denom = consumption_j(dev, allocation.mu[k], scenario.timing);
    if (denom <= 0.0) {
      throw DegenerateDenominator("non-positive consumption for device " + std::to_string(k));
    }
    const double rate = user_rate(ctx, allocation, k, scenario);
    const double window =
        scenario.bits_definition == Scenario::BitsDefinition::kTransmitWindow
            ? ctx.transmit_window_s(allocation.mu[k])
            : ctx.t_s;
    out.ee_per_user[k] = rate / denom;
    out.se_per_user[k] = scenario.eta[k] * tail_probability(dev.buffer, rate * window);
    out.total += out.ee_per_user[k] + out.se_per_user[k];
  }
  return out;
}

ObjectiveBreakdown evaluate(const Allocation& allocation, const Scenario& scenario) {
  return evaluate(make_rate_context(scenario), allocation, scenario);
}

FeasibilityReport check_feasibility(const Allocation& allocation, const Scenario& scenario) {
  const int K = scenario.num_devices();
  const int M = scenario.num_pus();
  const RateContext ctx = make_rate_context(scenario);
  FeasibilityReport rep;

  rep.c1_slack_per_user.resize(K);
  double c1_worst = std::numeric_limits<double>::infinity();
  double c7_worst = std::numeric_limits<double>::infinity();
  double c8_worst = std::numeric_limits<double>::infinity();
  double harvest_sum_j = 0.0;

  for (int k = 0; k < K; ++k) {
    const Device& dev = scenario.devices[static_cast<size_t>(k)];
    const double mu = allocation.mu[k];
    const double rate = guarded_rate(ctx, allocation, k, scenario);
    rep.c1_slack_per_user[k] = rate - scenario.min_rate_floor_bps(k);
    c1_worst = std::min(c1_worst, rep.c1_slack_per_user[k]);
    c7_worst = std::min(c7_worst, max_transmit_energy(dev, mu, scenario.timing));
    c8_worst = std::min(c8_worst, std::min(mu, 1.0 - mu));
    harvest_sum_j += dev.rho_av_w * mu;
  }
  harvest_sum_j *= scenario.timing.t_d_s;

  rep.c1_min_rate = {c1_worst, c1_worst >= 0.0};
  // The transmit energy sits exactly at the causality budget, so C2 holds
  // with structurally zero slack whenever C7 does.
  rep.c2_causality = {0.0, true};
  const double c3 = scenario.ap_energy_budget_j - harvest_sum_j;
  rep.c3_ap_budget = {c3, c3 >= 0.0};

  rep.c4_slack_per_pu.resize(M);
  double c4_worst = M == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  for (int m = 0; m < M; ++m) {
    double load_w = 0.0;
    for (int k = 0; k < K; ++k) {
      const Device& dev = scenario.devices[static_cast<size_t>(k)];
      const double p_tr =
          std::max(0.0, transmit_power(dev, allocation.mu[k], scenario.timing));
      load_w += p_tr * pu_interference(allocation, k, m, scenario);
    }
    rep.c4_slack_per_pu[m] = scenario.pu_interference_threshold_w[m] - load_w;
    c4_worst = std::min(c4_worst, rep.c4_slack_per_pu[m]);
  }
  rep.c4_pu_interference = {c4_worst, c4_worst >= 0.0};

  int bad_columns = 0;
  for (Eigen::Index n = 0; n < allocation.g.cols(); ++n) {
    if (allocation.g.col(n).sum() != 1) ++bad_columns;
  }
  rep.c5_channel_once = {-static_cast<double>(bad_columns), bad_columns == 0};

  int non_binary = 0;
  for (Eigen::Index k = 0; k < allocation.g.rows(); ++k) {
    for (Eigen::Index n = 0; n < allocation.g.cols(); ++n) {
      const int v = allocation.g(k, n);
      if (v != 0 && v != 1) ++non_binary;
    }
  }
  rep.c6_binary = {-static_cast<double>(non_binary), non_binary == 0};

  rep.c7_transmit_energy = {c7_worst, c7_worst >= 0.0};
  rep.c8_mu_interval = {c8_worst, c8_worst > 0.0};

  rep.feasible = rep.c1_min_rate.ok && rep.c2_causality.ok && rep.c3_ap_budget.ok &&
                 rep.c4_pu_interference.ok && rep.c5_channel_once.ok && rep.c6_binary.ok &&
                 rep.c7_transmit_energy.ok && rep.c8_mu_interval.ok;
  return rep;
}

}  // namespace ehcr
