#include "ehcr/scenario.hpp"

#include <cmath>
#include <sstream>

namespace ehcr {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidScenario(what);
}

}  // namespace

void SlotTiming::validate() const {
  require(t_s > 0 && t_c_s > 0 && t_d_s > 0, "slot durations must be positive");
  require(std::abs(t_s - (t_c_s + t_d_s)) <= 1e-9 * t_s,
          "full slot must equal control slot plus data slot");
}

BufferDistribution BufferDistribution::uniform(double a_bits, double b_bits) {
  BufferDistribution d;
  d.kind = Kind::kUniform;
  d.a_bits = a_bits;
  d.b_bits = b_bits;
  d.validate();
  return d;
}

BufferDistribution BufferDistribution::exponential(double lambda_per_bit) {
  BufferDistribution d;
  d.kind = Kind::kExponential;
  d.lambda_per_bit = lambda_per_bit;
  d.validate();
  return d;
}

double BufferDistribution::mean_bits() const {
  return kind == Kind::kUniform ? 0.5 * (a_bits + b_bits) : 1.0 / lambda_per_bit;
}

void BufferDistribution::validate() const {
  if (kind == Kind::kUniform) {
    require(a_bits >= 0 && a_bits < b_bits, "uniform buffer needs 0 <= a < b");
  } else {
    require(lambda_per_bit > 0, "exponential buffer needs lambda > 0");
  }
}

double Device::idle_energy_j(const SlotTiming& timing) const {
  if (e_idle_j) return *e_idle_j;
  return p_idle_w * (timing.t_c_s - tau_s_s);
}

void Device::validate(const SlotTiming& timing, int num_channels, int num_sensed,
                      int num_pus) const {
  require(e_res_j >= 0, "e_res must be non-negative");
  require(e_sen_j > 0, "e_sen must be positive");
  require(rho_av_w > 0, "rho_av must be positive");
  require(p_idle_w >= 0 && i_pu_w >= 0, "powers must be non-negative");
  require(tau_s_s >= 0 && tau_s_s <= timing.t_c_s, "tau_s must fit in the control slot");
  require(!e_idle_j || *e_idle_j >= 0, "aggregate idle energy must be non-negative");
  require(gains.size() == num_channels, "one gain per allocatable channel");
  require((gains.array() >= 0).all() && gains.allFinite(), "gains must be finite and >= 0");
  require(cross_interference.rows() == num_sensed && cross_interference.cols() == num_pus,
          "cross-interference must be (sensed channels) x (PUs)");
  require((cross_interference.array() >= 0).all() && cross_interference.allFinite(),
          "cross-interference factors must be finite and >= 0");
  buffer.validate();
}

void SensingModel::validate(int num_channels) const {
  require(static_cast<int>(sensed_available.size()) == num_channels,
          "sensed-available set must list the allocatable channels");
  for (int n : sensed_available)
    for (int u : sensed_unavailable)
      require(n != u, "sensed sets must be disjoint");
  require(p_missed_busy.size() == static_cast<Eigen::Index>(sensed_available.size()),
          "one P2 per sensed-available channel");
  require(p_correct_busy.size() == static_cast<Eigen::Index>(sensed_unavailable.size()),
          "one P1 per sensed-unavailable channel");
  auto in01 = [](const Eigen::VectorXd& v) {
    return (v.array() >= 0).all() && (v.array() <= 1).all();
  };
  require(in01(p_missed_busy) && in01(p_correct_busy), "probabilities must lie in [0,1]");
}

double Scenario::min_rate_floor_bps(int k) const {
  return min_rate_coeff * devices[static_cast<size_t>(k)].buffer.mean_bits() / timing.t_s;
}

void Scenario::validate() const {
  require(!devices.empty(), "need at least one device");
  require(num_channels >= 1, "need at least one allocatable channel");
  timing.validate();
  require(bandwidth_hz > 0 && noise_power_w > 0 && snr_gap > 0 && ap_energy_budget_j > 0,
          "bandwidth, noise, SNR gap and AP budget must be positive");
  require(min_rate_coeff >= 0, "min-rate coefficient must be non-negative");
  require((pu_interference_threshold_w.array() > 0).all(), "PU thresholds must be positive");
  require(eta.size() == num_devices(), "one eta per device");
  require((eta.array() >= 0).all(), "eta must be non-negative");
  sensing.validate(num_channels);
  for (const auto& d : devices)
    d.validate(timing, num_channels, sensing.num_sensed(), num_pus());
}

Allocation Allocation::zeros(int num_devices, int num_channels) {
  Allocation a;
  a.g = Eigen::MatrixXi::Zero(num_devices, num_channels);
  a.mu = Eigen::VectorXd::Constant(num_devices, 0.5);
  return a;
}

bool Allocation::complete() const {
  for (Eigen::Index n = 0; n < g.cols(); ++n)
    if (g.col(n).sum() != 1) return false;
  return true;
}

std::vector<int> Allocation::channels_of(int k) const {
  std::vector<int> out;
  for (Eigen::Index n = 0; n < g.cols(); ++n)
    if (g(k, n) != 0) out.push_back(static_cast<int>(n));
  return out;
}

double Rng::uniform01() {
  return (engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double Rng::uniform_open_closed(double lo, double hi) {
  return hi - (hi - lo) * uniform01();
}

double Rng::rayleigh(double sigma) {
  // Inverse CDF on a (0,1] deviate keeps the log argument positive.
  const double u = 1.0 - uniform01();
  return sigma * std::sqrt(-2.0 * std::log(u));
}

double Rng::exponential(double lambda) {
  const double u = 1.0 - uniform01();
  return -std::log(u) / lambda;
}

namespace {

struct GenDefaults {
  double bandwidth_hz = 62500.0;
  double noise_power_w = 1e-13;
  double pu_threshold_w = 5e-13;
  double e_sen_j = 2e-3;
  double e_res_j = 3e-3;
  double e_idle_j = 1e-6;
  double t_s = 0.1;
  double t_c_s = 0.01;
  double t_d_s = 0.09;
  double tau_s_s = 5e-3;
  double snr_gap = 1.0;
  double eta = 1.0;
  double min_rate_coeff = 0.1;
  double ap_energy_budget_j = 1.0;
  double rho_min_w = 0.02;
  double rho_max_w = 0.1;
  double device_distance_min_m = 1.0;
  double device_distance_max_m = 50.0;
  // PU receivers sit in the licensed cell, well outside the IoT cell.
  double pu_distance_min_m = 100.0;
  double pu_distance_max_m = 1000.0;
  double path_loss_exponent = 3.0;
  double p_correct_busy = 0.9;
  double p_missed_busy = 0.1;
  double pu_to_device_interference_w = 0.0;
  int num_unavailable_channels = 2;
  // Buffered bits per device: uniform with per-device support drawn from
  // these ranges; the positive lower edge keeps the tail saturable.
  double buffer_a_lo = 1e3, buffer_a_hi = 5e3;
  double buffer_b_lo = 1.5e4, buffer_b_hi = 3e4;
  double buffer_mean_lo = 8e3, buffer_mean_hi = 1.75e4;  // exponential kind
};

}  // namespace

Scenario generate_scenario(std::uint64_t seed, int num_devices, int num_channels,
                           int num_pus, const ScenarioOverrides& ov) {
  require(num_devices >= 1, "need at least one device");
  require(num_channels >= 1, "need at least one channel");
  require(num_pus >= 0, "PU count must be non-negative");

  GenDefaults def;
  auto pick = [](const std::optional<double>& o, double d) { return o.value_or(d); };

  Scenario s;
  s.num_channels = num_channels;
  s.timing.t_c_s = pick(ov.t_c_s, def.t_c_s);
  if (ov.t_d_s) {
    s.timing.t_d_s = *ov.t_d_s;
  } else if (ov.t_s) {
    s.timing.t_d_s = *ov.t_s - s.timing.t_c_s;
  } else {
    s.timing.t_d_s = def.t_d_s;
  }
  s.timing.t_s = pick(ov.t_s, s.timing.t_c_s + s.timing.t_d_s);
  s.bandwidth_hz = pick(ov.bandwidth_hz, def.bandwidth_hz);
  s.noise_power_w = pick(ov.noise_power_w, def.noise_power_w);
  s.snr_gap = pick(ov.snr_gap, def.snr_gap);
  s.ap_energy_budget_j = pick(ov.ap_energy_budget_j, def.ap_energy_budget_j);
  s.min_rate_coeff = pick(ov.min_rate_coeff, def.min_rate_coeff);
  s.rate_includes_bandwidth = ov.rate_includes_bandwidth.value_or(true);
  s.bits_definition = ov.bits_definition.value_or(Scenario::BitsDefinition::kTransmitWindow);
  s.pu_interference_threshold_w =
      Eigen::VectorXd::Constant(num_pus, pick(ov.pu_threshold_w, def.pu_threshold_w));

  if (ov.eta_per_device) {
    s.eta = *ov.eta_per_device;
  } else {
    s.eta = Eigen::VectorXd::Constant(num_devices, pick(ov.eta, def.eta));
  }

  const int num_unavailable =
      ov.num_unavailable_channels.value_or(def.num_unavailable_channels);
  require(num_unavailable >= 0, "unavailable-channel count must be non-negative");
  s.sensing.sensed_available.resize(static_cast<size_t>(num_channels));
  for (int n = 0; n < num_channels; ++n) s.sensing.sensed_available[static_cast<size_t>(n)] = n;
  s.sensing.sensed_unavailable.resize(static_cast<size_t>(num_unavailable));
  for (int u = 0; u < num_unavailable; ++u)
    s.sensing.sensed_unavailable[static_cast<size_t>(u)] = num_channels + u;
  s.sensing.p_missed_busy =
      Eigen::VectorXd::Constant(num_channels, pick(ov.p_missed_busy, def.p_missed_busy));
  s.sensing.p_correct_busy =
      Eigen::VectorXd::Constant(num_unavailable, pick(ov.p_correct_busy, def.p_correct_busy));

  const double beta = pick(ov.path_loss_exponent, def.path_loss_exponent);
  const double d_lo = pick(ov.device_distance_min_m, def.device_distance_min_m);
  const double d_hi = pick(ov.device_distance_max_m, def.device_distance_max_m);
  const double pu_lo = pick(ov.pu_distance_min_m, def.pu_distance_min_m);
  const double pu_hi = pick(ov.pu_distance_max_m, def.pu_distance_max_m);
  require(d_lo > 0 && d_lo < d_hi && pu_lo > 0 && pu_lo < pu_hi,
          "distance ranges must be positive and ordered");
  const double rho_lo = pick(ov.rho_min_w, def.rho_min_w);
  const double rho_hi = pick(ov.rho_max_w, def.rho_max_w);
  require(rho_lo > 0 && rho_lo <= rho_hi, "harvest-rate range must be positive");

  // E[Z^2] = 1 so the mean channel power equals pure path loss.
  const double rayleigh_sigma = 1.0 / std::sqrt(2.0);
  const int num_sensed = num_channels + num_unavailable;

  Rng rng(seed);
  s.devices.resize(static_cast<size_t>(num_devices));

  // Draw order is part of the reproducibility contract: per-device scalars
  // first, then the gain matrix, then the PU cross links.
  std::vector<double> distance(static_cast<size_t>(num_devices));
  for (int k = 0; k < num_devices; ++k) {
    Device& dev = s.devices[static_cast<size_t>(k)];
    dev.id = k;
    dev.e_res_j = pick(ov.e_res_j, def.e_res_j);
    dev.e_sen_j = pick(ov.e_sen_j, def.e_sen_j);
    dev.tau_s_s = pick(ov.tau_s_s, def.tau_s_s);
    dev.e_idle_j = pick(ov.e_idle_j, def.e_idle_j);
    dev.p_idle_w = *dev.e_idle_j / (s.timing.t_c_s - dev.tau_s_s);
    dev.i_pu_w = pick(ov.pu_to_device_interference_w, def.pu_to_device_interference_w);
    distance[static_cast<size_t>(k)] = rng.uniform_open_closed(d_lo, d_hi);
    dev.rho_av_w = rng.uniform(rho_lo, rho_hi);

    const auto kind = ov.buffer_kind.value_or(BufferDistribution::Kind::kUniform);
    if (kind == BufferDistribution::Kind::kUniform) {
      const double a = ov.buffer_a_bits ? *ov.buffer_a_bits
                                        : rng.uniform(def.buffer_a_lo, def.buffer_a_hi);
      const double b = ov.buffer_b_bits ? *ov.buffer_b_bits
                                        : rng.uniform(def.buffer_b_lo, def.buffer_b_hi);
      dev.buffer = BufferDistribution::uniform(a, b);
    } else {
      const double mean = ov.buffer_mean_bits
                              ? *ov.buffer_mean_bits
                              : rng.uniform(def.buffer_mean_lo, def.buffer_mean_hi);
      require(mean > 0, "buffer mean must be positive");
      dev.buffer = BufferDistribution::exponential(1.0 / mean);
    }
  }

  for (int k = 0; k < num_devices; ++k) {
    Device& dev = s.devices[static_cast<size_t>(k)];
    dev.gains.resize(num_channels);
    const double path = std::pow(distance[static_cast<size_t>(k)], -beta);
    for (int n = 0; n < num_channels; ++n) {
      const double h = rng.rayleigh(rayleigh_sigma) * path;
      dev.gains[n] = h * h;
    }
  }

  for (int k = 0; k < num_devices; ++k) {
    Device& dev = s.devices[static_cast<size_t>(k)];
    dev.cross_interference.resize(num_sensed, num_pus);
    for (int m = 0; m < num_pus; ++m) {
      const double d_pu = rng.uniform_open_closed(pu_lo, pu_hi);
      const double h = rng.rayleigh(rayleigh_sigma) * std::pow(d_pu, -beta);
      dev.cross_interference.col(m).setConstant(h * h);
    }
  }

  s.validate();
  return s;
}

}  // namespace ehcr
