// Problem-instance types: devices, channels, sensing sets, slot timing and
// candidate allocations. All quantities are SI (seconds, Joules, Watts, Hz,
// bits) unless a name says otherwise.
#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ehcr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scenario or override values violate a type invariant.
struct InvalidScenario : Error {
  using Error::Error;
};

// A device can never reach a non-negative transmit energy (mu_min >= 1).
struct InfeasibleDevice : Error {
  using Error::Error;
};

// A harvesting ratio outside the domain of the requested quantity.
struct InfeasibleMu : Error {
  using Error::Error;
};

struct DegenerateDenominator : Error {
  using Error::Error;
};

struct InstanceTooLarge : Error {
  using Error::Error;
};

struct NoFeasibleSolution : Error {
  using Error::Error;
};

struct MismatchedScenario : Error {
  using Error::Error;
};

// Open-interval guard for harvesting ratios: solvers search [mu_min + eps, 1 - eps].
inline constexpr double kMuEpsilon = 1e-6;

struct SlotTiming {
  double t_s = 0.1;    // full slot
  double t_c_s = 0.01; // control slot (sensing + reporting)
  double t_d_s = 0.09; // data slot (harvesting + uplink)

  void validate() const;
};

struct BufferDistribution {
  enum class Kind { kUniform, kExponential };

  Kind kind = Kind::kUniform;
  double a_bits = 0.0;          // uniform support lower edge
  double b_bits = 0.0;          // uniform support upper edge
  double lambda_per_bit = 0.0;  // exponential rate

  static BufferDistribution uniform(double a_bits, double b_bits);
  static BufferDistribution exponential(double lambda_per_bit);

  double mean_bits() const;
  void validate() const;
};

struct Device {
  int id = 0;
  double e_res_j = 0.0;   // residual energy at slot start
  double e_sen_j = 0.0;   // sensing energy per slot
  double p_idle_w = 0.0;  // idle power during the control slot remainder
  double tau_s_s = 0.0;   // sensing time, <= t_c
  double rho_av_w = 0.0;  // mean harvest rate E[rho]
  double i_pu_w = 0.0;    // PU-caused interference measured at this receiver

  // Aggregate idle energy; when set it takes precedence over p_idle*(t_c - tau_s).
  std::optional<double> e_idle_j;

  Eigen::VectorXd gains;  // |h|^2 per allocatable channel
  BufferDistribution buffer;

  // Interference factor at PU m per Watt transmitted, one row per sensed
  // channel (available and unavailable), one column per PU.
  Eigen::MatrixXd cross_interference;

  double idle_energy_j(const SlotTiming& timing) const;
  void validate(const SlotTiming& timing, int num_channels, int num_sensed,
                int num_pus) const;
};

struct SensingModel {
  std::vector<int> sensed_available;    // the allocatable channels
  std::vector<int> sensed_unavailable;  // channels flagged busy by fusion
  Eigen::VectorXd p_correct_busy;       // P1, aligned with sensed_unavailable
  Eigen::VectorXd p_missed_busy;        // P2, aligned with sensed_available

  int num_sensed() const {
    return static_cast<int>(sensed_available.size() + sensed_unavailable.size());
  }
  void validate(int num_channels) const;
};

struct Scenario {
  std::vector<Device> devices;
  int num_channels = 0;  // allocatable channel count N
  Eigen::VectorXd pu_interference_threshold_w;  // per-PU threshold, size M
  SlotTiming timing;
  double bandwidth_hz = 62500.0;
  double noise_power_w = 1e-13;  // noise power over one sub-channel bandwidth
  double snr_gap = 1.0;
  double ap_energy_budget_j = 1.0;  // AP per-slot transmitted-energy cap
  SensingModel sensing;
  Eigen::VectorXd eta;  // per-device SE weight
  double min_rate_coeff = 0.1;

  // Rate semantics. With the bandwidth factor off, rates are reported in the
  // literal bits/s/Hz form of the per-channel capacity expression.
  bool rate_includes_bandwidth = true;

  // Deliverable-bits semantics fed to the buffer tail probability:
  // rate times the transmit window (default) or rate times the full slot.
  enum class BitsDefinition { kTransmitWindow, kFullSlot };
  BitsDefinition bits_definition = BitsDefinition::kTransmitWindow;

  int num_devices() const { return static_cast<int>(devices.size()); }
  int num_pus() const { return static_cast<int>(pu_interference_threshold_w.size()); }

  // Minimum-rate requirement h(E[X_k]) in bits/s; h is linear in the mean
  // buffered bits: h(x) = min_rate_coeff * x / T.
  double min_rate_floor_bps(int k) const;

  void validate() const;
};

struct Allocation {
  Eigen::MatrixXi g;   // K x N channel assignment, entries in {0,1}
  Eigen::VectorXd mu;  // per-device harvesting ratio in (0,1)

  static Allocation zeros(int num_devices, int num_channels);

  // Complete allocations assign every channel exactly once.
  bool complete() const;
  std::vector<int> channels_of(int k) const;
};

// Deterministic draws via inverse transforms over the (standardized)
// mt19937_64 stream; output does not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01();                                 // [0, 1)
  double uniform(double lo, double hi);               // [lo, hi)
  double uniform_open_closed(double lo, double hi);   // (lo, hi]
  double rayleigh(double sigma);
  double exponential(double lambda);

 private:
  std::mt19937_64 engine_;
};

struct ScenarioOverrides {
  std::optional<double> bandwidth_hz;
  std::optional<double> noise_power_w;
  std::optional<double> pu_threshold_w;
  std::optional<double> e_sen_j;
  std::optional<double> e_res_j;
  std::optional<double> e_idle_j;
  std::optional<double> t_s;
  std::optional<double> t_c_s;
  std::optional<double> t_d_s;
  std::optional<double> tau_s_s;
  std::optional<double> snr_gap;
  std::optional<double> eta;
  std::optional<double> min_rate_coeff;
  std::optional<double> ap_energy_budget_j;
  std::optional<double> rho_min_w;
  std::optional<double> rho_max_w;
  std::optional<double> device_distance_min_m;
  std::optional<double> device_distance_max_m;
  std::optional<double> pu_distance_min_m;
  std::optional<double> pu_distance_max_m;
  std::optional<double> path_loss_exponent;
  std::optional<double> p_correct_busy;
  std::optional<double> p_missed_busy;
  std::optional<double> pu_to_device_interference_w;
  std::optional<int> num_unavailable_channels;
  std::optional<BufferDistribution::Kind> buffer_kind;
  std::optional<double> buffer_a_bits;   // uniform, fixed for all devices
  std::optional<double> buffer_b_bits;
  std::optional<double> buffer_mean_bits;  // exponential, fixed for all devices
  std::optional<bool> rate_includes_bandwidth;
  std::optional<Scenario::BitsDefinition> bits_definition;
  std::optional<Eigen::VectorXd> eta_per_device;
};

// Seeded random instance matching the reference simulation setup: Rayleigh
// fading over a d^-beta path loss, 62.5 kHz sub-channels, mJ-scale sensing
// and residual energies. Identical (seed, args, overrides) give bit-identical
// scenarios.
Scenario generate_scenario(std::uint64_t seed, int num_devices, int num_channels,
                           int num_pus, const ScenarioOverrides& overrides = {});

}  // namespace ehcr
