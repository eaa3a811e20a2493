#pragma once
// Storage dispatch rules. Reliability dispatch follows the greedy
// single-interval policy: discharge by time-to-go equalization, charge the
// shortest time-to-go first (also equalized). Simple dispatch is the
// fixed-priority baseline.

#include <span>
#include <string>
#include <vector>

#include "mricap/scenario.hpp"

namespace mricap {

struct StorageDevice {
  std::string id;
  double x_bar = 0.0;  // power capacity MW, > 0
  double s_bar = 0.0;  // energy capacity MWh, >= 0
  double eta = 1.0;    // round-trip efficiency, applied on charge
  double s0 = 0.0;     // initial SoC MWh

  double duration() const { return s_bar / x_bar; }
  void validate() const;
};

using StorageFleet = std::vector<StorageDevice>;

enum class SocMode { kFixedS0, kS0EqualsSbar };

// Returns the fleet with initial SoC forced to the energy capacity when the
// mode asks for it; otherwise unchanged.
StorageFleet with_soc_mode(StorageFleet fleet, SocMode mode);

void validate_fleet(const StorageFleet& fleet);

struct DispatchTrajectory {
  int n_devices = 0;
  int horizon = 0;
  std::vector<double> soc;       // [i * horizon + t], end-of-hour SoC in MWh
  std::vector<double> power;     // [i * horizon + t], grid MW; discharge > 0, charge = -draw
  std::vector<double> unserved;  // [t], MWh
  double eue = 0.0;              // sum of unserved

  double soc_at(int i, int t) const { return soc[static_cast<std::size_t>(i) * horizon + t]; }
  double power_at(int i, int t) const { return power[static_cast<std::size_t>(i) * horizon + t]; }
};

// Per-device discharge MW for one deficiency hour (Algorithm-1 semantics:
// equalize post-discharge time-to-go; on exhaustion everyone delivers
// min(x_bar, soc) and the residual is unserved).
std::vector<double> discharge_step(double deficit, std::span<const double> soc,
                                   const StorageFleet& fleet);

// Per-device grid draw MW for one surplus hour (mirror rule: fill shortest
// time-to-go first with equalization; SoC gain is eta * draw).
std::vector<double> charge_step(double surplus, std::span<const double> soc,
                                const StorageFleet& fleet);

DispatchTrajectory run_reliability_dispatch(const SurplusProfile& profile,
                                            const StorageFleet& fleet);

// priority: a permutation of device indices, highest priority first.
DispatchTrajectory run_simple_dispatch(const SurplusProfile& profile, const StorageFleet& fleet,
                                       std::span<const int> priority);

// EUE-only fast paths (no trajectory storage); used by perturbation sweeps.
double reliability_eue(const SurplusProfile& profile, const StorageFleet& fleet);
double simple_eue(const SurplusProfile& profile, const StorageFleet& fleet,
                  std::span<const int> priority);

}  // namespace mricap
