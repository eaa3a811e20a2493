#pragma once
// Net-capacity-surplus scenario generation: Monte Carlo thermal availability,
// fixed renewable traces, and the surplus/deficiency split used everywhere
// downstream.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mricap {

struct ThermalUnit {
  std::string id;
  double capacity_mw = 0.0;
  double efor = 0.0;  // per-hour forced outage probability

  void validate() const;
};

struct LoadTrace {
  std::vector<double> mw;  // length T, all >= 0
  std::string label;

  void validate() const;
  double annual_energy() const;
};

// One Monte Carlo draw of hourly net capacity surplus and its split.
// Invariant per hour: p_plus - p_minus == p and min(p_plus, p_minus) == 0.
struct SurplusProfile {
  int k = 0;
  std::vector<double> p;
  std::vector<double> p_plus;
  std::vector<double> p_minus;

  static SurplusProfile from_net(int k, std::vector<double> net);
  int horizon() const { return static_cast<int>(p.size()); }
  double total_deficiency() const;  // sum of p_minus
};

struct MonteCarloEnsemble {
  std::vector<SurplusProfile> profiles;
  int horizon = 0;
  std::uint64_t seed = 0;

  int count() const { return static_cast<int>(profiles.size()); }
};

// Everything except storage: Bernoulli-sampled thermal units plus fixed
// hourly capacity traces (renewables or imports).
struct SystemInputs {
  std::vector<ThermalUnit> thermal;
  std::vector<double> fixed_capacity_mw;  // length T or empty
  LoadTrace load;
};

// C[t] = sum over units of capacity * availability(seed, k, unit, t).
// Independent per-hour Bernoulli outages; deterministic in (seed, k, unit order).
std::vector<double> sample_availability(std::span<const ThermalUnit> units, int horizon,
                                        std::uint64_t seed, int k);

SurplusProfile build_profile(std::span<const double> capacity, const LoadTrace& load, int k);

// Shifts every hour by c MW (perfect capacity; c < 0 models ICR reduction).
SurplusProfile add_perfect_capacity(const SurplusProfile& profile, double c);

MonteCarloEnsemble generate_ensemble(const SystemInputs& system, int horizon, int n_profiles,
                                     std::uint64_t seed, int workers = 1);

}  // namespace mricap
