#include "mricap/scenario.hpp"

#include <cmath>

#include "mricap/errors.hpp"
#include "mricap/kernels.hpp"
#include "mricap/parallel.hpp"

namespace mricap {

void ThermalUnit::validate() const {
  if (!(capacity_mw >= 0.0) || !std::isfinite(capacity_mw))
    throw ValidationError("thermal unit '" + id + "': capacity must be >= 0");
  if (!(efor >= 0.0 && efor <= 1.0))
    throw ValidationError("thermal unit '" + id + "': efor must be in [0,1]");
}

void LoadTrace::validate() const {
  for (std::size_t t = 0; t < mw.size(); ++t) {
    if (!(mw[t] >= 0.0) || !std::isfinite(mw[t]))
      throw ValidationError("load trace '" + label + "': hour " + std::to_string(t + 1) +
                            " must be >= 0");
  }
}

double LoadTrace::annual_energy() const { return kernels::sum(mw.data(), mw.size()); }

SurplusProfile SurplusProfile::from_net(int k, std::vector<double> net) {
  SurplusProfile profile;
  profile.k = k;
  const std::size_t n = net.size();
  profile.p = std::move(net);
  profile.p_plus.resize(n);
  profile.p_minus.resize(n);
  kernels::split_pos_neg(profile.p.data(), profile.p_plus.data(), profile.p_minus.data(), n);
  return profile;
}

double SurplusProfile::total_deficiency() const {
  return kernels::sum(p_minus.data(), p_minus.size());
}

std::vector<double> sample_availability(std::span<const ThermalUnit> units, int horizon,
                                        std::uint64_t seed, int k) {
  if (horizon < 1) throw ValidationError("horizon must be >= 1");
  for (const auto& u : units) u.validate();
  std::vector<double> capacity(static_cast<std::size_t>(horizon), 0.0);
  for (std::size_t u = 0; u < units.size(); ++u) {
    const std::uint64_t key = kernels::stream_key(seed, static_cast<std::uint64_t>(k), u);
    kernels::availability_accumulate(capacity.data(), capacity.size(), key,
                                     units[u].capacity_mw, units[u].efor);
  }
  return capacity;
}

SurplusProfile build_profile(std::span<const double> capacity, const LoadTrace& load, int k) {
  if (capacity.size() != load.mw.size())
    throw ValidationError("capacity trace length " + std::to_string(capacity.size()) +
                          " != load length " + std::to_string(load.mw.size()));
  std::vector<double> net(capacity.size());
  kernels::subtract(capacity.data(), load.mw.data(), net.data(), net.size());
  return SurplusProfile::from_net(k, std::move(net));
}

SurplusProfile add_perfect_capacity(const SurplusProfile& profile, double c) {
  std::vector<double> net(profile.p.size());
  kernels::add_scalar(profile.p.data(), c, net.data(), net.size());
  return SurplusProfile::from_net(profile.k, std::move(net));
}

MonteCarloEnsemble generate_ensemble(const SystemInputs& system, int horizon, int n_profiles,
                                     std::uint64_t seed, int workers) {
  if (n_profiles < 1) throw ValidationError("ensemble needs at least one profile");
  if (horizon < 1) throw ValidationError("horizon must be >= 1");
  if (system.load.mw.size() != static_cast<std::size_t>(horizon))
    throw ValidationError("load trace length != horizon");
  if (!system.fixed_capacity_mw.empty() &&
      system.fixed_capacity_mw.size() != static_cast<std::size_t>(horizon))
    throw ValidationError("fixed capacity trace length != horizon");
  system.load.validate();
  for (const auto& u : system.thermal) u.validate();

  MonteCarloEnsemble ensemble;
  ensemble.horizon = horizon;
  ensemble.seed = seed;
  ensemble.profiles.resize(static_cast<std::size_t>(n_profiles));
  parallel_for(static_cast<std::size_t>(n_profiles), workers, [&](std::size_t k) {
    auto capacity = sample_availability(system.thermal, horizon, seed, static_cast<int>(k));
    if (!system.fixed_capacity_mw.empty()) {
      for (int t = 0; t < horizon; ++t) capacity[t] += system.fixed_capacity_mw[t];
    }
    ensemble.profiles[k] = build_profile(capacity, system.load, static_cast<int>(k));
  });
  return ensemble;
}

}  // namespace mricap
