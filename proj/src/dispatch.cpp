#include "mricap/dispatch.hpp"

#include <algorithm>
#include <cmath>

#include "mricap/errors.hpp"
#include "mricap/kernels.hpp"

namespace mricap {

void StorageDevice::validate() const {
  if (!(x_bar > 0.0) || !std::isfinite(x_bar))
    throw ValidationError("storage '" + id + "': power capacity must be > 0");
  if (!(s_bar >= 0.0) || !std::isfinite(s_bar))
    throw ValidationError("storage '" + id + "': energy capacity must be >= 0");
  if (!(eta > 0.0 && eta <= 1.0))
    throw ValidationError("storage '" + id + "': round-trip efficiency must be in (0,1]");
  if (!(s0 >= 0.0 && s0 <= s_bar))
    throw ValidationError("storage '" + id + "': initial SoC must be in [0, energy capacity]");
}

StorageFleet with_soc_mode(StorageFleet fleet, SocMode mode) {
  if (mode == SocMode::kS0EqualsSbar) {
    for (auto& d : fleet) d.s0 = d.s_bar;
  }
  return fleet;
}

void validate_fleet(const StorageFleet& fleet) {
  for (const auto& d : fleet) d.validate();
}

namespace {

// Scratch-reusing dispatch engine; one instance per (fleet, profile walk).
struct Engine {
  const StorageFleet& fleet;
  std::vector<double> soc;
  std::vector<double> caps;    // per-hour scratch
  std::vector<double> events;  // threshold candidates
  std::vector<double> out;     // per-device MW scratch

  explicit Engine(const StorageFleet& f) : fleet(f) {
    const std::size_t n = f.size();
    soc.resize(n);
    for (std::size_t i = 0; i < n; ++i) soc[i] = f[i].s0;
    caps.resize(n);
    events.reserve(2 * n + 2);
    out.resize(n);
  }

  // Deliverable discharge at threshold level: sum of clamp((l_i - lv)*x, 0, cap).
  double discharge_at(double lv) const {
    double e = 0.0;
    for (std::size_t i = 0; i < fleet.size(); ++i) {
      const double li = soc[i] / fleet[i].x_bar;
      const double raw = (li - lv) * fleet[i].x_bar;
      e += std::clamp(raw, 0.0, caps[i]);
    }
    return e;
  }

  // Fills out[] with per-device discharge MW; returns total discharged.
  double discharge(double deficit) {
    const std::size_t n = fleet.size();
    double total_cap = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      caps[i] = std::min(fleet[i].x_bar, soc[i]);
      total_cap += caps[i];
    }
    if (total_cap <= deficit) {
      for (std::size_t i = 0; i < n; ++i) out[i] = caps[i];
      return total_cap;
    }
    // Find the equalized post-discharge time-to-go l_bar with
    // discharge_at(l_bar) == deficit; E is piecewise linear in the threshold.
    events.clear();
    events.push_back(0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double li = soc[i] / fleet[i].x_bar;
      events.push_back(li);
      events.push_back(li - caps[i] / fleet[i].x_bar);  // saturation level
    }
    std::sort(events.begin(), events.end(), std::greater<double>());
    double l_bar = 0.0;
    double hi = events.front();
    double e_hi = discharge_at(hi);  // 0 at the top
    for (std::size_t j = 1; j < events.size(); ++j) {
      const double lo = events[j];
      if (lo >= hi) continue;
      const double e_lo = discharge_at(lo);
      if (e_lo >= deficit) {
        l_bar = hi - (deficit - e_hi) * (hi - lo) / (e_lo - e_hi);
        break;
      }
      hi = lo;
      e_hi = e_lo;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double li = soc[i] / fleet[i].x_bar;
      out[i] = std::clamp((li - l_bar) * fleet[i].x_bar, 0.0, caps[i]);
      total += out[i];
    }
    return total;
  }

  double charge_at(double lv) const {
    double e = 0.0;
    for (std::size_t i = 0; i < fleet.size(); ++i) {
      const double li = soc[i] / fleet[i].x_bar;
      const double raw = (lv - li) * fleet[i].x_bar / fleet[i].eta;
      e += std::clamp(raw, 0.0, caps[i]);
    }
    return e;
  }

  // Fills out[] with per-device grid draw MW; returns total draw.
  double charge(double surplus) {
    const std::size_t n = fleet.size();
    double total_cap = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      caps[i] = std::min(fleet[i].x_bar, (fleet[i].s_bar - soc[i]) / fleet[i].eta);
      caps[i] = std::max(caps[i], 0.0);
      total_cap += caps[i];
    }
    if (total_cap <= surplus) {
      for (std::size_t i = 0; i < n; ++i) out[i] = caps[i];
      return total_cap;
    }
    events.clear();
    for (std::size_t i = 0; i < n; ++i) {
      const double li = soc[i] / fleet[i].x_bar;
      events.push_back(li);
      events.push_back(li + caps[i] * fleet[i].eta / fleet[i].x_bar);
    }
    std::sort(events.begin(), events.end());
    double l_bar = events.back();
    double lo = events.front();
    double e_lo = charge_at(lo);  // 0 at the bottom
    for (std::size_t j = 1; j < events.size(); ++j) {
      const double hi = events[j];
      if (hi <= lo) continue;
      const double e_hi = charge_at(hi);
      if (e_hi >= surplus) {
        l_bar = lo + (surplus - e_lo) * (hi - lo) / (e_hi - e_lo);
        break;
      }
      lo = hi;
      e_lo = e_hi;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double li = soc[i] / fleet[i].x_bar;
      out[i] = std::clamp((l_bar - li) * fleet[i].x_bar / fleet[i].eta, 0.0, caps[i]);
      total += out[i];
    }
    return total;
  }

  void apply_discharge() {
    for (std::size_t i = 0; i < fleet.size(); ++i) soc[i] -= out[i];
  }
  void apply_charge() {
    for (std::size_t i = 0; i < fleet.size(); ++i) soc[i] += fleet[i].eta * out[i];
  }
};

}  // namespace

std::vector<double> discharge_step(double deficit, std::span<const double> soc,
                                   const StorageFleet& fleet) {
  if (!(deficit > 0.0)) throw ValidationError("discharge_step: deficit must be > 0");
  if (soc.size() != fleet.size()) throw ValidationError("discharge_step: SoC/fleet size mismatch");
  Engine eng(fleet);
  std::copy(soc.begin(), soc.end(), eng.soc.begin());
  eng.discharge(deficit);
  return eng.out;
}

std::vector<double> charge_step(double surplus, std::span<const double> soc,
                                const StorageFleet& fleet) {
  if (!(surplus > 0.0)) throw ValidationError("charge_step: surplus must be > 0");
  if (soc.size() != fleet.size()) throw ValidationError("charge_step: SoC/fleet size mismatch");
  Engine eng(fleet);
  std::copy(soc.begin(), soc.end(), eng.soc.begin());
  eng.charge(surplus);
  return eng.out;
}

DispatchTrajectory run_reliability_dispatch(const SurplusProfile& profile,
                                            const StorageFleet& fleet) {
  validate_fleet(fleet);
  const int T = profile.horizon();
  const std::size_t n = fleet.size();
  DispatchTrajectory traj;
  traj.n_devices = static_cast<int>(n);
  traj.horizon = T;
  traj.soc.assign(n * static_cast<std::size_t>(T), 0.0);
  traj.power.assign(n * static_cast<std::size_t>(T), 0.0);
  traj.unserved.assign(static_cast<std::size_t>(T), 0.0);

  Engine eng(fleet);
  for (int t = 0; t < T; ++t) {
    if (profile.p_minus[t] > 0.0) {
      const double served = n ? eng.discharge(profile.p_minus[t]) : 0.0;
      if (n) eng.apply_discharge();
      traj.unserved[t] = profile.p_minus[t] - served;
      for (std::size_t i = 0; i < n; ++i) traj.power[i * T + t] = eng.out[i];
    } else if (profile.p_plus[t] > 0.0 && n) {
      eng.charge(profile.p_plus[t]);
      eng.apply_charge();
      for (std::size_t i = 0; i < n; ++i) traj.power[i * T + t] = -eng.out[i];
    }
    for (std::size_t i = 0; i < n; ++i) traj.soc[i * T + t] = eng.soc[i];
  }
  traj.eue = kernels::sum(traj.unserved.data(), traj.unserved.size());
  return traj;
}

double reliability_eue(const SurplusProfile& profile, const StorageFleet& fleet) {
  const int T = profile.horizon();
  if (fleet.empty()) return profile.total_deficiency();
  Engine eng(fleet);
  double lane[4] = {0, 0, 0, 0};
  for (int t = 0; t < T; ++t) {
    if (profile.p_minus[t] > 0.0) {
      const double served = eng.discharge(profile.p_minus[t]);
      eng.apply_discharge();
      lane[t & 3] += profile.p_minus[t] - served;
    } else if (profile.p_plus[t] > 0.0) {
      eng.charge(profile.p_plus[t]);
      eng.apply_charge();
    }
  }
  return (lane[0] + lane[2]) + (lane[1] + lane[3]);
}

namespace {

void check_priority(const StorageFleet& fleet, std::span<const int> priority) {
  if (priority.size() != fleet.size())
    throw ValidationError("priority list must contain every device exactly once");
  std::vector<char> seen(fleet.size(), 0);
  for (int i : priority) {
    if (i < 0 || static_cast<std::size_t>(i) >= fleet.size() || seen[i])
      throw ValidationError("priority list is not a permutation of the fleet");
    seen[i] = 1;
  }
}

}  // namespace

DispatchTrajectory run_simple_dispatch(const SurplusProfile& profile, const StorageFleet& fleet,
                                       std::span<const int> priority) {
  validate_fleet(fleet);
  check_priority(fleet, priority);
  const int T = profile.horizon();
  const std::size_t n = fleet.size();
  DispatchTrajectory traj;
  traj.n_devices = static_cast<int>(n);
  traj.horizon = T;
  traj.soc.assign(n * static_cast<std::size_t>(T), 0.0);
  traj.power.assign(n * static_cast<std::size_t>(T), 0.0);
  traj.unserved.assign(static_cast<std::size_t>(T), 0.0);

  std::vector<double> soc(n);
  for (std::size_t i = 0; i < n; ++i) soc[i] = fleet[i].s0;
  for (int t = 0; t < T; ++t) {
    if (profile.p_minus[t] > 0.0) {
      double remaining = profile.p_minus[t];
      for (int i : priority) {
        if (remaining <= 0.0) break;
        const double d = std::min({fleet[i].x_bar, soc[i], remaining});
        if (d > 0.0) {
          soc[i] -= d;
          remaining -= d;
          traj.power[static_cast<std::size_t>(i) * T + t] = d;
        }
      }
      traj.unserved[t] = remaining;
    } else if (profile.p_plus[t] > 0.0) {
      double remaining = profile.p_plus[t];
      for (int i : priority) {
        if (remaining <= 0.0) break;
        const double draw =
            std::min({fleet[i].x_bar, (fleet[i].s_bar - soc[i]) / fleet[i].eta, remaining});
        if (draw > 0.0) {
          soc[i] += fleet[i].eta * draw;
          remaining -= draw;
          traj.power[static_cast<std::size_t>(i) * T + t] = -draw;
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) traj.soc[i * T + t] = soc[i];
  }
  traj.eue = kernels::sum(traj.unserved.data(), traj.unserved.size());
  return traj;
}

double simple_eue(const SurplusProfile& profile, const StorageFleet& fleet,
                  std::span<const int> priority) {
  validate_fleet(fleet);
  check_priority(fleet, priority);
  const int T = profile.horizon();
  std::vector<double> soc(fleet.size());
  for (std::size_t i = 0; i < fleet.size(); ++i) soc[i] = fleet[i].s0;
  double lane[4] = {0, 0, 0, 0};
  for (int t = 0; t < T; ++t) {
    if (profile.p_minus[t] > 0.0) {
      double remaining = profile.p_minus[t];
      for (int i : priority) {
        if (remaining <= 0.0) break;
        const double d = std::min({fleet[i].x_bar, soc[i], remaining});
        soc[i] -= d;
        remaining -= d;
      }
      lane[t & 3] += remaining;
    } else if (profile.p_plus[t] > 0.0) {
      double remaining = profile.p_plus[t];
      for (int i : priority) {
        if (remaining <= 0.0) break;
        const double draw =
            std::min({fleet[i].x_bar, (fleet[i].s_bar - soc[i]) / fleet[i].eta, remaining});
        soc[i] += fleet[i].eta * draw;
        remaining -= draw;
      }
    }
  }
  return (lane[0] + lane[2]) + (lane[1] + lane[3]);
}

}  // namespace mricap
