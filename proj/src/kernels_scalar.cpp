#include "kernels_internal.hpp"

#include <cmath>

namespace mricap::kernels {

bool efor_threshold(double efor, std::uint64_t& thr) {
  if (efor >= 1.0) return true;
  if (efor <= 0.0) {
    thr = 0;
    return false;
  }
  thr = static_cast<std::uint64_t>(std::ldexp(efor, 64));
  return false;
}

namespace {

void subtract_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void add_scalar_scalar(const double* a, double c, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + c;
}

void split_scalar(const double* p, double* pos, double* neg, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double v = p[i];
    pos[i] = v > 0.0 ? v : 0.0;
    neg[i] = v < 0.0 ? -v : 0.0;
  }
}

double combine_lanes(const double lane[4]) { return (lane[0] + lane[2]) + (lane[1] + lane[3]); }

double sum_scalar(const double* a, std::size_t n) {
  double lane[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) lane[i & 3] += a[i];
  return combine_lanes(lane);
}

double sum_neg_part_scalar(const double* a, std::size_t n) {
  double lane[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    const double v = a[i];
    lane[i & 3] += v < 0.0 ? -v : 0.0;
  }
  return combine_lanes(lane);
}

std::size_t count_greater_scalar(const double* a, double thr, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += a[i] > thr ? 1 : 0;
  return c;
}

void availability_scalar(double* acc, std::size_t n, std::uint64_t key, double capacity,
                         double efor) {
  std::uint64_t thr = 0;
  if (efor_threshold(efor, thr)) return;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t draw = mix64_impl(key + kGolden * (static_cast<std::uint64_t>(i) + 1));
    if (draw >= thr) acc[i] += capacity;
  }
}

}  // namespace

const KernelTable kScalarTable = {
    subtract_scalar, add_scalar_scalar, split_scalar,       sum_scalar,
    sum_neg_part_scalar, count_greater_scalar, availability_scalar,
};

}  // namespace mricap::kernels
