#pragma once
// Shared declarations between the kernel backends and the dispatch table.

#include <cstddef>
#include <cstdint>

namespace mricap::kernels {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64_impl(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// efor as an unsigned 64-bit threshold; draw < threshold means outage.
// Returns true when the unit is out for every hour (efor >= 1).
bool efor_threshold(double efor, std::uint64_t& thr);

struct KernelTable {
  void (*subtract)(const double*, const double*, double*, std::size_t);
  void (*add_scalar)(const double*, double, double*, std::size_t);
  void (*split_pos_neg)(const double*, double*, double*, std::size_t);
  double (*sum)(const double*, std::size_t);
  double (*sum_neg_part)(const double*, std::size_t);
  std::size_t (*count_greater)(const double*, double, std::size_t);
  void (*availability_accumulate)(double*, std::size_t, std::uint64_t, double, double);
};

extern const KernelTable kScalarTable;
const KernelTable* avx2_table();  // nullptr when unsupported at build or run time

}  // namespace mricap::kernels
