#include "mricap/kernels.hpp"

#include <atomic>

#include "kernels_internal.hpp"

namespace mricap::kernels {

namespace {
std::atomic<const KernelTable*> g_table{nullptr};
std::atomic<bool> g_is_avx2{false};

const KernelTable* table() {
  const KernelTable* t = g_table.load(std::memory_order_acquire);
  if (!t) {
    const KernelTable* v = avx2_table();
    g_is_avx2.store(v != nullptr, std::memory_order_relaxed);
    if (!v) v = &kScalarTable;
    g_table.store(v, std::memory_order_release);
    t = v;
  }
  return t;
}
}  // namespace

void subtract(const double* a, const double* b, double* out, std::size_t n) {
  table()->subtract(a, b, out, n);
}
void add_scalar(const double* a, double c, double* out, std::size_t n) {
  table()->add_scalar(a, c, out, n);
}
void split_pos_neg(const double* p, double* pos, double* neg, std::size_t n) {
  table()->split_pos_neg(p, pos, neg, n);
}
double sum(const double* a, std::size_t n) { return table()->sum(a, n); }
double sum_neg_part(const double* a, std::size_t n) { return table()->sum_neg_part(a, n); }
std::size_t count_greater(const double* a, double thr, std::size_t n) {
  return table()->count_greater(a, thr, n);
}
void availability_accumulate(double* acc, std::size_t n, std::uint64_t key, double capacity,
                             double efor) {
  table()->availability_accumulate(acc, n, key, capacity, efor);
}

std::uint64_t mix64(std::uint64_t z) { return mix64_impl(z); }

std::uint64_t stream_key(std::uint64_t seed, std::uint64_t profile, std::uint64_t unit) {
  std::uint64_t h = mix64_impl(seed + kGolden);
  h = mix64_impl(h + kGolden * (profile + 1));
  h = mix64_impl(h + kGolden * (unit + 1));
  return h;
}

std::uint64_t hour_draw(std::uint64_t key, std::uint64_t t) {
  return mix64_impl(key + kGolden * (t + 1));
}

const char* backend_name() {
  table();
  return g_is_avx2.load(std::memory_order_relaxed) ? "avx2" : "scalar";
}

bool set_backend(std::string_view name) {
  if (name == "scalar") {
    g_table.store(&kScalarTable, std::memory_order_release);
    g_is_avx2.store(false, std::memory_order_relaxed);
    return true;
  }
  if (name == "avx2") {
    const KernelTable* v = avx2_table();
    if (!v) return false;
    g_table.store(v, std::memory_order_release);
    g_is_avx2.store(true, std::memory_order_relaxed);
    return true;
  }
  return false;
}

bool avx2_available() { return avx2_table() != nullptr; }

}  // namespace mricap::kernels
