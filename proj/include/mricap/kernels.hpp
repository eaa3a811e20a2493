#pragma once
// Data-parallel inner loops used by scenario building, dispatch sweeps and
// metric reduction. Scalar reference implementations and an AVX2 variant are
// compiled side by side; the active one is picked at runtime via cpuid.
//
// All reductions accumulate into four lanes striped by index modulo 4 and
// combine them in a fixed order, so scalar and AVX2 results are bit-identical.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace mricap::kernels {

// out[i] = a[i] - b[i]
void subtract(const double* a, const double* b, double* out, std::size_t n);

// out[i] = a[i] + c
void add_scalar(const double* a, double c, double* out, std::size_t n);

// pos[i] = max(p[i], 0), neg[i] = max(-p[i], 0)
void split_pos_neg(const double* p, double* pos, double* neg, std::size_t n);

double sum(const double* a, std::size_t n);

// sum of max(-a[i], 0): total deficiency energy of a surplus trace
double sum_neg_part(const double* a, std::size_t n);

// number of elements strictly greater than thr
std::size_t count_greater(const double* a, double thr, std::size_t n);

// Counter-based availability sampling. One stream per (seed, profile, unit);
// hour t of the stream is an independent uniform draw, so results do not
// depend on iteration order or worker count.
std::uint64_t mix64(std::uint64_t z);
std::uint64_t stream_key(std::uint64_t seed, std::uint64_t profile, std::uint64_t unit);
std::uint64_t hour_draw(std::uint64_t key, std::uint64_t t);

// acc[t] += capacity for every hour the unit is available (P(outage) = efor)
void availability_accumulate(double* acc, std::size_t n, std::uint64_t key,
                             double capacity, double efor);

// Backend selection (tests force "scalar" to cross-check the AVX2 path).
const char* backend_name();
bool set_backend(std::string_view name);
bool avx2_available();

}  // namespace mricap::kernels
