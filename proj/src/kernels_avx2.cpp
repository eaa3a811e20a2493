#include "kernels_internal.hpp"

#ifdef MRICAP_BUILD_AVX2

#include <immintrin.h>

namespace mricap::kernels {
namespace {

void subtract_avx2(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

void add_scalar_avx2(const double* a, double c, double* out, std::size_t n) {
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(a + i), vc));
  }
  for (; i < n; ++i) out[i] = a[i] + c;
}

void split_avx2(const double* p, double* pos, double* neg, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(p + i);
    _mm256_storeu_pd(pos + i, _mm256_max_pd(v, zero));
    _mm256_storeu_pd(neg + i, _mm256_max_pd(_mm256_sub_pd(zero, v), zero));
  }
  for (; i < n; ++i) {
    const double v = p[i];
    pos[i] = v > 0.0 ? v : 0.0;
    neg[i] = v < 0.0 ? -v : 0.0;
  }
}

double combine_lanes(__m256d acc, const double* tail, std::size_t tail_begin, std::size_t n,
                     double (*tail_val)(double)) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  for (std::size_t i = tail_begin; i < n; ++i) lane[i & 3] += tail_val(tail[i]);
  return (lane[0] + lane[2]) + (lane[1] + lane[3]);
}

double sum_avx2(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
  return combine_lanes(acc, a, i, n, [](double v) { return v; });
}

double sum_neg_part_avx2(const double* a, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(a + i);
    acc = _mm256_add_pd(acc, _mm256_max_pd(_mm256_sub_pd(zero, v), zero));
  }
  return combine_lanes(acc, a, i, n, [](double v) { return v < 0.0 ? -v : 0.0; });
}

std::size_t count_greater_avx2(const double* a, double thr, std::size_t n) {
  const __m256d vthr = _mm256_set1_pd(thr);
  std::size_t c = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d cmp = _mm256_cmp_pd(_mm256_loadu_pd(a + i), vthr, _CMP_GT_OQ);
    c += static_cast<std::size_t>(_mm_popcnt_u32(static_cast<unsigned>(_mm256_movemask_pd(cmp))));
  }
  for (; i < n; ++i) c += a[i] > thr ? 1 : 0;
  return c;
}

// 64x64 -> low 64 multiply per lane (AVX2 has no native epi64 mullo)
inline __m256i mullo64(__m256i a, __m256i b) {
  const __m256i lo = _mm256_mul_epu32(a, b);
  const __m256i ah = _mm256_srli_epi64(a, 32);
  const __m256i bh = _mm256_srli_epi64(b, 32);
  const __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(ah, b), _mm256_mul_epu32(a, bh));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

inline __m256i mix64_avx2(__m256i z) {
  z = mullo64(_mm256_xor_si256(z, _mm256_srli_epi64(z, 30)),
              _mm256_set1_epi64x(static_cast<long long>(0xbf58476d1ce4e5b9ULL)));
  z = mullo64(_mm256_xor_si256(z, _mm256_srli_epi64(z, 27)),
              _mm256_set1_epi64x(static_cast<long long>(0x94d049bb133111ebULL)));
  return _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
}

void availability_avx2(double* acc, std::size_t n, std::uint64_t key, double capacity,
                       double efor) {
  std::uint64_t thr = 0;
  if (efor_threshold(efor, thr)) return;
  const __m256i vkey = _mm256_set1_epi64x(static_cast<long long>(key));
  const __m256i vgold = _mm256_set1_epi64x(static_cast<long long>(kGolden));
  const __m256i sign = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ULL));
  const __m256i vthr_biased = _mm256_xor_si256(_mm256_set1_epi64x(static_cast<long long>(thr)), sign);
  const __m256d vcap = _mm256_set1_pd(capacity);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const std::uint64_t t0 = static_cast<std::uint64_t>(i) + 1;
    const __m256i ctr = _mm256_set_epi64x(static_cast<long long>(t0 + 3), static_cast<long long>(t0 + 2),
                                          static_cast<long long>(t0 + 1), static_cast<long long>(t0));
    const __m256i draw = mix64_avx2(_mm256_add_epi64(vkey, mullo64(vgold, ctr)));
    // unsigned draw >= thr  <=>  biased signed compare
    const __m256i biased = _mm256_xor_si256(draw, sign);
    const __m256i lt = _mm256_cmpgt_epi64(vthr_biased, biased);  // draw < thr (outage)
    const __m256d avail = _mm256_andnot_pd(_mm256_castsi256_pd(lt), vcap);
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), avail));
  }
  for (; i < n; ++i) {
    const std::uint64_t draw = mix64_impl(key + kGolden * (static_cast<std::uint64_t>(i) + 1));
    if (draw >= thr) acc[i] += capacity;
  }
}

const KernelTable kAvx2Table = {
    subtract_avx2, add_scalar_avx2, split_avx2,       sum_avx2,
    sum_neg_part_avx2, count_greater_avx2, availability_avx2,
};

}  // namespace

const KernelTable* avx2_table() {
  return __builtin_cpu_supports("avx2") ? &kAvx2Table : nullptr;
}

}  // namespace mricap::kernels

#else  // !MRICAP_BUILD_AVX2

namespace mricap::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace mricap::kernels

#endif
