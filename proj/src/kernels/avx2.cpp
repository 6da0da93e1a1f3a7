// Compiled with -mavx2 only; reached through the dispatcher after a CPUID check.
#include <immintrin.h>

#include <cassert>

#include "exh/kernels.hpp"

namespace exh::kernels {

namespace {

// Four vertices at once; lane l holds vertex j + l.
inline __m256d dot4(const double* soa, std::size_t count, std::size_t j,
                    const double* dir, std::size_t dim) {
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t c = 0; c < dim; ++c) {
    const __m256d x = _mm256_loadu_pd(soa + c * count + j);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(x, _mm256_set1_pd(dir[c])));
  }
  return acc;
}

inline double dot1(const double* soa, std::size_t count, std::size_t j,
                   const double* dir, std::size_t dim) {
  double acc = 0.0;
  for (std::size_t c = 0; c < dim; ++c) acc = acc + soa[c * count + j] * dir[c];
  return acc;
}

}  // namespace

void project_avx2(std::span<const double> soa, std::size_t count,
                  std::span<const double> dir, std::span<double> out) {
  assert(soa.size() == count * dir.size() && out.size() == count);
  const std::size_t dim = dir.size();
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4)
    _mm256_storeu_pd(out.data() + j, dot4(soa.data(), count, j, dir.data(), dim));
  for (; j < count; ++j) out[j] = dot1(soa.data(), count, j, dir.data(), dim);
}

double extreme_avx2(std::span<const double> soa, std::size_t count,
                    std::span<const double> dir, Extreme which) {
  assert(count > 0 && soa.size() == count * dir.size());
  const std::size_t dim = dir.size();
  const bool want_max = which == Extreme::Max;
  std::size_t j = 0;
  double best = dot1(soa.data(), count, 0, dir.data(), dim);
  if (count >= 4) {
    __m256d acc = _mm256_set1_pd(best);
    for (; j + 4 <= count; j += 4) {
      const __m256d v = dot4(soa.data(), count, j, dir.data(), dim);
      acc = want_max ? _mm256_max_pd(acc, v) : _mm256_min_pd(acc, v);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    for (double v : lanes)
      if (want_max ? v > best : v < best) best = v;
  }
  for (; j < count; ++j) {
    const double v = dot1(soa.data(), count, j, dir.data(), dim);
    if (want_max ? v > best : v < best) best = v;
  }
  return best;
}

}  // namespace exh::kernels
