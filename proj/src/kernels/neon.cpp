// AArch64 only; NEON is part of the base ISA there.
#include <arm_neon.h>

#include <cassert>

#include "exh/kernels.hpp"

namespace exh::kernels {

namespace {

inline float64x2_t dot2(const double* soa, std::size_t count, std::size_t j,
                        const double* dir, std::size_t dim) {
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t c = 0; c < dim; ++c) {
    const float64x2_t x = vld1q_f64(soa + c * count + j);
    // vmul + vadd, never vfma: rounding must match the scalar reference.
    acc = vaddq_f64(acc, vmulq_f64(x, vdupq_n_f64(dir[c])));
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

void project_neon(std::span<const double> soa, std::size_t count,
                  std::span<const double> dir, std::span<double> out) {
  assert(soa.size() == count * dir.size() && out.size() == count);
  const std::size_t dim = dir.size();
  std::size_t j = 0;
  for (; j + 2 <= count; j += 2)
    vst1q_f64(out.data() + j, dot2(soa.data(), count, j, dir.data(), dim));
  for (; j < count; ++j) out[j] = dot1(soa.data(), count, j, dir.data(), dim);
}

double extreme_neon(std::span<const double> soa, std::size_t count,
                    std::span<const double> dir, Extreme which) {
  assert(count > 0 && soa.size() == count * dir.size());
  const std::size_t dim = dir.size();
  const bool want_max = which == Extreme::Max;
  std::size_t j = 0;
  double best = dot1(soa.data(), count, 0, dir.data(), dim);
  if (count >= 2) {
    float64x2_t acc = vdupq_n_f64(best);
    for (; j + 2 <= count; j += 2) {
      const float64x2_t v = dot2(soa.data(), count, j, dir.data(), dim);
      acc = want_max ? vmaxq_f64(acc, v) : vminq_f64(acc, v);
    }
    const double lanes[2] = {vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1)};
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
