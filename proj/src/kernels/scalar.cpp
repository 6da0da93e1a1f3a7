#include "exh/kernels.hpp"

#include <cassert>

namespace exh::kernels {

namespace {

inline double dot_column(const double* soa, std::size_t count, std::size_t j,
                         const double* dir, std::size_t dim) {
  double acc = 0.0;
  for (std::size_t c = 0; c < dim; ++c) {
    const double term = soa[c * count + j] * dir[c];
    acc = acc + term;
  }
  return acc;
}

}  // namespace

void project_scalar(std::span<const double> soa, std::size_t count,
                    std::span<const double> dir, std::span<double> out) {
  assert(soa.size() == count * dir.size() && out.size() == count);
  for (std::size_t j = 0; j < count; ++j)
    out[j] = dot_column(soa.data(), count, j, dir.data(), dir.size());
}

double extreme_scalar(std::span<const double> soa, std::size_t count,
                      std::span<const double> dir, Extreme which) {
  assert(count > 0 && soa.size() == count * dir.size());
  double best = dot_column(soa.data(), count, 0, dir.data(), dir.size());
  for (std::size_t j = 1; j < count; ++j) {
    const double v = dot_column(soa.data(), count, j, dir.data(), dir.size());
    if (which == Extreme::Max ? v > best : v < best) best = v;
  }
  return best;
}

}  // namespace exh::kernels
