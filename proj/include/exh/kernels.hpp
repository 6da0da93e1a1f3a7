#pragma once
// Data-parallel inner loops behind every support-function evaluation.
//
// A vertex block is stored coordinate-major ("SoA"): coordinate c of vertex j
// lives at soa[c * count + j]. Every variant accumulates each vertex's inner
// product in coordinate order with separate multiply and add, starting from
// +0.0, so all variants produce bit-identical projections.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace exh {

enum class Extreme { Max, Min };

namespace kernels {

enum class Isa { Scalar, Avx2, Neon };

/// out[j] = <vertex j, dir>. out.size() must equal count.
using ProjectFn = void (*)(std::span<const double> soa, std::size_t count,
                           std::span<const double> dir, std::span<double> out);
/// max_j or min_j of <vertex j, dir>; count must be >= 1.
using ExtremeFn = double (*)(std::span<const double> soa, std::size_t count,
                             std::span<const double> dir, Extreme which);

struct KernelTable {
  Isa isa;
  ProjectFn project;
  ExtremeFn extreme;
};

void project_scalar(std::span<const double> soa, std::size_t count,
                    std::span<const double> dir, std::span<double> out);
double extreme_scalar(std::span<const double> soa, std::size_t count,
                      std::span<const double> dir, Extreme which);

#if defined(EXH_HAVE_AVX2_KERNELS)
void project_avx2(std::span<const double> soa, std::size_t count,
                  std::span<const double> dir, std::span<double> out);
double extreme_avx2(std::span<const double> soa, std::size_t count,
                    std::span<const double> dir, Extreme which);
#endif

#if defined(EXH_HAVE_NEON_KERNELS)
void project_neon(std::span<const double> soa, std::size_t count,
                  std::span<const double> dir, std::span<double> out);
double extreme_neon(std::span<const double> soa, std::size_t count,
                    std::span<const double> dir, Extreme which);
#endif

/// Table for `isa`, or nullptr when it was not compiled in or the CPU lacks it.
const KernelTable* table_for(Isa isa);

/// All variants usable on this machine, scalar first.
std::vector<Isa> available_isas();

/// The table used by the library. Chosen on first use: the EXH_ISA
/// environment variable if it names an available variant, otherwise the
/// widest one the CPU supports.
const KernelTable& active();

/// Switches the library-wide kernels. Returns false (and changes nothing)
/// when `isa` is unavailable.
bool set_active(Isa isa);

std::string_view isa_name(Isa isa);
bool parse_isa(std::string_view name, Isa& out);

}  // namespace kernels
}  // namespace exh
