#include <atomic>
#include <cstdlib>

#include "exh/kernels.hpp"

namespace exh::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &project_scalar, &extreme_scalar};
#if defined(EXH_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2{Isa::Avx2, &project_avx2, &extreme_avx2};
#endif
#if defined(EXH_HAVE_NEON_KERNELS)
constexpr KernelTable kNeon{Isa::Neon, &project_neon, &extreme_neon};
#endif

bool cpu_has_avx2() {
#if defined(EXH_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* initial_table() {
  if (const char* env = std::getenv("EXH_ISA")) {
    Isa requested;
    if (parse_isa(env, requested))
      if (const KernelTable* t = table_for(requested)) return t;
  }
  const std::vector<Isa> isas = available_isas();
  return table_for(isas.back());
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return &kScalar;
    case Isa::Avx2:
#if defined(EXH_HAVE_AVX2_KERNELS)
      if (cpu_has_avx2()) return &kAvx2;
#endif
      return nullptr;
    case Isa::Neon:
#if defined(EXH_HAVE_NEON_KERNELS)
      return &kNeon;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::Scalar};
  for (Isa isa : {Isa::Avx2, Isa::Neon})
    if (table_for(isa)) out.push_back(isa);
  return out;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

bool set_active(Isa isa) {
  const KernelTable* t = table_for(isa);
  if (!t) return false;
  current().store(t, std::memory_order_release);
  return true;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool parse_isa(std::string_view name, Isa& out) {
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (name == isa_name(isa)) {
      out = isa;
      return true;
    }
  }
  return false;
}

}  // namespace exh::kernels
