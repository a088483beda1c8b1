#include "su11/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "kernels_impl.hpp"

namespace su11::kernels {

namespace {

constexpr Dispatch kScalar = {
    &scalar_impl::horner_value_deriv,
    &scalar_impl::horner_abs,
    &scalar_impl::aberth_repulsion,
    "scalar",
};

#if SU11_HAVE_AVX2_LANE
constexpr Dispatch kAvx2 = {
    &avx2_impl::horner_value_deriv,
    &avx2_impl::horner_abs,
    &avx2_impl::aberth_repulsion,
    "avx2",
};

bool cpu_has_avx2_fma() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const Dispatch& select() {
  const char* forced = std::getenv("SU11_KERNELS");
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return kScalar;
#if SU11_HAVE_AVX2_LANE
  if (cpu_has_avx2_fma()) return kAvx2;
#endif
  return kScalar;
}

}  // namespace

const Dispatch& scalar() { return kScalar; }

const Dispatch* avx2() {
#if SU11_HAVE_AVX2_LANE
  static const bool ok = cpu_has_avx2_fma();
  return ok ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const Dispatch& active() {
  static const Dispatch& chosen = select();
  return chosen;
}

}  // namespace su11::kernels
