#pragma once

#include <cstddef>

namespace su11::kernels {

// Hot loops of the simultaneous root finder, in structure-of-arrays form so
// the lanes can be vectorized across evaluation points.  Scalar reference
// implementations always exist; wider variants are selected at runtime and
// must agree with scalar to rounding differences only (FMA/reassociation).
struct Dispatch {
  // Evaluate p(z) and p'(z) at npts points.  Coefficients are broadcast,
  // low order first: p(z) = sum_k c[k] z^k.
  void (*horner_value_deriv)(const double* cre, const double* cim,
                             std::size_t ncoef, const double* zre,
                             const double* zim, std::size_t npts, double* pre,
                             double* pim, double* dre, double* dim);

  // out[k] = sum_{j<ncoef} cabs[j] * radius[k]^j, all inputs nonnegative.
  // Paired with horner_value_deriv to derive evaluation error bounds.
  void (*horner_abs)(const double* cabs, std::size_t ncoef,
                     const double* radius, std::size_t npts, double* out);

  // out[j] = sum_{k != j} 1 / (z[j] - z[k]); the Aberth repulsion term.
  void (*aberth_repulsion)(const double* zre, const double* zim,
                           std::size_t n, double* out_re, double* out_im);

  const char* name;
};

// Scalar reference lane; always available.
const Dispatch& scalar();

// AVX2+FMA lane, or nullptr when the CPU (or build) lacks it.
const Dispatch* avx2();

// Runtime-selected lane.  Honors SU11_KERNELS=scalar|avx2 in the
// environment (checked once); unknown or unsupported values fall back to
// the widest supported lane.
const Dispatch& active();

}  // namespace su11::kernels
