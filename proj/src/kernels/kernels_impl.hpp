#pragma once

#include <cstddef>

// Internal declarations shared between the per-ISA translation units and the
// dispatcher.  The AVX2 symbols exist only in x86-64 builds.

namespace su11::kernels::scalar_impl {

void horner_value_deriv(const double* cre, const double* cim,
                        std::size_t ncoef, const double* zre,
                        const double* zim, std::size_t npts, double* pre,
                        double* pim, double* dre, double* dim);

void horner_abs(const double* cabs, std::size_t ncoef, const double* radius,
                std::size_t npts, double* out);

void aberth_repulsion(const double* zre, const double* zim, std::size_t n,
                      double* out_re, double* out_im);

}  // namespace su11::kernels::scalar_impl

#if defined(__x86_64__) || defined(_M_X64)
#define SU11_HAVE_AVX2_LANE 1

namespace su11::kernels::avx2_impl {

void horner_value_deriv(const double* cre, const double* cim,
                        std::size_t ncoef, const double* zre,
                        const double* zim, std::size_t npts, double* pre,
                        double* pim, double* dre, double* dim);

void horner_abs(const double* cabs, std::size_t ncoef, const double* radius,
                std::size_t npts, double* out);

void aberth_repulsion(const double* zre, const double* zim, std::size_t n,
                      double* out_re, double* out_im);

}  // namespace su11::kernels::avx2_impl

#else
#define SU11_HAVE_AVX2_LANE 0
#endif
