#include "kernels_impl.hpp"

#if SU11_HAVE_AVX2_LANE

#include <immintrin.h>

#include <cstdint>

namespace su11::kernels::avx2_impl {

namespace {

inline __m256d load4(const double* p) { return _mm256_loadu_pd(p); }

}  // namespace

void horner_value_deriv(const double* cre, const double* cim,
                        std::size_t ncoef, const double* zre,
                        const double* zim, std::size_t npts, double* pre,
                        double* pim, double* dre, double* dim) {
  const std::size_t top = ncoef - 1;
  std::size_t p = 0;
  for (; p + 4 <= npts; p += 4) {
    const __m256d xr = load4(zre + p);
    const __m256d xi = load4(zim + p);
    __m256d vr = _mm256_set1_pd(cre[top]);
    __m256d vi = _mm256_set1_pd(cim[top]);
    __m256d wr = _mm256_setzero_pd();
    __m256d wi = _mm256_setzero_pd();
    for (std::size_t k = top; k-- > 0;) {
      // w = w*z + v
      __m256d nwr = _mm256_fmadd_pd(
          wr, xr, _mm256_fnmadd_pd(wi, xi, vr));
      __m256d nwi = _mm256_fmadd_pd(
          wr, xi, _mm256_fmadd_pd(wi, xr, vi));
      wr = nwr;
      wi = nwi;
      // v = v*z + c
      __m256d nvr = _mm256_fmadd_pd(
          vr, xr, _mm256_fnmadd_pd(vi, xi, _mm256_set1_pd(cre[k])));
      __m256d nvi = _mm256_fmadd_pd(
          vr, xi, _mm256_fmadd_pd(vi, xr, _mm256_set1_pd(cim[k])));
      vr = nvr;
      vi = nvi;
    }
    _mm256_storeu_pd(pre + p, vr);
    _mm256_storeu_pd(pim + p, vi);
    _mm256_storeu_pd(dre + p, wr);
    _mm256_storeu_pd(dim + p, wi);
  }
  if (p < npts) {
    scalar_impl::horner_value_deriv(cre, cim, ncoef, zre + p, zim + p,
                                    npts - p, pre + p, pim + p, dre + p,
                                    dim + p);
  }
}

void horner_abs(const double* cabs, std::size_t ncoef, const double* radius,
                std::size_t npts, double* out) {
  const std::size_t top = ncoef - 1;
  std::size_t p = 0;
  for (; p + 4 <= npts; p += 4) {
    const __m256d r = load4(radius + p);
    __m256d acc = _mm256_set1_pd(cabs[top]);
    for (std::size_t k = top; k-- > 0;)
      acc = _mm256_fmadd_pd(acc, r, _mm256_set1_pd(cabs[k]));
    _mm256_storeu_pd(out + p, acc);
  }
  if (p < npts)
    scalar_impl::horner_abs(cabs, ncoef, radius + p, npts - p, out + p);
}

void aberth_repulsion(const double* zre, const double* zim, std::size_t n,
                      double* out_re, double* out_im) {
  const __m256i lane_offsets = _mm256_setr_epi64x(0, 1, 2, 3);
  for (std::size_t j = 0; j < n; ++j) {
    const __m256d xr = _mm256_set1_pd(zre[j]);
    const __m256d xi = _mm256_set1_pd(zim[j]);
    const __m256i jv = _mm256_set1_epi64x(static_cast<std::int64_t>(j));
    __m256d sr = _mm256_setzero_pd();
    __m256d si = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
      const __m256d dr = _mm256_sub_pd(xr, load4(zre + k));
      const __m256d di = _mm256_sub_pd(xi, load4(zim + k));
      const __m256d d2 =
          _mm256_fmadd_pd(dr, dr, _mm256_mul_pd(di, di));
      const __m256d inv = _mm256_div_pd(_mm256_set1_pd(1.0), d2);
      // mask out the self term k == j
      const __m256i kv = _mm256_add_epi64(
          _mm256_set1_epi64x(static_cast<std::int64_t>(k)), lane_offsets);
      const __m256d keep = _mm256_castsi256_pd(
          _mm256_xor_si256(_mm256_cmpeq_epi64(kv, jv),
                           _mm256_set1_epi64x(-1)));
      const __m256d w = _mm256_and_pd(inv, keep);
      sr = _mm256_fmadd_pd(dr, w, sr);
      si = _mm256_fnmadd_pd(di, w, si);
    }
    alignas(32) double tr[4], ti[4];
    _mm256_store_pd(tr, sr);
    _mm256_store_pd(ti, si);
    double acc_r = (tr[0] + tr[1]) + (tr[2] + tr[3]);
    double acc_i = (ti[0] + ti[1]) + (ti[2] + ti[3]);
    for (; k < n; ++k) {
      if (k == j) continue;
      const double dr = zre[j] - zre[k];
      const double di = zim[j] - zim[k];
      const double inv = 1.0 / (dr * dr + di * di);
      acc_r += dr * inv;
      acc_i -= di * inv;
    }
    out_re[j] = acc_r;
    out_im[j] = acc_i;
  }
}

}  // namespace su11::kernels::avx2_impl

#endif  // SU11_HAVE_AVX2_LANE
