#include "kernels_impl.hpp"

namespace su11::kernels::scalar_impl {

void horner_value_deriv(const double* cre, const double* cim,
                        std::size_t ncoef, const double* zre,
                        const double* zim, std::size_t npts, double* pre,
                        double* pim, double* dre, double* dim) {
  const std::size_t top = ncoef - 1;
  for (std::size_t p = 0; p < npts; ++p) {
    const double xr = zre[p];
    const double xi = zim[p];
    double vr = cre[top];
    double vi = cim[top];
    double wr = 0.0;
    double wi = 0.0;
    for (std::size_t k = top; k-- > 0;) {
      // d = d*z + v before v = v*z + c
      double nwr = wr * xr - wi * xi + vr;
      double nwi = wr * xi + wi * xr + vi;
      wr = nwr;
      wi = nwi;
      double nvr = vr * xr - vi * xi + cre[k];
      double nvi = vr * xi + vi * xr + cim[k];
      vr = nvr;
      vi = nvi;
    }
    pre[p] = vr;
    pim[p] = vi;
    dre[p] = wr;
    dim[p] = wi;
  }
}

void horner_abs(const double* cabs, std::size_t ncoef, const double* radius,
                std::size_t npts, double* out) {
  const std::size_t top = ncoef - 1;
  for (std::size_t p = 0; p < npts; ++p) {
    const double r = radius[p];
    double acc = cabs[top];
    for (std::size_t k = top; k-- > 0;) acc = acc * r + cabs[k];
    out[p] = acc;
  }
}

void aberth_repulsion(const double* zre, const double* zim, std::size_t n,
                      double* out_re, double* out_im) {
  for (std::size_t j = 0; j < n; ++j) {
    const double xr = zre[j];
    const double xi = zim[j];
    double sr = 0.0;
    double si = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      const double dr = xr - zre[k];
      const double di = xi - zim[k];
      const double inv = 1.0 / (dr * dr + di * di);
      sr += dr * inv;
      si -= di * inv;
    }
    out_re[j] = sr;
    out_im[j] = si;
  }
}

}  // namespace su11::kernels::scalar_impl
