#include "curvkit/kernels.hpp"

#include <cmath>

namespace curvkit::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double sumsq_scalar(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * a[i];
  return s;
}

double max_abs_scalar(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s = std::max(s, std::fabs(a[i]));
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(double alpha, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void sub_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void gram_curv_scalar(const double* psi, int m, double* out) {
  for (int i = 0; i < m; ++i) {
    const double* pi = psi + i * m;
    for (int j = 0; j < m; ++j) {
      const double* pj = psi + j * m;
      double* slab = out + (static_cast<std::size_t>(i) * m + j) * m * m;
      for (int k = 0; k < m; ++k) {
        const double pjk = pj[k];
        const double pik = pi[k];
        double* row = slab + static_cast<std::size_t>(k) * m;
        for (int l = 0; l < m; ++l) row[l] = pi[l] * pjk - pik * pj[l];
      }
    }
  }
}

void gram_curv_dir_scalar(const double* psi, const double* d, int m, double* out) {
  for (int i = 0; i < m; ++i) {
    const double* pi = psi + i * m;
    const double* di = d + i * m;
    for (int j = 0; j < m; ++j) {
      const double* pj = psi + j * m;
      const double* dj = d + j * m;
      double* slab = out + (static_cast<std::size_t>(i) * m + j) * m * m;
      for (int k = 0; k < m; ++k) {
        const double pjk = pj[k];
        const double djk = dj[k];
        const double pik = pi[k];
        const double dik = di[k];
        double* row = slab + static_cast<std::size_t>(k) * m;
        for (int l = 0; l < m; ++l)
          row[l] = di[l] * pjk + pi[l] * djk - dik * pj[l] - pik * dj[l];
      }
    }
  }
}

void gram_covderiv_scalar(const double* psi, const double* psi1, int m, double* out) {
  for (int i = 0; i < m; ++i) {
    const double* pi = psi + i * m;
    for (int j = 0; j < m; ++j) {
      const double* pj = psi + j * m;
      for (int k = 0; k < m; ++k) {
        const double* q_jk = psi1 + (static_cast<std::size_t>(j) * m + k) * m;
        const double* q_ik = psi1 + (static_cast<std::size_t>(i) * m + k) * m;
        const double pjk = pj[k];
        const double pik = pi[k];
        for (int l = 0; l < m; ++l) {
          const double* q_il = psi1 + (static_cast<std::size_t>(i) * m + l) * m;
          const double* q_jl = psi1 + (static_cast<std::size_t>(j) * m + l) * m;
          const double pil = pi[l];
          const double pjl = pj[l];
          double* row = out + (((static_cast<std::size_t>(i) * m + j) * m + k) * m + l) * m;
          for (int n = 0; n < m; ++n)
            row[n] = q_il[n] * pjk + pil * q_jk[n] - q_ik[n] * pjl - pik * q_jl[n];
        }
      }
    }
  }
}

}  // namespace

const Table& scalar_table() {
  static const Table table{
      dot_scalar,       sumsq_scalar,    max_abs_scalar,
      axpy_scalar,      scale_scalar,    sub_scalar,
      gram_curv_scalar, gram_curv_dir_scalar, gram_covderiv_scalar,
      "scalar",
  };
  return table;
}

}  // namespace curvkit::kernels
