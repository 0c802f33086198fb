#include "curvkit/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cmath>

namespace curvkit::kernels {
namespace {

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double sumsq_avx2(const double* a, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d v0 = _mm256_loadu_pd(a + i);
    __m256d v1 = _mm256_loadu_pd(a + i + 4);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(a + i);
    acc0 = _mm256_fmadd_pd(v, v, acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += a[i] * a[i];
  return s;
}

double max_abs_avx2(const double* a, std::size_t n) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_max_pd(acc, _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(a + i)));
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  lo = _mm_max_pd(lo, hi);
  double s = _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
  for (; i < n; ++i) s = std::max(s, std::fabs(a[i]));
  return s;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, r);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_avx2(double alpha, double* x, std::size_t n) {
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= alpha;
}

void sub_avx2(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

// Inner dimension is m (<= 8 in practice), so the vector loop runs once
// or twice per row; the remainder path carries the rest.
void gram_curv_avx2(const double* psi, int m, double* out) {
  for (int i = 0; i < m; ++i) {
    const double* pi = psi + i * m;
    for (int j = 0; j < m; ++j) {
      const double* pj = psi + j * m;
      double* slab = out + (static_cast<std::size_t>(i) * m + j) * m * m;
      for (int k = 0; k < m; ++k) {
        const __m256d pjk = _mm256_set1_pd(pj[k]);
        const __m256d pik = _mm256_set1_pd(pi[k]);
        double* row = slab + static_cast<std::size_t>(k) * m;
        int l = 0;
        for (; l + 4 <= m; l += 4) {
          __m256d r = _mm256_mul_pd(_mm256_loadu_pd(pi + l), pjk);
          r = _mm256_fnmadd_pd(pik, _mm256_loadu_pd(pj + l), r);
          _mm256_storeu_pd(row + l, r);
        }
        for (; l < m; ++l) row[l] = pi[l] * pj[k] - pi[k] * pj[l];
      }
    }
  }
}

void gram_curv_dir_avx2(const double* psi, const double* d, int m, double* out) {
  for (int i = 0; i < m; ++i) {
    const double* pi = psi + i * m;
    const double* di = d + i * m;
    for (int j = 0; j < m; ++j) {
      const double* pj = psi + j * m;
      const double* dj = d + j * m;
      double* slab = out + (static_cast<std::size_t>(i) * m + j) * m * m;
      for (int k = 0; k < m; ++k) {
        const __m256d pjk = _mm256_set1_pd(pj[k]);
        const __m256d djk = _mm256_set1_pd(dj[k]);
        const __m256d pik = _mm256_set1_pd(pi[k]);
        const __m256d dik = _mm256_set1_pd(di[k]);
        double* row = slab + static_cast<std::size_t>(k) * m;
        int l = 0;
        for (; l + 4 <= m; l += 4) {
          __m256d r = _mm256_mul_pd(_mm256_loadu_pd(di + l), pjk);
          r = _mm256_fmadd_pd(_mm256_loadu_pd(pi + l), djk, r);
          r = _mm256_fnmadd_pd(dik, _mm256_loadu_pd(pj + l), r);
          r = _mm256_fnmadd_pd(pik, _mm256_loadu_pd(dj + l), r);
          _mm256_storeu_pd(row + l, r);
        }
        for (; l < m; ++l)
          row[l] = di[l] * pj[k] + pi[l] * dj[k] - di[k] * pj[l] - pi[k] * dj[l];
      }
    }
  }
}

void gram_covderiv_avx2(const double* psi, const double* psi1, int m, double* out) {
  for (int i = 0; i < m; ++i) {
    const double* pi = psi + i * m;
    for (int j = 0; j < m; ++j) {
      const double* pj = psi + j * m;
      for (int k = 0; k < m; ++k) {
        const double* q_jk = psi1 + (static_cast<std::size_t>(j) * m + k) * m;
        const double* q_ik = psi1 + (static_cast<std::size_t>(i) * m + k) * m;
        const __m256d pjk = _mm256_set1_pd(pj[k]);
        const __m256d pik = _mm256_set1_pd(pi[k]);
        for (int l = 0; l < m; ++l) {
          const double* q_il = psi1 + (static_cast<std::size_t>(i) * m + l) * m;
          const double* q_jl = psi1 + (static_cast<std::size_t>(j) * m + l) * m;
          const __m256d pil = _mm256_set1_pd(pi[l]);
          const __m256d pjl = _mm256_set1_pd(pj[l]);
          double* row = out + (((static_cast<std::size_t>(i) * m + j) * m + k) * m + l) * m;
          int n = 0;
          for (; n + 4 <= m; n += 4) {
            __m256d r = _mm256_mul_pd(_mm256_loadu_pd(q_il + n), pjk);
            r = _mm256_fmadd_pd(pil, _mm256_loadu_pd(q_jk + n), r);
            r = _mm256_fnmadd_pd(_mm256_loadu_pd(q_ik + n), pjl, r);
            r = _mm256_fnmadd_pd(pik, _mm256_loadu_pd(q_jl + n), r);
            _mm256_storeu_pd(row + n, r);
          }
          for (; n < m; ++n)
            row[n] = q_il[n] * pj[k] + pi[l] * q_jk[n] - q_ik[n] * pj[l] - pi[k] * q_jl[n];
        }
      }
    }
  }
}

}  // namespace

const Table* avx2_table_or_null() {
  static const Table table{
      dot_avx2,       sumsq_avx2,    max_abs_avx2,
      axpy_avx2,      scale_avx2,    sub_avx2,
      gram_curv_avx2, gram_curv_dir_avx2, gram_covderiv_avx2,
      "avx2",
  };
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &table : nullptr;
}

}  // namespace curvkit::kernels

#else

namespace curvkit::kernels {
const Table* avx2_table_or_null() { return nullptr; }
}  // namespace curvkit::kernels

#endif
