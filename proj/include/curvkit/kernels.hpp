#pragma once

#include <cstddef>
#include <string_view>

namespace curvkit::kernels {

// Flat-array kernels behind the tensor arithmetic. One scalar reference
// implementation plus SIMD variants; the active table is picked once at
// startup from CPU capabilities. Override with CURVKIT_KERNELS=scalar|avx2
// or set_active() (tests use the latter to cross-check lanes).
struct Table {
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*sumsq)(const double* a, std::size_t n);
  double (*max_abs)(const double* a, std::size_t n);
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  void (*scale)(double alpha, double* x, std::size_t n);
  void (*sub)(const double* a, const double* b, double* out, std::size_t n);
  // Curvature-type Gram tensor of a symmetric bilinear form:
  //   out[i,j,k,l] = psi[i,l]*psi[j,k] - psi[i,k]*psi[j,l]
  void (*gram_curv)(const double* psi, int m, double* out);
  // Directional derivative of gram_curv at psi in direction d:
  //   out[i,j,k,l] = d[i,l]*psi[j,k] + psi[i,l]*d[j,k]
  //               - d[i,k]*psi[j,l] - psi[i,k]*d[j,l]
  void (*gram_curv_dir)(const double* psi, const double* d, int m, double* out);
  // Product-rule analogue with a symmetric trilinear form (last index n):
  //   out[i,j,k,l,n] = psi1[i,l,n]*psi[j,k] + psi[i,l]*psi1[j,k,n]
  //                 - psi1[i,k,n]*psi[j,l] - psi[i,k]*psi1[j,l,n]
  void (*gram_covderiv)(const double* psi, const double* psi1, int m, double* out);
  const char* name;
};

const Table& scalar_table();

// Null when the binary was built without AVX2 support or the CPU lacks it.
const Table* avx2_table_or_null();

const Table& active();
bool set_active(std::string_view name);  // "scalar" or "avx2"
void reset_active();

}  // namespace curvkit::kernels
