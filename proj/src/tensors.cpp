#include "curvkit/tensors.hpp"

#include <cmath>
#include <stdexcept>

#include "curvkit/kernels.hpp"

namespace curvkit {
namespace {

void require_same(int ma, int mb, const char* what) {
  if (ma != mb) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

CurvTensor::CurvTensor(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("CurvTensor: dimension must be positive");
  c_.assign(static_cast<std::size_t>(m) * m * m * m, 0.0);
}

CurvTensor CurvTensor::from_raw(int m, std::vector<double> data) {
  CurvTensor t(m);
  if (data.size() != t.c_.size())
    throw std::invalid_argument("CurvTensor: wrong component count");
  t.c_ = std::move(data);
  return t;
}

CurvTensor& CurvTensor::operator+=(const CurvTensor& o) {
  require_same(m_, o.m_, "CurvTensor::operator+=");
  kernels::active().axpy(1.0, o.c_.data(), c_.data(), c_.size());
  return *this;
}

CurvTensor& CurvTensor::operator-=(const CurvTensor& o) {
  require_same(m_, o.m_, "CurvTensor::operator-=");
  kernels::active().axpy(-1.0, o.c_.data(), c_.data(), c_.size());
  return *this;
}

CurvTensor& CurvTensor::operator*=(double s) {
  kernels::active().scale(s, c_.data(), c_.size());
  return *this;
}

CovDerivTensor::CovDerivTensor(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("CovDerivTensor: dimension must be positive");
  c_.assign(static_cast<std::size_t>(m) * m * m * m * m, 0.0);
}

CovDerivTensor CovDerivTensor::from_raw(int m, std::vector<double> data) {
  CovDerivTensor t(m);
  if (data.size() != t.c_.size())
    throw std::invalid_argument("CovDerivTensor: wrong component count");
  t.c_ = std::move(data);
  return t;
}

CovDerivTensor& CovDerivTensor::operator+=(const CovDerivTensor& o) {
  require_same(m_, o.m_, "CovDerivTensor::operator+=");
  kernels::active().axpy(1.0, o.c_.data(), c_.data(), c_.size());
  return *this;
}

CovDerivTensor& CovDerivTensor::operator-=(const CovDerivTensor& o) {
  require_same(m_, o.m_, "CovDerivTensor::operator-=");
  kernels::active().axpy(-1.0, o.c_.data(), c_.data(), c_.size());
  return *this;
}

CovDerivTensor& CovDerivTensor::operator*=(double s) {
  kernels::active().scale(s, c_.data(), c_.size());
  return *this;
}

CurvTensor build_a_psi(const SymForm2& psi) {
  CurvTensor out(psi.dim());
  kernels::active().gram_curv(psi.data(), psi.dim(), out.data());
  return out;
}

CurvTensor build_a_psi_dir(const SymForm2& psi, const SymForm2& dir) {
  require_same(psi.dim(), dir.dim(), "build_a_psi_dir");
  CurvTensor out(psi.dim());
  kernels::active().gram_curv_dir(psi.data(), dir.data(), psi.dim(), out.data());
  return out;
}

CovDerivTensor build_a1(const SymForm2& psi, const SymForm3& psi1) {
  require_same(psi.dim(), psi1.dim(), "build_a1");
  CovDerivTensor out(psi.dim());
  kernels::active().gram_covderiv(psi.data(), psi1.data(), psi.dim(), out.data());
  return out;
}

double SymmetryReport::max_violation() const {
  double v = 0.0;
  for (const auto& id : identities) v = std::max(v, id.value);
  return v;
}

bool SymmetryReport::passes(double tol_rel) const {
  return max_violation() <= tol_rel * norm_inf;
}

SymmetryReport check_symmetries(const CurvTensor& t) {
  const int m = t.dim();
  double anti = 0.0, pair = 0.0, bianchi = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          const double a = t.at(i, j, k, l);
          anti = std::max(anti, std::fabs(a + t.at(j, i, k, l)));
          pair = std::max(pair, std::fabs(a - t.at(k, l, i, j)));
          bianchi = std::max(bianchi,
                             std::fabs(a + t.at(j, k, i, l) + t.at(k, i, j, l)));
        }
  SymmetryReport r;
  r.identities = {{"antisymmetry", anti},
                  {"pair_symmetry", pair},
                  {"first_bianchi", bianchi}};
  r.norm_inf = norm_inf(t);
  return r;
}

SymmetryReport check_symmetries(const CovDerivTensor& t) {
  const int m = t.dim();
  double anti = 0.0, pair = 0.0, bianchi1 = 0.0, bianchi2 = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          for (int n = 0; n < m; ++n) {
            const double a = t.at(i, j, k, l, n);
            anti = std::max(anti, std::fabs(a + t.at(j, i, k, l, n)));
            pair = std::max(pair, std::fabs(a - t.at(k, l, i, j, n)));
            bianchi1 = std::max(
                bianchi1,
                std::fabs(a + t.at(j, k, i, l, n) + t.at(k, i, j, l, n)));
            bianchi2 = std::max(
                bianchi2,
                std::fabs(a + t.at(i, j, l, n, k) + t.at(i, j, n, k, l)));
          }
  SymmetryReport r;
  r.identities = {{"antisymmetry", anti},
                  {"pair_symmetry", pair},
                  {"first_bianchi", bianchi1},
                  {"second_bianchi", bianchi2}};
  r.norm_inf = norm_inf(t);
  return r;
}

double inner(const CurvTensor& a, const CurvTensor& b) {
  require_same(a.dim(), b.dim(), "inner");
  return kernels::active().dot(a.data(), b.data(), a.size());
}

double inner(const CovDerivTensor& a, const CovDerivTensor& b) {
  require_same(a.dim(), b.dim(), "inner");
  return kernels::active().dot(a.data(), b.data(), a.size());
}

double norm(const CurvTensor& t) {
  return std::sqrt(kernels::active().sumsq(t.data(), t.size()));
}

double norm(const CovDerivTensor& t) {
  return std::sqrt(kernels::active().sumsq(t.data(), t.size()));
}

double norm_inf(const CurvTensor& t) {
  return kernels::active().max_abs(t.data(), t.size());
}

double norm_inf(const CovDerivTensor& t) {
  return kernels::active().max_abs(t.data(), t.size());
}

}  // namespace curvkit
