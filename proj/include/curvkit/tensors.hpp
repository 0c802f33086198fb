#pragma once

#include <string>
#include <vector>

#include "curvkit/forms.hpp"

namespace curvkit {

enum class TensorKind { Curv, CovDeriv };

// Dense order-4 tensor A[i,j,k,l]. Plain container: validity with respect to
// the curvature symmetry identities is checked by check_symmetries(), not
// enforced by construction.
class CurvTensor {
 public:
  explicit CurvTensor(int m);
  static CurvTensor from_raw(int m, std::vector<double> data);

  int dim() const { return m_; }
  std::size_t size() const { return c_.size(); }

  double at(int i, int j, int k, int l) const {
    return c_[((static_cast<std::size_t>(i) * m_ + j) * m_ + k) * m_ + l];
  }
  double& at(int i, int j, int k, int l) {
    return c_[((static_cast<std::size_t>(i) * m_ + j) * m_ + k) * m_ + l];
  }

  const double* data() const { return c_.data(); }
  double* data() { return c_.data(); }

  CurvTensor& operator+=(const CurvTensor& o);
  CurvTensor& operator-=(const CurvTensor& o);
  CurvTensor& operator*=(double s);

 private:
  int m_;
  std::vector<double> c_;
};

// Dense order-5 tensor A1[i,j,k,l;n]; the derivative argument is the last
// index.
class CovDerivTensor {
 public:
  explicit CovDerivTensor(int m);
  static CovDerivTensor from_raw(int m, std::vector<double> data);

  int dim() const { return m_; }
  std::size_t size() const { return c_.size(); }

  double at(int i, int j, int k, int l, int n) const {
    return c_[(((static_cast<std::size_t>(i) * m_ + j) * m_ + k) * m_ + l) * m_ + n];
  }
  double& at(int i, int j, int k, int l, int n) {
    return c_[(((static_cast<std::size_t>(i) * m_ + j) * m_ + k) * m_ + l) * m_ + n];
  }

  const double* data() const { return c_.data(); }
  double* data() { return c_.data(); }

  CovDerivTensor& operator+=(const CovDerivTensor& o);
  CovDerivTensor& operator-=(const CovDerivTensor& o);
  CovDerivTensor& operator*=(double s);

 private:
  int m_;
  std::vector<double> c_;
};

// Generator constructions.
//   build_a_psi:  A[i,j,k,l]   = psi[i,l]psi[j,k] - psi[i,k]psi[j,l]
//   build_a1:     A1[i,j,k,l;n] = psi1[i,l,n]psi[j,k] + psi[i,l]psi1[j,k,n]
//                              - psi1[i,k,n]psi[j,l] - psi[i,k]psi1[j,l,n]
CurvTensor build_a_psi(const SymForm2& psi);
CovDerivTensor build_a1(const SymForm2& psi, const SymForm3& psi1);
// Directional derivative of build_a_psi at psi (used by the solver's
// Gauss-Newton steps).
CurvTensor build_a_psi_dir(const SymForm2& psi, const SymForm2& dir);

struct IdentityViolation {
  std::string name;
  double value;  // max absolute violation over all index tuples
};

struct SymmetryReport {
  std::vector<IdentityViolation> identities;
  double norm_inf = 0.0;
  double max_violation() const;
  // All violations <= tol_rel * ||t||_inf.
  bool passes(double tol_rel) const;
};

// Per-identity max violations: antisymmetry in the first pair, pair symmetry,
// first Bianchi (order 4: applied directly; order 5: per fixed last slot),
// and for order 5 additionally the second Bianchi cycling slots (3,4;5).
SymmetryReport check_symmetries(const CurvTensor& t);
SymmetryReport check_symmetries(const CovDerivTensor& t);

double inner(const CurvTensor& a, const CurvTensor& b);
double inner(const CovDerivTensor& a, const CovDerivTensor& b);
double norm(const CurvTensor& t);
double norm(const CovDerivTensor& t);
double norm_inf(const CurvTensor& t);
double norm_inf(const CovDerivTensor& t);

}  // namespace curvkit
