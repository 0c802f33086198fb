#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "curvkit/tensors.hpp"

namespace curvkit {

// Orthonormal basis of the symmetry-constrained subspace of the dense order-4
// or order-5 tensor space, obtained as the null space of the stacked symmetry
// constraints. Rank-revealing: singular values at or below
// tol::kRankCutoffRel * sigma_max count as zero. Instances are cached per
// (m, kind) and immutable after construction.
class SymmetryClass {
 public:
  // Desk scale: 2 <= m <= 6.
  static const SymmetryClass& get(int m, TensorKind kind);

  int space_dim() const { return m_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  std::size_t ambient() const { return static_cast<std::size_t>(basis_.rows()); }

  // ambient x dim, orthonormal columns spanning the class.
  const Eigen::MatrixXd& basis() const { return basis_; }

  Eigen::VectorXd project(const Eigen::VectorXd& raw) const;

 private:
  SymmetryClass(int m, TensorKind kind);
  int m_;
  Eigen::MatrixXd basis_;
};

int class_dimension(int m, TensorKind kind);

// Orthogonal projection (componentwise inner product) onto the symmetry
// class; idempotent and the identity on tensors already in the class.
CurvTensor project(const CurvTensor& raw);
CovDerivTensor project(const CovDerivTensor& raw);

// Projection of a seeded i.i.d. standard-normal array; deterministic per seed.
CurvTensor random_curv(int m, std::uint64_t seed);
CovDerivTensor random_covderiv(int m, std::uint64_t seed);

}  // namespace curvkit
