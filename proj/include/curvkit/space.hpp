#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace curvkit {

// Coordinate model of the underlying inner-product space: dimension m and a
// diagonal +-1 metric of signature (p, q), p negative entries first.
class Space {
 public:
  // signature (p, m - p); p = 0 gives the Euclidean space.
  explicit Space(int m, int p = 0);

  int dim() const { return m_; }
  std::pair<int, int> signature() const { return {p_, m_ - p_}; }
  const std::vector<double>& metric_diagonal() const { return diag_; }

  Eigen::MatrixXd metric() const;

  bool is_riemannian() const { return p_ == 0; }

 private:
  int m_;
  int p_;
  std::vector<double> diag_;
};

}  // namespace curvkit
