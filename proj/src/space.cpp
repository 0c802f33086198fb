#include "curvkit/space.hpp"

#include <stdexcept>

namespace curvkit {

Space::Space(int m, int p) : m_(m), p_(p) {
  if (m < 1) throw std::invalid_argument("Space: dimension must be positive");
  if (p < 0 || p > m) throw std::invalid_argument("Space: signature out of range");
  diag_.resize(m, 1.0);
  for (int i = 0; i < p; ++i) diag_[i] = -1.0;
}

Eigen::MatrixXd Space::metric() const {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(m_, m_);
  for (int i = 0; i < m_; ++i) g(i, i) = diag_[i];
  return g;
}

}  // namespace curvkit
