#include "curvkit/forms.hpp"

#include <cmath>
#include <stdexcept>

#include "curvkit/tolerances.hpp"

namespace curvkit {
namespace {

void check_dim(int m) {
  if (m < 1) throw std::invalid_argument("symmetric form: dimension must be positive");
}

}  // namespace

SymForm2::SymForm2(int m) : m_(m) {
  check_dim(m);
  c_.assign(static_cast<std::size_t>(m) * m, 0.0);
}

SymForm2 SymForm2::from_components(int m, std::vector<double> components) {
  check_dim(m);
  if (components.size() != static_cast<std::size_t>(m) * m)
    throw std::invalid_argument("SymForm2: wrong component count");
  double scale = 0.0;
  for (double v : components) scale = std::max(scale, std::fabs(v));
  const double tol = tol::kFormSymmetryAbs * std::max(1.0, scale);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (std::fabs(components[static_cast<std::size_t>(i) * m + j] -
                    components[static_cast<std::size_t>(j) * m + i]) > tol)
        throw std::invalid_argument("SymForm2: components are not symmetric");
  SymForm2 f(m);
  f.c_ = std::move(components);
  return f;
}

SymForm2 SymForm2::symmetrized(int m, const std::vector<double>& raw) {
  check_dim(m);
  if (raw.size() != static_cast<std::size_t>(m) * m)
    throw std::invalid_argument("SymForm2: wrong component count");
  SymForm2 f(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      f.c_[static_cast<std::size_t>(i) * m + j] =
          0.5 * (raw[static_cast<std::size_t>(i) * m + j] +
                 raw[static_cast<std::size_t>(j) * m + i]);
  return f;
}

SymForm2 SymForm2::identity(int m) {
  SymForm2 f(m);
  for (int i = 0; i < m; ++i) f.set(i, i, 1.0);
  return f;
}

SymForm2 SymForm2::random(int m, Rng& rng) {
  SymForm2 f(m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) f.set(i, j, rng.normal());
  return f;
}

void SymForm2::set(int i, int j, double v) {
  c_[static_cast<std::size_t>(i) * m_ + j] = v;
  c_[static_cast<std::size_t>(j) * m_ + i] = v;
}

Eigen::MatrixXd SymForm2::matrix() const {
  return Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                        Eigen::RowMajor>>(c_.data(), m_, m_);
}

SymForm2& SymForm2::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

SymForm3::SymForm3(int m) : m_(m) {
  check_dim(m);
  c_.assign(static_cast<std::size_t>(m) * m * m, 0.0);
}

SymForm3 SymForm3::from_components(int m, std::vector<double> components) {
  check_dim(m);
  if (components.size() != static_cast<std::size_t>(m) * m * m)
    throw std::invalid_argument("SymForm3: wrong component count");
  double scale = 0.0;
  for (double v : components) scale = std::max(scale, std::fabs(v));
  const double tol = tol::kFormSymmetryAbs * std::max(1.0, scale);
  auto idx = [m](int a, int b, int c) {
    return (static_cast<std::size_t>(a) * m + b) * m + c;
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        const double v = components[idx(i, j, k)];
        if (std::fabs(v - components[idx(i, k, j)]) > tol ||
            std::fabs(v - components[idx(j, i, k)]) > tol ||
            std::fabs(v - components[idx(k, j, i)]) > tol)
          throw std::invalid_argument("SymForm3: components are not symmetric");
      }
  SymForm3 f(m);
  f.c_ = std::move(components);
  return f;
}

SymForm3 SymForm3::symmetrized(int m, const std::vector<double>& raw) {
  check_dim(m);
  if (raw.size() != static_cast<std::size_t>(m) * m * m)
    throw std::invalid_argument("SymForm3: wrong component count");
  auto idx = [m](int a, int b, int c) {
    return (static_cast<std::size_t>(a) * m + b) * m + c;
  };
  SymForm3 f(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        f.c_[idx(i, j, k)] =
            (raw[idx(i, j, k)] + raw[idx(i, k, j)] + raw[idx(j, i, k)] +
             raw[idx(j, k, i)] + raw[idx(k, i, j)] + raw[idx(k, j, i)]) /
            6.0;
  return f;
}

SymForm3 SymForm3::random(int m, Rng& rng) {
  SymForm3 f(m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      for (int k = j; k < m; ++k) f.set(i, j, k, rng.normal());
  return f;
}

void SymForm3::set(int i, int j, int k, double v) {
  auto idx = [this](int a, int b, int c) {
    return (static_cast<std::size_t>(a) * m_ + b) * m_ + c;
  };
  c_[idx(i, j, k)] = v;
  c_[idx(i, k, j)] = v;
  c_[idx(j, i, k)] = v;
  c_[idx(j, k, i)] = v;
  c_[idx(k, i, j)] = v;
  c_[idx(k, j, i)] = v;
}

SymForm3& SymForm3::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

int sym2_coords(int m) { return m * (m + 1) / 2; }
int sym3_coords(int m) { return m * (m + 1) * (m + 2) / 6; }

Eigen::VectorXd pack(const SymForm2& f) {
  const int m = f.dim();
  Eigen::VectorXd v(sym2_coords(m));
  int c = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) v[c++] = f.at(i, j);
  return v;
}

Eigen::VectorXd pack(const SymForm3& f) {
  const int m = f.dim();
  Eigen::VectorXd v(sym3_coords(m));
  int c = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      for (int k = j; k < m; ++k) v[c++] = f.at(i, j, k);
  return v;
}

SymForm2 unpack_sym2(int m, const Eigen::VectorXd& coords) {
  if (coords.size() != sym2_coords(m))
    throw std::invalid_argument("unpack_sym2: wrong coordinate count");
  SymForm2 f(m);
  int c = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) f.set(i, j, coords[c++]);
  return f;
}

SymForm3 unpack_sym3(int m, const Eigen::VectorXd& coords) {
  if (coords.size() != sym3_coords(m))
    throw std::invalid_argument("unpack_sym3: wrong coordinate count");
  SymForm3 f(m);
  int c = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      for (int k = j; k < m; ++k) f.set(i, j, k, coords[c++]);
  return f;
}

SymForm2 sym2_basis(int m, int c) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(sym2_coords(m));
  v[c] = 1.0;
  return unpack_sym2(m, v);
}

SymForm3 sym3_basis(int m, int c) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(sym3_coords(m));
  v[c] = 1.0;
  return unpack_sym3(m, v);
}

}  // namespace curvkit
