#pragma once

#include <Eigen/Dense>
#include <vector>

#include "curvkit/rng.hpp"

namespace curvkit {

// Symmetric bilinear form on the m-dimensional space, stored dense m x m.
class SymForm2 {
 public:
  explicit SymForm2(int m);

  // Rejects input whose mirrored entries differ by more than the ingest
  // tolerance (tol::kFormSymmetryAbs relative to the largest entry).
  static SymForm2 from_components(int m, std::vector<double> components);
  // Averages (i,j) and (j,i); accepts anything of the right size.
  static SymForm2 symmetrized(int m, const std::vector<double>& raw);
  static SymForm2 identity(int m);
  static SymForm2 random(int m, Rng& rng);

  int dim() const { return m_; }
  double at(int i, int j) const { return c_[static_cast<std::size_t>(i) * m_ + j]; }
  void set(int i, int j, double v);  // writes both mirrored entries

  const double* data() const { return c_.data(); }
  const std::vector<double>& components() const { return c_; }

  Eigen::MatrixXd matrix() const;

  SymForm2& operator*=(double s);

 private:
  int m_;
  std::vector<double> c_;
};

// Totally symmetric trilinear form, stored dense m x m x m.
class SymForm3 {
 public:
  explicit SymForm3(int m);

  static SymForm3 from_components(int m, std::vector<double> components);
  static SymForm3 symmetrized(int m, const std::vector<double>& raw);
  static SymForm3 random(int m, Rng& rng);

  int dim() const { return m_; }
  double at(int i, int j, int k) const {
    return c_[(static_cast<std::size_t>(i) * m_ + j) * m_ + k];
  }
  void set(int i, int j, int k, double v);  // writes all six permutations

  const double* data() const { return c_.data(); }
  const std::vector<double>& components() const { return c_; }

  SymForm3& operator*=(double s);

 private:
  int m_;
  std::vector<double> c_;
};

// Independent-coordinate counts and pack/unpack between the dense storage and
// the canonical coordinate vector (upper triangle resp. i <= j <= k triples).
// The solver parameterizes forms through these.
int sym2_coords(int m);
int sym3_coords(int m);
Eigen::VectorXd pack(const SymForm2& f);
Eigen::VectorXd pack(const SymForm3& f);
SymForm2 unpack_sym2(int m, const Eigen::VectorXd& coords);
SymForm3 unpack_sym3(int m, const Eigen::VectorXd& coords);

// Basis element for the c-th canonical coordinate (unit value in that slot,
// mirrored across the symmetric copies).
SymForm2 sym2_basis(int m, int c);
SymForm3 sym3_basis(int m, int c);

}  // namespace curvkit
