#include "curvkit/projection.hpp"

#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curvkit/rng.hpp"
#include "curvkit/tolerances.hpp"

namespace curvkit {
namespace {

using Entry = std::pair<std::size_t, double>;  // (flat index, coefficient)

// Accumulates C^T C for a constraint matrix given row by row; the null space
// of C equals the kernel of C^T C.
class Gram {
 public:
  explicit Gram(std::size_t n) : g_(Eigen::MatrixXd::Zero(n, n)) {}

  void add_row(const std::vector<Entry>& row) {
    for (const auto& [ci, vi] : row)
      for (const auto& [cj, vj] : row) g_(ci, cj) += vi * vj;
  }

  // Orthonormal basis of the kernel, with the rank cutoff applied to the
  // singular values sigma = sqrt(eigenvalues).
  Eigen::MatrixXd kernel() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g_);
    const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
    const double sigma_max = std::sqrt(std::max(0.0, ev[ev.size() - 1]));
    const double cut = tol::kRankCutoffRel * sigma_max;
    int null_dim = 0;
    while (null_dim < ev.size() &&
           std::sqrt(std::max(0.0, ev[null_dim])) <= cut)
      ++null_dim;
    return es.eigenvectors().leftCols(null_dim);
  }

 private:
  Eigen::MatrixXd g_;
};

std::size_t idx4(int m, int i, int j, int k, int l) {
  return ((static_cast<std::size_t>(i) * m + j) * m + k) * m + l;
}

// Null space of the three order-4 identities (antisymmetry, pair symmetry,
// first Bianchi) stacked over all index tuples.
Eigen::MatrixXd curv_basis(int m) {
  const std::size_t n = static_cast<std::size_t>(m) * m * m * m;
  Gram gram(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          gram.add_row({{idx4(m, i, j, k, l), 1.0}, {idx4(m, j, i, k, l), 1.0}});
          gram.add_row({{idx4(m, i, j, k, l), 1.0}, {idx4(m, k, l, i, j), -1.0}});
          gram.add_row({{idx4(m, i, j, k, l), 1.0},
                        {idx4(m, j, k, i, l), 1.0},
                        {idx4(m, k, i, j, l), 1.0}});
        }
  return gram.kernel();
}

// Null space of the stacked order-5 constraints, taken in two rank-revealing
// stages: the per-slice order-4 identities give the subspace
// (order-4 class) (x) V*, then the second Bianchi constraint is restricted to
// that subspace. Same null space as the one-shot stacked matrix; keeps the
// factorizations at desk-scale sizes.
Eigen::MatrixXd covderiv_basis(int m, const Eigen::MatrixXd& n4) {
  const int d4 = static_cast<int>(n4.cols());
  const int d1 = d4 * m;  // intermediate subspace: (alpha, n0) columns
  const std::size_t n5 = static_cast<std::size_t>(m) * m * m * m * m;

  // G = M^T M where M = B2 * N1 and N1 is the slice-structured basis of the
  // intermediate subspace: column (alpha, n0) puts n4 column alpha in slice
  // n0. Rows of B2: T[ijkl;n] + T[ijln;k] + T[ijnk;l] = 0.
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(d1, d1);
  std::vector<std::pair<int, double>> cols;  // (column of N1, value)
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          for (int n = 0; n < m; ++n) {
            const std::array<std::array<int, 3>, 3> cyc = {
                {{k, l, n}, {l, n, k}, {n, k, l}}};
            cols.clear();
            for (const auto& [a, b, c] : cyc) {
              const std::size_t r4 = idx4(m, i, j, a, b);
              for (int alpha = 0; alpha < d4; ++alpha) {
                const double v = n4(r4, alpha);
                if (v != 0.0) cols.emplace_back(alpha * m + c, v);
              }
            }
            for (const auto& [ca, va] : cols)
              for (const auto& [cb, vb] : cols) g(ca, cb) += va * vb;
          }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double sigma_max = std::sqrt(std::max(0.0, ev[ev.size() - 1]));
  const double cut = tol::kRankCutoffRel * sigma_max;
  int null_dim = 0;
  while (null_dim < ev.size() && std::sqrt(std::max(0.0, ev[null_dim])) <= cut)
    ++null_dim;
  const Eigen::MatrixXd z = es.eigenvectors().leftCols(null_dim);

  // Expand back to the ambient order-5 space: slice n0 of basis column b is
  // n4 * z_block(n0, b).
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(n5, null_dim);
  for (int b = 0; b < null_dim; ++b)
    for (int n0 = 0; n0 < m; ++n0)
      for (int alpha = 0; alpha < d4; ++alpha) {
        const double w = z(alpha * m + n0, b);
        if (w == 0.0) continue;
        for (std::size_t r4 = 0; r4 < static_cast<std::size_t>(n4.rows()); ++r4)
          basis(r4 * m + n0, b) += w * n4(r4, alpha);
      }
  return basis;
}

}  // namespace

SymmetryClass::SymmetryClass(int m, TensorKind kind) : m_(m) {
  const Eigen::MatrixXd n4 = curv_basis(m);
  basis_ = (kind == TensorKind::Curv) ? n4 : covderiv_basis(m, n4);
}

const SymmetryClass& SymmetryClass::get(int m, TensorKind kind) {
  if (m < 2 || m > 6)
    throw std::out_of_range("SymmetryClass: supported dimensions are 2..6");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<SymmetryClass>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, static_cast<int>(kind));
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::unique_ptr<SymmetryClass>(new SymmetryClass(m, kind)))
             .first;
  }
  return *it->second;
}

Eigen::VectorXd SymmetryClass::project(const Eigen::VectorXd& raw) const {
  if (raw.size() != basis_.rows())
    throw std::invalid_argument("SymmetryClass::project: wrong length");
  return basis_ * (basis_.transpose() * raw);
}

int class_dimension(int m, TensorKind kind) {
  return SymmetryClass::get(m, kind).dim();
}

CurvTensor project(const CurvTensor& raw) {
  const SymmetryClass& cls = SymmetryClass::get(raw.dim(), TensorKind::Curv);
  Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(raw.data(), raw.size());
  v = cls.project(v);
  return CurvTensor::from_raw(raw.dim(), std::vector<double>(v.data(), v.data() + v.size()));
}

CovDerivTensor project(const CovDerivTensor& raw) {
  const SymmetryClass& cls = SymmetryClass::get(raw.dim(), TensorKind::CovDeriv);
  Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(raw.data(), raw.size());
  v = cls.project(v);
  return CovDerivTensor::from_raw(raw.dim(),
                                  std::vector<double>(v.data(), v.data() + v.size()));
}

CurvTensor random_curv(int m, std::uint64_t seed) {
  Rng rng(seed);
  CurvTensor t(m);
  for (std::size_t i = 0; i < t.size(); ++i) t.data()[i] = rng.normal();
  return project(t);
}

CovDerivTensor random_covderiv(int m, std::uint64_t seed) {
  Rng rng(seed);
  CovDerivTensor t(m);
  for (std::size_t i = 0; i < t.size(); ++i) t.data()[i] = rng.normal();
  return project(t);
}

}  // namespace curvkit
