#include "lapsep/density.hpp"

#include <cmath>
#include <utility>

namespace lapsep {

double min_eigenvalue(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

bool is_row_diagonally_dominant(const Eigen::MatrixXd& m, double tol) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double off = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (j != i) off += std::abs(m(i, j));
    if (m(i, i) < off - tol) return false;
  }
  return true;
}

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXd m) {
  if (m.rows() != m.cols()) throw DimensionMismatchError("density matrix must be square");
  if (!m.isApprox(m.transpose(), 1e-12))
    throw Error("density matrix must be symmetric");
  if (std::abs(m.trace() - 1.0) > kTraceTol)
    throw Error("density matrix must have unit trace");
  if (min_eigenvalue(m) < -kPsdTol)
    throw Error("density matrix must be positive semidefinite");
  return DensityMatrix(std::move(m));
}

DensityMatrix normalize_density(const Eigen::MatrixXd& m) {
  const double tr = m.trace();
  if (std::abs(tr) < kTraceTol) throw ZeroTraceError("matrix has zero trace");
  return DensityMatrix::from_matrix(m / tr);
}

DensityMatrix laplacian_density(const Graph& g) {
  if (g.is_trivial()) throw ZeroTraceError("trivial graph has a zero Laplacian");
  return normalize_density(laplacian(g));
}

GeneralizedLaplacian::GeneralizedLaplacian(Eigen::VectorXd d, Eigen::MatrixXd a)
    : diag(std::move(d)), adj(std::move(a)) {
  if (adj.rows() != adj.cols() || diag.size() != adj.rows())
    throw DimensionMismatchError("diagonal and adjacency sizes differ");
  if (!adj.isApprox(adj.transpose(), 1e-12))
    throw Error("adjacency part must be symmetric");
  if (!is_row_diagonally_dominant(matrix()))
    throw NotDiagonallyDominantError("diag(D) - A is not row diagonally dominant");
}

Eigen::MatrixXd GeneralizedLaplacian::matrix() const {
  Eigen::MatrixXd m = -adj;
  m.diagonal() += diag;
  return m;
}

}  // namespace lapsep
