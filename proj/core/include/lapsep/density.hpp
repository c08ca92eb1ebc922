#pragma once

#include <Eigen/Dense>

#include "lapsep/errors.hpp"
#include "lapsep/graph.hpp"

namespace lapsep {

inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

double min_eigenvalue(const Eigen::MatrixXd& m);
bool is_row_diagonally_dominant(const Eigen::MatrixXd& m, double tol = 1e-12);

/// Real symmetric, positive semidefinite, unit trace.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(Eigen::MatrixXd m);

  const Eigen::MatrixXd& matrix() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

 private:
  explicit DensityMatrix(Eigen::MatrixXd m) : mat_(std::move(m)) {}
  Eigen::MatrixXd mat_;
};

/// m / tr(m). Errors with ZeroTrace when the trace vanishes (trivial graphs).
DensityMatrix normalize_density(const Eigen::MatrixXd& m);

/// Normalized Laplacian L / tr(L) of a nontrivial graph.
DensityMatrix laplacian_density(const Graph& g);

/// diag(D) - A with row diagonal dominance, validated on construction.
struct GeneralizedLaplacian {
  Eigen::VectorXd diag;
  Eigen::MatrixXd adj;

  GeneralizedLaplacian(Eigen::VectorXd d, Eigen::MatrixXd a);
  Eigen::MatrixXd matrix() const;
};

}  // namespace lapsep
