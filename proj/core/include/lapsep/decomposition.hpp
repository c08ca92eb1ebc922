#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "lapsep/density.hpp"
#include "lapsep/errors.hpp"
#include "lapsep/labeling.hpp"

namespace lapsep {

/// Joint rank-one expansion of a pair (D, A) with D diagonal, A symmetric and
/// diag(D) - A row diagonally dominant: D = sum mu_i v_i v_i^T and
/// A = sum lambda_i v_i v_i^T with mu_i >= lambda_i.
struct JointDecomposition {
  std::vector<Eigen::VectorXd> vectors;
  std::vector<double> mu;
  std::vector<double> lambda;
  std::string method;  // "row_sum_pivot" or "balanced"
  double pivot = 0.0;  // common row-sum level of the eigen block (row_sum_pivot)

  Eigen::MatrixXd diag_part() const;
  Eigen::MatrixXd adj_part() const;
};

/// Pivot-row construction: splits A into an equal-row-sum part plus a
/// diagonal correction, eigendecomposes the first and expands the second over
/// coordinate vectors. The pivot is max_i r_i so the corrections stay
/// nonpositive. Validates reconstruction, mu >= lambda, and the Gershgorin
/// bound lambda_i <= pivot before returning.
JointDecomposition joint_decompose(const Eigen::VectorXd& d, const Eigen::MatrixXd& a);

/// Symmetric construction from the eigendecompositions of (D+A)/2 and
/// (D-A)/2, giving mu_i = |lambda_i| everywhere. This is the variant used to
/// expand Kronecker certificates, where products of term weights must stay
/// nonnegative.
JointDecomposition joint_decompose_balanced(const Eigen::VectorXd& d,
                                            const Eigen::MatrixXd& a);

struct CertificateTerm {
  double weight = 0.0;
  std::vector<Eigen::VectorXd> factors;  // one unit vector per subsystem
};

/// Nonnegative-weighted sum of tensor-product rank-one terms reconstructing a
/// density matrix; an explicit proof of separability.
struct SeparableCertificate {
  DimVector dims;
  std::vector<CertificateTerm> terms;
  double residual = 0.0;
  std::map<std::string, std::string> meta;

  Eigen::MatrixXd reconstruct() const;
};

/// One (D_i, P_i) factor of a Kronecker summand.
struct FactorPair {
  Eigen::VectorXd diag;
  Eigen::MatrixXd adj;
};

/// Builds a separable certificate for the normalization of
/// A = sum_j (D_1^j x ... x D_m^j - P_1^j x ... x P_m^j), where every
/// D_i^j - P_i^j is row diagonally dominant. Each expanded weight is the
/// difference of mu- and lambda-products; any weight below -1e-10 raises
/// NegativeWeight rather than being clamped.
SeparableCertificate kron_separable_certificate(
    const std::vector<std::vector<FactorPair>>& summands);

struct CertificateCheck {
  double residual = 0.0;     // max-entry reconstruction error
  double min_weight = 0.0;   // most negative term weight
  double weight_sum = 0.0;   // should be 1
};

/// Diagnostic re-validation of a certificate against a target density matrix.
CertificateCheck verify_certificate(const SeparableCertificate& cert,
                                    const DensityMatrix& target);

/// Kronecker product helpers (row-major factor order).
Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
Eigen::VectorXd kron(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

}  // namespace lapsep
