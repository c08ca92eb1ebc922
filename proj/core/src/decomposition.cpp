#include "lapsep/decomposition.hpp"

#include <cmath>
#include <utility>

namespace lapsep {

namespace {

constexpr double kReconstructTol = 1e-10;
constexpr double kSlackTol = 1e-12;
constexpr double kDropTol = 1e-14;
constexpr double kNegativeWeightTol = 1e-10;

void check_pair_shape(const Eigen::VectorXd& d, const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols() || d.size() != a.rows())
    throw DimensionMismatchError("diagonal and matrix sizes differ");
  if (!a.isApprox(a.transpose(), 1e-12))
    throw Error("matrix part must be symmetric");
  Eigen::MatrixXd l = -a;
  l.diagonal() += d;
  if (!is_row_diagonally_dominant(l))
    throw NotDiagonallyDominantError("diag(D) - A is not row diagonally dominant");
}

void validate_reconstruction(const JointDecomposition& dec, const Eigen::VectorXd& d,
                             const Eigen::MatrixXd& a) {
  Eigen::MatrixXd dd = dec.diag_part();
  dd.diagonal() -= d;
  if (dd.cwiseAbs().maxCoeff() > kReconstructTol)
    throw Error("joint decomposition failed to reconstruct the diagonal part");
  if ((dec.adj_part() - a).cwiseAbs().maxCoeff() > kReconstructTol)
    throw Error("joint decomposition failed to reconstruct the matrix part");
  for (std::size_t i = 0; i < dec.mu.size(); ++i)
    if (dec.mu[i] < dec.lambda[i] - kSlackTol)
      throw Error("joint decomposition violates mu >= lambda");
}

}  // namespace

Eigen::MatrixXd JointDecomposition::diag_part() const {
  const Eigen::Index n = vectors.empty() ? 0 : vectors.front().size();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    out += mu[i] * vectors[i] * vectors[i].transpose();
  return out;
}

Eigen::MatrixXd JointDecomposition::adj_part() const {
  const Eigen::Index n = vectors.empty() ? 0 : vectors.front().size();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    out += lambda[i] * vectors[i] * vectors[i].transpose();
  return out;
}

JointDecomposition joint_decompose(const Eigen::VectorXd& d, const Eigen::MatrixXd& a) {
  check_pair_shape(d, a);
  const int n = static_cast<int>(a.rows());

  // Row sums of |A|_*: diagonal kept, off-diagonal absolute values.
  Eigen::VectorXd r(n);
  for (int i = 0; i < n; ++i) {
    double s = a(i, i);
    for (int j = 0; j < n; ++j)
      if (j != i) s += std::abs(a(i, j));
    r(i) = s;
  }
  const double pivot = r.maxCoeff();

  Eigen::MatrixXd a1 = a;
  a1.diagonal() -= (r.array() - pivot).matrix();

  JointDecomposition dec;
  dec.method = "row_sum_pivot";
  dec.pivot = pivot;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a1);
  for (int i = 0; i < n; ++i) {
    dec.vectors.push_back(eig.eigenvectors().col(i));
    dec.mu.push_back(pivot);
    dec.lambda.push_back(eig.eigenvalues()(i));
    if (eig.eigenvalues()(i) > pivot + kPsdTol)
      throw Error("eigenvalue exceeds the Gershgorin bound");
  }
  for (int i = 0; i < n; ++i) {
    dec.vectors.push_back(Eigen::VectorXd::Unit(n, i));
    dec.mu.push_back(d(i) - pivot);
    dec.lambda.push_back(r(i) - pivot);
  }

  validate_reconstruction(dec, d, a);
  return dec;
}

JointDecomposition joint_decompose_balanced(const Eigen::VectorXd& d,
                                            const Eigen::MatrixXd& a) {
  check_pair_shape(d, a);
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXd dm = Eigen::MatrixXd::Zero(n, n);
  dm.diagonal() = d;

  JointDecomposition dec;
  dec.method = "balanced";

  const double scale = std::max(1.0, std::max(d.cwiseAbs().maxCoeff(),
                                              a.cwiseAbs().maxCoeff()));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> plus((dm + a) / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> minus((dm - a) / 2.0);
  for (int i = 0; i < n; ++i) {
    const double alpha = plus.eigenvalues()(i);
    if (std::abs(alpha) > scale * 1e-13) {
      dec.vectors.push_back(plus.eigenvectors().col(i));
      dec.mu.push_back(alpha);
      dec.lambda.push_back(alpha);
    }
    const double beta = minus.eigenvalues()(i);
    if (std::abs(beta) > scale * 1e-13) {
      dec.vectors.push_back(minus.eigenvectors().col(i));
      dec.mu.push_back(beta);
      dec.lambda.push_back(-beta);
    }
  }

  validate_reconstruction(dec, d, a);
  return dec;
}

Eigen::MatrixXd SeparableCertificate::reconstruct() const {
  const int n = dims.product();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (const auto& term : terms) {
    Eigen::VectorXd v = term.factors.front();
    for (std::size_t k = 1; k < term.factors.size(); ++k) v = kron(v, term.factors[k]);
    out += term.weight * v * v.transpose();
  }
  return out;
}

SeparableCertificate kron_separable_certificate(
    const std::vector<std::vector<FactorPair>>& summands) {
  if (summands.empty()) throw DimensionMismatchError("no Kronecker summands given");
  const std::size_t m = summands.front().size();
  if (m == 0) throw DimensionMismatchError("summands must have at least one factor");
  std::vector<int> sizes(m);
  for (std::size_t k = 0; k < m; ++k)
    sizes[k] = static_cast<int>(summands.front()[k].diag.size());
  for (const auto& summand : summands) {
    if (summand.size() != m)
      throw DimensionMismatchError("summands disagree on the factor count");
    for (std::size_t k = 0; k < m; ++k)
      if (summand[k].diag.size() != sizes[k])
        throw DimensionMismatchError("summands disagree on factor dimensions");
  }

  // Assemble the target and its trace directly from the summands.
  const int n = [&] {
    int p = 1;
    for (int s : sizes) p *= s;
    return p;
  }();
  Eigen::MatrixXd target = Eigen::MatrixXd::Zero(n, n);
  for (const auto& summand : summands) {
    Eigen::MatrixXd dprod = Eigen::MatrixXd::Zero(sizes[0], sizes[0]);
    dprod.diagonal() = summand[0].diag;
    Eigen::MatrixXd pprod = summand[0].adj;
    for (std::size_t k = 1; k < m; ++k) {
      Eigen::MatrixXd dk = Eigen::MatrixXd::Zero(sizes[k], sizes[k]);
      dk.diagonal() = summand[k].diag;
      dprod = kron(dprod, dk);
      pprod = kron(pprod, summand[k].adj);
    }
    target += dprod - pprod;
  }
  const double trace = target.trace();
  if (std::abs(trace) < kTraceTol)
    throw ZeroTraceError("assembled matrix has zero trace");

  SeparableCertificate cert{DimVector(sizes), {}, 0.0, {}};
  cert.meta["decomposition"] = "balanced";

  for (const auto& summand : summands) {
    std::vector<JointDecomposition> decs;
    decs.reserve(m);
    bool empty_factor = false;
    for (const auto& pair : summand) {
      decs.push_back(joint_decompose_balanced(pair.diag, pair.adj));
      if (decs.back().vectors.empty()) empty_factor = true;
    }
    if (empty_factor) continue;

    // Expand all index tuples; weight = prod mu - prod lambda.
    std::vector<std::size_t> tuple(m, 0);
    while (true) {
      double mu_prod = 1.0, lambda_prod = 1.0;
      for (std::size_t k = 0; k < m; ++k) {
        mu_prod *= decs[k].mu[tuple[k]];
        lambda_prod *= decs[k].lambda[tuple[k]];
      }
      const double weight = mu_prod - lambda_prod;
      if (weight < -kNegativeWeightTol)
        throw NegativeWeightError("expanded certificate weight is negative");
      if (std::abs(weight) >= kDropTol) {
        CertificateTerm term;
        term.weight = weight;
        for (std::size_t k = 0; k < m; ++k)
          term.factors.push_back(decs[k].vectors[tuple[k]]);
        cert.terms.push_back(std::move(term));
      }
      int k = static_cast<int>(m) - 1;
      while (k >= 0) {
        if (++tuple[k] < decs[k].vectors.size()) break;
        tuple[k] = 0;
        --k;
      }
      if (k < 0) break;
    }
  }

  for (auto& term : cert.terms) term.weight /= trace;

  const CertificateCheck check =
      verify_certificate(cert, normalize_density(target));
  if (check.residual > kReconstructTol)
    throw Error("certificate does not reconstruct its target");
  if (check.min_weight < -kSlackTol)
    throw NegativeWeightError("normalized certificate weight is negative");
  if (std::abs(check.weight_sum - 1.0) > kReconstructTol)
    throw Error("certificate weights do not sum to one");
  cert.residual = check.residual;
  return cert;
}

CertificateCheck verify_certificate(const SeparableCertificate& cert,
                                    const DensityMatrix& target) {
  CertificateCheck check;
  if (cert.dims.product() != target.dim())
    throw DimensionMismatchError("certificate and target dimensions differ");
  check.residual = (cert.reconstruct() - target.matrix()).cwiseAbs().maxCoeff();
  double min_weight = 0.0, sum = 0.0;
  for (const auto& term : cert.terms) {
    min_weight = std::min(min_weight, term.weight);
    sum += term.weight;
  }
  check.min_weight = min_weight;
  check.weight_sum = sum;
  return check;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Eigen::VectorXd kron(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  Eigen::VectorXd out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

}  // namespace lapsep
