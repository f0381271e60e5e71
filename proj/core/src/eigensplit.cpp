#include "sublab/linalg.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace sublab {

namespace {

Eigen::MatrixXd to_eigen(const RationalMatrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          to_double(m.at(i, j));
  return e;
}

/// Greedy gap clustering of ascending eigenvalues; columns of vecs are the
/// coordinate vectors reported per cluster.
EigenSplitResult cluster(const Eigen::VectorXd& vals, const Eigen::MatrixXd& vecs,
                         double tol) {
  const std::size_t n = static_cast<std::size_t>(vals.size());
  EigenSplitResult out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i < n && vals(static_cast<Eigen::Index>(i)) -
                         vals(static_cast<Eigen::Index>(i - 1)) <=
                     tol)
      continue;
    double spread = vals(static_cast<Eigen::Index>(i - 1)) -
                    vals(static_cast<Eigen::Index>(start));
    if (spread > tol)
      throw ComputeError(
          "eigenvalue cluster spread exceeds tolerance; spectrum not "
          "resolvable at tol");
    SpectralCluster c;
    double sum = 0.0;
    for (std::size_t k = start; k < i; ++k) {
      sum += vals(static_cast<Eigen::Index>(k));
      std::vector<double> v(static_cast<std::size_t>(vecs.rows()));
      for (std::size_t r = 0; r < v.size(); ++r)
        v[r] = vecs(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k));
      c.basis.push_back(std::move(v));
    }
    c.value = sum / static_cast<double>(i - start);
    out.clusters.push_back(std::move(c));
    start = i;
  }
  return out;
}

}  // namespace

EigenSplitResult symmetric_eigensplit(const RationalMatrix& sym, double tol) {
  if (sym.rows() != sym.cols())
    throw InputError("eigensplit needs a square matrix");
  if (sym != sym.transpose())
    throw ComputeError("eigensplit input is not symmetric");
  if (!(tol > 0)) throw InputError("eigensplit tolerance must be positive");
  if (sym.rows() == 0) return EigenSplitResult{};

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(sym));
  if (es.info() != Eigen::Success)
    throw ComputeError("float eigensolver failed to converge");
  return cluster(es.eigenvalues(), es.eigenvectors(), tol);
}

EigenSplitResult eigensplit_in_gram(const RationalMatrix& op,
                                    const RationalMatrix& gram, double tol) {
  const std::size_t n = op.rows();
  if (op.cols() != n || gram.rows() != n || gram.cols() != n)
    throw InputError("eigensplit_in_gram: shape mismatch");
  if (!(tol > 0)) throw InputError("eigensplit tolerance must be positive");
  if (n == 0) return EigenSplitResult{};

  Eigen::LLT<Eigen::MatrixXd> llt(to_eigen(gram));
  if (llt.info() != Eigen::Success)
    throw ComputeError("eigensplit_in_gram: gram matrix is not positive definite");
  Eigen::MatrixXd L(llt.matrixL());
  // Similar symmetric matrix L^T A L^{-T}; symmetric when A is G-self-adjoint.
  Eigen::MatrixXd X =
      L.triangularView<Eigen::Lower>().solve(to_eigen(op).transpose());
  Eigen::MatrixXd S = L.transpose() * X.transpose();
  double asym = (S - S.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-8)
    throw ComputeError(
        "eigensplit_in_gram: operator is not self-adjoint for this gram");
  S = 0.5 * (S + S.transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
  if (es.info() != Eigen::Success)
    throw ComputeError("float eigensolver failed to converge");
  Eigen::MatrixXd back = L.transpose()
                             .triangularView<Eigen::Upper>()
                             .solve(es.eigenvectors());
  return cluster(es.eigenvalues(), back, tol);
}

double float_span_residual(const std::vector<std::vector<double>>& span,
                           const std::vector<RationalMatrix>& ops) {
  if (span.empty()) return 0.0;
  std::size_t n = span[0].size();
  Eigen::MatrixXd V(n, span.size());
  for (std::size_t j = 0; j < span.size(); ++j)
    for (std::size_t i = 0; i < n; ++i)
      V(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          span[j][i];
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(V);
  Eigen::MatrixXd Q = qr.householderQ() *
                      Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n),
                                                static_cast<Eigen::Index>(span.size()));
  double worst = 0.0;
  for (const auto& op : ops) {
    if (op.rows() != n || op.cols() != n)
      throw InputError("residual operator shape mismatch");
    Eigen::MatrixXd A = to_eigen(op);
    Eigen::MatrixXd AV = A * Q;
    Eigen::MatrixXd R = AV - Q * (Q.transpose() * AV);
    worst = std::max(worst, R.colwise().norm().maxCoeff());
  }
  return worst;
}

}  // namespace sublab
