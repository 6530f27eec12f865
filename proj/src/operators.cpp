#include "rydlat/operators.hpp"

#include <Eigen/Eigenvalues>

namespace rydlat {

cmat transition_op(int dim, int a, int b) {
  cmat m = cmat::Zero(dim, dim);
  m(a, b) = 1.0;
  return m;
}

cmat kron(const cmat& a, const cmat& b) {
  const auto ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
  cmat out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i)
    for (Eigen::Index j = 0; j < ac; ++j)
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

cvec vec(const cmat& m) {
  return Eigen::Map<const cvec>(m.data(), m.size());
}

cmat unvec(const cvec& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim)
    throw DimensionMismatch("unvec: length does not match dim^2");
  return Eigen::Map<const cmat>(v.data(), dim, dim);
}

double hermiticity_defect(const cmat& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Operator::Operator(cmat m, const char* what) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1)
    throw DimensionMismatch(std::string(what) + ": matrix must be square");
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  if (hermiticity_defect(m_) > 1e-12 * scale)
    throw NumericalError(std::string(what) + ": not Hermitian to 1e-12");
}

DensityMatrix::DensityMatrix(cmat m, const char* what) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1)
    throw DimensionMismatch(std::string(what) + ": matrix must be square");
  const double tr_err = std::abs(m_.trace() - cplx(1.0, 0.0));
  if (tr_err > 1e-10)
    throw NumericalError(std::string(what) + ": trace deviates from 1 by " +
                         std::to_string(tr_err));
  if (hermiticity_defect(m_) > 1e-10)
    throw NumericalError(std::string(what) + ": not Hermitian to 1e-10");
  Eigen::SelfAdjointEigenSolver<cmat> es(0.5 * (m_ + m_.adjoint()),
                                         Eigen::EigenvaluesOnly);
  min_eig_ = es.eigenvalues().minCoeff();
  if (min_eig_ < -1e-9)
    throw NumericalError(std::string(what) + ": negative eigenvalue " +
                         std::to_string(min_eig_));
}

cmat Superoperator::apply(const cmat& rho) const {
  const int d = static_cast<int>(rho.rows());
  if (static_cast<Eigen::Index>(d) * d != m_.rows())
    throw DimensionMismatch("superoperator apply: dimension mismatch");
  return unvec(m_ * vec(rho), d);
}

double Superoperator::trace_preservation_defect() const {
  const int d2 = dim();
  const int d = static_cast<int>(std::lround(std::sqrt(double(d2))));
  Eigen::RowVectorXcd sum = Eigen::RowVectorXcd::Zero(d2);
  for (int i = 0; i < d; ++i) sum += m_.row(i * (d + 1));
  const double norm = m_.cwiseAbs().rowwise().sum().maxCoeff();
  return sum.cwiseAbs().maxCoeff() / std::max(norm, 1e-300);
}

}  // namespace rydlat
