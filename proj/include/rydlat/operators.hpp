// operators.hpp — operator/density-matrix value types on the dressed basis.
//
// Single-atom basis order is fixed project-wide as (g, p, e) = (0, 1, 2);
// the pair basis is atom-1-major: (gg,gp,ge,pg,pp,pe,eg,ep,ee).
#pragma once

#include <Eigen/Dense>
#include <complex>

#include "rydlat/errors.hpp"

namespace rydlat {

using cplx = std::complex<double>;
using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;

enum Level : int { kG = 0, kP = 1, kE = 2 };

// |a><b| on a dim-dimensional space.
cmat transition_op(int dim, int a, int b);

// Kronecker product, row index = i_a*rows(b) + i_b.
cmat kron(const cmat& a, const cmat& b);

// Column-stacking vectorization and its inverse.
cvec vec(const cmat& m);
cmat unvec(const cvec& v, int dim);

double hermiticity_defect(const cmat& m);

// A Hermitian operator (Hamiltonians, observables).  Construction checks
// Hermiticity to 1e-12 relative.
class Operator {
 public:
  Operator(cmat m, const char* what = "operator");

  int dim() const { return static_cast<int>(m_.rows()); }
  const cmat& matrix() const { return m_; }

 private:
  cmat m_;
};

// Validated physical state: unit trace (1e-10), Hermitian (1e-10),
// eigenvalues >= -1e-9.
class DensityMatrix {
 public:
  DensityMatrix(cmat m, const char* what = "density matrix");

  int dim() const { return static_cast<int>(m_.rows()); }
  const cmat& matrix() const { return m_; }
  double min_eigenvalue() const { return min_eig_; }

 private:
  cmat m_;
  double min_eig_;
};

// Linear map on vectorized density matrices.
class Superoperator {
 public:
  explicit Superoperator(cmat m) : m_(std::move(m)) {}

  int dim() const { return static_cast<int>(m_.rows()); }
  const cmat& matrix() const { return m_; }

  // Applies to a dim x dim matrix (dim^2 == rows).
  cmat apply(const cmat& rho) const;

  // Max violation of trace preservation: ||sum of diagonal-index rows||_inf,
  // normalized by the matrix inf-norm.
  double trace_preservation_defect() const;

 private:
  cmat m_;
};

}  // namespace rydlat
