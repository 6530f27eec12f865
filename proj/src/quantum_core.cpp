#include "rydlat/quantum_core.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <iostream>

namespace rydlat {

void maybe_warn_perturbative(const DressingParams& p, const char* where) {
  const double t = p.perturbative_warn_threshold;
  if (p.ratio_omega1_omega2c() > t)
    std::cerr << "warning: " << where << ": omega1/omega2c = "
              << p.ratio_omega1_omega2c() << " exceeds " << t
              << "; perturbative formulas degrade\n";
  if (p.ratio_gamma_p_delta() > t)
    std::cerr << "warning: " << where << ": gamma_p/|delta| = "
              << p.ratio_gamma_p_delta() << " exceeds " << t
              << "; perturbative formulas degrade\n";
}

Operator single_hamiltonian(const DressingParams& params,
                            double omega2_local) {
  cmat h = cmat::Zero(3, 3);
  h(kG, kP) = 0.5 * params.omega1;
  h(kP, kG) = 0.5 * params.omega1;
  h(kE, kP) = 0.5 * omega2_local;
  h(kP, kE) = 0.5 * omega2_local;
  h(kP, kP) = -params.delta;
  return Operator(std::move(h), "single_hamiltonian");
}

Operator pair_hamiltonian(const DressingParams& params, double omega2_at_x1,
                          double omega2_at_x2, double v) {
  if (v < 0.0) throw NumericalError("pair_hamiltonian: v must be >= 0");
  const cmat h1 = single_hamiltonian(params, omega2_at_x1).matrix();
  const cmat h2 = single_hamiltonian(params, omega2_at_x2).matrix();
  const cmat eye = cmat::Identity(3, 3);
  cmat h = kron(h1, eye) + kron(eye, h2);
  h(8, 8) += v;  // |ee><ee|
  return Operator(std::move(h), "pair_hamiltonian");
}

Superoperator liouvillian(const Operator& h, const DressingParams& params) {
  const int d = h.dim();
  const cmat eye = cmat::Identity(d, d);
  const cplx im(0.0, 1.0);

  cmat l = -im * (kron(eye, h.matrix()) -
                  kron(h.matrix().transpose(), eye));

  const cmat eye3 = cmat::Identity(3, 3);
  auto add_dissipator = [&](const cmat& c) {
    const cmat cdc = c.adjoint() * c;
    l += kron(c.conjugate(), c);
    l -= 0.5 * kron(eye, cdc);
    l -= 0.5 * kron(cdc.transpose(), eye);
  };

  const cmat c_gp = std::sqrt(params.gamma_p) * transition_op(3, kG, kP);
  const cmat c_pe = std::sqrt(params.gamma_e) * transition_op(3, kP, kE);
  if (d == 3) {
    add_dissipator(c_gp);
    add_dissipator(c_pe);
  } else if (d == 9) {
    add_dissipator(kron(c_gp, eye3));
    add_dissipator(kron(eye3, c_gp));
    add_dissipator(kron(c_pe, eye3));
    add_dissipator(kron(eye3, c_pe));
  } else {
    throw DimensionMismatch("liouvillian: expected dim 3 or 9");
  }
  return Superoperator(std::move(l));
}

DensityMatrix steady_state(const Superoperator& l) {
  const int d2 = l.dim();
  const int d = static_cast<int>(std::lround(std::sqrt(double(d2))));
  const cmat& lm = l.matrix();

  // Replace the rho(0,0) equation (a diagonal row; those are linearly
  // dependent through trace preservation) with the trace constraint.
  cmat sys = lm;
  sys.row(0).setZero();
  for (int i = 0; i < d; ++i) sys(0, i * (d + 1)) = 1.0;
  cvec rhs = cvec::Zero(d2);
  rhs(0) = 1.0;

  Eigen::PartialPivLU<cmat> lu(sys);
  cvec x = lu.solve(rhs);
  x += lu.solve(rhs - sys * x);  // one refinement pass

  const double l_inf =
      lm.cwiseAbs().rowwise().sum().maxCoeff();
  const double residual = (lm * x).cwiseAbs().maxCoeff();
  if (!x.allFinite() || residual > 1e-10 * l_inf) {
    // Diagnose: a second near-zero singular value means the steady state is
    // not unique (e.g. all dissipation off).
    Eigen::BDCSVD<cmat> svd(lm);
    const auto& sv = svd.singularValues();
    const double s_min = sv(sv.size() - 1);
    const double s_next = sv(sv.size() - 2);
    if (s_next <= 1e-8 * sv(0))
      throw DegenerateSteadyState(
          s_min, s_next,
          "steady_state: null space not one-dimensional (two smallest "
          "singular values " + std::to_string(s_min) + ", " +
          std::to_string(s_next) + ")");
    throw NumericalError("steady_state: residual " + std::to_string(residual) +
                         " exceeds bound " + std::to_string(1e-10 * l_inf));
  }

  cmat rho = unvec(x, d);
  rho = 0.5 * (rho + rho.adjoint().eval());
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho), "steady_state");
}

cplx expectation(const DensityMatrix& rho, const Operator& op) {
  if (rho.dim() != op.dim())
    throw DimensionMismatch("expectation: dimension mismatch");
  return (rho.matrix() * op.matrix()).trace();
}

DensityMatrix partial_trace(const DensityMatrix& rho, int keep) {
  if (rho.dim() != 9)
    throw DimensionMismatch("partial_trace: expected a 9-dim pair state");
  if (keep != 0 && keep != 1)
    throw DimensionMismatch("partial_trace: keep must be 0 or 1");
  const cmat& m = rho.matrix();
  cmat red = cmat::Zero(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        red(i, j) += keep == 0 ? m(3 * i + k, 3 * j + k)
                               : m(3 * k + i, 3 * k + j);
  return DensityMatrix(std::move(red), "partial_trace");
}

}  // namespace rydlat
