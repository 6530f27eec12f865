#include "rydlat/lattice_potential.hpp"

#include <algorithm>
#include <cmath>

namespace rydlat {

double rabi_profile(const StandingWave& sw, double x) { return sw.omega2(x); }

double potential_numeric_at(const DressingParams& params, double omega2_x1,
                            double omega2_x2, double v) {
  auto energy = [&](double vv) {
    const Operator h = pair_hamiltonian(params, omega2_x1, omega2_x2, vv);
    const DensityMatrix rho = steady_state(liouvillian(h, params));
    return expectation(rho, h).real();
  };
  return energy(v) - energy(0.0);
}

double potential_numeric(const DressingParams& params, double x1, double x2,
                         const StandingWave& sw) {
  const double r = std::abs(x1 - x2);
  if (!(r > 0.0))
    throw NumericalError("potential_numeric: |x1-x2| must be > 0");
  const double v = std::min(params.c6_or_throw() / std::pow(r, 6),
                            params.v_max());
  return potential_numeric_at(params, sw.omega2(x1), sw.omega2(x2), v);
}

double potential_analytic(const DressingParams& params, double omega2_x1,
                          double omega2_x2) {
  const double o1sq = omega2_x1 * omega2_x1;
  const double o2sq = omega2_x2 * omega2_x2;
  const double s = o1sq + o2sq;
  const double diff = o1sq - o2sq;
  const double d = params.delta;
  const double dsq = d * d;
  const double gp = params.gamma_p;
  const double num =
      (8.0 * dsq * s - diff * diff) * (s + 8.0 * dsq);
  const double den = (s - 8.0 * dsq) * (s - 8.0 * dsq) + 64.0 * gp * gp * dsq;
  const double pre =
      std::pow(params.omega1, 4) / (4.0 * o1sq * o2sq * d);
  return pre * num / den;
}

LorentzianParams lorentzian_params(const DressingParams& params,
                                   const StandingWave& sw) {
  LorentzianParams out;
  out.w = 2.0 * params.gamma_p / (sw.k_eff() * sw.omega2sw);
  const double o1_4 = std::pow(params.omega1, 4);
  out.u0 = o1_4 / (8.0 * params.delta * params.gamma_p * params.gamma_p);
  out.u0_peak = o1_4 / (4.0 * params.delta * params.gamma_p * params.gamma_p);
  if (sw.k_eff() * out.w >= 1.0)
    maybe_warn_perturbative(params, "lorentzian_params (k*w >= 1)");
  return out;
}

double lorentzian_profile(double u0, double w, double xj, double x) {
  const double t = (x - xj) / w;
  return u0 / (1.0 + t * t);
}

namespace {

// Residuals and Jacobian of the three-parameter Lorentzian model.
void lorentz_residuals(const std::vector<std::pair<double, double>>& pts,
                       double u0, double w, double x0, Eigen::VectorXd& r,
                       Eigen::MatrixXd& jac) {
  const auto n = static_cast<Eigen::Index>(pts.size());
  r.resize(n);
  jac.resize(n, 3);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = (pts[i].first - x0) / w;
    const double den = 1.0 + t * t;
    const double model = u0 / den;
    r(i) = model - pts[i].second;
    jac(i, 0) = 1.0 / den;
    jac(i, 1) = 2.0 * u0 * t * t / (w * den * den);
    jac(i, 2) = 2.0 * u0 * t / (w * den * den);
  }
}

}  // namespace

LorentzianFit fit_lorentzian(
    const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 7)
    throw FitDiverged("fit_lorentzian: need at least 7 samples");

  // Initialization: peak sample as (x0, u0), half-maximum crossing as w.
  auto peak = std::max_element(
      samples.begin(), samples.end(), [](const auto& a, const auto& b) {
        return std::abs(a.second) < std::abs(b.second);
      });
  double u0 = peak->second;
  double x0 = peak->first;
  if (u0 == 0.0) throw FitDiverged("fit_lorentzian: flat input");
  double w = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [x, y] : samples) {
    const double d = std::abs(std::abs(y) - 0.5 * std::abs(u0));
    if (d < best && x != x0) {
      best = d;
      w = std::abs(x - x0);
    }
  }
  const double span =
      samples.back().first - samples.front().first;
  if (!(w > 0.0)) w = 0.25 * std::abs(span);
  if (!(w > 0.0)) throw FitDiverged("fit_lorentzian: zero sample span");

  // Levenberg-Marquardt with analytic Jacobian.
  Eigen::VectorXd r;
  Eigen::MatrixXd jac;
  double lambda = 1e-3;
  lorentz_residuals(samples, u0, w, x0, r, jac);
  double cost = r.squaredNorm();
  int it = 0;
  for (; it < 200; ++it) {
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd jtr = jac.transpose() * r;
    Eigen::MatrixXd damped = jtj;
    damped.diagonal() += lambda * jtj.diagonal();
    const Eigen::VectorXd step = damped.ldlt().solve(-jtr);
    const double u0n = u0 + step(0);
    const double wn = std::abs(w + step(1));
    const double x0n = x0 + step(2);
    Eigen::VectorXd rn;
    Eigen::MatrixXd jn;
    if (wn > 0.0) {
      lorentz_residuals(samples, u0n, wn, x0n, rn, jn);
      const double cn = rn.squaredNorm();
      if (cn < cost) {
        u0 = u0n;
        w = wn;
        x0 = x0n;
        r.swap(rn);
        jac.swap(jn);
        const bool done = (cost - cn) <= 1e-14 * cost;
        cost = cn;
        lambda = std::max(lambda * 0.3, 1e-12);
        if (done) break;
        continue;
      }
    }
    lambda *= 10.0;
    if (lambda > 1e12) break;
  }

  LorentzianFit out;
  out.u0 = u0;
  out.w = w;
  out.x0 = x0;
  out.iterations = it;
  out.rms_residual = std::sqrt(cost / static_cast<double>(samples.size()));
  if (out.rms_residual > 0.2 * std::abs(u0) || !(std::abs(u0) > 0.0))
    throw FitDiverged("fit_lorentzian: residual " +
                      std::to_string(out.rms_residual) + " exceeds 20% of peak");
  return out;
}

Eigen::MatrixXd resonance_surface(const StandingWave& sw, double delta,
                                  double gamma_p,
                                  const std::vector<double>& grid1,
                                  const std::vector<double>& grid2) {
  Eigen::MatrixXd field(grid1.size(), grid2.size());
  const double res = 8.0 * delta * delta;
  for (size_t i = 0; i < grid1.size(); ++i) {
    const double o1 = sw.omega2(grid1[i]);
    for (size_t j = 0; j < grid2.size(); ++j) {
      const double o2 = sw.omega2(grid2[j]);
      field(i, j) = (o1 * o1 + o2 * o2 - res) / gamma_p;
    }
  }
  return field;
}

double resonance_field_3d(const StandingWave& sw,
                          const std::array<double, 3>& r1,
                          const std::array<double, 3>& r2, double delta,
                          double gamma_p) {
  const double o1 = sw.omega2_3d(r1);
  const double o2 = sw.omega2_3d(r2);
  return (o1 * o1 + o2 * o2 - 8.0 * delta * delta) / gamma_p;
}

double soft_core_radius(const DressingParams& params) {
  const double c6 = params.c6_or_throw();
  return std::pow(2.0 * std::abs(params.delta) * params.omega1 * c6 /
                      std::pow(params.omega2c, 3),
                  1.0 / 6.0);
}

int collective_site_count(double lattice_constant, double r_c, int dims) {
  if (!(lattice_constant > 0.0))
    throw NumericalError("collective_depth: lattice constant must be > 0");
  const double ratio = r_c / lattice_constant;
  if (dims == 1) return 2 * static_cast<int>(std::floor(ratio));
  if (dims != 3)
    throw NumericalError("collective_depth: dims must be 1 or 3");
  const int max_n = static_cast<int>(std::floor(ratio));
  const double r2 = ratio * ratio;
  int count = 0;
  for (int i = -max_n; i <= max_n; ++i)
    for (int j = -max_n; j <= max_n; ++j)
      for (int k = -max_n; k <= max_n; ++k) {
        if (i == 0 && j == 0 && k == 0) continue;
        if (double(i) * i + double(j) * j + double(k) * k <= r2) ++count;
      }
  return count;
}

double collective_depth(double u0, double lattice_constant, double r_c,
                        int dims) {
  return collective_site_count(lattice_constant, r_c, dims) * u0;
}

double loss_rate(const DressingParams& params, const DensityMatrix& rho_pair) {
  double out = 0.0;
  for (int keep = 0; keep < 2; ++keep) {
    const DensityMatrix red = partial_trace(rho_pair, keep);
    out += 0.5 * (params.gamma_p * red.matrix()(kP, kP).real() +
                  params.gamma_e * red.matrix()(kE, kE).real());
  }
  return out;
}

}  // namespace rydlat
