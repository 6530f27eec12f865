// lattice_potential.hpp — effective dressed interaction: numeric steady-state
// route, analytic closed form, Lorentzian trap model, resonance surfaces,
// soft-core radius, collective depth and the loss-rate profile.
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "rydlat/params.hpp"
#include "rydlat/quantum_core.hpp"
#include "rydlat/standing_wave.hpp"

namespace rydlat {

// Sampled U(x1,x2) grid.  values(i,j) is U at (axis1[i], axis2[j]).
struct PotentialSurface {
  std::vector<double> axis1;  // m
  std::vector<double> axis2;  // m
  Eigen::MatrixXd values;     // rad/s
};

double rabi_profile(const StandingWave& sw, double x);

// Effective interaction from the dissipative steady state at given local
// Rabi frequencies and interaction shift v (rad/s).  The v=0 baseline is
// subtracted so U -> 0 outside the soft core.
double potential_numeric_at(const DressingParams& params, double omega2_x1,
                            double omega2_x2, double v);

// Position wrapper: v = min(C6/r^6, v_max).
double potential_numeric(const DressingParams& params, double x1, double x2,
                         const StandingWave& sw);

// Closed-form dressing interaction, valid inside the soft core (V -> infty);
// odd in delta and symmetric under argument swap.
double potential_analytic(const DressingParams& params, double omega2_x1,
                          double omega2_x2);

struct LorentzianParams {
  double w = 0.0;            // m, half-width at half-maximum
  double u0 = 0.0;           // rad/s, omega1^4/(8 delta gamma_p^2)
  double u0_peak = 0.0;      // rad/s, closed-form value at the symmetric
                             // resonance point, omega1^4/(4 delta gamma_p^2)
};

// Trap width/depth of the spatial Lorentzian model.  The printed depth
// formula and the closed-form evaluation at the symmetric resonance point
// differ by a factor 2; both are reported.
LorentzianParams lorentzian_params(const DressingParams& params,
                                   const StandingWave& sw);

double lorentzian_profile(double u0, double w, double xj, double x);

struct LorentzianFit {
  double u0 = 0.0;
  double w = 0.0;
  double x0 = 0.0;
  double rms_residual = 0.0;
  int iterations = 0;
};

// Deterministic least-squares fit of u0/(1+(x-x0)^2/w^2); initialized from
// the peak sample and the half-maximum crossing.  Throws FitDiverged when
// the residual exceeds 20% of the peak.
LorentzianFit fit_lorentzian(const std::vector<std::pair<double, double>>& samples);

// Field (omega2(x1)^2 + omega2(x2)^2 - 8 delta^2)/gamma_p on a grid; the
// zero contour marks the trap loci.
Eigen::MatrixXd resonance_surface(const StandingWave& sw, double delta,
                                  double gamma_p,
                                  const std::vector<double>& grid1,
                                  const std::vector<double>& grid2);

// 3D variant with radial arguments.
double resonance_field_3d(const StandingWave& sw,
                          const std::array<double, 3>& r1,
                          const std::array<double, 3>& r2, double delta,
                          double gamma_p);

// R_c = (2|delta| omega1 C6 / omega2c^3)^(1/6).
double soft_core_radius(const DressingParams& params);

// Number of occupied sites within +-R_c and the collective depth N*u0.
int collective_site_count(double lattice_constant, double r_c, int dims);
double collective_depth(double u0, double lattice_constant, double r_c,
                        int dims);

// Per-atom loss Tr[rho_i (gamma_p sigma_pp + gamma_e sigma_ee)], averaged
// over the two reduced single-atom states.  Units 1/s.
double loss_rate(const DressingParams& params, const DensityMatrix& rho_pair);

}  // namespace rydlat
