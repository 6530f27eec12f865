// scratch.cpp — throwaway numeric experiments (not part of the build).
#include <chrono>
#include <cstdio>

#include "rydlat/lattice_potential.hpp"

using namespace rydlat;

int main() {
  DressingParams p;
  p.omega1 = 1.855e5;  // ~ 1 Hz loss ballpark
  p.omega2c = kTwoPi * 10e6;
  p.omega2sw = kTwoPi * 2.5e6;
  p.delta = kTwoPi * 5e6;
  p.gamma_p = kTwoPi * 7.6e3;
  p.gamma_e = kTwoPi * 100.0;
  p.wavelength = 318e-9;
  p.theta = 3.14159265358979323846;
  p.validate();

  const double vmax = p.v_max();
  std::printf("v_max = %.6g rad/s\n", vmax);

  // Peak comparison with both atoms at nodes (omega2 = 2|delta|).
  const double o2 = p.omega2c;
  auto t0 = std::chrono::steady_clock::now();
  const double u_num = potential_numeric_at(p, o2, o2, vmax);
  auto t1 = std::chrono::steady_clock::now();
  const double u_ana = potential_analytic(p, o2, o2);
  std::printf("peak: numeric=%.8g analytic=%.8g rel=%.3g (solve %lld us)\n",
              u_num, u_ana, (u_num - u_ana) / u_ana,
              (long long)std::chrono::duration_cast<std::chrono::microseconds>(
                  t1 - t0).count());

  // Off-peak points across the acceptance scan range.
  for (double f : {1.2, 1.5, 1.9, 2.05, 2.5, 3.0}) {
    const double o22 = f * std::abs(p.delta);
    const double un = potential_numeric_at(p, o2, o22, vmax);
    const double ua = potential_analytic(p, o2, o22);
    std::printf("omega2(x2)=%.2f|d|: num=%.8g ana=%.8g rel=%.3g\n", f, un, ua,
                (un - ua) / ua);
  }

  // Loss at the trap center and the gamma_p*U/delta shortcut.
  const Operator h = pair_hamiltonian(p, o2, o2, vmax);
  const DensityMatrix rho = steady_state(liouvillian(h, p));
  const double loss = loss_rate(p, rho);
  std::printf("loss at center: %.6g 1/s (Hz*2pi: %.6g); shortcut %.6g\n", loss,
              loss / kTwoPi, p.gamma_p * u_num / p.delta);

  // Sign flip check.
  DressingParams pm = p;
  pm.delta = -p.delta;
  const double u_num_m = potential_numeric_at(pm, o2, o2, pm.v_max());
  std::printf("numeric oddness: U(+)+U(-) = %.3g rel %.3g\n", u_num + u_num_m,
              (u_num + u_num_m) / u_num);

  // Timing for a 500-point scan estimate.
  t0 = std::chrono::steady_clock::now();
  double acc = 0;
  for (int i = 0; i < 20; ++i)
    acc += potential_numeric_at(p, o2, (1.2 + i * 0.09) * std::abs(p.delta),
                                vmax);
  t1 = std::chrono::steady_clock::now();
  std::printf("20 points took %lld ms (acc %.3g)\n",
              (long long)std::chrono::duration_cast<std::chrono::milliseconds>(
                  t1 - t0).count(), acc);
  return 0;
}
