// standing_wave.hpp — spatial Rabi-frequency profile of the upper laser.
#pragma once

#include <array>
#include <cmath>

#include "rydlat/errors.hpp"
#include "rydlat/params.hpp"

namespace rydlat {

// omega2(x) = omega2c + omega2sw*|sin(k x sin(theta/2))| in 1D; the 3D form
// multiplies |sin(kx)sin(ky)sin(kz)|.
struct StandingWave {
  double omega2c = 0.0;   // rad/s
  double omega2sw = 0.0;  // rad/s
  double k = 0.0;         // 1/m
  double theta = 0.0;     // rad
  int dimensionality = 1;

  static StandingWave from_params(const DressingParams& p,
                                  int dimensionality = 1) {
    if (dimensionality != 1 && dimensionality != 3)
      throw SchemaError("standing_wave.dimensionality", "must be 1 or 3");
    return StandingWave{p.omega2c, p.omega2sw, p.wavevector(), p.theta,
                        dimensionality};
  }

  // Effective wavevector along the 1D axis.
  double k_eff() const { return k * std::sin(0.5 * theta); }

  // Spatial period of the 1D profile (the |sin| halves the sine period).
  double period() const { return 3.14159265358979323846 / k_eff(); }

  // Position of the n-th node (profile minimum), x_n = n * period.
  double node_position(int n) const { return n * period(); }

  double omega2(double x) const {
    return omega2c + omega2sw * std::abs(std::sin(k_eff() * x));
  }

  double omega2_3d(const std::array<double, 3>& r) const {
    return omega2c + omega2sw * std::abs(std::sin(k * r[0]) *
                                         std::sin(k * r[1]) *
                                         std::sin(k * r[2]));
  }
};

}  // namespace rydlat
