// params.hpp — DressingParams, the single source of physical truth.
#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "rydlat/errors.hpp"
#include "rydlat/units.hpp"

namespace rydlat {

// All laser/atom scalars in internal units (rad/s, m, kg).  delta's sign
// selects the attractive or repulsive branch of the dressed interaction.
struct DressingParams {
  double omega1 = 0.0;    // rad/s, lower-leg Rabi frequency
  double omega2c = 0.0;   // rad/s, constant part of upper-leg Rabi frequency
  double omega2sw = 0.0;  // rad/s, standing-wave modulation amplitude
  double delta = 0.0;     // rad/s, intermediate-state detuning (signed)
  double gamma_p = 0.0;   // rad/s, intermediate-state decay rate
  double gamma_e = 0.0;   // rad/s, Rydberg-state decay rate
  std::optional<double> c6;  // rad/s * m^6, van der Waals coefficient
  double wavelength = 0.0;   // m
  double theta = 0.0;        // rad, beam intersection angle
  double mass = kSr88MassKg; // kg

  double v_max_factor = 1e6;           // hard-core cap: v_max = factor*|delta|
  double perturbative_warn_threshold = 0.2;

  double wavevector() const { return kTwoPi / wavelength; }
  double v_max() const { return v_max_factor * std::abs(delta); }

  // Perturbative-regime flags; formulas derived for omega1 << omega2c and
  // gamma_p << |delta| degrade as these ratios approach 1.
  double ratio_omega1_omega2c() const { return omega1 / omega2c; }
  double ratio_gamma_p_delta() const { return gamma_p / std::abs(delta); }
  bool perturbative_ok() const {
    return ratio_omega1_omega2c() <= perturbative_warn_threshold &&
           ratio_gamma_p_delta() <= perturbative_warn_threshold;
  }

  void validate() const {
    if (!(omega1 >= 0.0)) throw SchemaError("omega1", "must be >= 0");
    if (!(omega2c > 0.0)) throw SchemaError("omega2c", "must be > 0");
    if (!(omega2sw >= 0.0)) throw SchemaError("omega2sw", "must be >= 0");
    if (delta == 0.0 || !std::isfinite(delta))
      throw SchemaError("delta", "must be nonzero (formulas divide by delta)");
    if (!(gamma_p > 0.0)) throw SchemaError("gamma_p", "must be > 0");
    if (!(gamma_e >= 0.0)) throw SchemaError("gamma_e", "must be >= 0");
    if (!(wavelength > 0.0)) throw SchemaError("wavelength", "must be > 0");
    if (!(theta > 0.0 && theta <= 3.14159265358979323846 + 1e-12))
      throw SchemaError("theta", "must be in (0, pi]");
    if (!(mass > 0.0)) throw SchemaError("mass", "must be > 0");
    if (c6 && !(*c6 > 0.0)) throw SchemaError("c6", "must be > 0 when set");
    if (!(v_max_factor > 0.0)) throw SchemaError("v_max_factor", "must be > 0");
  }

  double c6_or_throw() const {
    if (!c6) throw MissingC6();
    return *c6;
  }
};

// Stderr notice for operations whose closed forms assume the perturbative
// regime; callers keep going, the warning is informational.
void maybe_warn_perturbative(const DressingParams& p, const char* where);

}  // namespace rydlat
