#pragma once

#include <span>
#include <vector>

#include "geopotent/model_core.hpp"

// Potential vs field-strength anomalies of a buried sphere.
//
// The sensitivity coefficients follow the linearised comparison
//   k1 = (2/3) pi gamma (r/r0)^2,   k2 = (4/3) pi gamma (r/r0)
// where r is the observer distance and r0 the source radius. Their units are
// not those of a physical field; only k1/k2 = r / (2 r0) and the crossover at
// r = 2 r0 carry meaning.

namespace geopotent {

struct SensitivityPair {
  double k1;     // potential sensitivity
  double k2;     // field-strength sensitivity
  double ratio;  // k1 / k2
};

/// Background state at the observer, used to normalise anomalies and to turn a
/// potential change into an equipotential-velocity change.
struct Background {
  double u0;          // absolute potential, J/kg
  double g0;          // gravity, m/s^2
  double u_infinity;  // J/kg
};

struct AnomalySignal {
  double delta_u;    // J/kg
  double delta_g;    // m/s^2
  double delta_v_s;  // m/s
  double relative_u;
  double relative_g;
};

struct DetectabilityRow {
  double offset;  // observer distance from the source centre, m
  double relative_u;
  double relative_g;
  double advantage;  // relative_u / relative_g
};

SensitivityPair sensitivity_coefficients(double r, double r0, const PhysicalConstants& c = {});

/// True iff the potential coefficient exceeds the field coefficient (r > 2 r0).
bool potential_dominates(double r, double r0);

double crossover_radius(double r0);

/// Excess mass (4/3) pi r0^3 delta_rho; negative for cavities.
double anomalous_mass(double radius, double density_contrast);

/// Change of v_s = sqrt(2 (U_inf - U)) when U moves from u0 to u0 + delta_u.
/// Evaluated in rationalised form to avoid cancellation for tiny delta_u.
double equipotential_velocity_change(double u_infinity, double u0, double delta_u);

/// Point-equivalent external field of the source seen from distance `depth`.
/// A zero contrast yields a null signal.
AnomalySignal sphere_anomaly(const AnomalySource& source, const Background& background,
                             const PhysicalConstants& c = {});

std::vector<DetectabilityRow> detectability_report(const AnomalySource& source,
                                                   std::span<const double> observer_offsets,
                                                   const Background& background,
                                                   const PhysicalConstants& c = {});

}  // namespace geopotent
