#pragma once

#include <span>
#include <vector>

#include "geopotent/model_core.hpp"

// Sphere of fixed mass and time-varying radius R(t), observed from a fixed
// external radius r:
//
//   U(r, t) = -gamma M / r + (3/2) gamma M / R(t)
//
// For precursor time series the source radius is read as a growing cavity in
// host rock: its anomalous mass is (4/3) pi R(t)^3 * host_density_contrast
// (negative for a gas cavity), and the observer sees that mass change.

namespace geopotent {

struct PulseSample {
  double t;              // s
  double source_radius;  // m
  double potential;      // U(r, t) of the constant-mass sphere, J/kg
  double delta_u;        // cavity anomaly change since the first sample, J/kg
  double delta_g;        // m/s^2
  double delta_v_s;      // m/s
};

double pulsating_potential(double mass, double radius_t, double observer_r,
                           const PhysicalConstants& c = {});

/// Anomalous mass of the cavity at time t.
double cavity_mass_anomaly(const CavitySchedule& schedule, double t);

/// Samples are independent of each other apart from the shared baseline (the
/// first requested time), so the result does not depend on evaluation order.
std::vector<PulseSample> evaluate_schedule(const CavitySchedule& schedule,
                                           std::span<const double> sample_times,
                                           const PhysicalConstants& c = {});

/// |delta_rho| g L: buoyant overpressure at the top of a fluid column of height L.
double buoyancy_pressure(double density_contrast, double g_local, double vertical_extent);

}  // namespace geopotent
