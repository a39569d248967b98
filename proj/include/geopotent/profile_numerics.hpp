#pragma once

#include "geopotent/model_core.hpp"

// Numerics over tabulated radial profiles. Both columns are interpolated
// piecewise-linearly between samples. Quadratures use composite Simpson with a
// fixed number of sub-intervals per sample interval (the refinement factor).

namespace geopotent {

inline constexpr int kDefaultRefinement = 10;

struct ProfilePoint {
  double density;   // kg/m^3
  double pressure;  // Pa
};

struct GradPResult {
  double radius_at_max;       // m
  double pressure_at_max;     // Pa
  double gradient_magnitude;  // |dP/dr|, Pa/m
};

ProfilePoint interpolate(const RadialProfile& profile, double r);

/// Mass inside radius r. Below the first sample the density of the first
/// sample is assumed.
double enclosed_mass(const RadialProfile& profile, double r, int refinement = kDefaultRefinement);

/// gamma * integral of M(r)/r^2 from the first radius to the body radius.
double surface_potential_integral(const RadialProfile& profile, const PhysicalConstants& c = {},
                                  int refinement = kDefaultRefinement);

/// Location of the steepest pressure decline. Derivatives are estimated at the
/// samples with second-order finite differences, interpolated onto a grid of
/// `refinement` steps per interval and scanned with the two outermost grid
/// points excluded. Plateaus resolve toward the smaller radius.
GradPResult pressure_gradient_max(const RadialProfile& profile,
                                  int refinement = kDefaultRefinement);

double mean_density(const RadialProfile& profile, int refinement = kDefaultRefinement);

/// Mean gravity that would hold the shell above core_radius in equilibrium
/// against the pressure on the core surface: P S / (M_total - M_core).
double core_equilibrium_gravity(const RadialProfile& profile, double core_radius,
                                int refinement = kDefaultRefinement);

}  // namespace geopotent
