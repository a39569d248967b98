#pragma once

#include <string>

#include "geopotent/model_core.hpp"

// Direct problem: the maximum (at-infinity) absolute potential of the Earth from
// its surface energy balance U_inf = U_R + C_R + phi_G.
// Inverse problem: the characteristic gravitational radius R0 = gm / U_inf and
// what it says about the radial density trend.

namespace geopotent {

struct BoundaryReference {
  std::string name;
  double radius;                // m
  double layer_half_thickness;  // m

  void validate() const;
};

/// Core-mantle boundary with a D'' band of +-150 km (PREM radius).
BoundaryReference default_cmb();
/// Inner-core boundary (PREM radius) with a +-100 km band.
BoundaryReference default_icb();

struct BoundaryMatch {
  double offset;  // m
  bool within_layer;
};

struct HomogeneityBoundReport {
  double integral_side;  // gamma * int_0^R M_r / r^2 dr, J/kg
  double uniform_side;   // (2/3) gamma rho_0 pi R^2, J/kg
  bool holds;            // integral_side <= uniform_side
  double relative_gap;   // (integral_side - uniform_side) / uniform_side
};

/// Relative gap below which the two sides count as equal.
inline constexpr double kHomogeneityEqualityTolerance = 1e-9;
/// Relative tolerance separating the `uniform` trend from the other two.
inline constexpr double kTrendTolerance = 1e-6;

/// phi_G = P_G / rho_G.
double compression_potential(double p_g, double rho_g);

PotentialBreakdown direct_problem(const EarthParameters& earth, double phi_g,
                                  const PhysicalConstants& c = {});

InversionResult inverse_problem(double gm, double u_infinity, double body_radius);

BoundaryMatch locate_boundary(const InversionResult& result, const BoundaryReference& reference);

HomogeneityBoundReport homogeneity_bound(const RadialProfile& profile,
                                         const PhysicalConstants& c = {});

}  // namespace geopotent
