#include "geopotent/mgp_solver.hpp"

#include <cmath>

#include "geopotent/profile_numerics.hpp"

namespace geopotent {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void BoundaryReference::validate() const {
  if (!positive_finite(radius) || !std::isfinite(layer_half_thickness) ||
      layer_half_thickness < 0.0) {
    throw Error(ErrorKind::NonPhysicalInput,
                "boundary '" + name + "' needs radius > 0 and half-thickness >= 0");
  }
}

BoundaryReference default_cmb() { return {"CMB", 3.48e6, 1.5e5}; }

BoundaryReference default_icb() { return {"ICB", 1.2215e6, 1.0e5}; }

double compression_potential(double p_g, double rho_g) {
  if (!positive_finite(p_g) || !positive_finite(rho_g)) {
    throw Error(ErrorKind::NonPhysicalInput, "P_G and rho_G must be > 0");
  }
  return p_g / rho_g;
}

PotentialBreakdown direct_problem(const EarthParameters& earth, double phi_g,
                                  const PhysicalConstants& c) {
  earth.validate(c);
  if (!std::isfinite(phi_g) || phi_g < 0.0) {
    throw Error(ErrorKind::NonPhysicalInput, "phi_G must be >= 0");
  }
  const double R = earth.mean_radius;
  const double u_surface = 2.0 / 3.0 * c.gamma * earth.mean_density * kPi * R * R;
  const double v = earth.surface_first_cosmic_velocity;
  return PotentialBreakdown::from_parts(u_surface, 0.5 * v * v, phi_g);
}

InversionResult inverse_problem(double gm, double u_infinity, double body_radius) {
  if (!positive_finite(gm) || !positive_finite(u_infinity) || !positive_finite(body_radius)) {
    throw Error(ErrorKind::NonPhysicalInput, "gm, U_inf and body radius must be > 0");
  }
  const double r0 = gm / u_infinity;
  DensityTrend trend = DensityTrend::uniform;
  if (std::abs(r0 - body_radius) > kTrendTolerance * body_radius) {
    trend = r0 < body_radius ? DensityTrend::decreasing_outward : DensityTrend::increasing_outward;
  }
  return {r0, body_radius - r0, trend, std::nullopt};
}

BoundaryMatch locate_boundary(const InversionResult& result, const BoundaryReference& reference) {
  reference.validate();
  const double offset = std::abs(result.r0 - reference.radius);
  return {offset, offset <= reference.layer_half_thickness};
}

HomogeneityBoundReport homogeneity_bound(const RadialProfile& profile,
                                         const PhysicalConstants& c) {
  const double R = profile.body_radius();
  const double integral = surface_potential_integral(profile, c);
  const double uniform = 2.0 / 3.0 * c.gamma * mean_density(profile) * kPi * R * R;
  const double gap = (integral - uniform) / uniform;
  return {integral, uniform, gap <= kHomogeneityEqualityTolerance, gap};
}

}  // namespace geopotent
