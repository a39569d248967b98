#pragma once

#include <span>
#include <vector>

#include "geopotent/model_core.hpp"

// Closed-form field of a homogeneous sphere, inside and outside, in the
// absolute-potential gauge: U(0) = 0, U grows outward to U_inf = (3/2) gm/R.
//
//   r <= R : U = gm r^2 / (2 R^3)            g = gm r / R^3
//   r >  R : U = (3/2) gm/R - gm/r           g = gm / r^2
//
// K = U_inf - U is the kinetic potential of a body falling in from infinity.

namespace geopotent {

struct FieldSample {
  double radius;                  // m
  double potential;               // U, J/kg
  double gravity;                 // g, m/s^2
  double equipotential_velocity;  // v_s, m/s
  double kinetic_potential;       // K, J/kg
};

/// (3/2) gamma M / R: the limit of the absolute potential at infinity.
double homogeneous_u_infinity(const UniformSphere& sphere, const PhysicalConstants& c = {});

double absolute_potential(const UniformSphere& sphere, double r, const PhysicalConstants& c = {});

double gravity(const UniformSphere& sphere, double r, const PhysicalConstants& c = {});

/// sqrt(gamma M / r); defined only on and outside the surface.
double first_cosmic_velocity(const UniformSphere& sphere, double r,
                             const PhysicalConstants& c = {});

/// sqrt(g(r) r) at every radius. Coincides with the first cosmic velocity for
/// r >= R and falls linearly to zero inside the body.
double equipotential_velocity(const UniformSphere& sphere, double r,
                              const PhysicalConstants& c = {});

double kinetic_potential(const UniformSphere& sphere, double r, const PhysicalConstants& c = {});

/// U = U_inf - v_s^2 / 2.
double potential_from_velocity(double u_infinity, double v_s);

/// r = v_s^2 / g.
double radius_from_velocity(double v_s, double g_local);

/// Errors name the offending index.
std::vector<FieldSample> sample_field(const UniformSphere& sphere, std::span<const double> radii,
                                      const PhysicalConstants& c = {});

}  // namespace geopotent
