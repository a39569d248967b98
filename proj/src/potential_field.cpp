#include "geopotent/potential_field.hpp"

#include <cmath>
#include <string>

namespace geopotent {

namespace {

void require_radius(double r) {
  if (!std::isfinite(r) || r < 0.0) {
    throw Error(ErrorKind::NonPhysicalInput, "radius must be >= 0, got " + std::to_string(r));
  }
}

double gm_of(const UniformSphere& sphere, const PhysicalConstants& c) {
  c.validate();
  return c.gamma * sphere.mass();
}

}  // namespace

double homogeneous_u_infinity(const UniformSphere& sphere, const PhysicalConstants& c) {
  return 1.5 * gm_of(sphere, c) / sphere.radius();
}

double absolute_potential(const UniformSphere& sphere, double r, const PhysicalConstants& c) {
  require_radius(r);
  const double gm = gm_of(sphere, c);
  const double R = sphere.radius();
  if (r <= R) return gm * r * r / (2.0 * R * R * R);
  return 1.5 * gm / R - gm / r;
}

double gravity(const UniformSphere& sphere, double r, const PhysicalConstants& c) {
  require_radius(r);
  const double gm = gm_of(sphere, c);
  const double R = sphere.radius();
  if (r <= R) return gm * r / (R * R * R);
  return gm / (r * r);
}

double first_cosmic_velocity(const UniformSphere& sphere, double r, const PhysicalConstants& c) {
  require_radius(r);
  if (r < sphere.radius()) {
    throw Error(ErrorKind::OutOfDomain,
                "first cosmic velocity is defined for r >= R only");
  }
  return std::sqrt(gm_of(sphere, c) / r);
}

double equipotential_velocity(const UniformSphere& sphere, double r, const PhysicalConstants& c) {
  return std::sqrt(gravity(sphere, r, c) * r);
}

double kinetic_potential(const UniformSphere& sphere, double r, const PhysicalConstants& c) {
  return homogeneous_u_infinity(sphere, c) - absolute_potential(sphere, r, c);
}

double potential_from_velocity(double u_infinity, double v_s) {
  if (!std::isfinite(u_infinity) || !std::isfinite(v_s) || v_s < 0.0) {
    throw Error(ErrorKind::NonPhysicalInput, "velocity and potential must be finite, v_s >= 0");
  }
  const double kinetic = 0.5 * v_s * v_s;
  if (kinetic > u_infinity) {
    throw Error(ErrorKind::OutOfDomain,
                "v_s^2/2 exceeds U_inf; the absolute potential would be negative");
  }
  return u_infinity - kinetic;
}

double radius_from_velocity(double v_s, double g_local) {
  if (!std::isfinite(v_s) || !std::isfinite(g_local) || v_s <= 0.0 || g_local <= 0.0) {
    throw Error(ErrorKind::NonPhysicalInput, "v_s and g must be > 0");
  }
  return v_s * v_s / g_local;
}

std::vector<FieldSample> sample_field(const UniformSphere& sphere, std::span<const double> radii,
                                      const PhysicalConstants& c) {
  std::vector<FieldSample> out;
  out.reserve(radii.size());
  const double u_inf = homogeneous_u_infinity(sphere, c);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double r = radii[i];
    try {
      const double u = absolute_potential(sphere, r, c);
      out.push_back({r, u, gravity(sphere, r, c), equipotential_velocity(sphere, r, c), u_inf - u});
    } catch (const Error& e) {
      throw Error(e.kind(), "radius index " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace geopotent
