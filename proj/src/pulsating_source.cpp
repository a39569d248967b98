#include "geopotent/pulsating_source.hpp"

#include <cmath>
#include <string>

#include "geopotent/anomaly_kit.hpp"

namespace geopotent {

double pulsating_potential(double mass, double radius_t, double observer_r,
                           const PhysicalConstants& c) {
  c.validate();
  if (!(std::isfinite(mass) && mass > 0.0)) {
    throw Error(ErrorKind::NonPhysicalInput, "mass must be > 0");
  }
  if (!(std::isfinite(radius_t) && radius_t > 0.0 && std::isfinite(observer_r) &&
        observer_r > radius_t)) {
    throw Error(ErrorKind::OutOfDomain, "observer must lie outside the source (r > R(t) > 0)");
  }
  const double gm = c.gamma * mass;
  return -gm / observer_r + 1.5 * gm / radius_t;
}

double cavity_mass_anomaly(const CavitySchedule& schedule, double t) {
  return anomalous_mass(schedule.radius_at(t), schedule.host_density_contrast());
}

std::vector<PulseSample> evaluate_schedule(const CavitySchedule& schedule,
                                           std::span<const double> sample_times,
                                           const PhysicalConstants& c) {
  std::vector<PulseSample> out;
  if (sample_times.empty()) return out;
  out.reserve(sample_times.size());

  const double r = schedule.observer_radius();
  const double gm = c.gamma * schedule.source_mass();
  const double base_mass = cavity_mass_anomaly(schedule, sample_times.front());
  // Kinetic potential at an exterior point of the homogeneous sphere is gm/r,
  // independent of the source radius.
  const double base_potential =
      pulsating_potential(schedule.source_mass(), schedule.radius_at(sample_times.front()), r, c);
  const double u_infinity = base_potential + gm / r;

  for (std::size_t i = 0; i < sample_times.size(); ++i) {
    const double t = sample_times[i];
    try {
      const double radius = schedule.radius_at(t);
      const double dm = cavity_mass_anomaly(schedule, t) - base_mass;
      const double du = c.gamma * dm / r;
      const double dg = c.gamma * dm / (r * r);
      out.push_back({t, radius, pulsating_potential(schedule.source_mass(), radius, r, c), du, dg,
                     equipotential_velocity_change(u_infinity, base_potential, du)});
    } catch (const Error& e) {
      throw Error(e.kind(), "sample time index " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

double buoyancy_pressure(double density_contrast, double g_local, double vertical_extent) {
  const double drho = std::abs(density_contrast);
  if (!(std::isfinite(drho) && drho > 0.0 && std::isfinite(g_local) && g_local > 0.0 &&
        std::isfinite(vertical_extent) && vertical_extent > 0.0)) {
    throw Error(ErrorKind::NonPhysicalInput, "density contrast, g and extent must be non-zero");
  }
  return drho * g_local * vertical_extent;
}

}  // namespace geopotent
