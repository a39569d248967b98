#include "geopotent/model_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace geopotent {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

double sphere_volume(double radius) { return 4.0 / 3.0 * kPi * radius * radius * radius; }

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

void PhysicalConstants::validate() const {
  if (!positive_finite(gamma)) {
    throw Error(ErrorKind::NonPhysicalInput, "gamma must be > 0, got " + fmt_double(gamma));
  }
}

UniformSphere::UniformSphere(double mass, double radius, double density)
    : mass_(mass), radius_(radius), density_(density) {
  if (!positive_finite(mass) || !positive_finite(radius) || !positive_finite(density)) {
    throw Error(ErrorKind::NonPhysicalInput, "sphere mass, radius and density must be > 0");
  }
  const double implied = density * sphere_volume(radius);
  if (std::abs(mass - implied) / mass > kSphereConsistencyTolerance) {
    throw Error(ErrorKind::InconsistentSphere,
                "mass " + fmt_double(mass) + " kg disagrees with density*volume " +
                    fmt_double(implied) + " kg");
  }
}

UniformSphere UniformSphere::from_mass_radius(double mass, double radius) {
  if (!positive_finite(mass) || !positive_finite(radius)) {
    throw Error(ErrorKind::NonPhysicalInput, "sphere mass and radius must be > 0");
  }
  return UniformSphere(mass, radius, mass / sphere_volume(radius));
}

UniformSphere UniformSphere::from_radius_density(double radius, double density) {
  if (!positive_finite(radius) || !positive_finite(density)) {
    throw Error(ErrorKind::NonPhysicalInput, "sphere radius and density must be > 0");
  }
  return UniformSphere(density * sphere_volume(radius), radius, density);
}

UniformSphere UniformSphere::from_mass_density(double mass, double density) {
  if (!positive_finite(mass) || !positive_finite(density)) {
    throw Error(ErrorKind::NonPhysicalInput, "sphere mass and density must be > 0");
  }
  return UniformSphere(mass, std::cbrt(mass / (4.0 / 3.0 * kPi * density)), density);
}

EarthParameters EarthParameters::make(double mean_radius, double mass, double mean_density,
                                      double surface_first_cosmic_velocity,
                                      const PhysicalConstants& constants) {
  EarthParameters earth{mean_radius, mass, mean_density, surface_first_cosmic_velocity,
                        constants.gamma * mass};
  earth.validate(constants);
  return earth;
}

void EarthParameters::validate(const PhysicalConstants& constants) const {
  constants.validate();
  if (!positive_finite(mean_radius) || !positive_finite(mass) ||
      !positive_finite(mean_density) || !positive_finite(surface_first_cosmic_velocity) ||
      !positive_finite(gm)) {
    throw Error(ErrorKind::NonPhysicalInput, "earth parameters must all be > 0");
  }
  const double expected = constants.gamma * mass;
  if (std::abs(gm - expected) / expected > 1e-9) {
    throw Error(ErrorKind::InvalidConfig,
                "gm " + fmt_double(gm) + " is not gamma*mass = " + fmt_double(expected));
  }
}

UniformSphere EarthParameters::equivalent_sphere() const {
  return UniformSphere::from_mass_radius(mass, mean_radius);
}

RadialProfile validate_profile(std::span<const ProfileSample> raw,
                               const ProfileValidation& options) {
  if (raw.size() < options.min_samples) {
    throw Error(ErrorKind::TooFewSamples, "profile needs at least " +
                                              std::to_string(options.min_samples) +
                                              " samples, got " + std::to_string(raw.size()));
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& s = raw[i];
    const auto where = " at sample " + std::to_string(i);
    if (!std::isfinite(s.radius) || !std::isfinite(s.density) || !std::isfinite(s.pressure)) {
      throw Error(ErrorKind::NonPhysicalValue, "non-finite value" + where);
    }
    if (s.density <= 0.0) {
      throw Error(ErrorKind::NonPhysicalValue, "density must be > 0" + where);
    }
    if (s.pressure < 0.0) {
      throw Error(ErrorKind::NonPhysicalValue, "pressure must be >= 0" + where);
    }
    if (i == 0 && s.radius < 0.0) {
      throw Error(ErrorKind::NonMonotonicRadius, "first radius must be >= 0");
    }
    if (i > 0 && !(s.radius > raw[i - 1].radius)) {
      throw Error(ErrorKind::NonMonotonicRadius, "radii must strictly increase" + where);
    }
    if (i > 0 && s.pressure > raw[i - 1].pressure * (1.0 + options.pressure_slack)) {
      throw Error(ErrorKind::PressureIncrease,
                  "pressure rises from " + fmt_double(raw[i - 1].pressure) + " to " +
                      fmt_double(s.pressure) + where);
    }
  }
  return RadialProfile(std::vector<ProfileSample>(raw.begin(), raw.end()));
}

PotentialBreakdown PotentialBreakdown::from_parts(double u_surface, double equipotential_surface,
                                                  double compression_potential) {
  if (!positive_finite(u_surface) || !positive_finite(equipotential_surface) ||
      !std::isfinite(compression_potential) || compression_potential < 0.0) {
    throw Error(ErrorKind::NonPhysicalInput, "potential components must be positive");
  }
  return {u_surface, equipotential_surface, compression_potential,
          u_surface + equipotential_surface + compression_potential};
}

std::string to_string(DensityTrend trend) {
  switch (trend) {
    case DensityTrend::uniform: return "uniform";
    case DensityTrend::decreasing_outward: return "decreasing_outward";
    case DensityTrend::increasing_outward: return "increasing_outward";
  }
  return "unknown";
}

AnomalySource AnomalySource::make(double depth, double radius, double density_contrast) {
  if (!positive_finite(radius) || !std::isfinite(depth) || !(depth > radius)) {
    throw Error(ErrorKind::NonPhysicalInput, "anomaly source must be fully buried (depth > radius > 0)");
  }
  if (!std::isfinite(density_contrast) || density_contrast == 0.0) {
    throw Error(ErrorKind::NonPhysicalInput, "density contrast must be non-zero");
  }
  return {depth, radius, density_contrast};
}

double radius_fn::CoalesceStep::merged_radius() const {
  return std::cbrt(first * first * first + second * second * second);
}

namespace {

double segment_radius(const CavitySegment& seg, double t) {
  return std::visit(
      [&](const auto& fn) -> double {
        using T = std::decay_t<decltype(fn)>;
        if constexpr (std::is_same_v<T, radius_fn::Constant>) {
          return fn.radius;
        } else if constexpr (std::is_same_v<T, radius_fn::Linear>) {
          const double frac = (t - seg.t_start) / (seg.t_end - seg.t_start);
          return fn.from + (fn.to - fn.from) * frac;
        } else {
          return fn.merged_radius();
        }
      },
      seg.radius_fn);
}

// Largest and smallest radius reached inside a segment (endpoints suffice: every
// radius function is monotone).
std::pair<double, double> segment_extent(const CavitySegment& seg) {
  const double a = segment_radius(seg, seg.t_start);
  const double b = segment_radius(seg, seg.t_end);
  return {std::min(a, b), std::max(a, b)};
}

}  // namespace

CavitySchedule::CavitySchedule(std::vector<CavitySegment> segments, double source_mass,
                               double observer_radius, double host_density_contrast)
    : segments_(std::move(segments)),
      source_mass_(source_mass),
      observer_radius_(observer_radius),
      host_density_contrast_(host_density_contrast) {
  if (segments_.empty()) {
    throw Error(ErrorKind::InvalidSchedule, "schedule has no segments");
  }
  if (!positive_finite(source_mass_)) {
    throw Error(ErrorKind::InvalidSchedule, "source_mass must be > 0");
  }
  if (!positive_finite(observer_radius_)) {
    throw Error(ErrorKind::InvalidSchedule, "observer_radius must be > 0");
  }
  if (!std::isfinite(host_density_contrast_)) {
    throw Error(ErrorKind::InvalidSchedule, "host_density_contrast must be finite");
  }
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& seg = segments_[i];
    const auto where = "segment " + std::to_string(i) + ": ";
    if (!std::isfinite(seg.t_start) || !std::isfinite(seg.t_end) || !(seg.t_end > seg.t_start)) {
      throw Error(ErrorKind::InvalidSchedule, where + "t_end must exceed t_start");
    }
    if (i > 0 && seg.t_start != segments_[i - 1].t_end) {
      throw Error(ErrorKind::InvalidSchedule,
                  where + "t_start must equal the previous segment's t_end");
    }
    if (const auto* step = std::get_if<radius_fn::CoalesceStep>(&seg.radius_fn)) {
      if (!positive_finite(step->first) || !positive_finite(step->second)) {
        throw Error(ErrorKind::InvalidSchedule, where + "coalescing radii must be > 0");
      }
    }
    const auto [lo, hi] = segment_extent(seg);
    if (!positive_finite(lo) || !std::isfinite(hi)) {
      throw Error(ErrorKind::InvalidSchedule, where + "radius must stay > 0");
    }
    if (!(observer_radius_ > hi)) {
      throw Error(ErrorKind::InvalidSchedule,
                  where + "observer_radius must exceed the source radius " + fmt_double(hi));
    }
  }
}

double CavitySchedule::radius_at(double t) const {
  if (!(t >= t_begin() && t <= t_end())) {
    throw Error(ErrorKind::OutOfDomain,
                "time " + fmt_double(t) + " s outside schedule span [" + fmt_double(t_begin()) +
                    ", " + fmt_double(t_end()) + "]");
  }
  // First segment whose end lies beyond t; the final segment is closed.
  auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                             [](double value, const CavitySegment& s) { return value < s.t_end; });
  if (it == segments_.end()) it = std::prev(segments_.end());
  return segment_radius(*it, t);
}

}  // namespace geopotent
