#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "geopotent/errors.hpp"

// Domain types shared by every module. SI units throughout; potentials are
// absolute (positive) values with U = 0 at the mass centre.

namespace geopotent {

inline constexpr double kPi = 3.14159265358979323846;

struct PhysicalConstants {
  double gamma = 6.6743e-11;  // m^3 / (kg s^2)

  /// Throws NonPhysicalInput unless gamma > 0.
  void validate() const;
};

/// Homogeneous mass source. Any two of (mass, radius, density) fix the third;
/// the three-argument constructor rejects inconsistent triples.
class UniformSphere {
 public:
  UniformSphere(double mass, double radius, double density);

  static UniformSphere from_mass_radius(double mass, double radius);
  static UniformSphere from_radius_density(double radius, double density);
  static UniformSphere from_mass_density(double mass, double density);

  double mass() const noexcept { return mass_; }
  double radius() const noexcept { return radius_; }
  double density() const noexcept { return density_; }

  friend bool operator==(const UniformSphere&, const UniformSphere&) = default;

 private:
  double mass_;
  double radius_;
  double density_;
};

inline constexpr double kSphereConsistencyTolerance = 1e-9;

struct EarthParameters {
  double mean_radius = 6.371e6;                   // m
  double mass = 5.9737e24;                        // kg
  double mean_density = 5515.0;                   // kg/m^3
  double surface_first_cosmic_velocity = 7910.0;  // m/s
  double gm = 6.6743e-11 * 5.9737e24;             // m^3/s^2

  /// Builds a parameter set whose gm is gamma * mass.
  static EarthParameters make(double mean_radius, double mass, double mean_density,
                              double surface_first_cosmic_velocity,
                              const PhysicalConstants& constants);

  void validate(const PhysicalConstants& constants) const;

  /// Homogeneous sphere with the same mass and radius.
  UniformSphere equivalent_sphere() const;
};

struct ProfileSample {
  double radius;    // m
  double density;   // kg/m^3
  double pressure;  // Pa

  friend bool operator==(const ProfileSample&, const ProfileSample&) = default;
};

struct ProfileValidation {
  double pressure_slack = 0.005;  // relative increase tolerated between samples
  std::size_t min_samples = 4;
};

/// Tabulated radial model of a real body. Only constructible through
/// validate_profile, so every instance satisfies the ordering and positivity
/// invariants.
class RadialProfile {
 public:
  std::span<const ProfileSample> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double body_radius() const noexcept { return samples_.back().radius; }
  double first_radius() const noexcept { return samples_.front().radius; }

  friend bool operator==(const RadialProfile&, const RadialProfile&) = default;

 private:
  friend RadialProfile validate_profile(std::span<const ProfileSample>,
                                        const ProfileValidation&);
  explicit RadialProfile(std::vector<ProfileSample> samples) : samples_(std::move(samples)) {}

  std::vector<ProfileSample> samples_;
};

RadialProfile validate_profile(std::span<const ProfileSample> raw,
                               const ProfileValidation& options = {});

/// Energy balance at the surface: u_infinity = u_surface + equipotential_surface
/// + compression_potential.
struct PotentialBreakdown {
  double u_surface;              // U_R, J/kg
  double equipotential_surface;  // C_R, J/kg
  double compression_potential;  // phi_G, J/kg
  double u_infinity;             // J/kg

  static PotentialBreakdown from_parts(double u_surface, double equipotential_surface,
                                       double compression_potential);
};

enum class DensityTrend { uniform, decreasing_outward, increasing_outward };

std::string to_string(DensityTrend trend);

struct InversionResult {
  double r0;     // characteristic gravitational radius, m
  double depth;  // body_radius - r0, m
  DensityTrend trend;
  std::optional<double> boundary_offset;  // |r0 - reference radius|, m
};

struct AnomalySource {
  double depth;             // centre depth below the observer datum, m
  double radius;            // m
  double density_contrast;  // signed, kg/m^3

  /// Fully buried source with a non-zero contrast.
  static AnomalySource make(double depth, double radius, double density_contrast);

  /// Total thickness of the body (its diameter).
  double thickness() const noexcept { return 2.0 * radius; }
};

namespace radius_fn {
struct Constant {
  double radius;
};
struct Linear {
  double from;
  double to;
};
/// Two cavities merge at the segment start; the tracked radius becomes
/// cbrt(first^3 + second^3) for the whole segment (volume is conserved).
struct CoalesceStep {
  double first;
  double second;

  double merged_radius() const;
};
}  // namespace radius_fn

using RadiusFunction = std::variant<radius_fn::Constant, radius_fn::Linear, radius_fn::CoalesceStep>;

struct CavitySegment {
  double t_start;  // s
  double t_end;    // s
  RadiusFunction radius_fn;
};

/// Piecewise R(t) of a pulsating source seen by a fixed external observer.
/// Segment i covers [t_start, t_end); the last one also includes its t_end.
class CavitySchedule {
 public:
  /// Throws InvalidSchedule (naming the offending segment) unless segments are
  /// contiguous, radii positive and the observer stays outside the source.
  CavitySchedule(std::vector<CavitySegment> segments, double source_mass,
                 double observer_radius, double host_density_contrast);

  std::span<const CavitySegment> segments() const noexcept { return segments_; }
  double source_mass() const noexcept { return source_mass_; }
  double observer_radius() const noexcept { return observer_radius_; }
  double host_density_contrast() const noexcept { return host_density_contrast_; }
  double t_begin() const noexcept { return segments_.front().t_start; }
  double t_end() const noexcept { return segments_.back().t_end; }

  /// Source radius at time t; OutOfDomain outside [t_begin, t_end].
  double radius_at(double t) const;

 private:
  std::vector<CavitySegment> segments_;
  double source_mass_;
  double observer_radius_;
  double host_density_contrast_;
};

}  // namespace geopotent
