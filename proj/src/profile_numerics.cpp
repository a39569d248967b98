#include "geopotent/profile_numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace geopotent {

namespace {

void require_refinement(int refinement) {
  if (refinement < 2 || refinement % 2 != 0) {
    throw Error(ErrorKind::NonPhysicalInput, "refinement must be an even number >= 2");
  }
}

// Index i of the interval [r_i, r_{i+1}] that contains r (clamped to the table).
std::size_t interval_of(std::span<const ProfileSample> s, double r) {
  auto it = std::upper_bound(s.begin(), s.end(), r,
                             [](double value, const ProfileSample& p) { return value < p.radius; });
  const auto idx = static_cast<std::size_t>(std::distance(s.begin(), it));
  if (idx == 0) return 0;
  return std::min(idx - 1, s.size() - 2);
}

double lerp_density(const ProfileSample& a, const ProfileSample& b, double r) {
  const double t = (r - a.radius) / (b.radius - a.radius);
  return a.density + (b.density - a.density) * t;
}

template <typename F>
double simpson(F&& f, double a, double b, int n) {
  if (b <= a) return 0.0;
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int k = 1; k < n; ++k) {
    sum += f(a + k * h) * (k % 2 == 1 ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

// Integral of f(s, rho(s)) over [lo, hi] within the sampled range, one Simpson
// panel per sample interval.
template <typename F>
double integrate_profile(const RadialProfile& profile, double lo, double hi, int refinement,
                         F&& f) {
  const auto s = profile.samples();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const double a = std::max(lo, s[i].radius);
    const double b = std::min(hi, s[i + 1].radius);
    if (b <= a) continue;
    total += simpson([&](double r) { return f(r, lerp_density(s[i], s[i + 1], r)); }, a, b,
                     refinement);
  }
  return total;
}

double inner_ball_mass(const RadialProfile& profile, double r) {
  const double r_in = std::min(r, profile.first_radius());
  return 4.0 / 3.0 * kPi * r_in * r_in * r_in * profile.samples().front().density;
}

// Derivative of the quadratic through three samples, evaluated at `at`.
double quadratic_slope(const ProfileSample* q, double at) {
  const double x0 = q[0].radius, x1 = q[1].radius, x2 = q[2].radius;
  const double l0 = (2 * at - x1 - x2) / ((x0 - x1) * (x0 - x2));
  const double l1 = (2 * at - x0 - x2) / ((x1 - x0) * (x1 - x2));
  const double l2 = (2 * at - x0 - x1) / ((x2 - x0) * (x2 - x1));
  return q[0].pressure * l0 + q[1].pressure * l1 + q[2].pressure * l2;
}

// Relative change between the two secants meeting at a sample above which the
// sample is treated as a kink in P (a density jump).
constexpr double kKinkSlopeJump = 0.1;

// One-sided limits of dP/dr at every sample. Smooth samples use the centred
// three-point derivative on both sides; at a kink each side takes the
// quadratic lying entirely on that side.
struct KnotSlopes {
  std::vector<double> left;
  std::vector<double> right;
};

KnotSlopes knot_slopes(std::span<const ProfileSample> s) {
  const std::size_t n = s.size();
  KnotSlopes k{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const double r = s[i].radius;
    const bool has_back = i >= 2;
    const bool has_fwd = i + 2 < n;
    if (i == 0 || i == n - 1) {
      const double d = quadratic_slope(&s[i == 0 ? 0 : n - 3], r);
      k.left[i] = k.right[i] = d;
      continue;
    }
    const double central = quadratic_slope(&s[i - 1], r);
    const double s1 = (s[i].pressure - s[i - 1].pressure) / (s[i].radius - s[i - 1].radius);
    const double s2 = (s[i + 1].pressure - s[i].pressure) / (s[i + 1].radius - s[i].radius);
    const bool kink = std::abs(s2 - s1) > kKinkSlopeJump * std::max(std::abs(s1), std::abs(s2));
    k.left[i] = kink && has_back ? quadratic_slope(&s[i - 2], r) : central;
    k.right[i] = kink && has_fwd ? quadratic_slope(&s[i], r) : central;
  }
  return k;
}

}  // namespace

ProfilePoint interpolate(const RadialProfile& profile, double r) {
  if (!(r >= profile.first_radius() && r <= profile.body_radius())) {
    throw Error(ErrorKind::OutOfDomain, "radius " + std::to_string(r) +
                                            " m outside the sampled range");
  }
  const auto s = profile.samples();
  const std::size_t i = interval_of(s, r);
  const auto& a = s[i];
  const auto& b = s[i + 1];
  if (r == a.radius) return {a.density, a.pressure};
  if (r == b.radius) return {b.density, b.pressure};
  const double t = (r - a.radius) / (b.radius - a.radius);
  return {a.density + (b.density - a.density) * t, a.pressure + (b.pressure - a.pressure) * t};
}

double enclosed_mass(const RadialProfile& profile, double r, int refinement) {
  require_refinement(refinement);
  if (!(r >= 0.0 && r <= profile.body_radius())) {
    throw Error(ErrorKind::OutOfDomain, "radius " + std::to_string(r) +
                                            " m outside [0, body_radius]");
  }
  const double shells = integrate_profile(
      profile, profile.first_radius(), r, refinement,
      [](double s, double rho) { return 4.0 * kPi * s * s * rho; });
  return inner_ball_mass(profile, r) + shells;
}

double surface_potential_integral(const RadialProfile& profile, const PhysicalConstants& c,
                                  int refinement) {
  require_refinement(refinement);
  c.validate();
  // Integrating by parts removes the 1/r^2 weight:
  //   int_a^R M/r^2 dr = M(a)/a - M(R)/R + int_a^R 4 pi r rho dr
  // and the remaining integrand is polynomial on every sample interval.
  const double a = profile.first_radius();
  const double R = profile.body_radius();
  const double inner = a > 0.0 ? inner_ball_mass(profile, a) / a : 0.0;
  const double weighted = integrate_profile(
      profile, a, R, refinement, [](double s, double rho) { return 4.0 * kPi * s * rho; });
  return c.gamma * (inner - enclosed_mass(profile, R, refinement) / R + weighted);
}

GradPResult pressure_gradient_max(const RadialProfile& profile, int refinement) {
  require_refinement(refinement);
  const auto s = profile.samples();
  if (std::all_of(s.begin(), s.end(),
                  [&](const ProfileSample& p) { return p.pressure == s.front().pressure; })) {
    throw Error(ErrorKind::DegenerateProfile, "pressure is constant; no gradient maximum");
  }
  const auto knots = knot_slopes(s);

  const std::size_t intervals = s.size() - 1;
  const std::size_t last = intervals * static_cast<std::size_t>(refinement);
  bool found = false;
  GradPResult best{0.0, 0.0, 0.0};
  for (std::size_t g = 1; g < last; ++g) {
    const std::size_t i = g / refinement;
    const std::size_t k = g % refinement;
    const double t = static_cast<double>(k) / refinement;
    const double r = k == 0 ? s[i].radius : s[i].radius + (s[i + 1].radius - s[i].radius) * t;
    // A knot takes the steeper of its two one-sided slopes.
    const double mag =
        k == 0 ? std::max(std::abs(knots.left[i]), std::abs(knots.right[i]))
               : std::abs(knots.right[i] + (knots.left[i + 1] - knots.right[i]) * t);
    if (!found || mag > best.gradient_magnitude * (1.0 + 1e-12)) {
      best = {r, 0.0, mag};
      found = true;
    }
  }
  if (!(best.gradient_magnitude > 0.0)) {
    throw Error(ErrorKind::DegenerateProfile, "pressure is constant; no gradient maximum");
  }
  best.pressure_at_max = interpolate(profile, best.radius_at_max).pressure;
  return best;
}

double mean_density(const RadialProfile& profile, int refinement) {
  const double R = profile.body_radius();
  return enclosed_mass(profile, R, refinement) / (4.0 / 3.0 * kPi * R * R * R);
}

double core_equilibrium_gravity(const RadialProfile& profile, double core_radius,
                                int refinement) {
  if (!(core_radius > 0.0 && core_radius < profile.body_radius()) ||
      core_radius < profile.first_radius()) {
    throw Error(ErrorKind::OutOfDomain,
                "core radius must lie strictly inside the sampled body");
  }
  const double pressure = interpolate(profile, core_radius).pressure;
  const double area = 4.0 * kPi * core_radius * core_radius;
  const double shell_mass = enclosed_mass(profile, profile.body_radius(), refinement) -
                            enclosed_mass(profile, core_radius, refinement);
  return pressure * area / shell_mass;
}

}  // namespace geopotent
