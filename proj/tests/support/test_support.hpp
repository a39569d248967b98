#pragma once

// Fixture builders and independent oracles shared by the unit and acceptance
// suites. Nothing here calls into the numerics under test.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "geopotent/model_core.hpp"

namespace geopotent::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(GEOPOTENT_FIXTURES) / name;
}

inline std::filesystem::path golden(const std::string& name) {
  return std::filesystem::path(GEOPOTENT_GOLDEN) / name;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline double rel_err(double value, double expected) {
  return std::abs(value - expected) / std::abs(expected);
}

// Documented constant set used by every golden-number test.
inline constexpr double kGamma = 6.6743e-11;
inline constexpr double kEarthMass = 5.9737e24;
inline constexpr double kEarthRadius = 6.371e6;
inline constexpr double kEarthDensity = 5515.0;
inline constexpr double kSurfaceV1 = 7910.0;

/// Uniform sphere of density rho and radius R with its hydrostatic pressure
/// P(r) = (2/3) pi gamma rho^2 (R^2 - r^2), sampled at n+1 equally spaced radii.
inline std::vector<ProfileSample> uniform_samples(double rho, double R, int n,
                                                  double gamma = kGamma) {
  std::vector<ProfileSample> s;
  for (int k = 0; k <= n; ++k) {
    const double r = R * k / n;
    s.push_back({r, rho, 2.0 / 3.0 * kPi * gamma * rho * rho * (R * R - r * r)});
  }
  s.back().pressure = 0.0;
  return s;
}

/// Inner sphere of density rho_in out to R/2, outer shell rho_out. The density
/// step is resolved over `jump` metres.
inline std::vector<ProfileSample> two_shell_samples(double rho_in, double rho_out, double R,
                                                    double jump = 1e-3) {
  const double h = R / 2;
  return {{0.0, rho_in, 4e11},        {0.25 * R, rho_in, 3.8e11}, {h, rho_in, 3.4e11},
          {h + jump, rho_out, 3.4e11}, {0.75 * R, rho_out, 2e11},  {R, rho_out, 0.0}};
}

/// Samples of an arbitrary pressure law on an equally spaced grid.
template <typename P>
std::vector<ProfileSample> pressure_law_samples(P&& pressure, double R, int n,
                                                double rho = 5000.0) {
  std::vector<ProfileSample> s;
  for (int k = 0; k <= n; ++k) {
    const double r = R * k / n;
    s.push_back({r, rho, pressure(r)});
  }
  return s;
}

/// gamma * int_0^r M(s)/s^2 ds for a homogeneous sphere, by adaptive
/// Gauss-Kronrod quadrature of the enclosed-mass integrand.
inline double quadrature_potential(double gamma, double density, double r) {
  auto integrand = [&](double s) {
    const double mass = 4.0 / 3.0 * kPi * density * s * s * s;
    return s > 0.0 ? mass / (s * s) : 0.0;
  };
  return gamma * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, r,
                                                                               15, 1e-14);
}

/// Brute-force cumulative trapezoid over a dense uniform grid of the linear
/// density interpolant. Returns {total mass, gamma * int M/r^2 dr}.
struct BruteForceIntegrals {
  double mass;
  double surface_integral;
};

inline BruteForceIntegrals brute_force_integrals(const std::vector<ProfileSample>& s,
                                                 double gamma, int steps = 400000) {
  const double a = s.front().radius;
  const double R = s.back().radius;
  auto rho_at = [&](double r) {
    std::size_t i = 0;
    while (i + 2 < s.size() && r > s[i + 1].radius) ++i;
    const double t = (r - s[i].radius) / (s[i + 1].radius - s[i].radius);
    return s[i].density + (s[i + 1].density - s[i].density) * t;
  };
  // Grid contains every knot so kinks in the interpolant are resolved.
  std::vector<double> grid;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const int sub = std::max(2, static_cast<int>(steps * (s[i + 1].radius - s[i].radius) / (R - a)));
    for (int k = 0; k < sub; ++k) grid.push_back(s[i].radius + (s[i + 1].radius - s[i].radius) * k / sub);
  }
  grid.push_back(R);
  double mass = 4.0 / 3.0 * kPi * a * a * a * s.front().density;
  double integral = 0.0;
  double prev_f = 4 * kPi * grid[0] * grid[0] * rho_at(grid[0]);
  double prev_g = grid[0] > 0 ? mass / (grid[0] * grid[0]) : 0.0;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double r = grid[k];
    const double f = 4 * kPi * r * r * rho_at(r);
    mass += 0.5 * (f + prev_f) * (r - grid[k - 1]);
    const double g = mass / (r * r);
    integral += 0.5 * (g + prev_g) * (r - grid[k - 1]);
    prev_f = f;
    prev_g = g;
  }
  return {mass, gamma * integral};
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20261016);
  return engine;
}

inline double log_uniform(double lo, double hi) {
  std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
  return std::exp(d(rng()));
}

inline double uniform(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng());
}

}  // namespace geopotent::testing
