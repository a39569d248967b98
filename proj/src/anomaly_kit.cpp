#include "geopotent/anomaly_kit.hpp"

#include <cmath>
#include <string>

namespace geopotent {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

void require_background(const Background& b) {
  if (!positive_finite(b.u0) || !positive_finite(b.g0) || !positive_finite(b.u_infinity)) {
    throw Error(ErrorKind::NonPhysicalInput, "background u0, g0 and U_inf must be > 0");
  }
}

}  // namespace

SensitivityPair sensitivity_coefficients(double r, double r0, const PhysicalConstants& c) {
  if (!positive_finite(r) || !positive_finite(r0)) {
    throw Error(ErrorKind::NonPhysicalInput, "r and r0 must be > 0");
  }
  c.validate();
  const double base = 2.0 / 3.0 * kPi * c.gamma;
  const double x = r / r0;
  // Grouped so that k1 == k2 holds bit-exactly at x = 2.
  const double k1 = (base * x) * x;
  const double k2 = (2.0 * base) * x;
  return {k1, k2, k1 / k2};
}

bool potential_dominates(double r, double r0) { return r > 2.0 * r0; }

double crossover_radius(double r0) {
  if (!positive_finite(r0)) {
    throw Error(ErrorKind::NonPhysicalInput, "r0 must be > 0");
  }
  return 2.0 * r0;
}

double anomalous_mass(double radius, double density_contrast) {
  return 4.0 / 3.0 * kPi * radius * radius * radius * density_contrast;
}

double equipotential_velocity_change(double u_infinity, double u0, double delta_u) {
  const double before = u_infinity - u0;
  const double after = before - delta_u;
  if (!(before >= 0.0) || !(after >= 0.0)) {
    throw Error(ErrorKind::OutOfDomain, "perturbed potential exceeds U_inf");
  }
  const double v_before = std::sqrt(2.0 * before);
  const double v_after = std::sqrt(2.0 * after);
  if (delta_u == 0.0 || v_before + v_after == 0.0) return 0.0;
  return -2.0 * delta_u / (v_before + v_after);
}

AnomalySignal sphere_anomaly(const AnomalySource& source, const Background& background,
                             const PhysicalConstants& c) {
  if (!positive_finite(source.radius) || !(source.depth > source.radius) ||
      !std::isfinite(source.depth) || !std::isfinite(source.density_contrast)) {
    throw Error(ErrorKind::NonPhysicalInput, "source must be fully buried (depth > radius > 0)");
  }
  require_background(background);
  c.validate();
  const double h = source.depth;
  const double dm = anomalous_mass(source.radius, source.density_contrast);
  const double du = c.gamma * dm / h;
  const double dg = c.gamma * dm / (h * h);
  const double dv = equipotential_velocity_change(background.u_infinity, background.u0, du);
  return {du, dg, dv, du / background.u0, dg / background.g0};
}

std::vector<DetectabilityRow> detectability_report(const AnomalySource& source,
                                                   std::span<const double> observer_offsets,
                                                   const Background& background,
                                                   const PhysicalConstants& c) {
  std::vector<DetectabilityRow> rows;
  rows.reserve(observer_offsets.size());
  for (std::size_t i = 0; i < observer_offsets.size(); ++i) {
    const double offset = observer_offsets[i];
    if (!(offset >= source.depth)) {
      throw Error(ErrorKind::NonPhysicalInput,
                  "offset index " + std::to_string(i) + " is shallower than the source depth");
    }
    AnomalySource moved = source;
    moved.depth = offset;
    const auto signal = sphere_anomaly(moved, background, c);
    rows.push_back({offset, signal.relative_u, signal.relative_g,
                    signal.relative_u / signal.relative_g});
  }
  return rows;
}

}  // namespace geopotent
