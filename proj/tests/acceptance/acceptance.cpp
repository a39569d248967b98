// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "geopotent/anomaly_kit.hpp"
#include "geopotent/cli/commands.hpp"
#include "geopotent/cli/io.hpp"
#include "geopotent/mgp_solver.hpp"
#include "geopotent/potential_field.hpp"
#include "geopotent/profile_numerics.hpp"
#include "geopotent/pulsating_source.hpp"
#include "golden_cases.hpp"
#include "test_support.hpp"

using namespace geopotent;
using namespace geopotent::testing;

namespace {

struct Check {
  bool ok = true;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> t;
  for (int i = 0; i < n; ++i) t.push_back(a + (b - a) * i / (n - 1));
  return t;
}

EarthParameters documented_earth() {
  return EarthParameters::make(kEarthRadius, kEarthMass, kEarthDensity, kSurfaceV1,
                               PhysicalConstants{kGamma});
}

Check reference_numbers() {
  Check c;
  const auto b = direct_problem(documented_earth(), compression_potential(2.7230e11, kEarthDensity));
  c.expect(rel_err(b.equipotential_surface, 3.1284e7) <= 1e-3,
           fmt("C_R = %.6g", b.equipotential_surface));
  c.expect(rel_err(b.u_surface, 3.1843e7) <= 0.02, fmt("U_R = %.6g", b.u_surface));
  c.expect(rel_err(b.compression_potential, 4.8491e7) <= 0.02,
           fmt("phi_G = %.6g", b.compression_potential));
  c.expect(rel_err(b.u_infinity, 11.1652e7) <= 0.01, fmt("U_inf = %.6g", b.u_infinity));
  const auto printed = PotentialBreakdown::from_parts(3.1843e7, 3.1284e7, 4.8491e7);
  c.expect(rel_err(printed.u_infinity, 11.1618e7) <= 1e-4,
           fmt("component sum = %.6g", printed.u_infinity));
  std::printf("  U_R=%.6g C_R=%.6g phi_G=%.6g U_inf=%.6g component-sum gap=%.3g%%\n", b.u_surface,
              b.equipotential_surface, b.compression_potential, b.u_infinity,
              100 * rel_err(11.1652e7, printed.u_infinity));
  return c;
}

Check inverse() {
  Check c;
  const auto r = inverse_problem(3.98722e14, 11.1652e7, 6.371e6);
  c.expect(rel_err(r.r0, 3.5710e6) <= 1e-3, fmt("r0 = %.6g", r.r0));
  c.expect(r.trend == DensityTrend::decreasing_outward, "trend");
  const auto m = locate_boundary(r, {"CMB", 3.48e6, 1.5e5});
  c.expect(m.within_layer, fmt("CMB offset %.6g", m.offset));
  std::printf("  r0=%.6g m, CMB offset=%.6g m\n", r.r0, m.offset);
  return c;
}

Check core_gravity() {
  Check c;
  const auto g = core_equilibrium_gravity(cli::load_profile(fixture("prem_like.csv")), 1.2215e6);
  c.expect(std::abs(g - 1.05) <= 0.05, fmt("g_cp = %.6g", g));
  c.expect(rel_err(g, 1.160) <= 0.12, fmt("g_cp = %.6g vs 1.160", g));
  std::printf("  g_cp=%.6g m/s^2\n", g);
  return c;
}

Check homogeneous_properties() {
  Check c;
  const PhysicalConstants pc{kGamma};
  const auto earth = UniformSphere::from_mass_radius(kEarthMass, kEarthRadius);
  const double R = earth.radius();
  const double u_inf = homogeneous_u_infinity(earth, pc);
  // Continuity: both branches agree at R, and the step across R is the
  // gradient term alone.
  const double below = absolute_potential(earth, std::nextafter(R, 0.0), pc);
  const double at = absolute_potential(earth, R, pc);
  const double above = absolute_potential(earth, std::nextafter(R, 2 * R), pc);
  c.expect(rel_err(below, at) <= 1e-9 && rel_err(above, at) <= 1e-9, "branches at R");
  const double eps = 1e-6 * R;
  const double jump = absolute_potential(earth, R + eps, pc) - absolute_potential(earth, R - eps, pc) -
                      2 * eps * gravity(earth, R, pc);
  c.expect(std::abs(jump) <= 1e-9 * at, fmt("jump %.3g", jump));

  for (int i = 0; i < 1000; ++i) {
    const double r = uniform(0.01 * R, 5 * R);
    if (std::abs(r - R) < 1e-3 * R) continue;
    const double h = 1e-5 * r;
    const double d = (absolute_potential(earth, r + h, pc) - absolute_potential(earth, r - h, pc)) / (2 * h);
    c.expect(rel_err(d, gravity(earth, r, pc)) <= 1e-4, fmt("dU/dr at r=%.6g", r));
    c.expect(rel_err(absolute_potential(earth, r, pc) + kinetic_potential(earth, r, pc), u_inf) <= 1e-12,
             fmt("U+K at r=%.6g", r));
    if (r < R) {
      const double vs = equipotential_velocity(earth, r, pc);
      c.expect(kinetic_potential(earth, r, pc) > 0.5 * vs * vs, fmt("K > vs^2/2 at %.6g", r));
    }
  }

  double best_r = 0, best_g = -1;
  for (double r : linspace(0, 3 * R, 30001)) {
    const double g = gravity(earth, r, pc);
    if (g > best_g) best_g = g, best_r = r;
  }
  c.expect(best_r == R, fmt("dU/dr max at %.6g", best_r));

  for (int i = 0; i < 100; ++i) {
    const auto s = UniformSphere::from_radius_density(log_uniform(1e2, 1e8), log_uniform(10, 2e4));
    const double r = uniform(0, 1) * s.radius();
    const double q = quadrature_potential(kGamma, s.density(), r);
    const double u = absolute_potential(s, r, pc);
    c.expect(rel_err(u, q) <= 1e-9, fmt("quadrature at r=%.6g", r));
  }
  return c;
}

Check crossover() {
  Check c;
  const auto k = sensitivity_coefficients(2.0, 1.0);
  c.expect(k.k1 == k.k2, "k1 == k2 at 2 r0");
  int failures = 0;
  for (int i = 0; i < 10000; ++i) {
    const double r0 = log_uniform(1e-2, 1e6);
    const double r = r0 * log_uniform(1e-2, 1e2);
    if (r == 2 * r0) continue;
    const auto s = sensitivity_coefficients(r, r0);
    if ((s.k1 > s.k2) != (r > 2 * r0) || (s.k1 < s.k2) != (r < 2 * r0)) ++failures;
  }
  c.expect(failures == 0, fmt("%.0f failures", failures));
  return c;
}

Check vs_gravimetry() {
  Check c;
  const PhysicalConstants pc{kGamma};
  for (int i = 0; i < 1000; ++i) {
    const auto s = UniformSphere::from_radius_density(log_uniform(1e2, 1e8), log_uniform(10, 2e4));
    const double r = s.radius() * log_uniform(1.0, 100.0);
    const double back = radius_from_velocity(equipotential_velocity(s, r, pc), gravity(s, r, pc));
    c.expect(rel_err(back, r) <= 1e-12, fmt("round trip r=%.6g", r));
  }
  // Contract values of the velocity relation, then the surface balance of
  // homogeneous spheres U_inf = U_R + v_s(R)^2 / 2.
  c.expect(potential_from_velocity(11.1652e7, 0.0) == 11.1652e7, "v_s = 0");
  c.expect(rel_err(potential_from_velocity(11.1652e7, 7910), 8.0368e7) <= 1e-4, "v_s = 7910");
  for (int i = 0; i < 100; ++i) {
    const auto s = UniformSphere::from_radius_density(log_uniform(1e2, 1e8), log_uniform(10, 2e4));
    const double R = s.radius();
    const double v = equipotential_velocity(s, R, pc);
    const double u = potential_from_velocity(absolute_potential(s, R, pc) + 0.5 * v * v, v);
    c.expect(rel_err(u, absolute_potential(s, R, pc)) <= 1e-12, fmt("surface balance R=%.6g", R));
  }
  return c;
}

Check pulsating() {
  using namespace radius_fn;
  Check c;
  c.expect(pulsating_potential(1.0, 1.0, 10.0, PhysicalConstants{1.0}) == 1.4, "1.4 exactly");

  CavitySchedule constant({{0, 100, Constant{500}}, {100, 200, Constant{500}}}, 1e15, 5000, -2700);
  for (const auto& p : evaluate_schedule(constant, linspace(0, 200, 21))) {
    c.expect(p.delta_u == 0 && p.delta_g == 0 && p.delta_v_s == 0, "constant deltas");
  }

  CavitySchedule growth({{0, 86400, Linear{500, 1000}}}, 1e15, 5000, -2700);
  const double m0 = cavity_mass_anomaly(growth, 0);
  for (double t : linspace(0, 86400, 49)) {
    const double R = growth.radius_at(t);
    c.expect(rel_err(cavity_mass_anomaly(growth, t) / m0, std::pow(R / 500.0, 3)) <= 1e-9,
             fmt("cubic scaling t=%.6g", t));
  }

  CavitySchedule merge({{0, 3600, Constant{500}}, {3600, 7200, CoalesceStep{400, 300}}}, 1e15,
                       5000, -2700);
  const double r3 = merge.radius_at(3600);
  c.expect(std::abs(r3 * r3 * r3 - (400.0 * 400 * 400 + 300.0 * 300 * 300)) <=
               4 * std::numeric_limits<double>::epsilon() * r3 * r3 * r3,
           fmt("merged radius %.17g", r3));

  CavitySchedule grow({{0, 1000, Linear{200, 400}}, {1000, 2000, CoalesceStep{400, 300}},
                       {2000, 3000, Linear{std::cbrt(400.0 * 400 * 400 + 300.0 * 300 * 300), 900}}},
                      1e15, 8000, -2700);
  const auto samples = evaluate_schedule(grow, linspace(0, 3000, 301));
  for (std::size_t i = 1; i < samples.size(); ++i) {
    c.expect(samples[i].delta_u <= samples[i - 1].delta_u &&
                 samples[i].delta_g <= samples[i - 1].delta_g &&
                 samples[i].delta_v_s >= samples[i - 1].delta_v_s,
             fmt("sign pattern at t=%.6g", samples[i].t));
  }
  return c;
}

Check homogeneity() {
  Check c;
  for (int n : {4, 8, 32}) {
    const auto rep = homogeneity_bound(validate_profile(uniform_samples(5515, kEarthRadius, n)));
    c.expect(std::abs(rep.relative_gap) <= 1e-6 && rep.holds, fmt("uniform gap n=%.0f", n));
  }
  const auto prem = homogeneity_bound(cli::load_profile(fixture("prem_like.csv")));
  c.expect(!prem.holds && prem.relative_gap > 0, "PREM-like gap");
  std::printf("  PREM-like: integral=%.6g uniform=%.6g gap=%+.4f holds=%s\n", prem.integral_side,
              prem.uniform_side, prem.relative_gap, prem.holds ? "true" : "false");
  return c;
}

int run_cli(const std::vector<std::string>& args, std::string* out = nullptr,
            std::string* err = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  if (out) *out = o.str();
  if (err) *err = e.str();
  return code;
}

Check cli_contract() {
  Check c;
  for (const auto& g : golden_cases()) {
    std::string a, b;
    c.expect(run_cli(g.args, &a) == 0, g.file + " exit");
    run_cli(g.args, &b);
    c.expect(a == b, g.file + " unstable");
    c.expect(a == slurp(golden(g.file)), g.file + " differs from golden");
  }
  const auto f = [](const char* n) { return fixture(n).string(); };
  c.expect(run_cli({"inverse", "--u-inf", "11.1652e7"}) == 0, "exit 0");
  c.expect(run_cli({"direct"}) == 2, "missing pressure source exit 2");
  c.expect(run_cli({"bogus"}) == 2, "unknown subcommand exit 2");
  c.expect(run_cli({"pulse", "--schedule", f("bad_schedule.json")}) == 2, "bad schedule exit 2");
  c.expect(run_cli({"profile", "--profile", f("flat_pressure.csv")}) == 3, "degenerate exit 3");
  std::string err;
  c.expect(run_cli({"profile", "--profile", f("bad_row.csv")}, nullptr, &err) == 2 &&
               err.find("bad_row.csv:4") != std::string::npos,
           "malformed row line number: " + err);
  c.expect(run_cli({"profile", "--profile", f("bad_header.csv")}, nullptr, &err) == 2 &&
               err.find("bad_header.csv:1") != std::string::npos,
           "bad header line number: " + err);
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
      {"1 reference-number reproduction", reference_numbers},
      {"2 inverse problem and CMB layer", inverse},
      {"3 core-equilibrium gravity", core_gravity},
      {"4 homogeneous-model properties", homogeneous_properties},
      {"5 sensitivity crossover", crossover},
      {"6 vs-gravimetry round trips", vs_gravimetry},
      {"7 pulsating model", pulsating},
      {"8 homogeneity-bound diagnostic", homogeneity},
      {"9 CLI contract", cli_contract},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.first_failure = std::string("exception: ") + e.what();
    }
    if (c.ok) {
      std::printf("PASS %s\n", name);
    } else {
      ++failed;
      std::printf("FAIL %s: %s\n", name, c.first_failure.c_str());
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
