// Acceptance checks. Prints one PASS/FAIL line per criterion, with indented
// detail lines above it. Usage: acceptance [criterion...]; no argument runs all.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "sfwm/cw_constants.hpp"
#include "sfwm/design_io.hpp"
#include "sfwm/jsa.hpp"
#include "sfwm/limit_powers.hpp"
#include "sfwm/nl_params.hpp"
#include "sfwm/oracle.hpp"
#include "sfwm/pair_rates.hpp"
#include "sfwm/report.hpp"
#include "sfwm/schmidt.hpp"
#include "sfwm/units.hpp"

using namespace sfwm;

namespace {

const std::filesystem::path kData = SFWM_TEST_DATA_DIR;

// Tolerances.
constexpr double kTable3Runtime = 1.0;         // s
constexpr double kRootTol = 1e-4;
constexpr double kPrefactorTol = 0.005;
constexpr double kChannelOracleTol = 0.05;
constexpr double kRingOracleTol = 0.10;
constexpr double kOracleRuntime = 300.0;       // s
constexpr double kRankOneTol = 1e-6;
constexpr double kCompletenessTol = 1e-9;
constexpr double kCwConstantTol = 0.10;
constexpr double kQuadraticTol = 1e-10;
constexpr double kScalingTol = 1e-12;
constexpr double kSymmetryTol = 1e-8;
constexpr double kPartitionTol = 0.01;
constexpr double kGammaTol = 0.10;

struct Verdict {
  bool pass = true;
  void check(bool ok, const std::string& detail) {
    fmt::print("  [{}] {}\n", ok ? "ok" : "MISS", detail);
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<DesignDocument> bundled() {
  std::vector<DesignDocument> out;
  for (const auto& n : bundled_design_names()) out.push_back(load_bundled(n, kData));
  return out;
}

Design bundled_design(const char* name) { return load_bundled(name, kData).design; }

// ---------------------------------------------------------------------------

bool table3() {
  Verdict v;
  const auto docs = bundled();
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = evaluate_table3(docs);
  const double dt = seconds_since(t0);
  for (const auto& c : r.cells) {
    v.check(c.pass, fmt::format("{:<20} {:<12} computed {:>9}  reference {:>9}  tol {:.0f}%", c.design,
                                c.row, format_power(c.computed), format_power(c.reference),
                                100 * c.tolerance));
  }
  v.check(dt < kTable3Runtime, fmt::format("runtime {:.3f} s < {} s", dt, kTable3Runtime));
  fmt::print("{} 1 reference limiting-power table: {}/16 cells\n", v.pass ? "PASS" : "FAIL", r.passed());
  return v.pass;
}

bool constants() {
  Verdict v;
  const double a = sinc_half_root(), s = sincsq_half_root();
  v.check(std::abs(a - 1.8955) <= kRootTol, fmt::format("a = {:.6f} (1.8955)", a));
  v.check(std::abs(s - 1.3916) <= kRootTol, fmt::format("s = {:.6f} (1.3916)", s));
  v.check(std::abs(cw_filtered_prefactor() - 0.58) <= kPrefactorTol,
          fmt::format("filtered CW prefactor {:.4f} (0.58)", cw_filtered_prefactor()));
  v.check(std::abs(cw_unfiltered_prefactor() - 0.75) <= kPrefactorTol,
          fmt::format("unfiltered CW prefactor {:.4f} (0.75)", cw_unfiltered_prefactor()));
  v.check(std::abs(ring_cw_prefactor() - 0.34) <= kPrefactorTol,
          fmt::format("ring CW prefactor {:.4f} (0.34)", ring_cw_prefactor()));
  fmt::print("{} 2 constants a, s and CW prefactors\n", v.pass ? "PASS" : "FAIL");
  return v.pass;
}

void report_oracle(Verdict& v, const std::string& label, const OracleComparison& c, double tol) {
  const bool valid = c.verdict.has_value();
  const double dev = c.rel_deviation.value_or(NAN);
  v.check(valid && std::abs(dev) <= tol,
          fmt::format("{:<34} closed {:.5g}  oracle {:.5g}  dev {:+.2f}%  tol {:.0f}%  n={}{}", label,
                      c.closed_form.value_or(NAN), c.oracle, 100 * dev, 100 * tol, c.points,
                      valid ? "" : "  (out of regime)"));
}

bool oracle() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();

  // Long-pulse unfiltered channel: fiber with Delta_P = 0.15 Delta_M.
  auto fiber = bundled_design("pulsed-fiber-sio2");
  auto& ch = std::get<ChannelGeometry>(fiber.structure);
  const double dm = phase_matching_bandwidth(ch.beta2, ch.length);
  const double a = sinc_half_root();
  {
    auto d = fiber;
    d.filter.reset();
    d.pump.fwhm = 4.0 * a / (0.15 * dm);
    OracleSpec spec;
    spec.points = 385;
    spec.half_span = 33.0 * std::sqrt(2.0 / (ch.beta2 * ch.length));
    report_oracle(v, "unfiltered channel", compare_with_oracle(d, spec), kChannelOracleTol);
  }

  // Filtered channel at five detunings along the sinc^2 falloff.
  {
    auto d = fiber;
    d.pump.fwhm = 4.0 * a / (dm / 200.0);
    const double band = dm / 10.0;  // angular passband
    for (double target : {0.99, 0.85, 0.7, 0.5, 0.3}) {
      const double x = bisect([&](double y) { return sinc(y) * sinc(y) - target; }, 0.0, kPi);
      d.filter = FilterSpec{band / (2.0 * kPi), std::sqrt(2.0 * x / (ch.beta2 * ch.length))};
      OracleSpec spec;
      spec.points = 128;
      report_oracle(v, fmt::format("filtered channel, sinc^2 = {:.2f}", target),
                    compare_with_oracle(d, spec), kChannelOracleTol);
    }
  }

  // Silicon ring, long pulse: Delta_P = Delta_R / 12.
  auto ring = bundled_design("cw-ring-si");
  const double dr = resonance_bandwidth(ring.pump.omega(), std::get<RingGeometry>(ring.structure).q_factor);
  {
    auto d = ring;
    d.pump.mode = PumpMode::Pulsed;
    d.pump.fwhm = 4.0 * a / (dr / 12.0);
    OracleSpec spec;
    spec.points = 256;
    report_oracle(v, "ring, long pulse", compare_with_oracle(d, spec), kRingOracleTol);
  }

  // Silicon ring, short pulse: flat-top pump with Delta_P = 50 Delta_R.
  {
    auto d = ring;
    d.pump.mode = PumpMode::Pulsed;
    d.pump.fwhm = 4.0 * a / (50.0 * dr);
    d.pump.shape.kind = PumpShapeKind::FlatTop;
    OracleSpec spec;
    spec.points = 256;
    report_oracle(v, "ring, short pulse (flat-top)", compare_with_oracle(d, spec), kRingOracleTol);
  }

  const double dt = seconds_since(t0);
  v.check(dt < kOracleRuntime, fmt::format("runtime {:.1f} s < {} s", dt, kOracleRuntime));
  fmt::print("{} 3 oracle vs closed forms\n", v.pass ? "PASS" : "FAIL");
  return v.pass;
}

bool schmidt() {
  Verdict v;
  {
    const int n = 128;
    JsaGrid j;
    j.axis1 = {-6.0, 12.0 / (n - 1), n};
    j.axis2 = j.axis1;
    j.amplitude.resize(n, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const double x = j.axis1.at(i), y = j.axis2.at(k);
        j.amplitude(i, k) = std::exp(-x * x / 2) * std::exp(-(y - 1) * (y - 1)) * std::polar(1.0, y);
      }
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        j.norm += trapezoid_weight(i, n) * trapezoid_weight(k, n) * std::norm(j.amplitude(i, k));
    j.norm *= j.axis1.step * j.axis2.step;
    const double kk = schmidt_decompose(j).schmidt_number;
    v.check(std::abs(kk - 1.0) <= kRankOneTol, fmt::format("rank-one K = {:.12f}", kk));
  }
  {
    auto d = bundled_design("pulsed-fiber-sio2");
    d.filter.reset();
    const double dm = phase_matching_bandwidth(3e-27, 300.0);
    const auto j = build_jsa(d.material, d.structure, d.pump, GridSpec::symmetric(d.pump.omega(), 3 * dm, 192));
    const auto s = schmidt_decompose(j);
    double sum = 0.0;
    for (double p : s.coefficients) sum += p;
    v.check(std::abs(sum - 1.0) <= kCompletenessTol,
            fmt::format("fiber JSA: sum p = 1 {:+.2e}, K = {:.3f}", sum - 1.0, s.schmidt_number));
  }
  {
    const auto r = verify_cw_constants();
    for (const auto& c : r.cases) {
      v.check(std::abs(c.rel_deviation) <= kCwConstantTol,
              fmt::format("CW {} constant: numeric {:.4f} vs {:.2f} (closed form {:.4f}), dev {:+.1f}%, "
                          "K = {:.1f}, n={}",
                          c.name, c.numeric, c.reference, c.closed_form, 100 * c.rel_deviation,
                          c.schmidt_number, c.points));
    }
  }
  fmt::print("{} 4 Schmidt suite\n", v.pass ? "PASS" : "FAIL");
  return v.pass;
}

bool invariants() {
  Verdict v;
  const auto docs = bundled();

  // Quadratic power law, closed forms and oracle.
  {
    double worst = 0.0;
    for (const auto& doc : docs) {
      if (!doc.design.pump.pulsed()) continue;
      auto d1 = doc.design, d2 = doc.design;
      d2.pump.power *= 2.0;
      const double n1 = n_pairs_closed_form(d1, derive_scales(d1)).n_pairs;
      const double n2 = n_pairs_closed_form(d2, derive_scales(d2)).n_pairs;
      worst = std::max(worst, std::abs(n2 / (4 * n1) - 1.0));
    }
    auto d = docs[0].design;
    const auto j = build_jsa(d.material, d.structure, d.pump,
                             GridSpec::passband_window(d.pump.omega(), *d.filter, 64));
    const double n1 = n_pairs_full(j, d.pump, d.filter);
    d.pump.power *= 2.0;
    worst = std::max(worst, std::abs(n_pairs_full(j, d.pump, d.filter) / (4 * n1) - 1.0));
    v.check(worst <= kQuadraticTol, fmt::format("N(2P) = 4 N(P): worst deviation {:.1e}", worst));
  }

  // (gamma L)^-1 scaling.
  {
    double worst = 0.0;
    for (const auto& doc : docs) {
      auto d = doc.design;
      const auto a = derive_scales(d);
      std::visit([](auto& s) { s.gamma = *s.gamma * 2.0; }, d.structure);
      const auto b = derive_scales(d);
      const std::vector<std::pair<double, double>> pairs = {
          {p_xpm(a).watts(), p_xpm(b).watts()},
          {p_spm(a).watts(), p_spm(b).watts()},
          {p_multi(a, d.structure, d.pump, d.filter).watts, p_multi(b, d.structure, d.pump, d.filter).watts},
          {p_tpa(d.material, a, d.pump.wavelength).watts(), p_tpa(d.material, b, d.pump.wavelength).watts()}};
      for (const auto& [x, y] : pairs) {
        if (std::isinf(x)) continue;
        worst = std::max(worst, std::abs(y / (x / 2) - 1.0));
      }
    }
    v.check(worst <= kScalingTol, fmt::format("doubling gamma halves every limit: worst {:.1e}", worst));
  }

  // Exchange symmetry and partition additivity on a symmetric grid.
  {
    auto d = docs[0].design;
    d.filter.reset();
    const auto& ch = std::get<ChannelGeometry>(d.structure);
    const double dm = phase_matching_bandwidth(ch.beta2, ch.length);
    d.pump.fwhm = 4.0 * sinc_half_root() / (0.15 * dm);
    const double span = 33.0 * std::sqrt(2.0 / (ch.beta2 * ch.length));
    const int n = 513;
    const auto j = build_jsa(d.material, d.structure, d.pump, GridSpec::symmetric(d.pump.omega(), span, n));
    const Eigen::MatrixXcd t = j.amplitude.transpose();
    const double asym = (j.amplitude - t).cwiseAbs().maxCoeff() / j.max_abs();
    v.check(asym < kSymmetryTol, fmt::format("exchange symmetry: max |phi - phi^T| / max |phi| = {:.1e}", asym));

    const double full = n_pairs_full(j, d.pump);
    const int bins = 4;
    const double w = span / bins;
    double binned = 0.0;
    for (int k = 0; k < bins; ++k) binned += n_pairs_full(j, d.pump, FilterSpec{w / (2 * kPi), (k + 0.5) * w});
    // Pairs with both photons on one side of the pump are outside every
    // conjugate-band bin.
    const int c = n / 2;
    double same = 0.0, total = 0.0;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const double a = trapezoid_weight(i, n) * trapezoid_weight(k, n) * std::norm(j.amplitude(i, k));
        total += a;
        if ((i >= c) == (k >= c) || i == c || k == c) same += a * (i == c ? 0.5 : 1.0) * (k == c ? 0.5 : 1.0);
      }
    const double closure = binned / full + same / total;
    v.check(std::abs(closure - 1.0) <= kPartitionTol,
            fmt::format("partition: {} bins give {:.4f} of the total, same-side pairs {:.4f}, sum {:.4f}", bins,
                        binned / full, same / total, closure));
  }

  // Binding constraints.
  {
    const char* expected[] = {"XPM", "XPM", "XPM", "multi-pair"};
    for (std::size_t k = 0; k < docs.size(); ++k) {
      const auto b = classify(docs[k].design).binding;
      v.check(b == expected[k], fmt::format("{:<20} binding {} (expected {})", docs[k].name, b, expected[k]));
    }
  }
  fmt::print("{} 5 invariant suite\n", v.pass ? "PASS" : "FAIL");
  return v.pass;
}

bool gamma_crosscheck() {
  Verdict v;
  for (const auto& doc : bundled()) {
    const auto& d = doc.design;
    const double quoted = std::visit([](const auto& s) { return *s.gamma; }, d.structure);
    const double computed = compute_gamma(d.material, structure_area(d.structure), d.pump.wavelength);
    const double dev = computed / quoted - 1.0;
    v.check(std::abs(dev) <= kGammaTol, fmt::format("{:<20} gamma {:.4g} vs quoted {:.4g} ({:+.1f}%)", doc.name,
                                                    computed, quoted, 100 * dev));
  }
  fmt::print("{} 6 gamma from material constants\n", v.pass ? "PASS" : "FAIL");
  return v.pass;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<bool()>> criteria = {table3, constants, oracle, schmidt, invariants,
                                                        gamma_crosscheck};
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty())
    for (int k = 1; k <= static_cast<int>(criteria.size()); ++k) which.push_back(k);
  bool ok = true;
  for (int k : which) {
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      fmt::print(stderr, "no criterion {}\n", k);
      return 2;
    }
    try {
      ok = criteria[k - 1]() && ok;
    } catch (const std::exception& e) {
      fmt::print("FAIL {} error: {}\n", k, e.what());
      ok = false;
    }
  }
  return ok ? 0 : 1;
}
