#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "sfwm/design_io.hpp"
#include "sfwm/error.hpp"
#include "sfwm/report.hpp"

using namespace sfwm;

namespace {

const std::filesystem::path kData = SFWM_TEST_DATA_DIR;

MaterialsDb db() { return MaterialsDb::load(kData / "materials.txt"); }

std::vector<DesignDocument> bundled() {
  std::vector<DesignDocument> out;
  for (const auto& n : bundled_design_names()) out.push_back(load_bundled(n, kData));
  return out;
}

constexpr const char* kMinimal = R"({
  // comments are allowed
  "material": "SiO2",
  "structure": {"type": "channel", "length": "300 m", "a_eff": "60 um^2", "beta2": "3 fs^2/mm"},
  "pump": {"mode": "pulsed", "wavelength": "1555.95 nm", "power": 0.1, "fwhm": "5 ps", "rep_rate": "50 MHz"}
})";

}  // namespace

TEST_SUITE("design-io") {
  TEST_CASE("materials database") {
    const auto m = db();
    CHECK(m.all().size() == 4);
    CHECK(m.get("SiO2").n2 == doctest::Approx(3.2e-20));
    CHECK(m.get("As2S3").beta_tpa_is_upper_bound);
    CHECK(m.get("Diamond").sigma_fca == 0.0);
    CHECK(m.get("Si").tau_c == doctest::Approx(1e-9));
    CHECK_THROWS_AS(m.get("Ge"), ValidationError);

    std::istringstream no_header("Si 1 2 3 4\n");
    CHECK_THROWS_AS(MaterialsDb::parse(no_header), ValidationError);
    std::istringstream short_row("# units: name n2[m^2/W]\nX\n");
    CHECK_THROWS_AS(MaterialsDb::parse(short_row), ValidationError);
  }

  TEST_CASE("design documents parse quantities with units") {
    const auto doc = parse_design(kMinimal, db());
    const auto& ch = std::get<ChannelGeometry>(doc.design.structure);
    CHECK(ch.length == 300.0);
    CHECK(ch.a_eff == doctest::Approx(60e-12));
    CHECK(ch.beta2 == doctest::Approx(3e-27));
    CHECK(*doc.design.pump.fwhm == doctest::Approx(5e-12));
    CHECK(*doc.design.pump.rep_rate == doctest::Approx(5e7));
    CHECK(doc.design.material.name == "SiO2");
  }

  TEST_CASE("bundled designs load") {
    for (const auto& d : bundled()) {
      CHECK_FALSE(d.name.empty());
      CHECK_FALSE(d.citation.empty());
    }
    const auto si = load_bundled("cw-ring-si", kData);
    CHECK(std::get<RingGeometry>(si.design.structure).circumference == doctest::Approx(10e-6 * kPi));
  }

  TEST_CASE("malformed documents are rejected") {
    const auto m = db();
    CHECK_THROWS_AS(parse_design("", m), ValidationError);
    CHECK_THROWS_AS(parse_design("{", m), ValidationError);
    std::string unknown = kMinimal;
    unknown.insert(unknown.find("\"material\""), "\"colour\": \"red\",\n");
    CHECK_THROWS_AS(parse_design(unknown, m), ValidationError);
    std::string bad_unit = kMinimal;
    bad_unit.replace(bad_unit.find("\"300 m\""), 7, "\"300 W\"");
    CHECK_THROWS_AS(parse_design(bad_unit, m), Error);
    std::string negative = kMinimal;
    negative.replace(negative.find("\"300 m\""), 7, "\"-3 m\"");
    CHECK_THROWS_AS(parse_design(negative, m), ValidationError);
    std::string both = R"({"material": "Si", "structure": {"type": "ring", "radius": 5e-6,
      "circumference": 3e-5, "a_eff": 1e-13, "q_factor": 7900, "n_eff": 2.47},
      "pump": {"wavelength": 1.55e-6, "power": 0.01}})";
    CHECK_THROWS_AS(parse_design(both, m), ValidationError);
  }
}

TEST_SUITE("cli-report") {
  TEST_CASE("three significant figures") {
    CHECK(format_sig3(0.8287) == "0.829");
    CHECK(format_sig3(1210.4) == "1210");
    CHECK(format_sig3(0.0177) == "0.0177");
    CHECK(format_sig3(1.13e7) == "1.13e+07");
    CHECK(format_power(LimitPower::unbounded()) == "∞");
    CHECK(format_power(LimitPower::lower_bound(1183.4)) == ">1180");
  }

  TEST_CASE("limit powers survive JSON") {
    for (const auto& p : {LimitPower::finite(0.5), LimitPower::lower_bound(1183.0), LimitPower::unbounded()}) {
      const auto back = limit_power_from_json(to_json(p));
      CHECK(back.kind() == p.kind());
      if (!p.is_unbounded()) CHECK(back.watts() == p.watts());
    }
  }

  TEST_CASE("reference table reproduced") {
    const auto r = evaluate_table3(bundled());
    CHECK(r.cells.size() == 16);
    for (const auto& c : r.cells) {
      INFO(c.design << " " << c.row);
      CHECK(c.pass);
    }
    CHECK(r.passed() == 16);
    CHECK(render_table3_text(r).find("16/16") != std::string::npos);
    const auto j = table3_to_json(r);
    CHECK(j.dump().find("provenance") != std::string::npos);
  }

  TEST_CASE("JSON limits reproduce the binding constraint") {
    for (const auto& d : bundled()) {
      const auto report = classify(d.design);
      const auto j = nlohmann::json::parse(limits_to_json(d, report).dump());
      CHECK(binding_from_json(j) == report.binding);
    }
  }

  TEST_CASE("limits text marks the binding row and unbounded limits") {
    const auto si = load_bundled("cw-ring-si", kData);
    const auto text = render_limits_text(si, classify(si.design));
    CHECK(text.find("<- binding") != std::string::npos);
    CHECK(text.find("0.829") != std::string::npos);
    CHECK(text.find("0.0177") != std::string::npos);
    const auto fib = load_bundled("pulsed-fiber-sio2", kData);
    CHECK(render_limits_text(fib, classify(fib.design)).find("∞") != std::string::npos);
  }

  TEST_CASE("doubling Q lowers the CW ring multi-pair limit") {
    auto si = load_bundled("cw-ring-si", kData).design;
    const double before = classify(si).p_multi.watts();
    std::get<RingGeometry>(si.structure).q_factor *= 2;
    const double after = classify(si).p_multi.watts();
    CHECK(after < before);
    CHECK(after == doctest::Approx(before * std::pow(2.0, -7.0 / 4.0)).epsilon(1e-3));
  }

  TEST_CASE("power sweep is quadratic") {
    const auto wg = load_bundled("cw-waveguide-as2s3", kData).design;
    const double top = classify(wg).p_xpm.watts();
    const auto rows = run_sweep(wg, SweepVariable::Power, 0.0, top, 11);
    REQUIRE(rows.size() == 11);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(*rows[i].n_pairs > *rows[i - 1].n_pairs);
      CHECK(*rows[i].n_pairs == doctest::Approx(*rows.back().n_pairs * std::pow(i / 10.0, 2)).epsilon(1e-12));
    }
  }

  TEST_CASE("duration sweep crosses the ring regimes") {
    const auto dia = load_bundled("pulsed-ring-diamond", kData).design;
    const auto rows = run_sweep(dia, SweepVariable::Duration, 1e-13, 1e-9, 41, true);
    int stage = 0;  // short -> intermediate -> long
    bool saw_intermediate = false;
    for (const auto& r : rows) {
      const int s = r.regime == "short-pulse" ? 0 : r.regime == "intermediate" ? 1 : 2;
      CHECK(s >= stage);
      stage = s;
      if (s == 1) {
        saw_intermediate = true;
        CHECK_FALSE(r.p_multi);
        CHECK_FALSE(r.n_pairs);
      }
    }
    CHECK(rows.front().regime == "short-pulse");
    CHECK(rows.back().regime == "long-pulse");
    CHECK(saw_intermediate);
    CHECK(render_sweep_text(rows, SweepVariable::Duration, true).find("*intermediate") != std::string::npos);
  }

  TEST_CASE("length sweep: XPM limit scales as 1/L") {
    const auto wg = load_bundled("cw-waveguide-as2s3", kData).design;
    const auto rows = run_sweep(wg, SweepVariable::Length, 0.01, 0.1, 10);
    for (const auto& r : rows) {
      CHECK(r.p_xpm.watts() * r.value == doctest::Approx(rows.front().p_xpm.watts() * rows.front().value).epsilon(1e-13));
    }
  }

  TEST_CASE("invalid sweep ranges fail before evaluation") {
    const auto wg = load_bundled("cw-waveguide-as2s3", kData).design;
    CHECK_THROWS_AS(run_sweep(wg, SweepVariable::Length, -0.01, 0.1, 5), ValidationError);
    CHECK_THROWS_AS(run_sweep(wg, SweepVariable::Duration, 1e-12, 1e-11, 5), ValidationError);
    CHECK_THROWS_AS(run_sweep(wg, SweepVariable::Q, 1e3, 1e4, 5), ValidationError);
    CHECK_THROWS_AS(parse_sweep_variable("X"), ValidationError);
  }

  TEST_CASE("output is deterministic") {
    const auto docs = bundled();
    CHECK(render_table3_csv(evaluate_table3(docs)) == render_table3_csv(evaluate_table3(docs)));
    const auto rows = run_sweep(docs[0].design, SweepVariable::Power, 0.01, 1.0, 7, true);
    CHECK(render_sweep_csv(rows, SweepVariable::Power, true) ==
          render_sweep_csv(run_sweep(docs[0].design, SweepVariable::Power, 0.01, 1.0, 7, true),
                           SweepVariable::Power, true));
  }
}
