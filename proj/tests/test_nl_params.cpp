#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fixtures.hpp"
#include "sfwm/error.hpp"
#include "sfwm/nl_params.hpp"

using namespace sfwm;

TEST_SUITE("nl-params") {
  TEST_CASE("sinc roots") {
    CHECK(std::abs(sinc_half_root() - 1.8955) < 1e-4);
    CHECK(std::abs(sincsq_half_root() - 1.3916) < 1e-4);
    CHECK(std::abs(sinc(sinc_half_root()) - 0.5) < 1e-10);
    const double s = sinc(sincsq_half_root());
    CHECK(std::abs(s * s - 0.5) < 1e-10);
    CHECK(sinc(0.0) == 1.0);
    CHECK(sinc(1e-9) == doctest::Approx(1.0));
  }

  TEST_CASE("gamma from material constants") {
    CHECK(compute_gamma(fixtures::silica(), 60e-12, 1555.95e-9) == doctest::Approx(2.15e-3).epsilon(0.01));
    CHECK(compute_gamma(fixtures::chalcogenide(), 0.86e-12, 1549.315e-9) ==
          doctest::Approx(13.7).epsilon(0.01));
    auto doubled = fixtures::silica();
    doubled.n2 *= 2;
    CHECK(compute_gamma(doubled, 60e-12, 1555.95e-9) ==
          doctest::Approx(2.0 * compute_gamma(fixtures::silica(), 60e-12, 1555.95e-9)).epsilon(1e-14));
  }

  TEST_CASE("gamma is homogeneous in (n2, A_eff)") {
    auto m = fixtures::silicon();
    const double g = compute_gamma(m, 0.13e-12, 1558.5e-9);
    for (double c : {0.1, 3.0, 17.0}) {
      auto scaled = m;
      scaled.n2 *= c;
      CHECK(compute_gamma(scaled, c * 0.13e-12, 1558.5e-9) == doctest::Approx(g).epsilon(1e-14));
    }
  }

  TEST_CASE("bandwidths of the fiber source") {
    const auto d = fixtures::fiber();
    const auto b = bandwidths(d.structure, d.pump);
    REQUIRE(b.delta_m);
    REQUIRE(b.delta_p);
    CHECK_FALSE(b.delta_r);
    // beta2 = 3 fs^2/mm = 3e-27 s^2/m, L = 300 m
    CHECK(*b.delta_m == doctest::Approx(5.805e12).epsilon(1e-3));
    CHECK(*b.delta_p == doctest::Approx(1.516e12).epsilon(1e-3));
  }

  TEST_CASE("resonance bandwidth of the silicon ring") {
    CHECK(resonance_bandwidth(omega_from_wavelength(1558.5e-9), 7900) ==
          doctest::Approx(1.53e11).epsilon(0.005));
  }

  TEST_CASE("CW limit: Delta_P vanishes as T grows") {
    CHECK(pump_bandwidth(1.0) < 1e1);
    CHECK(pump_bandwidth(1e3) < pump_bandwidth(1.0));
  }

  TEST_CASE("dispersionless channel has no phase-matching bandwidth") {
    CHECK_THROWS_AS(phase_matching_bandwidth(0.0, 1.0), RegimeError);
    const auto d = fixtures::waveguide();
    CHECK_FALSE(bandwidths(d.structure, d.pump).delta_m);
  }

  TEST_CASE("Delta_M scales as L^-1/2") {
    CHECK(phase_matching_bandwidth(3e-27, 600) ==
          doctest::Approx(phase_matching_bandwidth(3e-27, 300) / std::sqrt(2.0)).epsilon(1e-14));
  }

  TEST_CASE("resonant enhancement") {
    const auto si = fixtures::silicon_ring();
    const auto di = fixtures::diamond_ring();
    CHECK(resonant_enhancement_sq(si, omega_from_wavelength(1558.5e-9)) == doctest::Approx(101.0).epsilon(0.005));
    CHECK(resonant_enhancement_sq(di, omega_from_wavelength(1550e-9)) == doctest::Approx(8.2).epsilon(0.01));
  }

  TEST_CASE("general enhancement peaks at the on-resonance value") {
    for (double q : {1000.0, 7900.0, 50000.0}) {
      auto ring = fixtures::silicon_ring();
      ring.q_factor = q;
      const double wp = omega_from_wavelength(1558.5e-9);
      const double peak = std::norm(field_enhancement(wp, ring, wp));
      // Maximum over a fine scan near the resonance.
      double best = 0.0;
      const double dr = resonance_bandwidth(wp, q);
      for (int k = -200; k <= 200; ++k) {
        best = std::max(best, std::norm(field_enhancement(wp + k * dr / 100.0, ring, wp)));
      }
      CHECK(best == doctest::Approx(peak));
      CHECK(peak == doctest::Approx(resonant_enhancement_sq(ring, wp)).epsilon(0.02));
    }
  }

  TEST_CASE("Lorentzian half-power point at Delta_R / 2") {
    const auto ring = fixtures::silicon_ring();
    const double wp = omega_from_wavelength(1558.5e-9);
    const double dr = resonance_bandwidth(wp, ring.q_factor);
    const double peak = std::norm(field_enhancement_lorentzian(wp, ring, wp));
    CHECK(std::norm(field_enhancement_lorentzian(wp + dr / 2, ring, wp)) == doctest::Approx(peak / 2));
    // The Airy form has the same linewidth by construction of the coupling.
    const double airy_peak = std::norm(field_enhancement(wp, ring, wp));
    CHECK(std::norm(field_enhancement(wp + dr / 2, ring, wp)) == doctest::Approx(airy_peak / 2).epsilon(1e-6));
  }

  TEST_CASE("coupling overrides") {
    auto ring = fixtures::silicon_ring();
    ring.coupling = RingCoupling{0.3, 0.95};
    const auto c = resolve_coupling(ring, 1e15);
    CHECK(c.kappa == 0.3);
    CHECK(c.sigma == 0.95);
    ring.coupling = RingCoupling{0.0, 1.0};
    CHECK_THROWS_AS(resolve_coupling(ring, 1e15), ValidationError);
  }

  TEST_CASE("derived scales") {
    const auto wg = derive_scales(fixtures::waveguide());
    CHECK(wg.gamma == 14.0);
    CHECK(wg.enhancement() == 1.0);
    CHECK_FALSE(wg.f_res_sq);
    CHECK_FALSE(wg.delta_r);
    REQUIRE(wg.l_nl);
    CHECK(*wg.l_nl == doctest::Approx(1.0 / (14.0 * 0.1)));

    auto zero = fixtures::waveguide();
    zero.pump.power = 0.0;
    CHECK_FALSE(derive_scales(zero).l_nl);

    const auto dia = derive_scales(fixtures::diamond_pulsed());
    REQUIRE(dia.f_res_sq);
    CHECK(*dia.f_res_sq == doctest::Approx(8.2).epsilon(0.01));
    CHECK(dia.delta_p);
    CHECK(dia.delta_r);

    const auto fib = derive_scales(fixtures::fiber());
    REQUIRE(fib.l_d);
    CHECK(*fib.l_d == doctest::Approx(25e-24 / 3e-27));
  }
}
