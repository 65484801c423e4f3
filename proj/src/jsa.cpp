#include "sfwm/jsa.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sfwm/error.hpp"
#include "sfwm/nl_params.hpp"
#include "sfwm/pump_waveform.hpp"
#include "sfwm/units.hpp"

namespace sfwm {

using cplx = std::complex<double>;

GridSpec GridSpec::symmetric(double center, double half_span, int points) {
  if (points < 2 || !(half_span > 0.0)) throw ValidationError("grid needs >= 2 points and a positive span");
  GridSpec g;
  g.layout = GridLayout::Symmetric;
  g.omega1 = {center - half_span, 2.0 * half_span / (points - 1), points};
  g.omega2 = g.omega1;
  return g;
}

GridSpec GridSpec::signal_idler(double omega_p, double signal_center, double half_width,
                                int points) {
  if (points < 2 || !(half_width > 0.0)) throw ValidationError("grid needs >= 2 points and a positive span");
  GridSpec g;
  g.layout = GridLayout::SignalIdler;
  const double step = 2.0 * half_width / (points - 1);
  g.omega1 = {signal_center - half_width, step, points};
  g.omega2 = {2.0 * omega_p - g.omega1.back(), step, points};
  return g;
}

GridSpec GridSpec::passband_window(double omega_p, const FilterSpec& filter, int points) {
  auto g = signal_idler(omega_p, omega_p + filter.detuning, kPi * filter.bandwidth, points);
  g.passband = filter;
  return g;
}

std::vector<double> JsaGrid::omega1_axis() const {
  std::vector<double> v(axis1.count);
  for (int i = 0; i < axis1.count; ++i) v[i] = axis1.at(i);
  return v;
}

std::vector<double> JsaGrid::omega2_axis() const {
  std::vector<double> v(axis2.count);
  for (int j = 0; j < axis2.count; ++j) v[j] = axis2.at(j);
  return v;
}

double JsaGrid::max_abs() const { return amplitude.cwiseAbs().maxCoeff(); }

double JsaGrid::boundary_ratio() const {
  const auto a = amplitude.cwiseAbs();
  const Eigen::Index r = a.rows() - 1;
  const Eigen::Index c = a.cols() - 1;
  const double edge = std::max({a.row(0).maxCoeff(), a.row(r).maxCoeff(), a.col(0).maxCoeff(),
                                a.col(c).maxCoeff()});
  const double peak = a.maxCoeff();
  return peak > 0.0 ? edge / peak : 0.0;
}

namespace {

class Enhancement {
 public:
  Enhancement() = default;
  Enhancement(const RingGeometry& ring, double omega_p, EnhancementForm form)
      : form_(form), ring_(true), omega_p_(omega_p) {
    const auto c = resolve_coupling(ring, omega_p);
    kappa_ = c.kappa;
    sigma_ = c.sigma;
    l_over_vg_ = ring.circumference / group_velocity(ring);
    fsr_ = free_spectral_range(ring);
    delta_r_ = resonance_bandwidth(omega_p, ring.q_factor);
    f0_ = std::sqrt(resonant_enhancement_sq(ring, omega_p));
  }

  bool ring() const { return ring_; }
  double fsr() const { return fsr_; }
  double delta_r() const { return delta_r_; }

  cplx operator()(double omega) const {
    if (!ring_) return 1.0;
    if (form_ == EnhancementForm::Airy) {
      const double theta = (omega - omega_p_) * l_over_vg_;
      return cplx(0.0, kappa_) / (1.0 - sigma_ * std::polar(1.0, theta));
    }
    const double delta = std::remainder(omega - omega_p_, fsr_);
    return cplx(0.0, f0_) / cplx(1.0, -2.0 * delta / delta_r_);
  }

 private:
  EnhancementForm form_ = EnhancementForm::Airy;
  bool ring_ = false;
  double omega_p_ = 0.0;
  double kappa_ = 0.0, sigma_ = 0.0, l_over_vg_ = 0.0;
  double fsr_ = 0.0, delta_r_ = 0.0, f0_ = 0.0;
};

class InnerIntegral {
 public:
  InnerIntegral(const PumpWaveform& pump, double omega_p, double beta2, double length,
                const Enhancement& enh, double rel_tol)
      : pump_(pump), omega_p_(omega_p), half_beta2_l_(0.5 * beta2 * length), enh_(enh),
        rel_tol_(rel_tol) {}

  // Integrand is symmetric under w -> sum - w: integrate w >= sum/2 and double.
  cplx operator()(double sum, double diff) const {
    const double supp = pump_.support();
    const double lo = std::max({0.5 * sum, sum - omega_p_ - supp, omega_p_ - supp});
    const double hi = std::min(omega_p_ + supp, sum - omega_p_ + supp);
    if (!(hi > lo)) return 0.0;

    const double dd = 0.25 * diff * diff;
    auto integrand = [&](double w) -> cplx {
      const double wc = sum - w;
      const double pp = pump_(w - omega_p_) * pump_(wc - omega_p_);
      if (pp == 0.0) return 0.0;
      const double m = w - 0.5 * sum;
      const double pm = sinc(half_beta2_l_ * (m * m - dd));
      const cplx ff = enh_.ring() ? enh_(w) * enh_(wc) : cplx(1.0);
      return pp * std::sqrt(w * wc) * pm * ff;
    };

    breaks_.clear();
    breaks_.push_back(lo);
    breaks_.push_back(hi);
    const double seg = 4.0 * pump_.feature_width();
    const int nseg = static_cast<int>(std::ceil((hi - lo) / seg));
    for (int k = 1; k < nseg; ++k) breaks_.push_back(lo + (hi - lo) * k / nseg);
    if (enh_.ring()) {
      const double fsr = enh_.fsr();
      const double dr = enh_.delta_r();
      auto add_family = [&](double base, double sign) {
        // resonances of F(w) at base + m fsr (sign = +1) or of F(sum - w) at sum - base - m fsr
        const double m_lo = std::floor((sign > 0 ? lo - base : base - hi) / fsr) - 1;
        const double m_hi = std::ceil((sign > 0 ? hi - base : base - lo) / fsr) + 1;
        for (double m = m_lo; m <= m_hi; m += 1.0) {
          const double c = sign > 0 ? base + m * fsr : base - m * fsr;
          for (double off : {-4.0 * dr, -dr, 0.0, dr, 4.0 * dr}) {
            const double b = c + off;
            if (b > lo && b < hi) breaks_.push_back(b);
          }
        }
      };
      add_family(omega_p_, 1.0);
      add_family(sum - omega_p_, -1.0);
    }
    std::sort(breaks_.begin(), breaks_.end());

    cplx total = 0.0;
    for (std::size_t k = 0; k + 1 < breaks_.size(); ++k) {
      const double a = breaks_[k];
      const double b = breaks_[k + 1];
      if (!(b > a)) continue;
      double err = 0.0;
      total += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, a, b, 20,
                                                                              rel_tol_, &err);
    }
    return 2.0 * total;
  }

 private:
  const PumpWaveform& pump_;
  double omega_p_;
  double half_beta2_l_;
  const Enhancement& enh_;
  double rel_tol_;
  mutable std::vector<double> breaks_;
};

}  // namespace

JsaGrid build_jsa(const Material& material, const Structure& structure, const PumpSpec& pump,
                  const GridSpec& grid, const QuadratureOptions& options) {
  if (!pump.pulsed() || !pump.fwhm) {
    throw ValidationError("the oracle needs a pulse duration; model CW as a long pulse");
  }
  if (grid.omega1.count < 2 || grid.omega2.count < 2 || !(grid.omega1.step > 0.0) ||
      !(grid.omega2.step > 0.0)) {
    throw ValidationError("grid axes must be strictly increasing with >= 2 points");
  }
  if (grid.omega1.start <= 0.0 || grid.omega2.start <= 0.0) {
    throw ValidationError("grid reaches non-positive frequencies");
  }

  const double omega_p = pump.omega();
  const PumpWaveform waveform(pump.shape, *pump.fwhm);
  Enhancement enh;
  double beta2 = 0.0;
  if (const auto* ring = std::get_if<RingGeometry>(&structure)) {
    enh = Enhancement(*ring, omega_p, options.ring_form);
  } else {
    beta2 = std::get<ChannelGeometry>(structure).beta2;
  }
  const double length = structure_length(structure);

  JsaGrid jsa;
  jsa.layout = grid.layout;
  jsa.axis1 = grid.omega1;
  jsa.axis2 = grid.omega2;
  jsa.passband = grid.passband;
  jsa.omega_p = omega_p;
  jsa.gamma_l = structure_gamma(material, structure, pump.wavelength) * length;
  jsa.fwhm = *pump.fwhm;
  jsa.amplitude.resize(grid.omega1.count, grid.omega2.count);

  const double inv_wp2 = 1.0 / (omega_p * omega_p);
  auto rows = [&](int begin, int end) {
    const InnerIntegral inner(waveform, omega_p, beta2, length, enh, options.rel_tol);
    for (int i = begin; i < end; ++i) {
      const double w1 = grid.omega1.at(i);
      const cplx f1 = enh(w1);
      for (int j = 0; j < grid.omega2.count; ++j) {
        const double w2 = grid.omega2.at(j);
        const cplx value = inner(w1 + w2, w1 - w2);
        jsa.amplitude(i, j) = std::sqrt(w1 * w2) * inv_wp2 * f1 * enh(w2) * value;
      }
    }
  };

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp(threads, 1u, static_cast<unsigned>(grid.omega1.count));
  if (threads == 1) {
    rows(0, grid.omega1.count);
  } else {
    std::vector<std::jthread> pool;
    const int n = grid.omega1.count;
    for (unsigned t = 0; t < threads; ++t) {
      const int b = static_cast<int>(n * static_cast<long>(t) / threads);
      const int e = static_cast<int>(n * static_cast<long>(t + 1) / threads);
      pool.emplace_back(rows, b, e);
    }
  }

  double norm = 0.0;
  for (int i = 0; i < jsa.axis1.count; ++i) {
    for (int j = 0; j < jsa.axis2.count; ++j) {
      norm += trapezoid_weight(i, jsa.axis1.count) * trapezoid_weight(j, jsa.axis2.count) *
              std::norm(jsa.amplitude(i, j));
    }
  }
  jsa.norm = norm * jsa.axis1.step * jsa.axis2.step;
  for (Eigen::Index k = 0; k < jsa.amplitude.size(); ++k) {
    if (!std::isfinite(jsa.amplitude.data()[k].real()) ||
        !std::isfinite(jsa.amplitude.data()[k].imag())) {
      throw ConvergenceError("non-finite joint spectral amplitude");
    }
  }
  return jsa;
}

namespace {

// Per-axis weights for a hard-edge band on a uniform axis: trapezoid weights
// restricted to [lo, hi], with half weight on samples that sit on a band edge.
std::vector<double> band_weights(const UniformAxis& axis, double lo, double hi) {
  std::vector<double> w(axis.count, 0.0);
  const double eps = 1e-9 * axis.step;
  for (int i = 0; i < axis.count; ++i) {
    const double x = axis.at(i);
    if (x < lo - eps || x > hi + eps) continue;
    const bool on_edge = std::abs(x - lo) <= eps || std::abs(x - hi) <= eps;
    w[i] = on_edge ? 0.5 : trapezoid_weight(i, axis.count);
  }
  return w;
}

double weighted_sum(const JsaGrid& jsa, const std::vector<double>& w1, const std::vector<double>& w2) {
  double s = 0.0;
  for (int i = 0; i < jsa.axis1.count; ++i) {
    if (w1[i] == 0.0) continue;
    for (int j = 0; j < jsa.axis2.count; ++j) {
      if (w2[j] == 0.0) continue;
      s += w1[i] * w2[j] * std::norm(jsa.amplitude(i, j));
    }
  }
  return s * jsa.axis1.step * jsa.axis2.step;
}

bool same_filter(const FilterSpec& a, const FilterSpec& b) {
  return std::abs(a.bandwidth - b.bandwidth) <= 1e-12 * a.bandwidth &&
         std::abs(a.detuning - b.detuning) <= 1e-12 * std::max(1.0, std::abs(a.detuning));
}

}  // namespace

double n_pairs_full(const JsaGrid& jsa, const PumpSpec& pump, const std::optional<FilterSpec>& filter,
                    double truncation_threshold) {
  if (!pump.fwhm || std::abs(*pump.fwhm - jsa.fwhm) > 1e-12 * jsa.fwhm) {
    throw ValidationError("pump duration differs from the one the JSA was built with");
  }
  const double t = jsa.fwhm;
  const double gpl = jsa.gamma_l * pump.power;
  const double prefactor = gpl * gpl * t * t / (8.0 * kPi * kPi);

  if (jsa.layout == GridLayout::SignalIdler) {
    if (filter && !(jsa.passband && same_filter(*filter, *jsa.passband))) {
      throw ValidationError("filter does not match the passband this window was built for");
    }
    return 2.0 * prefactor * jsa.norm;
  }

  const double ratio = jsa.boundary_ratio();
  if (ratio > truncation_threshold) {
    std::ostringstream msg;
    msg << "JSA truncated: boundary amplitude is " << ratio
        << " of peak (limit " << truncation_threshold << "); widen the grid axes";
    throw ConvergenceError(msg.str());
  }
  if (!filter) return prefactor * jsa.norm;

  const double half = kPi * filter->bandwidth;
  const double s = jsa.omega_p + filter->detuning;
  const double c = jsa.omega_p - filter->detuning;
  const auto s1 = band_weights(jsa.axis1, s - half, s + half);
  const auto i1 = band_weights(jsa.axis1, c - half, c + half);
  const auto s2 = band_weights(jsa.axis2, s - half, s + half);
  const auto i2 = band_weights(jsa.axis2, c - half, c + half);
  // Both photon assignments are counted, also when the bands coincide.
  return prefactor * (weighted_sum(jsa, s1, i2) + weighted_sum(jsa, i1, s2));
}

void write_jsa(std::ostream& out, const JsaGrid& jsa) {
  out.precision(17);
  out << "# sfwm-jsa 1\n";
  out << "# layout " << (jsa.layout == GridLayout::Symmetric ? "symmetric" : "signal-idler") << "\n";
  out << "# omega1 " << jsa.axis1.count << ' ' << jsa.axis1.start << ' ' << jsa.axis1.step << "\n";
  out << "# omega2 " << jsa.axis2.count << ' ' << jsa.axis2.start << ' ' << jsa.axis2.step << "\n";
  out << "# meta " << jsa.omega_p << ' ' << jsa.gamma_l << ' ' << jsa.fwhm << "\n";
  for (int i = 0; i < jsa.axis1.count; ++i) {
    for (int j = 0; j < jsa.axis2.count; ++j) {
      if (j) out << ' ';
      out << jsa.amplitude(i, j).real() << ' ' << jsa.amplitude(i, j).imag();
    }
    out << '\n';
  }
}

JsaGrid read_jsa(std::istream& in) {
  JsaGrid jsa;
  std::string line;
  auto header = [&](const char* key) {
    if (!std::getline(in, line) || line.rfind(key, 0) != 0) {
      throw ValidationError(std::string("JSA file: expected header '") + key + "'");
    }
    return std::istringstream(line.substr(std::string(key).size()));
  };
  header("# sfwm-jsa 1");
  {
    auto is = header("# layout ");
    std::string layout;
    is >> layout;
    if (layout == "symmetric") jsa.layout = GridLayout::Symmetric;
    else if (layout == "signal-idler") jsa.layout = GridLayout::SignalIdler;
    else throw ValidationError("JSA file: unknown layout '" + layout + "'");
  }
  for (auto [key, axis] : {std::pair{"# omega1 ", &jsa.axis1}, std::pair{"# omega2 ", &jsa.axis2}}) {
    auto is = header(key);
    if (!(is >> axis->count >> axis->start >> axis->step) || axis->count < 2) {
      throw ValidationError("JSA file: malformed axis header");
    }
  }
  {
    auto is = header("# meta ");
    is >> jsa.omega_p >> jsa.gamma_l >> jsa.fwhm;
  }
  jsa.amplitude.resize(jsa.axis1.count, jsa.axis2.count);
  for (int i = 0; i < jsa.axis1.count; ++i) {
    for (int j = 0; j < jsa.axis2.count; ++j) {
      double re = 0.0, im = 0.0;
      if (!(in >> re >> im)) throw ValidationError("JSA file: truncated data");
      jsa.amplitude(i, j) = {re, im};
    }
  }
  double norm = 0.0;
  for (int i = 0; i < jsa.axis1.count; ++i) {
    for (int j = 0; j < jsa.axis2.count; ++j) {
      norm += trapezoid_weight(i, jsa.axis1.count) * trapezoid_weight(j, jsa.axis2.count) *
              std::norm(jsa.amplitude(i, j));
    }
  }
  jsa.norm = norm * jsa.axis1.step * jsa.axis2.step;
  return jsa;
}

}  // namespace sfwm
