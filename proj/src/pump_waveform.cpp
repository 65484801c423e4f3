#include "sfwm/pump_waveform.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sfwm/error.hpp"
#include "sfwm/nl_params.hpp"
#include "sfwm/units.hpp"

namespace sfwm {
namespace {

// Gaussian spectra are cut where the amplitude falls below ~1e-14 of peak.
constexpr double kGaussianSupportSigmas = 8.0;
// Sech spectra decay as exp(-pi t0 |w| / 2).
constexpr double kSechSupportDecay = 32.0;
// Flat-top spectra (sinc) are rolled off by a Gaussian taper and cut after
// this many side lobes on each side. A hard cut would put Gibbs overshoot on
// the pulse edges, which long-window Schmidt analysis resolves; the Gaussian
// taper smooths the edges monotonically instead.
constexpr int kFlatTopLobes = 80;
constexpr double kFlatTopTaperWidths = 4.5;

double taper(double x) { return std::exp(-(kFlatTopTaperWidths * x) * (kFlatTopTaperWidths * x)); }

double interpolate(const std::vector<std::pair<double, double>>& s, double x) {
  if (x <= s.front().first || x >= s.back().first) return 0.0;
  auto hi = std::upper_bound(s.begin(), s.end(), x,
                             [](double v, const auto& p) { return v < p.first; });
  auto lo = hi - 1;
  const double t = (x - lo->first) / (hi->first - lo->first);
  return lo->second + t * (hi->second - lo->second);
}

}  // namespace

double autoconvolution_norm(const std::vector<std::pair<double, double>>& samples) {
  const double lo = samples.front().first;
  const double hi = samples.back().first;
  const int n = 2048;
  const double h = (hi - lo) / (n - 1);
  std::vector<double> f(n);
  for (int i = 0; i < n; ++i) f[i] = interpolate(samples, lo + i * h);
  // c(u_k) on u_k = 2 lo + k h, k = 0..2n-2
  double norm = 0.0;
  for (int k = 0; k < 2 * n - 1; ++k) {
    double c = 0.0;
    const int i0 = std::max(0, k - (n - 1));
    const int i1 = std::min(n - 1, k);
    for (int i = i0; i <= i1; ++i) c += f[i] * f[k - i];
    c *= h;
    norm += c * c * h;
  }
  return norm;
}

PumpWaveform::PumpWaveform(const PumpShape& shape, double fwhm) : kind_(shape.kind), fwhm_(fwhm) {
  if (!(fwhm > 0.0)) throw ValidationError("pump waveform needs fwhm > 0");
  const double t = fwhm;
  switch (kind_) {
    case PumpShapeKind::Gaussian: {
      // |E(t)|^2 = exp(-sigma^2 t^2), FWHM 2 sqrt(ln2) / sigma
      const double sigma = 2.0 * std::sqrt(std::log(2.0)) / t;
      width_ = sigma;
      scale_ = std::pow(std::sqrt(2.0) / (std::sqrt(kPi) * t * sigma * sigma * sigma), 0.25);
      support_ = kGaussianSupportSigmas * sigma;
      feature_ = sigma;
      break;
    }
    case PumpShapeKind::Sech: {
      // E(t) = e0 sech(t / t0), FWHM of sech^2 is 2 acosh(sqrt2) t0
      const double t0 = t / (2.0 * std::acosh(std::sqrt(2.0)));
      const double e0 = std::pow(3.0 / (16.0 * kPi * kPi * t * t0), 0.25);
      width_ = kPi * t0 / 2.0;
      scale_ = e0 * kPi * t0;
      support_ = kSechSupportDecay / width_;
      feature_ = 1.0 / width_;
      break;
    }
    case PumpShapeKind::FlatTop: {
      // Unit spectrum sinc(w T / 2) exp(-(w / w0)^2) is, in time, a box of
      // height 1/T smoothed by a unit-area Gaussian:
      //   e(t) = [erf((t + T/2) w0 / 2) - erf((t - T/2) w0 / 2)] / (2T).
      // Calibrate from int |E|^4 dt = 1 / (4 pi^2 T).
      width_ = t / 2.0;
      feature_ = 2.0 * kPi / t;
      support_ = kFlatTopLobes * feature_;
      const double w0 = support_ / kFlatTopTaperWidths;
      auto e4 = [&](double s) {
        const double e = (std::erf((s + 0.5 * t) * w0 / 2.0) - std::erf((s - 0.5 * t) * w0 / 2.0)) /
                         (2.0 * t);
        return e * e * e * e;
      };
      const double edge = 0.5 * t + 20.0 / w0;
      using boost::math::quadrature::gauss_kronrod;
      const double inner = 0.5 * t - 20.0 / w0;
      const double e4_int = gauss_kronrod<double, 61>::integrate(e4, -edge, -inner, 15, 1e-12) +
                            2.0 * inner / std::pow(t, 4) +
                            gauss_kronrod<double, 61>::integrate(e4, inner, edge, 15, 1e-12);
      scale_ = std::pow(1.0 / (4.0 * kPi * kPi * t * e4_int), 0.25);
      break;
    }
    case PumpShapeKind::Custom: {
      samples_ = shape.samples;
      if (samples_.size() < 2) throw ValidationError("custom pump shape needs >= 2 samples");
      std::sort(samples_.begin(), samples_.end());
      const double peak = std::max_element(samples_.begin(), samples_.end(),
                                           [](const auto& a, const auto& b) {
                                             return std::abs(a.second) < std::abs(b.second);
                                           })->second;
      if (peak == 0.0) throw ValidationError("custom pump shape is identically zero");
      for (auto& s : samples_) s.second /= peak;
      const double norm = autoconvolution_norm(samples_);
      scale_ = std::pow(2.0 * kPi / t / norm, 0.25);
      support_ = std::max(std::abs(samples_.front().first), std::abs(samples_.back().first));
      double spacing = support_;
      for (std::size_t i = 1; i < samples_.size(); ++i) {
        spacing = std::min(spacing, samples_[i].first - samples_[i - 1].first);
      }
      feature_ = spacing;
      break;
    }
  }
}

double PumpWaveform::unit(double w) const {
  switch (kind_) {
    case PumpShapeKind::Gaussian: return std::exp(-0.5 * (w / width_) * (w / width_));
    case PumpShapeKind::Sech: return 1.0 / std::cosh(width_ * w);
    case PumpShapeKind::FlatTop: return sinc(w * width_) * taper(std::abs(w) / support_);
    case PumpShapeKind::Custom: return interpolate(samples_, w);
  }
  return 0.0;
}

double PumpWaveform::operator()(double offset) const {
  if (std::abs(offset) > support_) return 0.0;
  return scale_ * unit(offset);
}

}  // namespace sfwm
