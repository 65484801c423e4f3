#pragma once

#include <vector>

#include "sfwm/model.hpp"

namespace sfwm {

/// Spectral pump amplitude phi_P(omega_P + offset), normalized so that the
/// pump autoconvolution c(u) = int phi_P(w) phi_P(u - w) dw satisfies
///
///     int |c(u)|^2 du = 2 pi / T.
///
/// With that normalization the pair integral reduces to the filtered
/// long-pulse rate (gamma P L)^2 T B for beta2 -> 0, F = 1, independently of
/// the pulse shape. A flat-top pulse normalized this way has
/// int |phi_P|^2 domega = 1.
class PumpWaveform {
 public:
  PumpWaveform(const PumpShape& shape, double fwhm);

  double operator()(double offset) const;

  /// Offsets beyond this are treated as zero by the quadrature.
  double support() const { return support_; }
  /// Scale on which the spectrum varies (Gaussian sigma, flat-top lobe width).
  double feature_width() const { return feature_; }
  double fwhm() const { return fwhm_; }
  PumpShapeKind kind() const { return kind_; }
  /// Normalization constant applied to the unit-peak shape.
  double scale() const { return scale_; }

 private:
  double unit(double offset) const;

  PumpShapeKind kind_;
  double fwhm_;
  double scale_ = 1.0;
  double support_ = 0.0;
  double feature_ = 0.0;
  double width_ = 0.0;  // shape parameter in rad/s
  std::vector<std::pair<double, double>> samples_;
};

/// int |c(u)|^2 du for the unit-peak shape, by direct numerical
/// autoconvolution on a fine grid. Used to calibrate custom shapes.
double autoconvolution_norm(const std::vector<std::pair<double, double>>& samples);

}  // namespace sfwm
