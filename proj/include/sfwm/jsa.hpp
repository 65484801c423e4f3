#pragma once

// Numerical evaluation of the undepleted-pump pair integral. The joint
// spectral amplitude stored here is the full biphoton amplitude
//
//   phi(w1, w2) = sqrt(w1 w2) / wP^2 F(w1) F(w2)
//                 * int dw phiP(w) phiP(w1 + w2 - w) sqrt(w (w1 + w2 - w))
//                   sinc{(beta2 L / 2) [(w - (w1 + w2)/2)^2 - ((w1 - w2)/2)^2]}
//                   F(w) F(w1 + w2 - w)
//
// so that the expected number of pairs is (gamma P L)^2 T^2 / (8 pi^2) times
// the integral of |phi|^2 over the collected region.

#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "sfwm/model.hpp"

namespace sfwm {

enum class GridLayout {
  /// Same axis for w1 and w2 covering the whole generation band; each pair is
  /// counted once by the plain double integral.
  Symmetric,
  /// w1 axis is a signal window, w2 axis the conjugate idler window
  /// (w2_j = 2 wP - w1_{n-1-j}); pairs are counted in both photon orderings.
  SignalIdler,
};

struct UniformAxis {
  double start = 0.0;
  double step = 0.0;
  int count = 0;

  double at(int i) const { return start + step * i; }
  double back() const { return at(count - 1); }
};

struct GridSpec {
  GridLayout layout = GridLayout::Symmetric;
  UniformAxis omega1;
  UniformAxis omega2;
  /// Set when a SignalIdler window coincides with a filter passband.
  std::optional<FilterSpec> passband;

  static GridSpec symmetric(double center, double half_span, int points);
  /// Signal window centred at signal_center, conjugate idler window about omega_p.
  static GridSpec signal_idler(double omega_p, double signal_center, double half_width, int points);
  /// Window exactly covering a hard-edge filter passband and its conjugate.
  static GridSpec passband_window(double omega_p, const FilterSpec& filter, int points);
};

enum class EnhancementForm { Airy, Lorentzian };

struct QuadratureOptions {
  double rel_tol = 1e-6;
  EnhancementForm ring_form = EnhancementForm::Airy;
  unsigned threads = 0;  ///< 0 = hardware concurrency
};

struct JsaGrid {
  GridLayout layout = GridLayout::Symmetric;
  UniformAxis axis1;
  UniformAxis axis2;
  Eigen::MatrixXcd amplitude;  ///< rows: w1 samples, columns: w2 samples
  double norm = 0.0;           ///< trapezoidal integral of |phi|^2 dw1 dw2
  std::optional<FilterSpec> passband;

  double omega_p = 0.0;
  double gamma_l = 0.0;
  double fwhm = 0.0;

  std::vector<double> omega1_axis() const;
  std::vector<double> omega2_axis() const;
  /// Largest |phi| on the grid boundary relative to the largest |phi| overall.
  double boundary_ratio() const;
  double max_abs() const;
};

/// Trapezoid weight of sample i on an axis of n samples.
inline double trapezoid_weight(int i, int n) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

/// Builds the JSA by adaptive Gauss-Kronrod quadrature of the inner integral
/// at every grid point. Grid points are independent and evaluated on
/// multiple threads. Throws ValidationError for grids reaching w <= 0.
JsaGrid build_jsa(const Material& material, const Structure& structure, const PumpSpec& pump,
                  const GridSpec& grid, const QuadratureOptions& options = {});

inline constexpr double kDefaultTruncationThreshold = 1e-3;

/// Pairs per pulse from the full integral. With a filter, pairs are counted
/// over (passband x conjugate) plus (conjugate x passband), i.e. in both photon
/// assignments; coincident bands (zero detuning) are therefore counted twice,
/// matching the filtered closed form at every detuning. Symmetric grids must decay to below `truncation_threshold` of the
/// peak at their boundary (ConvergenceError otherwise); SignalIdler windows
/// are collection windows and are not checked.
double n_pairs_full(const JsaGrid& jsa, const PumpSpec& pump,
                    const std::optional<FilterSpec>& filter = std::nullopt,
                    double truncation_threshold = kDefaultTruncationThreshold);

/// Dense text export: header lines starting with '#', then one row per w1
/// sample holding (re, im) pairs for every w2 sample.
void write_jsa(std::ostream& out, const JsaGrid& jsa);
JsaGrid read_jsa(std::istream& in);

}  // namespace sfwm
