#pragma once

#include <vector>

#include <Eigen/Dense>

#include "sfwm/jsa.hpp"

namespace sfwm {

struct SchmidtResult {
  std::vector<double> coefficients;  ///< p_lambda, descending, summing to 1
  double largest_amp = 0.0;          ///< sqrt(p_1)
  double schmidt_number = 0.0;       ///< K = 1 / sum p^2
  Eigen::MatrixXcd u;                ///< columns: Phi_lambda(w1) sampled, unit discrete norm
  Eigen::MatrixXcd v;                ///< columns: partner modes on the w2 axis
};

/// SVD of the amplitude weighted by the trapezoid measure and rescaled to unit
/// norm. The grid must be square with equal uniform steps on both axes.
SchmidtResult schmidt_decompose(const JsaGrid& jsa);

/// Sum over the leading `rank` modes of sqrt(p) u v^H, mapped back to
/// amplitude units of the source grid.
Eigen::MatrixXcd schmidt_reconstruct(const SchmidtResult& result, const JsaGrid& jsa, int rank);

}  // namespace sfwm
