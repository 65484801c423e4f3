#include "sfwm/schmidt.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "sfwm/error.hpp"

namespace sfwm {
namespace {

Eigen::VectorXd sqrt_weights(const UniformAxis& axis) {
  Eigen::VectorXd w(axis.count);
  for (int i = 0; i < axis.count; ++i) w(i) = std::sqrt(trapezoid_weight(i, axis.count) * axis.step);
  return w;
}

void check_grid(const JsaGrid& jsa) {
  if (jsa.amplitude.rows() != jsa.amplitude.cols() || jsa.axis1.count != jsa.axis2.count) {
    throw ValidationError("Schmidt decomposition needs a square grid");
  }
  if (!(jsa.axis1.step > 0.0) ||
      std::abs(jsa.axis1.step - jsa.axis2.step) > 1e-9 * jsa.axis1.step) {
    throw ValidationError("Schmidt decomposition needs equal uniform steps on both axes");
  }
  if (!(jsa.norm > 0.0)) throw ValidationError("JSA is identically zero");
}

}  // namespace

SchmidtResult schmidt_decompose(const JsaGrid& jsa) {
  check_grid(jsa);
  const Eigen::VectorXd w1 = sqrt_weights(jsa.axis1);
  const Eigen::VectorXd w2 = sqrt_weights(jsa.axis2);
  const Eigen::MatrixXcd m =
      w1.asDiagonal() * jsa.amplitude * w2.asDiagonal() / std::sqrt(jsa.norm);

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();

  SchmidtResult r;
  r.coefficients.resize(sv.size());
  double total = 0.0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) total += sv(k) * sv(k);
  double sum_sq = 0.0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    r.coefficients[k] = sv(k) * sv(k) / total;
    sum_sq += r.coefficients[k] * r.coefficients[k];
  }
  r.largest_amp = std::sqrt(r.coefficients.front());
  r.schmidt_number = 1.0 / sum_sq;
  r.u = svd.matrixU();
  r.v = svd.matrixV();
  return r;
}

Eigen::MatrixXcd schmidt_reconstruct(const SchmidtResult& result, const JsaGrid& jsa, int rank) {
  check_grid(jsa);
  const int n = std::min<int>(rank, static_cast<int>(result.coefficients.size()));
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(result.u.rows(), result.v.rows());
  for (int k = 0; k < n; ++k) {
    m += std::sqrt(result.coefficients[k]) * result.u.col(k) * result.v.col(k).adjoint();
  }
  const Eigen::VectorXd w1 = sqrt_weights(jsa.axis1).cwiseInverse();
  const Eigen::VectorXd w2 = sqrt_weights(jsa.axis2).cwiseInverse();
  return w1.asDiagonal() * m * w2.asDiagonal() * std::sqrt(jsa.norm);
}

}  // namespace sfwm
