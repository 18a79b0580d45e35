#include "elg/special_functions.hpp"

#include <cmath>

namespace elg::fn {

namespace {

// Σ_k (−z)^k / (2k + offset)! truncated after `terms` terms; enough for |z| ≤ 1.
double alternating_factorial_series(double z, int offset, int terms) {
  double term = 1.0;
  for (int i = 1; i <= offset; ++i) term /= i;
  double sum = term;
  for (int k = 1; k < terms; ++k) {
    term *= -z / ((2.0 * k + offset - 1) * (2.0 * k + offset));
    sum += term;
  }
  return sum;
}

constexpr double kSeriesRadius = 1.0;
constexpr int kSeriesTerms = 14;

}  // namespace

double cos_sqrt(double z) {
  if (std::abs(z) < kSeriesRadius) return alternating_factorial_series(z, 0, kSeriesTerms);
  return z > 0 ? std::cos(std::sqrt(z)) : std::cosh(std::sqrt(-z));
}

double sinc_sqrt(double z) {
  if (std::abs(z) < kSeriesRadius) return alternating_factorial_series(z, 1, kSeriesTerms);
  if (z > 0) {
    const double w = std::sqrt(z);
    return std::sin(w) / w;
  }
  const double w = std::sqrt(-z);
  return std::sinh(w) / w;
}

double one_minus_cos_sqrt(double z) {
  if (std::abs(z) < kSeriesRadius) return alternating_factorial_series(z, 2, kSeriesTerms);
  return (1.0 - cos_sqrt(z)) / z;
}

double cos_half(double z) { return cos_sqrt(z / 4.0); }

double sin_half_over(double z) { return 0.5 * sinc_sqrt(z / 4.0); }

double tan_half_over(double z) {
  if (std::abs(z) < 1e-2) {
    // tan x / x = 1 + x²/3 + 2x⁴/15 + 17x⁶/315 + 62x⁸/2835, x² = z/4.
    const double x2 = z / 4.0;
    return 0.5 * (1.0 + x2 * (1.0 / 3.0 + x2 * (2.0 / 15.0 + x2 * (17.0 / 315.0 + x2 * 62.0 / 2835.0))));
  }
  if (z > 0) {
    const double w = std::sqrt(z);
    return std::tan(0.5 * w) / w;
  }
  const double w = std::sqrt(-z);
  return std::tanh(0.5 * w) / w;
}

double cot_scaled(double z) {
  if (std::abs(z) < 1e-2) return 1.0 - z * cot_scaled_defect(z);
  if (z > 0) {
    const double w = std::sqrt(z);
    return w / std::tan(w);
  }
  const double w = std::sqrt(-z);
  return w / std::tanh(w);
}

double cot_scaled_defect(double z) {
  if (std::abs(z) < 1e-2) {
    // 1 − x cot x = x²/3 + x⁴/45 + 2x⁶/945 + x⁸/4725 + 2x¹⁰/93555
    return 1.0 / 3.0 + z * (1.0 / 45.0 + z * (2.0 / 945.0 + z * (1.0 / 4725.0 + z * 2.0 / 93555.0)));
  }
  return (1.0 - cot_scaled(z)) / z;
}

}  // namespace elg::fn
