#pragma once

#include <cmath>

// Shared per-element reference arithmetic. The scalar kernels and the SIMD
// tail loops both call these, so a vector kernel only has to mirror the exact
// operation order used here.

namespace ctiq::kernels::detail {

struct TriangularParams {
  double min;
  double max;
  double mode_cdf;     // (mode - min) / (max - min)
  double left_scale;   // (max - min) * (mode - min)
  double right_scale;  // (max - min) * (max - mode)
};

inline TriangularParams triangular_params(double min, double mode, double max) {
  const double range = max - min;
  return {min, max, (mode - min) / range, range * (mode - min), range * (max - mode)};
}

inline double triangular_one(const TriangularParams& p, double u) {
  if (u < p.mode_cdf) {
    return p.min + std::sqrt(u * p.left_scale);
  }
  return p.max - std::sqrt((1.0 - u) * p.right_scale);
}

} // namespace ctiq::kernels::detail
