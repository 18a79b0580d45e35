#pragma once

#include <cstdint>
#include <random>

#include "elg/extended.hpp"

namespace elg {

/// Seeded parameter draws used by the verification suite. The engine is
/// std::mt19937_64, whose output sequence is fixed by the standard; uniforms
/// are formed from the top 53 bits, so draws are identical on every platform.
///
///   ω_μ      uniform in [−2, 2] per component
///   u        sinh(β)·n̂, rapidity β uniform in [−3, 3], n̂ uniform on S²
///   θ        angle uniform in [0, 2π), axis uniform on S²
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : engine_(seed) {}

  double uniform();                       // [0, 1)
  double uniform(double lo, double hi);   // [lo, hi)
  Vector3 unit_vector();

  RotationParams rotation();
  BoostParams boost();
  DiracParams dirac();
  ExtendedParams extended();

 private:
  std::mt19937_64 engine_;
};

}  // namespace elg
