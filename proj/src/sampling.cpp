#include "elg/sampling.hpp"

#include <cmath>
#include <numbers>

namespace elg {

double ParamSampler::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double ParamSampler::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

Vector3 ParamSampler::unit_vector() {
  const double z = uniform(-1.0, 1.0);
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  const double r = std::sqrt(1.0 - z * z);
  return Vector3(r * std::cos(phi), r * std::sin(phi), z);
}

RotationParams ParamSampler::rotation() {
  const double angle = uniform(0.0, 2.0 * std::numbers::pi);
  return RotationParams{angle * unit_vector()};
}

BoostParams ParamSampler::boost() {
  const double beta = uniform(-3.0, 3.0);
  return BoostParams{std::sinh(beta) * unit_vector()};
}

DiracParams ParamSampler::dirac() {
  DiracParams d;
  for (int mu = 0; mu < 4; ++mu) d.omega(mu) = uniform(-2.0, 2.0);
  return d;
}

ExtendedParams ParamSampler::extended() {
  ExtendedParams p;
  p.dirac = dirac();
  p.boost = boost();
  p.rotation = rotation();
  return p;
}

}  // namespace elg
