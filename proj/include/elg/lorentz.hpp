#pragma once

#include <array>
#include <cmath>

#include "elg/types.hpp"

namespace elg {

/// Axis-angle rotation θ·θ̂ on the SU(2) cover. Canonical form has magnitude
/// in [0, 2π]; magnitude 2π is used only for −1 and then the axis is ẑ.
struct RotationParams {
  Vector3 theta = Vector3::Zero();

  double angle() const { return theta.norm(); }
  /// Unit axis, or ẑ when the angle vanishes.
  Vector3 axis() const;

  static RotationParams canonical(const Vector3& theta);
};

/// Spatial part of the four-velocity. u⁰ is derived, never stored, so that
/// u⁰² − |u|² = 1 holds by construction.
struct BoostParams {
  Vector3 u = Vector3::Zero();

  double u0() const { return std::sqrt(1.0 + u.squaredNorm()); }
};

/// 𝓛(u, θ) = L(u)·R(θ).
struct LorentzParams {
  BoostParams boost;
  RotationParams rotation;
};

/// Covariant components ω_0..ω_3.
using FourVector = Vector4;

/// Half-angle form (cos(θ/2), θ̂ sin(θ/2)) of a rotation, i.e. the SU(2)
/// element 1·c + iσ·v.
struct HalfAngle {
  double c = 1.0;
  Vector3 v = Vector3::Zero();

  static HalfAngle of(const RotationParams& r);
  RotationParams params() const;
  HalfAngle operator*(const HalfAngle& rhs) const;
};

Matrix4C rot_su2(const RotationParams& theta);
Matrix4C boost_sl2(const BoostParams& u);
Matrix4C lorentz_matrix(const LorentzParams& p);

RotationParams compose_rotations(const RotationParams& theta2,
                                 const RotationParams& theta1);

struct BoostComposition {
  BoostParams boost;
  RotationParams wigner;
};

/// L(u2)·L(u1) = L(boost)·R(wigner).
BoostComposition compose_boosts(const BoostParams& u2, const BoostParams& u1);

LorentzParams compose_lorentz(const LorentzParams& p2, const LorentzParams& p1);
LorentzParams inverse_lorentz(const LorentzParams& p);

/// 3x3 rotation R_k^m(θ) = cos θ δ_km + (1 − cos θ) θ̂_k θ̂_m + sin θ θ̂_j ε_jkm.
/// Satisfies R(θ)·L(u)·R(θ)⁻¹ = L(rotation3(θ)·u).
Matrix3 rotation3(const RotationParams& theta);

/// Four-vector matrices acting on covariant components, ω'_μ = Λ_μ^ν ω_ν.
Matrix4 four_rotation(const RotationParams& theta);
Matrix4 four_boost(const BoostParams& u);
Matrix4 four_lorentz(const LorentzParams& p);

/// (𝒥_m)_j^k = ε_mjk and (𝒦_m)_0^k = (𝒦_m)_k^0 = −δ_mk.
struct FourGenerators {
  std::array<Matrix4, 3> J;
  std::array<Matrix4, 3> K;
};
const FourGenerators& four_generators();

/// η = diag(−1, +1, +1, +1).
const Matrix4& minkowski();
double minkowski_dot(const Vector4& a, const Vector4& b);

/// Levi-Civita symbol with ε_123 = +1, zero-based indices.
double levi_civita(int i, int j, int k);

}  // namespace elg
