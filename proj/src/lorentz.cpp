#include "elg/lorentz.hpp"

#include <cmath>
#include <numbers>

#include "elg/core_algebra.hpp"
#include "elg/special_functions.hpp"

namespace elg {

namespace {

constexpr Complex kI{0.0, 1.0};

// offdiag(σ_k, σ_k) = 2i K_k
Matrix4C boost_direction(int k) { return (2.0 * kI) * generator(3 + k); }

}  // namespace

double levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  return ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
}

Vector3 RotationParams::axis() const {
  const double t = theta.norm();
  return t > 0.0 ? Vector3(theta / t) : Vector3::UnitZ();
}

RotationParams RotationParams::canonical(const Vector3& theta) {
  return HalfAngle::of(RotationParams{theta}).params();
}

HalfAngle HalfAngle::of(const RotationParams& r) {
  const double z = r.theta.squaredNorm();
  return HalfAngle{fn::cos_half(z), fn::sin_half_over(z) * r.theta};
}

RotationParams HalfAngle::params() const {
  const double s = v.norm();
  if (s == 0.0) {
    if (c >= 0.0) return RotationParams{};
    return RotationParams{2.0 * std::numbers::pi * Vector3::UnitZ()};
  }
  return RotationParams{(2.0 * std::atan2(s, c) / s) * v};
}

HalfAngle HalfAngle::operator*(const HalfAngle& rhs) const {
  return HalfAngle{c * rhs.c - v.dot(rhs.v), c * rhs.v + rhs.c * v - v.cross(rhs.v)};
}

Matrix4C rot_su2(const RotationParams& theta) {
  const HalfAngle h = HalfAngle::of(theta);
  Matrix4C m = h.c * Matrix4C::Identity();
  for (int k = 0; k < 3; ++k) m += (2.0 * kI * h.v(k)) * generator(k);
  return m;
}

Matrix4C boost_sl2(const BoostParams& u) {
  const double u0 = u.u0();
  const double scale = 1.0 / std::sqrt(2.0 * (u0 + 1.0));
  Matrix4C m = std::sqrt(0.5 * (u0 + 1.0)) * Matrix4C::Identity();
  for (int k = 0; k < 3; ++k) m += (scale * u.u(k)) * boost_direction(k);
  return m;
}

Matrix4C lorentz_matrix(const LorentzParams& p) {
  return boost_sl2(p.boost) * rot_su2(p.rotation);
}

RotationParams compose_rotations(const RotationParams& theta2,
                                 const RotationParams& theta1) {
  return (HalfAngle::of(theta2) * HalfAngle::of(theta1)).params();
}

BoostComposition compose_boosts(const BoostParams& u2, const BoostParams& u1) {
  const double a0 = u2.u0();
  const double b0 = u1.u0();
  const Vector3 cross = u2.u.cross(u1.u);
  const double cross_norm = cross.norm();

  // Denominator ≥ (a0+1)(b0+1) − |u2||u1| > 0, so the half angle is in [0, π/2).
  const double half =
      std::atan2(cross_norm, (a0 + 1.0) * (b0 + 1.0) + u2.u.dot(u1.u));
  const Vector3 n = cross_norm > 0.0 ? Vector3(cross / cross_norm) : Vector3::UnitZ();

  // û√((u⁰−1)/2) written as u/√(2(u⁰+1)) so that u = 0 needs no special case.
  const Vector3 v = u2.u / std::sqrt(2.0 * (a0 + 1.0)) * std::sqrt(0.5 * (b0 + 1.0)) +
                    u1.u / std::sqrt(2.0 * (b0 + 1.0)) * std::sqrt(0.5 * (a0 + 1.0));
  // Undo the Wigner rotation: v lies in the plane orthogonal to n.
  const Vector3 a = v * std::cos(half) - n.cross(v) * std::sin(half);
  const double l0 = a0 * b0 + u2.u.dot(u1.u);

  BoostComposition out;
  out.boost.u = a * std::sqrt(2.0 * (l0 + 1.0));
  out.wigner.theta = (2.0 * half) * n;
  if (cross_norm == 0.0) out.wigner.theta.setZero();
  return out;
}

LorentzParams compose_lorentz(const LorentzParams& p2, const LorentzParams& p1) {
  const BoostComposition b =
      compose_boosts(p2.boost, BoostParams{rotation3(p2.rotation) * p1.boost.u});
  LorentzParams out;
  out.boost = b.boost;
  out.rotation = compose_rotations(b.wigner, compose_rotations(p2.rotation, p1.rotation));
  return out;
}

LorentzParams inverse_lorentz(const LorentzParams& p) {
  const RotationParams minus{-p.rotation.theta};
  return LorentzParams{BoostParams{-(rotation3(minus) * p.boost.u)}, minus};
}

Matrix3 rotation3(const RotationParams& theta) {
  const Vector3& t = theta.theta;
  const double z = t.squaredNorm();
  const double sinc = fn::sinc_sqrt(z);
  Matrix3 r = fn::cos_sqrt(z) * Matrix3::Identity() +
              fn::one_minus_cos_sqrt(z) * (t * t.transpose());
  for (int k = 0; k < 3; ++k) {
    for (int m = 0; m < 3; ++m) {
      for (int j = 0; j < 3; ++j) r(k, m) += sinc * t(j) * levi_civita(j, k, m);
    }
  }
  return r;
}

Matrix4 four_rotation(const RotationParams& theta) {
  Matrix4 m = Matrix4::Identity();
  m.bottomRightCorner<3, 3>() = rotation3(theta);
  return m;
}

Matrix4 four_boost(const BoostParams& u) {
  const double u0 = u.u0();
  Matrix4 m;
  m(0, 0) = u0;
  m.block<1, 3>(0, 1) = -u.u.transpose();
  m.block<3, 1>(1, 0) = -u.u;
  m.bottomRightCorner<3, 3>() =
      Matrix3::Identity() + (u.u * u.u.transpose()) / (u0 + 1.0);
  return m;
}

Matrix4 four_lorentz(const LorentzParams& p) {
  return four_boost(p.boost) * four_rotation(p.rotation);
}

const FourGenerators& four_generators() {
  static const FourGenerators g = [] {
    FourGenerators out;
    for (int m = 0; m < 3; ++m) {
      out.J[m] = Matrix4::Zero();
      out.K[m] = Matrix4::Zero();
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) out.J[m](1 + j, 1 + k) = levi_civita(m, j, k);
      }
      out.K[m](0, 1 + m) = -1.0;
      out.K[m](1 + m, 0) = -1.0;
    }
    return out;
  }();
  return g;
}

const Matrix4& minkowski() {
  static const Matrix4 eta = Vector4(-1.0, 1.0, 1.0, 1.0).asDiagonal();
  return eta;
}

double minkowski_dot(const Vector4& a, const Vector4& b) {
  return -a(0) * b(0) + a.tail<3>().dot(b.tail<3>());
}

}  // namespace elg
