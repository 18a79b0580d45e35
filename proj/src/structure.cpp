#include "elg/structure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "elg/core_algebra.hpp"
#include "elg/special_functions.hpp"

namespace elg {

namespace {

constexpr Complex kI{0.0, 1.0};

// (ε·a)_km = Σ_j a_j ε_jkm
Matrix3 epsilon_contract(const Vector3& a) {
  Matrix3 out = Matrix3::Zero();
  for (int k = 0; k < 3; ++k) {
    for (int m = 0; m < 3; ++m) {
      for (int j = 0; j < 3; ++j) out(k, m) += a(j) * levi_civita(j, k, m);
    }
  }
  return out;
}

}  // namespace

OPlusMatrix oplus_rotation(const RotationParams& theta) {
  const Matrix3 r = rotation3(theta);
  OPlusMatrix o = OPlusMatrix::Zero();
  o.block<3, 3>(0, 0) = r;
  o.block<3, 3>(3, 3) = r;
  o.block<4, 4>(6, 6) = four_rotation(theta);
  return o;
}

OPlusMatrix oplus_boost(const BoostParams& u) {
  const double u0 = u.u0();
  // u⁰δ + (1 − u⁰)ûû written without the direction.
  const Matrix3 b = u0 * Matrix3::Identity() - u.u * u.u.transpose() / (u0 + 1.0);
  const Matrix3 mix = epsilon_contract(u.u);
  OPlusMatrix o = OPlusMatrix::Zero();
  o.block<3, 3>(0, 0) = b;
  o.block<3, 3>(3, 3) = b;
  o.block<3, 3>(0, 3) = mix;
  o.block<3, 3>(3, 0) = -mix;
  // Γ^μ carries an upper index, so it transforms with η𝓛(u)η = 𝓛(−u).
  o.block<4, 4>(6, 6) = four_boost(BoostParams{-u.u});
  return o;
}

OPlusMatrix oplus_dirac(const DiracParams& omega) {
  const double z = -omega.invariant();
  const double w0 = omega.omega(0);
  const Vector3 w = omega.omega.tail<3>();
  const double a = fn::one_minus_cos_sqrt(z);  // (1 − cos ω)/ω²
  const double b = fn::sinc_sqrt(z);           // sin ω / ω
  const double c = fn::cos_sqrt(z);
  const double w2 = w.squaredNorm();
  const Matrix3 id = Matrix3::Identity();
  const Matrix3 ww = w * w.transpose();
  const Matrix3 eps = epsilon_contract(w);

  OPlusMatrix o = OPlusMatrix::Zero();
  o.block<3, 3>(0, 0) = (1.0 + w2 * a) * id - a * ww;
  o.block<3, 3>(0, 3) = w0 * a * eps;
  o.block<3, 3>(0, 7) = b * eps;

  o.block<3, 3>(3, 0) = w0 * a * eps;
  o.block<3, 3>(3, 3) = (c - w2 * a) * id + a * ww;
  o.block<3, 1>(3, 6) = -b * w;
  o.block<3, 3>(3, 7) = -w0 * b * id;

  o.block<1, 3>(6, 3) = -b * w.transpose();
  o(6, 6) = 1.0 + w2 * a;
  o.block<1, 3>(6, 7) = w0 * a * w.transpose();

  o.block<3, 3>(7, 0) = -b * eps;
  o.block<3, 3>(7, 3) = w0 * b * id;
  o.block<3, 1>(7, 6) = -w0 * a * w;
  o.block<3, 3>(7, 7) = c * id - a * ww;
  return o;
}

OPlusMatrix oplus_closed(const ExtendedParams& p) {
  return oplus_dirac(p.dirac) * oplus_boost(p.boost) * oplus_rotation(p.rotation);
}

OPlusMatrix oplus_of_matrix(const Matrix4C& m) {
  const Matrix4C inv = m.inverse();
  const double scale = m.norm() * inv.norm();
  OPlusMatrix o;
  for (int r = 0; r < kGeneratorCount; ++r) {
    double residual = 0.0;
    const Vector10 row = expand_in_generators(inv * generator(r) * m, &residual);
    // Rounding in m itself is amplified once more by the conjugation.
    if (residual > 1e-12 * scale * scale) {
      throw SolverError(SolverError::Kind::Inconsistent,
                        "oplus: conjugated generator left the algebra", residual);
    }
    o.row(r) = row.transpose();
  }
  return o;
}

OPlusMatrix oplus_numeric(const ExtendedParams& p) {
  return oplus_of_matrix(extended_matrix(p));
}

Matrix3 theta_rotation(const RotationParams& theta) {
  const Vector3& t = theta.theta;
  const double z = t.squaredNorm() / 4.0;
  const double k = fn::cot_scaled(z);  // (θ/2)cot(θ/2)
  return k * Matrix3::Identity() + 0.5 * epsilon_contract(t) +
         (fn::cot_scaled_defect(z) / 4.0) * (t * t.transpose());
}

ThetaMatrix theta_closed(const ExtendedParams& p) {
  const Vector3& u = p.boost.u;
  const double u0 = p.boost.u0();
  const FourVector& w = p.dirac.omega;
  const double z = -p.dirac.invariant();
  const FourGenerators& g = four_generators();

  const Matrix3 tr = theta_rotation(p.rotation);
  const Matrix3 eps_u = epsilon_contract(u);
  // Wigner-angle response of the boost coordinates to a K perturbation.
  const Matrix3 lu_theta = -eps_u / (u0 + 1.0);

  // Θ^(D) blocks: rows are Γ^μ perturbations.
  const double t = fn::tan_half_over(z);
  Eigen::Matrix<double, 4, 3> d_theta = Eigen::Matrix<double, 4, 3>::Zero();
  Eigen::Matrix<double, 4, 3> d_u = Eigen::Matrix<double, 4, 3>::Zero();
  d_theta.block<3, 3>(1, 0) = t * epsilon_contract(w.tail<3>()).transpose();
  d_u.row(0) = -t * w.tail<3>().transpose();
  d_u.block<3, 3>(1, 0) = t * w(0) * Matrix3::Identity();
  const Vector4 w_up = minkowski() * w;
  const Matrix4 d_w = fn::cot_scaled(z) * Matrix4::Identity() -
                      fn::cot_scaled_defect(z) * (w_up * w.transpose());

  ThetaMatrix th = ThetaMatrix::Zero();
  th.block<3, 3>(0, 0) = tr;
  th.block<3, 3>(3, 0) = lu_theta * tr;
  th.block<4, 3>(6, 0) = (d_theta + d_u * lu_theta) * tr;

  th.block<3, 3>(0, 3) = eps_u;
  th.block<3, 3>(3, 3) = u0 * Matrix3::Identity();
  th.block<4, 3>(6, 3) = u0 * d_u + d_theta * eps_u;

  for (int j = 0; j < 3; ++j) {
    th.block<1, 4>(j, 6) = (g.J[j] * w).transpose();
    th.block<1, 4>(3 + j, 6) = (g.K[j] * w).transpose();
  }
  th.block<4, 4>(6, 6) = d_w;
  return th;
}

ThetaMatrix theta_numeric(const ExtendedParams& p, double h, bool richardson,
                          const Tolerances& tol) {
  auto central = [&](double step) {
    ThetaMatrix out;
    for (int r = 0; r < kGeneratorCount; ++r) {
      Vector10 e = Vector10::Zero();
      e(r) = step;
      const Vector10 plus =
          compose_extended(ExtendedParams::from_coordinates(e), p, tol).coordinates();
      const Vector10 minus =
          compose_extended(ExtendedParams::from_coordinates(-e), p, tol).coordinates();
      out.row(r) = ((plus - minus) / (2.0 * step)).transpose();
    }
    return out;
  };
  const ThetaMatrix coarse = central(h);
  if (!richardson) return coarse;
  return (4.0 * central(0.5 * h) - coarse) / 3.0;
}

double theta_generator_defect(const ExtendedParams& p, double h) {
  const Matrix4C s = extended_matrix(p);
  const Vector10 x = p.coordinates();
  std::array<Matrix4C, kGeneratorCount> ds;
  for (int k = 0; k < kGeneratorCount; ++k) {
    Vector10 plus = x;
    Vector10 minus = x;
    plus(k) += h;
    minus(k) -= h;
    ds[k] = (extended_matrix(ExtendedParams::from_coordinates(plus)) -
             extended_matrix(ExtendedParams::from_coordinates(minus))) /
            (2.0 * h);
  }
  const ThetaMatrix th = theta_closed(p);
  const double scale = std::max(1.0, s.norm());
  double worst = 0.0;
  for (int r = 0; r < kGeneratorCount; ++r) {
    Matrix4C lhs = Matrix4C::Zero();
    for (int k = 0; k < kGeneratorCount; ++k) lhs += th(r, k) * ds[k];
    worst = std::max(worst, (lhs - kI * generator(r) * s).norm() / scale);
  }
  return worst;
}

double StructureConstants::max_abs_difference(const StructureConstants& other) const {
  double out = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) out = std::max(out, std::abs(c[i] - other.c[i]));
  return out;
}

double StructureConstants::antisymmetry_defect() const {
  double out = 0.0;
  for (int r = 0; r < 10; ++r) {
    for (int s = 0; s < 10; ++s) {
      for (int m = 0; m < 10; ++m) {
        out = std::max(out, std::abs((*this)(r, s, m) + (*this)(s, r, m)));
      }
    }
  }
  return out;
}

double StructureConstants::jacobi_defect() const {
  const auto& self = *this;
  double out = 0.0;
  for (int r = 0; r < 10; ++r) {
    for (int s = 0; s < 10; ++s) {
      for (int t = 0; t < 10; ++t) {
        for (int n = 0; n < 10; ++n) {
          double sum = 0.0;
          for (int m = 0; m < 10; ++m) {
            sum += self(r, s, m) * self(m, t, n) + self(s, t, m) * self(m, r, n) +
                   self(t, r, m) * self(m, s, n);
          }
          out = std::max(out, std::abs(sum));
        }
      }
    }
  }
  return out;
}

StructureConstants structure_constants_commutator() {
  StructureConstants out;
  for (int r = 0; r < 10; ++r) {
    for (int s = 0; s < 10; ++s) {
      // i[X_r, X_s] = c_rs^m X_m
      const Vector10 row = expand_in_generators(kI * commutator(generator(r), generator(s)));
      for (int m = 0; m < 10; ++m) out(r, s, m) = row(m);
    }
  }
  return out;
}

StructureConstants structure_constants_theta(double h) {
  auto derivative = [](int n, double step) {
    Vector10 e = Vector10::Zero();
    e(n) = step;
    return ThetaMatrix((theta_closed(ExtendedParams::from_coordinates(e)) -
                        theta_closed(ExtendedParams::from_coordinates(-e))) /
                       (2.0 * step));
  };
  std::array<ThetaMatrix, 10> d;
  for (int n = 0; n < 10; ++n) {
    d[n] = (4.0 * derivative(n, 0.5 * h) - derivative(n, h)) / 3.0;
  }
  StructureConstants out;
  for (int s = 0; s < 10; ++s) {
    for (int n = 0; n < 10; ++n) {
      for (int m = 0; m < 10; ++m) out(s, n, m) = d[n](s, m) - d[s](n, m);
    }
  }
  return out;
}

StructureConstants structure_constants(const Tolerances& tol) {
  const StructureConstants algebra = structure_constants_commutator();
  const double gap = algebra.max_abs_difference(structure_constants_theta());
  if (gap > tol.fd) {
    throw SolverError(SolverError::Kind::Inconsistent,
                      "structure constants: commutator and Θ routes disagree", gap);
  }
  return algebra;
}

double condition_number(const Matrix10& m) {
  const Eigen::JacobiSVD<Matrix10> svd(m);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  if (smallest == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smallest;
}

}  // namespace elg
