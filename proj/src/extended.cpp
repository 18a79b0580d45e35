#include "elg/extended.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "elg/core_algebra.hpp"
#include "elg/special_functions.hpp"

namespace elg {

namespace {

constexpr Complex kI{0.0, 1.0};

using Residual = Eigen::Matrix<double, 32, 1>;
using Jacobian = Eigen::Matrix<double, 32, 10>;

Matrix4C slash(const FourVector& omega) {
  Matrix4C m = Matrix4C::Zero();
  for (int mu = 0; mu < 4; ++mu) m += omega(mu) * gamma(mu);
  return m;
}

Residual residual_of(const Vector10& x, const Matrix4C& target) {
  const Matrix4C diff = extended_matrix(ExtendedParams::from_coordinates(x)) - target;
  Residual r;
  for (int i = 0; i < 16; ++i) {
    r(2 * i) = diff(i / 4, i % 4).real();
    r(2 * i + 1) = diff(i / 4, i % 4).imag();
  }
  return r;
}

Jacobian jacobian_of(const Vector10& x, const Matrix4C& target) {
  constexpr double h = 1e-6;
  Jacobian jac;
  for (int i = 0; i < 10; ++i) {
    Vector10 plus = x;
    Vector10 minus = x;
    plus(i) += h;
    minus(i) -= h;
    jac.col(i) = (residual_of(plus, target) - residual_of(minus, target)) / (2.0 * h);
  }
  return jac;
}

// (c, v) of W = c·1 + i v·γ back to ω with c > 0.
FourVector omega_from_half(double c, const FourVector& v) {
  const double vv = minkowski_dot(v, v);
  const double y = std::sqrt(std::abs(vv));
  double factor = 2.0 / c;
  if (y > 0.0) {
    factor = vv < 0.0 ? 2.0 * std::atan2(y, c) / y : 2.0 * std::asinh(y) / y;
  }
  return factor * v;
}

ExtendedParams algebraic_seed(const Matrix4C& m, double lambda) {
  const Matrix4C flipped = gamma5() * m * gamma5();
  const Matrix4C even = 0.5 * (m + flipped);
  const Matrix4C odd = 0.5 * (m - flipped);

  // odd·bar(even) = i c (v·γ) with W = c + i v·γ.
  const double c = std::sqrt(lambda);
  const Matrix4C x = odd * dirac_adjoint(even);
  FourVector v;
  for (int mu = 0; mu < 4; ++mu) {
    const double sign = mu == 0 ? 1.0 : -1.0;
    v(mu) = sign * ((x * gamma(mu)).trace() / (4.0 * kI * c)).real();
  }

  ExtendedParams p;
  p.dirac.omega = omega_from_half(c, v);

  // Λ = W⁻¹M = L(u)R(θ); L is Hermitian and R unitary, so ΛΛ† = L² = L(2β).
  const Matrix4C lambda_part = dirac_w(DiracParams{-p.dirac.omega}) * m;
  const Matrix4C l2 = lambda_part * lambda_part.adjoint();
  for (int k = 0; k < 3; ++k) {
    p.boost.u(k) = (l2 * (2.0 * kI) * generator(3 + k)).trace().real() / 4.0;
  }

  const Matrix4C r = boost_sl2(BoostParams{-p.boost.u}) * lambda_part;
  HalfAngle h;
  h.c = r.trace().real() / 4.0;
  for (int k = 0; k < 3; ++k) h.v(k) = (r * (2.0 * generator(k))).trace().imag() / 4.0;
  p.rotation = h.params();
  return p;
}

// Deterministic uniform in [-1, 1), independent of the standard library's
// distribution implementations.
double symmetric_unit(std::mt19937_64& rng) {
  return 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0;
}

}  // namespace

const char* to_string(DiracBranch b) noexcept {
  switch (b) {
    case DiracBranch::Timelike: return "timelike";
    case DiracBranch::Null: return "null";
    case DiracBranch::Spacelike: return "spacelike";
  }
  return "unknown";
}

double DiracParams::invariant() const { return minkowski_dot(omega, omega); }

DiracBranch DiracParams::branch(double tol_null) const {
  const double s = invariant();
  if (std::abs(s) <= tol_null * omega.squaredNorm()) return DiracBranch::Null;
  return s < 0.0 ? DiracBranch::Timelike : DiracBranch::Spacelike;
}

double DiracParams::magnitude() const { return std::sqrt(std::abs(invariant())); }

Vector10 ExtendedParams::coordinates() const {
  Vector10 x;
  x << rotation.theta, boost.u, dirac.omega;
  return x;
}

ExtendedParams ExtendedParams::from_coordinates(const Vector10& x) {
  ExtendedParams p;
  p.rotation.theta = x.segment<3>(0);
  p.boost.u = x.segment<3>(3);
  p.dirac.omega = x.segment<4>(6);
  return p;
}

Matrix4C dirac_w(const DiracParams& omega) {
  if (!omega.omega.allFinite()) throw DomainError("dirac_w: non-finite parameters");
  const double z = -omega.invariant();
  return fn::cos_half(z) * Matrix4C::Identity() +
         (kI * fn::sin_half_over(z)) * slash(omega.omega);
}

Matrix4C extended_matrix(const ExtendedParams& p) {
  if (!p.coordinates().allFinite()) {
    throw DomainError("extended_matrix: non-finite parameters");
  }
  return dirac_w(p.dirac) * boost_sl2(p.boost) * rot_su2(p.rotation);
}

double chart_discriminant(const Matrix4C& m) {
  const Matrix4C even = 0.5 * (m + gamma5() * m * gamma5());
  return (even * dirac_adjoint(even)).trace().real() / 4.0;
}

double group_defect(const Matrix4C& m) {
  const double scale = std::max(1.0, m.squaredNorm());
  return (m * dirac_adjoint(m) - Matrix4C::Identity()).norm() / scale;
}

FactorizationReport factorize_wlr(const Matrix4C& m, const Tolerances& tol) {
  if (!all_finite(m)) throw DomainError("factorize_wlr: non-finite matrix");
  const double defect = group_defect(m);
  const double det_defect = std::abs(m.determinant() - 1.0) / std::max(1.0, m.squaredNorm());
  if (defect > tol.group || det_defect > tol.group) {
    throw SolverError(SolverError::Kind::NotInGroup,
                      "factorize_wlr: matrix is not an element of the group",
                      std::max(defect, det_defect));
  }
  const double lambda = chart_discriminant(m);
  if (lambda < tol.chart) {
    throw SolverError(SolverError::Kind::OutsideChart,
                      "factorize_wlr: group element has no W·L·R coordinates",
                      lambda);
  }

  // Absolute accuracy is limited by rounding in entries of size ‖m‖.
  const double target = tol.fact * std::max(1.0, m.norm());
  const ExtendedParams seed = algebraic_seed(m, lambda);
  FactorizationReport report;
  report.params = seed;
  report.seed_quality = (extended_matrix(seed) - m).norm();
  report.residual = report.seed_quality;
  if (report.residual < target) return report;

  std::mt19937_64 rng(0x5eedULL);
  Vector10 best = seed.coordinates();
  double best_norm = report.residual;
  Vector10 start = best;

  for (int attempt = 0; attempt <= tol.max_restarts; ++attempt) {
    Vector10 x = start;
    Residual r = residual_of(x, m);
    double norm = r.norm();
    for (int iter = 0; iter < tol.max_iter && norm >= target; ++iter) {
      const Jacobian jac = jacobian_of(x, m);
      const Vector10 step = jac.colPivHouseholderQr().solve(-r);
      double scale = 1.0;
      bool improved = false;
      for (int halving = 0; halving < 12; ++halving, scale *= 0.5) {
        const Vector10 trial = x + scale * step;
        const Residual trial_r = residual_of(trial, m);
        if (trial_r.norm() < norm) {
          x = trial;
          r = trial_r;
          norm = trial_r.norm();
          improved = true;
          break;
        }
      }
      ++report.iterations;
      if (norm < best_norm) {
        best_norm = norm;
        best = x;
      }
      if (!improved) break;
    }
    if (best_norm < target) break;
    start = best;
    for (int i = 0; i < 10; ++i) start(i) += 1e-3 * (attempt + 1) * symmetric_unit(rng);
  }

  if (best_norm >= target) {
    // Rounding the coordinates alone moves M by about ε·|x|·‖M‖. Near the
    // chart boundary |x| can reach 1e6 and the requested residual is then
    // out of reach in double precision.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                         std::max(1.0, best.cwiseAbs().maxCoeff()) * std::max(1.0, m.norm());
    if (floor >= target) {
      throw SolverError(SolverError::Kind::IllConditioned,
                        "factorize_wlr: coordinates too large for the requested residual",
                        best_norm);
    }
    throw SolverError(SolverError::Kind::NotConverged,
                      "factorize_wlr: Gauss-Newton did not reach tolerance", best_norm);
  }
  report.params = ExtendedParams::from_coordinates(best);
  report.params.rotation = RotationParams::canonical(report.params.rotation.theta);
  report.residual = (extended_matrix(report.params) - m).norm();
  return report;
}

DiracComposition compose_dirac(const DiracParams& omega2, const DiracParams& omega1,
                               const Tolerances& tol) {
  const FactorizationReport f = factorize_wlr(dirac_w(omega2) * dirac_w(omega1), tol);
  return DiracComposition{f.params.dirac, f.params.boost, f.params.rotation};
}

double DiracCompositionResiduals::max() const {
  double out = 0.0;
  for (double r : relations) out = std::max(out, r);
  for (double r : constraints) out = std::max(out, r);
  return out;
}

DiracCompositionResiduals dirac_composition_residuals(const DiracParams& omega2,
                                                      const DiracParams& omega1,
                                                      const DiracComposition& result) {
  // cos(ω/2) and q_μ sin(ω/2) in branch-independent form.
  auto half = [](const DiracParams& d, double& c, FourVector& v) {
    const double z = -d.invariant();
    c = fn::cos_half(z);
    v = fn::sin_half_over(z) * d.omega;
  };
  double c2, c1, cd;
  FourVector v2, v1, vd;
  half(omega2, c2, v2);
  half(omega1, c1, v1);
  half(result.dirac, cd, vd);

  const double u0 = result.boost.u0();
  const double ap = std::sqrt(0.5 * (u0 + 1.0));            // √((u⁰+1)/2)
  const Vector3 ua = result.boost.u / std::sqrt(2.0 * (u0 + 1.0));  // û√((u⁰−1)/2)
  const HalfAngle h = HalfAngle::of(result.rotation);       // cos(θ/2), θ̂ sin(θ/2)
  const Vector3 s2 = v2.tail<3>();
  const Vector3 s1 = v1.tail<3>();
  const Vector3 sd = vd.tail<3>();

  DiracCompositionResiduals out;
  out.relations[0] = std::abs(cd * ap * h.c - (c2 * c1 + minkowski_dot(v2, v1)));
  out.relations[1] = (cd * ap * h.v - s2.cross(s1)).cwiseAbs().maxCoeff();
  out.relations[2] =
      (cd * (h.c * ua + h.v.cross(ua)) - (s2 * v1(0) - s1 * v2(0))).cwiseAbs().maxCoeff();
  out.relations[3] = std::abs(ap * h.c * vd(0) + h.c * sd.dot(ua) - h.v.cross(sd).dot(ua) -
                              (v2(0) * c1 + v1(0) * c2));
  out.relations[4] = (ap * h.c * sd + h.c * vd(0) * ua + ap * h.v.cross(sd) +
                      vd(0) * h.v.cross(ua) - (s2 * c1 + s1 * c2))
                         .cwiseAbs()
                         .maxCoeff();
  out.constraints[0] = std::abs(ua.dot(h.v));
  out.constraints[1] = std::abs(sd.dot(h.v));
  out.constraints[2] =
      (h.c * sd.cross(ua) + sd.dot(ua) * h.v + ap * vd(0) * h.v).cwiseAbs().maxCoeff();
  return out;
}

ExtendedParams compose_extended(const ExtendedParams& p2, const ExtendedParams& p1,
                                const Tolerances& tol) {
  // M2·M1 = W2·W(𝓛2𝓡2 ω1) · L2R2·L1R1, then W2·W(·) = W_D L_D R_D.
  const DiracParams moved{four_lorentz(p2.lorentz()) * p1.dirac.omega};
  const DiracComposition d = compose_dirac(p2.dirac, moved, tol);

  const BoostComposition inner =
      compose_boosts(p2.boost, BoostParams{rotation3(p2.rotation) * p1.boost.u});
  // R(θ_D) carried past L(u_L) leaves a second Wigner rotation.
  const BoostComposition outer =
      compose_boosts(d.boost, BoostParams{rotation3(d.rotation) * inner.boost.u});

  ExtendedParams out;
  out.dirac = d.dirac;
  out.boost = outer.boost;
  out.rotation = (HalfAngle::of(outer.wigner) * HalfAngle::of(d.rotation) *
                  HalfAngle::of(inner.wigner) * HalfAngle::of(p2.rotation) *
                  HalfAngle::of(p1.rotation))
                     .params();
  return out;
}

ExtendedParams inverse_extended(const ExtendedParams& p) {
  const RotationParams minus{-p.rotation.theta};
  ExtendedParams out;
  out.dirac.omega =
      -(four_rotation(minus) * four_boost(BoostParams{-p.boost.u}) * p.dirac.omega);
  out.boost.u = -(rotation3(minus) * p.boost.u);
  out.rotation = minus;
  return out;
}

double chart_distance(const ExtendedParams& a, const ExtendedParams& b) {
  const HalfAngle ha = HalfAngle::of(a.rotation);
  const HalfAngle hb = HalfAngle::of(b.rotation);
  const Vector4 qa(ha.c, ha.v(0), ha.v(1), ha.v(2));
  const Vector4 qb(hb.c, hb.v(0), hb.v(1), hb.v(2));
  const double rot = std::min((qa - qb).cwiseAbs().maxCoeff(), (qa + qb).cwiseAbs().maxCoeff());
  return std::max({(a.dirac.omega - b.dirac.omega).cwiseAbs().maxCoeff(),
                   (a.boost.u - b.boost.u).cwiseAbs().maxCoeff(), rot});
}

}  // namespace elg
