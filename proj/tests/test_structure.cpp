#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "elg/structure.hpp"
#include "elg/sampling.hpp"
#include "oracles.hpp"

using namespace elg;

namespace {

Matrix4C oracle_matrix(const ExtendedParams& p) {
  return oracle::exp_wlr(p.dirac.omega, p.boost.u, p.rotation.theta);
}

Matrix10 oracle_oplus(const Matrix4C& m) {
  const Matrix4C inv = m.inverse();
  Matrix10 o;
  for (int r = 0; r < 10; ++r) o.row(r) = oracle::project(inv * oracle::generator(r) * m).transpose();
  return o;
}

double relative(const Matrix10& a, const Matrix10& b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max(1.0, b.cwiseAbs().maxCoeff());
}

// Θ_r^s by Richardson-combined central differences of the composition map.
Matrix10 oracle_theta(const ExtendedParams& p, double h) {
  auto column = [&](int r, double step) {
    Vector10 e = Vector10::Zero();
    e(r) = step;
    const Vector10 plus = compose_extended(ExtendedParams::from_coordinates(e), p).coordinates();
    const Vector10 minus = compose_extended(ExtendedParams::from_coordinates(-e), p).coordinates();
    return Vector10((plus - minus) / (2.0 * step));
  };
  Matrix10 th;
  for (int r = 0; r < 10; ++r) {
    th.row(r) = ((4.0 * column(r, h / 2.0) - column(r, h)) / 3.0).transpose();
  }
  return th;
}

// Keeps rotation angles away from 2π, where the coordinate chart wraps.
ExtendedParams interior_sample(ParamSampler& s) {
  ExtendedParams p = s.extended();
  while (p.rotation.angle() > 5.5) p = s.extended();
  return p;
}

}  // namespace

TEST_CASE("O+ of the identity is exactly the identity") {
  CHECK(oplus_closed(ExtendedParams::identity()) == Matrix10::Identity());
}

TEST_CASE("closed-form O+ against conjugation") {
  ParamSampler s(301);
  for (int i = 0; i < 200; ++i) {
    const ExtendedParams p = s.extended();
    const Matrix10 expected = oracle_oplus(oracle_matrix(p));
    CHECK(relative(oplus_closed(p), expected) < 1e-10);
    CHECK(relative(oplus_numeric(p), expected) < 1e-10);
  }
}

TEST_CASE("O+ factor blocks") {
  const RotationParams r{Vector3(0.0, 0.0, std::numbers::pi / 2.0)};
  const Matrix10 o = oplus_rotation(r);
  const Matrix3 rz = rotation3(r);
  CHECK((o.block<3, 3>(0, 0) - rz).norm() < 1e-15);
  CHECK((o.block<3, 3>(3, 3) - rz).norm() < 1e-15);
  CHECK((o.block<4, 4>(6, 6) - four_rotation(r)).norm() < 1e-15);
  CHECK(o.block<3, 3>(0, 3).norm() == 0.0);

  const BoostParams b{Vector3(0.6, -0.2, 0.9)};
  const Matrix10 ob = oplus_boost(b);
  // Γ^μ carries an upper index, so its block is the contravariant 𝓛(−u).
  CHECK((ob.block<4, 4>(6, 6) - four_boost(BoostParams{-b.u})).norm() < 1e-14);
}

TEST_CASE("O+ is a representation") {
  ParamSampler s(302);
  for (int i = 0; i < 200; ++i) {
    const ExtendedParams a = s.extended();
    const ExtendedParams b = s.extended();
    const Matrix4C m = oracle_matrix(a) * oracle_matrix(b);
    const double kappa = m.norm() * m.inverse().norm();
    const Matrix10 gap = oplus_closed(a) * oplus_closed(b) - oracle_oplus(m);
    CHECK(gap.cwiseAbs().maxCoeff() / (kappa * kappa) < 1e-13);
  }
}

TEST_CASE("oplus_of_matrix rejects non-group input") {
  Matrix4C m = Matrix4C::Identity();
  m(0, 2) = 0.5;
  CHECK_THROWS_AS(oplus_of_matrix(m), SolverError);
}

TEST_CASE("Θ of the rotation subgroup") {
  CHECK((theta_rotation(RotationParams{}) - Matrix3::Identity()).norm() == 0.0);
  const RotationParams r{Vector3(0.0, 0.0, 1.2)};
  const Matrix3 t = theta_rotation(r);
  CHECK(t(2, 2) == doctest::Approx(1.0));
  CHECK(t(0, 0) == doctest::Approx(0.6 / std::tan(0.6)));
  CHECK(t(0, 1) == doctest::Approx(0.6));
}

TEST_CASE("closed-form Θ against finite differences") {
  CHECK((theta_closed(ExtendedParams::identity()) - Matrix10::Identity()).norm() == 0.0);
  ParamSampler s(303);
  for (int i = 0; i < 100; ++i) {
    const ExtendedParams p = interior_sample(s);
    const Matrix10 closed = theta_closed(p);
    const Matrix10 fd = oracle_theta(p, 1e-5);
    const double err = (closed - fd).cwiseAbs().cwiseQuotient(closed.cwiseAbs().cwiseMax(1.0)).maxCoeff();
    CHECK(err < 1e-6);
    CHECK(relative(theta_numeric(p, 1e-5, true), fd) < 1e-9);
  }
}

TEST_CASE("Θ maps coordinate derivatives to generator action") {
  ParamSampler s(304);
  const double h = 1e-5;
  for (int i = 0; i < 50; ++i) {
    const ExtendedParams p = interior_sample(s);
    const Matrix10 th = theta_closed(p);
    const Matrix4C m = oracle_matrix(p);
    std::array<Matrix4C, 10> dm;
    for (int k = 0; k < 10; ++k) {
      Vector10 e = Vector10::Zero();
      e(k) = h;
      const Vector10 x = p.coordinates();
      dm[k] = (oracle_matrix(ExtendedParams::from_coordinates(x + e)) -
               oracle_matrix(ExtendedParams::from_coordinates(x - e))) /
              (2.0 * h);
    }
    for (int r = 0; r < 10; ++r) {
      Matrix4C lhs = Matrix4C::Zero();
      for (int k = 0; k < 10; ++k) lhs += th(r, k) * dm[k];
      const Matrix4C rhs = oracle::kI * oracle::generator(r) * m;
      CHECK((lhs - rhs).norm() / std::max(1.0, m.norm()) < 1e-6);
    }
    CHECK(theta_generator_defect(p) < 1e-6);
  }
}

TEST_CASE("structure constants on both routes") {
  const auto expected = oracle::structure_constants();
  const StructureConstants c = structure_constants_commutator();
  const StructureConstants t = structure_constants_theta();
  double gap = 0.0;
  for (int i = 0; i < 1000; ++i) gap = std::max(gap, std::abs(c.c[i] - expected[i]));
  CHECK(gap < 1e-15);
  CHECK(c.max_abs_difference(t) < 1e-6);
  CHECK(c.antisymmetry_defect() == 0.0);
  CHECK(c.jacobi_defect() < 1e-12);
  CHECK(t.jacobi_defect() < 1e-6);
  // [J1, J2] = iJ3 with [X_r, X_s] = −i c X.
  CHECK(c(0, 1, 2) == doctest::Approx(-1.0));
  CHECK(t(0, 1, 2) == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK_NOTHROW(structure_constants());
}

TEST_CASE("condition number") {
  CHECK(condition_number(Matrix10::Identity()) == doctest::Approx(1.0));
  Matrix10 d = Matrix10::Identity();
  d(3, 3) = 1e-4;
  CHECK(condition_number(d) == doctest::Approx(1e4));
}
