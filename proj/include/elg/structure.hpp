#pragma once

#include <array>

#include "elg/extended.hpp"
#include "elg/tolerances.hpp"
#include "elg/types.hpp"

namespace elg {

/// S(M)⁻¹ X_r S(M) = O_r^s X_s. Rows and columns follow the generator order.
using OPlusMatrix = Matrix10;

/// Θ_r^s = ∂Φ^s(M′; M)/∂M′^r at M′ = 1. Rows are generators, columns are
/// coordinates, both in the frozen order.
using ThetaMatrix = Matrix10;

/// Pure-factor blocks. The composition order is O(M2·M1) = O(M2)·O(M1).
OPlusMatrix oplus_rotation(const RotationParams& theta);
OPlusMatrix oplus_boost(const BoostParams& u);
OPlusMatrix oplus_dirac(const DiracParams& omega);

/// O(ω,u,θ) = O(ω,0,0)·O(0,u,0)·O(0,0,θ).
OPlusMatrix oplus_closed(const ExtendedParams& p);

/// Conjugates each generator by m and projects back onto the generators.
/// Throws SolverError(Inconsistent) if a conjugated generator leaves their
/// span by more than 1e-12·(‖m‖_F‖m⁻¹‖_F)².
OPlusMatrix oplus_of_matrix(const Matrix4C& m);
OPlusMatrix oplus_numeric(const ExtendedParams& p);

/// Θ of the rotation subgroup: (θ/2)cot(θ/2)δ + ½ε·θ + (1 − (θ/2)cot(θ/2))θ̂θ̂.
Matrix3 theta_rotation(const RotationParams& theta);

ThetaMatrix theta_closed(const ExtendedParams& p);

/// Central differences of compose_extended(·, p) along each coordinate at the
/// identity. With `richardson`, steps h and h/2 are combined to cancel the
/// O(h²) term.
ThetaMatrix theta_numeric(const ExtendedParams& p, double h = Tolerances{}.h_fd,
                          bool richardson = false, const Tolerances& tol = {});

/// Max over r of ‖Θ_r^s ∂S/∂p^s − i X_r S‖_F / max(1, ‖S‖_F), derivatives by
/// central differences of extended_matrix.
double theta_generator_defect(const ExtendedParams& p, double h = Tolerances{}.h_fd);

/// c_rs^m with [X_r, X_s] = −i c_rs^m X_m.
struct StructureConstants {
  std::array<double, 1000> c{};

  double& operator()(int r, int s, int m) { return c[100 * r + 10 * s + m]; }
  double operator()(int r, int s, int m) const { return c[100 * r + 10 * s + m]; }

  double max_abs_difference(const StructureConstants& other) const;
  /// max |c_rs^m + c_sr^m|.
  double antisymmetry_defect() const;
  /// max |Σ_m (c_rs^m c_mt^n + c_st^m c_mr^n + c_tr^m c_ms^n)|.
  double jacobi_defect() const;
};

/// From commutators of the 4x4 generators.
StructureConstants structure_constants_commutator();

/// From c_sn^m = ∂_n Θ_s^m − ∂_s Θ_n^m at the identity, with derivatives of
/// theta_closed by Richardson-extrapolated central differences.
StructureConstants structure_constants_theta(double h = 1e-3);

/// The commutator table, after checking that the Θ route agrees within
/// tol.fd. Throws SolverError(Inconsistent) otherwise.
StructureConstants structure_constants(const Tolerances& tol = {});

/// 2-norm condition number.
double condition_number(const Matrix10& m);

}  // namespace elg
