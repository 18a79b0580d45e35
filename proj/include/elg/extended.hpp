#pragma once

#include <array>

#include "elg/lorentz.hpp"
#include "elg/tolerances.hpp"
#include "elg/types.hpp"

namespace elg {

/// Branch of a Dirac boost, classified by s = ω·ω with η = diag(−1,+1,+1,+1).
enum class DiracBranch {
  Timelike,   // s < 0: cos(ω/2)·1 + i q·γ sin(ω/2), ω = √(−s)
  Null,       // s ≈ 0: 1 + i ω·γ/2
  Spacelike,  // s > 0: cosh(ω/2)·1 + i q·γ sinh(ω/2), ω = √s
};

const char* to_string(DiracBranch b) noexcept;

/// Dirac-boost parameters ω_μ (covariant), conjugate to Γ^μ.
struct DiracParams {
  FourVector omega = FourVector::Zero();

  /// ω·ω under η.
  double invariant() const;
  /// |ω·ω| < tol_null·|ω|²_E is null.
  DiracBranch branch(double tol_null = Tolerances{}.null) const;
  /// √|ω·ω|.
  double magnitude() const;
};

/// Canonical coordinates of M = W(ω)·L(u)·R(θ).
struct ExtendedParams {
  DiracParams dirac;
  BoostParams boost;
  RotationParams rotation;

  static ExtendedParams identity() { return {}; }

  /// Coordinates in generator order: θ1..θ3, u1..u3, ω0..ω3.
  Vector10 coordinates() const;
  static ExtendedParams from_coordinates(const Vector10& x);

  LorentzParams lorentz() const { return LorentzParams{boost, rotation}; }
};

/// W(ω) = exp(i ω_μ Γ^μ) = exp(i ω·γ/2) in closed form. The three branches
/// share one formula in z = −ω·ω; the null branch is its z = 0 value.
Matrix4C dirac_w(const DiracParams& omega);

/// W(ω)·L(u)·R(θ).
Matrix4C extended_matrix(const ExtendedParams& p);

/// λ with M_e·bar(M_e) = λ·1, where M_e is the γ⁵-even part of M. For
/// M = W(ω)Λ, λ = cos²(ω/2) (continued), so λ ≤ 0 marks group elements that
/// have no W·L·R coordinates.
double chart_discriminant(const Matrix4C& m);

/// Relative defect ‖M·bar(M) − 1‖_F / max(1, ‖M‖²_F) of group membership.
double group_defect(const Matrix4C& m);

struct FactorizationReport {
  ExtendedParams params;
  double residual = 0.0;      // ‖extended_matrix(params) − m‖_F
  int iterations = 0;         // Gauss-Newton steps taken
  double seed_quality = 0.0;  // residual of the algebraic seed
};

/// Finds W·L·R coordinates of a group element. The seed is extracted from
/// trace projections (γ⁵-odd/even split for W, ΛΛ† for L, tr R for R) and
/// polished by Gauss-Newton on the ten coordinates.
///
/// Throws SolverError: NotInGroup when m is off the group manifold,
/// OutsideChart when m is in the group but has no real coordinates,
/// IllConditioned when that residual is below the rounding floor implied by
/// the size of the coordinates (close to the chart boundary), NotConverged
/// when the residual never falls below tol.fact·max(1, ‖m‖_F).
FactorizationReport factorize_wlr(const Matrix4C& m, const Tolerances& tol = {});

/// W(ω2)·W(ω1) = W(ω_D)·L(u_D)·R(θ_D).
struct DiracComposition {
  DiracParams dirac;
  BoostParams boost;
  RotationParams rotation;
};

DiracComposition compose_dirac(const DiracParams& omega2, const DiracParams& omega1,
                               const Tolerances& tol = {});

/// The five scalar/vector composition relations and the three constraints
/// satisfied by (ω_D, u_D, θ_D), evaluated as max-abs residuals. Written in
/// z = −ω·ω so they apply on every branch.
struct DiracCompositionResiduals {
  std::array<double, 5> relations{};
  std::array<double, 3> constraints{};

  double max() const;
};

DiracCompositionResiduals dirac_composition_residuals(const DiracParams& omega2,
                                                      const DiracParams& omega1,
                                                      const DiracComposition& result);

/// Closed-form composition M(p2)·M(p1) built from compose_dirac,
/// compose_boosts and compose_rotations.
ExtendedParams compose_extended(const ExtendedParams& p2, const ExtendedParams& p1,
                                const Tolerances& tol = {});

/// {ω,u,θ}⁻¹ = {−𝓡(−θ)𝓛(−u)ω, −R(−θ)u, −θ}.
ExtendedParams inverse_extended(const ExtendedParams& p);

/// Max-abs distance between two coordinate sets. Rotations are compared as
/// half-angle pairs up to overall sign (the covering-group sign), which also
/// makes the comparison indifferent to the axis at θ = 0 and θ = 2π.
double chart_distance(const ExtendedParams& a, const ExtendedParams& b);

}  // namespace elg
