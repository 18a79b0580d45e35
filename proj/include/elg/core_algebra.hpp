#pragma once

#include <array>
#include <string_view>

#include "elg/types.hpp"

namespace elg {

/// The ten generators in their frozen order. The order fixes the row/column
/// meaning of every 10x10 matrix in the library and the coordinate order
/// (θ1..θ3, u1..u3, ω0..ω3) of ExtendedParams::coordinates().
enum class Generator : int { J1, J2, J3, K1, K2, K3, G0, G1, G2, G3 };

inline constexpr int kGeneratorCount = 10;

inline constexpr std::array<Generator, kGeneratorCount> kAllGenerators = {
    Generator::J1, Generator::J2, Generator::J3, Generator::K1, Generator::K2,
    Generator::K3, Generator::G0, Generator::G1, Generator::G2, Generator::G3};

constexpr int index_of(Generator g) { return static_cast<int>(g); }
std::string_view name_of(Generator g);

/// Standard Pauli matrix σ_k, k ∈ {1,2,3}, with σ3 diagonal.
Matrix2C pauli(int k);

/// Dirac-representation γ^μ, μ ∈ {0..3}: γ⁰ = diag(1,−1), γ^k = offdiag(σ_k, −σ_k).
const Matrix4C& gamma(int mu);

/// γ⁵ = iγ⁰γ¹γ²γ³ = offdiag(1, 1).
const Matrix4C& gamma5();

/// J_k = ½diag(σ,σ), K_k = −(i/2)offdiag(σ,σ), Γ^μ = ½γ^μ.
const Matrix4C& generator(Generator r);
const Matrix4C& generator(int r);

Matrix4C commutator(const Matrix4C& a, const Matrix4C& b);

/// Dirac adjoint bar(A) = γ⁰A†γ⁰. Every group element satisfies M·bar(M) = 1.
Matrix4C dirac_adjoint(const Matrix4C& a);

/// exp(a) by scaling and squaring with a degree-13 Padé approximant.
/// Throws DomainError on non-finite input.
Matrix4C mat_exp(const Matrix4C& a);

/// Coefficients of m in the generator basis, assuming m lies in the real
/// span. The basis is orthonormal under tr(A†B); `residual` (if given)
/// receives the Frobenius norm of what the real expansion fails to capture.
Vector10 expand_in_generators(const Matrix4C& m, double* residual = nullptr);

/// Σ_r c_r X_r.
Matrix4C combine_generators(const Vector10& coefficients);

/// Coefficients over the 16-element Clifford basis
/// {1, γ⁰..γ³, γ^μγ^ν (01,02,03,12,13,23), γ⁵γ⁰..γ⁵γ³, γ⁵}.
struct CliffordCoefficients {
  std::array<Complex, 16> c{};

  Complex scalar() const { return c[0]; }
  Complex vector(int mu) const { return c[1 + mu]; }
  Complex pseudoscalar() const { return c[15]; }
};

const Matrix4C& clifford_basis(int i);
CliffordCoefficients clifford_project(const Matrix4C& m);
Matrix4C clifford_reconstruct(const CliffordCoefficients& coefficients);

double frobenius(const Matrix4C& m);
bool all_finite(const Matrix4C& m);

}  // namespace elg
