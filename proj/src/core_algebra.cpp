#include "elg/core_algebra.hpp"

#include <cmath>

namespace elg {

namespace {

constexpr Complex kI{0.0, 1.0};

Matrix4C blocks(const Matrix2C& a, const Matrix2C& b, const Matrix2C& c,
                const Matrix2C& d) {
  Matrix4C m;
  m << a, b, c, d;
  return m;
}

std::array<Matrix4C, 4> make_gammas() {
  const Matrix2C one = Matrix2C::Identity();
  const Matrix2C zero = Matrix2C::Zero();
  std::array<Matrix4C, 4> g;
  g[0] = blocks(one, zero, zero, -one);
  for (int k = 1; k <= 3; ++k) {
    g[k] = blocks(zero, pauli(k), -pauli(k), zero);
  }
  return g;
}

std::array<Matrix4C, kGeneratorCount> make_generators() {
  const Matrix2C zero = Matrix2C::Zero();
  std::array<Matrix4C, kGeneratorCount> x;
  for (int k = 1; k <= 3; ++k) {
    const Matrix2C s = pauli(k);
    x[k - 1] = 0.5 * blocks(s, zero, zero, s);
    x[k + 2] = (-0.5 * kI) * blocks(zero, s, s, zero);
  }
  for (int mu = 0; mu < 4; ++mu) x[6 + mu] = 0.5 * gamma(mu);
  return x;
}

std::array<Matrix4C, 16> make_clifford() {
  std::array<Matrix4C, 16> b;
  b[0] = Matrix4C::Identity();
  for (int mu = 0; mu < 4; ++mu) b[1 + mu] = gamma(mu);
  int i = 5;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu + 1; nu < 4; ++nu) b[i++] = gamma(mu) * gamma(nu);
  }
  for (int mu = 0; mu < 4; ++mu) b[11 + mu] = gamma5() * gamma(mu);
  b[15] = gamma5();
  return b;
}

// Each Clifford basis element squares to ±1, so its inverse is ±itself.
std::array<Matrix4C, 16> make_clifford_inverses() {
  std::array<Matrix4C, 16> inv;
  for (int i = 0; i < 16; ++i) {
    const Matrix4C& b = clifford_basis(i);
    const Complex sq = (b * b)(0, 0);
    inv[i] = b / sq;
  }
  return inv;
}

}  // namespace

const char* to_string(SolverError::Kind kind) noexcept {
  switch (kind) {
    case SolverError::Kind::NotInGroup: return "not_in_group";
    case SolverError::Kind::OutsideChart: return "outside_chart";
    case SolverError::Kind::NotConverged: return "not_converged";
    case SolverError::Kind::IllConditioned: return "ill_conditioned";
    case SolverError::Kind::Inconsistent: return "inconsistent";
  }
  return "unknown";
}

std::string_view name_of(Generator g) {
  static constexpr std::array<std::string_view, kGeneratorCount> names = {
      "J1", "J2", "J3", "K1", "K2", "K3", "G0", "G1", "G2", "G3"};
  return names[index_of(g)];
}

Matrix2C pauli(int k) {
  Matrix2C s;
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -kI, kI, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw DomainError("pauli: axis index must be 1, 2 or 3");
  }
  return s;
}

const Matrix4C& gamma(int mu) {
  static const std::array<Matrix4C, 4> g = make_gammas();
  if (mu < 0 || mu > 3) throw DomainError("gamma: index must be in 0..3");
  return g[mu];
}

const Matrix4C& gamma5() {
  static const Matrix4C g5 = kI * gamma(0) * gamma(1) * gamma(2) * gamma(3);
  return g5;
}

const Matrix4C& generator(Generator r) { return generator(index_of(r)); }

const Matrix4C& generator(int r) {
  static const std::array<Matrix4C, kGeneratorCount> x = make_generators();
  if (r < 0 || r >= kGeneratorCount) {
    throw DomainError("generator: index must be in 0..9");
  }
  return x[r];
}

Matrix4C commutator(const Matrix4C& a, const Matrix4C& b) {
  return a * b - b * a;
}

Matrix4C dirac_adjoint(const Matrix4C& a) {
  return gamma(0) * a.adjoint() * gamma(0);
}

double frobenius(const Matrix4C& m) { return m.norm(); }

bool all_finite(const Matrix4C& m) { return m.array().isFinite().all(); }

Matrix4C mat_exp(const Matrix4C& a) {
  if (!all_finite(a)) throw DomainError("mat_exp: non-finite input");

  static constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
      1187353796428800.0,  129060195264000.0,   10559470521600.0,
      670442572800.0,      33522128640.0,       1323241920.0,
      40840800.0,          960960.0,            16380.0,
      182.0,               1.0};
  constexpr double theta13 = 5.371920351148152;

  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > theta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
  }
  const Matrix4C x = a / std::ldexp(1.0, squarings);
  const Matrix4C id = Matrix4C::Identity();
  const Matrix4C x2 = x * x;
  const Matrix4C x4 = x2 * x2;
  const Matrix4C x6 = x4 * x2;

  const Matrix4C u =
      x * (x6 * (b[13] * x6 + b[11] * x4 + b[9] * x2) + b[7] * x6 +
           b[5] * x4 + b[3] * x2 + b[1] * id);
  const Matrix4C v = x6 * (b[12] * x6 + b[10] * x4 + b[8] * x2) +
                     b[6] * x6 + b[4] * x4 + b[2] * x2 + b[0] * id;

  Matrix4C r = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) r = r * r;
  return r;
}

Vector10 expand_in_generators(const Matrix4C& m, double* residual) {
  Vector10 c;
  for (int r = 0; r < kGeneratorCount; ++r) {
    c(r) = (generator(r).adjoint() * m).trace().real();
  }
  if (residual != nullptr) *residual = (m - combine_generators(c)).norm();
  return c;
}

Matrix4C combine_generators(const Vector10& coefficients) {
  Matrix4C m = Matrix4C::Zero();
  for (int r = 0; r < kGeneratorCount; ++r) m += coefficients(r) * generator(r);
  return m;
}

const Matrix4C& clifford_basis(int i) {
  static const std::array<Matrix4C, 16> basis = make_clifford();
  if (i < 0 || i >= 16) throw DomainError("clifford_basis: index must be in 0..15");
  return basis[i];
}

CliffordCoefficients clifford_project(const Matrix4C& m) {
  static const std::array<Matrix4C, 16> inverses = make_clifford_inverses();
  CliffordCoefficients out;
  for (int i = 0; i < 16; ++i) out.c[i] = (inverses[i] * m).trace() / 4.0;
  return out;
}

Matrix4C clifford_reconstruct(const CliffordCoefficients& coefficients) {
  Matrix4C m = Matrix4C::Zero();
  for (int i = 0; i < 16; ++i) m += coefficients.c[i] * clifford_basis(i);
  return m;
}

}  // namespace elg
