#include "elg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "elg/core_algebra.hpp"
#include "elg/extended.hpp"
#include "elg/gauge.hpp"
#include "elg/lorentz.hpp"
#include "elg/sampling.hpp"
#include "elg/structure.hpp"

namespace elg {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
  int samples = 0;
  double max_error = 0.0;
  Json details = Json::object();

  void record(double e) {
    ++samples;
    if (!(e <= max_error)) max_error = std::isnan(e) ? kInf : std::max(max_error, e);
  }
};

struct Context {
  ParamSampler& sampler;
  int samples;
  const Tolerances& tol;
};

struct Check {
  const char* name;
  const char* description;
  double tolerance;
  std::function<Outcome(Context&)> run;
};

double max_abs(const Matrix4C& m) { return m.cwiseAbs().maxCoeff(); }

Matrix4C rotation_generator(const Vector3& theta) {
  Matrix4C m = Matrix4C::Zero();
  for (int k = 0; k < 3; ++k) m += theta(k) * generator(k);
  return m;
}

Matrix4C boost_generator(const Vector3& beta) {
  Matrix4C m = Matrix4C::Zero();
  for (int k = 0; k < 3; ++k) m += beta(k) * generator(3 + k);
  return m;
}

Matrix4C dirac_generator(const FourVector& omega) {
  Matrix4C m = Matrix4C::Zero();
  for (int mu = 0; mu < 4; ++mu) m += omega(mu) * generator(6 + mu);
  return m;
}

ExtendedParams lorentz_only(const LorentzParams& p) {
  ExtendedParams e;
  e.boost = p.boost;
  e.rotation = p.rotation;
  return e;
}

// Angle of the unitary factor in the polar decomposition P = H·U.
double polar_rotation_angle(const Matrix4C& p) {
  const Eigen::SelfAdjointEigenSolver<Matrix4C> es(p * p.adjoint());
  const Matrix4C h = es.eigenvectors() *
                     es.eigenvalues().cwiseSqrt().cast<Complex>().asDiagonal() *
                     es.eigenvectors().adjoint();
  const Matrix4C u = h.inverse() * p;
  Vector3 v;
  for (int k = 0; k < 3; ++k) v(k) = (u * (2.0 * generator(k))).trace().imag() / 4.0;
  return 2.0 * std::atan2(v.norm(), u.trace().real() / 4.0);
}

bool outside_chart(const SolverError& e) {
  return e.kind() == SolverError::Kind::OutsideChart;
}

bool ill_conditioned(const SolverError& e) {
  return e.kind() == SolverError::Kind::IllConditioned;
}

// Failures that reflect where the element lies, not a solver defect.
bool chart_edge(const SolverError& e) { return outside_chart(e) || ill_conditioned(e); }

// 𝓜^s(x) = b^s + Σ_μ A^s_μ sin(k^s_μ x^μ + φ^s_μ), kept in a well-conditioned
// part of the chart.
FieldGrid smooth_field(ParamSampler& s, const GridShape& shape, double base_scale,
                       double amplitude) {
  Vector10 base;
  for (int i = 0; i < 10; ++i) base(i) = s.uniform(-base_scale, base_scale);
  Eigen::Matrix<double, 10, 4> amp, freq, phase;
  for (int i = 0; i < 10; ++i) {
    for (int mu = 0; mu < 4; ++mu) {
      amp(i, mu) = s.uniform(-amplitude, amplitude);
      freq(i, mu) = s.uniform(0.5, 2.0);
      phase(i, mu) = s.uniform(0.0, 2.0 * std::numbers::pi);
    }
  }
  FieldGrid g;
  g.shape = shape;
  g.values.reserve(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const auto site = shape.site(i);
    Vector10 x = base;
    for (int k = 0; k < 10; ++k) {
      for (int mu = 0; mu < 4; ++mu) {
        x(k) += amp(k, mu) * std::sin(freq(k, mu) * site[mu] * shape.spacing[mu] + phase(k, mu));
      }
    }
    g.values.push_back(ExtendedParams::from_coordinates(x));
  }
  return g;
}

std::vector<Vector10> smooth_delta(ParamSampler& s, const GridShape& shape) {
  const FieldGrid f = smooth_field(s, shape, 1.0, 0.5);
  std::vector<Vector10> out;
  out.reserve(f.values.size());
  for (const auto& v : f.values) out.push_back(v.coordinates());
  return out;
}

GridShape gauge_grid() {
  GridShape g;
  g.dims = {8, 8, 8, 8};
  g.spacing = {1e-3, 1e-3, 1e-3, 1e-3};
  return g;
}

const std::vector<Check>& checks() {
  static const std::vector<Check> table = {
      {"generator_algebra",
       "Pauli products, traceless orthonormal generators, sample commutators, "
       "Clifford round trip and unit determinant of one-parameter subgroups",
       1e-12,
       [](Context& ctx) {
         Outcome o;
         for (int j = 1; j <= 3; ++j) {
           for (int k = 1; k <= 3; ++k) {
             Matrix2C expect = (j == k ? 1.0 : 0.0) * Matrix2C::Identity();
             for (int m = 1; m <= 3; ++m) expect += kI * levi_civita(j - 1, k - 1, m - 1) * pauli(m);
             o.record((pauli(j) * pauli(k) - expect).cwiseAbs().maxCoeff());
           }
         }
         for (int r = 0; r < 10; ++r) {
           o.record(std::abs(generator(r).trace()));
           for (int s = 0; s < 10; ++s) {
             o.record(std::abs((generator(r).adjoint() * generator(s)).trace() -
                               (r == s ? 1.0 : 0.0)));
           }
         }
         o.record(max_abs(commutator(generator(Generator::J1), generator(Generator::J2)) -
                          kI * generator(Generator::J3)));
         for (int k = 0; k < 3; ++k) {
           o.record(max_abs(commutator(generator(Generator::G0), generator(7 + k)) -
                            kI * generator(3 + k)));
         }
         for (int i = 0; i < ctx.samples; ++i) {
           Matrix4C m;
           for (int a = 0; a < 4; ++a) {
             for (int b = 0; b < 4; ++b) {
               m(a, b) = Complex(ctx.sampler.uniform(-1, 1), ctx.sampler.uniform(-1, 1));
             }
           }
           o.record(max_abs(clifford_reconstruct(clifford_project(m)) - m));
           const int r = static_cast<int>(ctx.sampler.uniform() * 10.0);
           const double t = ctx.sampler.uniform(-3.0, 3.0);
           o.record(std::abs(mat_exp(kI * t * generator(r)).determinant() - 1.0));
         }
         return o;
       }},
      {"exp_rotation_closed_form", "rot_su2(θ) against the Padé exponential of iθ·J", 1e-12,
       [](Context& ctx) {
         Outcome o;
         for (int i = 0; i < ctx.samples; ++i) {
           const RotationParams r = ctx.sampler.rotation();
           o.record((rot_su2(r) - mat_exp(kI * rotation_generator(r.theta))).norm());
         }
         return o;
       }},
      {"exp_boost_closed_form", "boost_sl2(u) against the Padé exponential of iβ·K", 1e-12,
       [](Context& ctx) {
         Outcome o;
         for (int i = 0; i < ctx.samples; ++i) {
           const BoostParams b = ctx.sampler.boost();
           const double n = b.u.norm();
           const Vector3 beta = n > 0.0 ? Vector3(std::asinh(n) / n * b.u) : Vector3::Zero();
           o.record((boost_sl2(b) - mat_exp(kI * boost_generator(beta))).norm());
         }
         return o;
       }},
      {"exp_dirac_closed_form", "dirac_w(ω) against the Padé exponential of iω_μΓ^μ", 1e-12,
       [](Context& ctx) {
         Outcome o;
         int branch[3] = {0, 0, 0};
         for (int i = 0; i < ctx.samples; ++i) {
           const DiracParams d = ctx.sampler.dirac();
           ++branch[static_cast<int>(d.branch(ctx.tol.null))];
           o.record((dirac_w(d) - mat_exp(kI * dirac_generator(d.omega))).norm());
         }
         o.details = {{"timelike", branch[0]}, {"null", branch[1]}, {"spacelike", branch[2]}};
         return o;
       }},
      {"dirac_branch_continuity",
       "dirac_w on both sides of the null threshold and on it, against the Padé exponential "
       "and the null form 1 + iω·γ/2",
       1e-9,
       [](Context& ctx) {
         Outcome o;
         for (int i = 0; i < ctx.samples; ++i) {
           const Vector3 n = ctx.sampler.unit_vector();
           const double a = ctx.sampler.uniform(0.1, 2.0);
           const FourVector null_omega(a, a * n(0), a * n(1), a * n(2));
           Matrix4C slash = Matrix4C::Zero();
           for (int mu = 0; mu < 4; ++mu) slash += null_omega(mu) * gamma(mu);
           o.record((dirac_w(DiracParams{null_omega}) -
                     (Matrix4C::Identity() + 0.5 * kI * slash))
                        .norm());
           for (double f : {-4.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 4.0}) {
             // Scaling ω⁰ by (1 + δ) moves ω·ω/|ω|² by about −δ.
             FourVector w = null_omega;
             w(0) *= 1.0 + f * ctx.tol.null;
             o.record((dirac_w(DiracParams{w}) - mat_exp(kI * dirac_generator(w))).norm());
           }
         }
         return o;
       }},
      {"rotation_composition", "rot_su2(compose_rotations(θ2,θ1)) = rot_su2(θ2)·rot_su2(θ1)",
       1e-11,
       [](Context& ctx) {
         Outcome o;
         for (int i = 0; i < ctx.samples; ++i) {
           const RotationParams a = ctx.sampler.rotation();
           const RotationParams b = ctx.sampler.rotation();
           o.record(max_abs(rot_su2(compose_rotations(a, b)) - rot_su2(a) * rot_su2(b)));
         }
         return o;
       }},
      {"boost_composition", "boost_sl2(u2)·boost_sl2(u1) = boost_sl2(u_L)·rot_su2(θ_L)", 1e-11,
       [](Context& ctx) {
         Outcome o;
         for (int i = 0; i < ctx.samples; ++i) {
           const BoostParams a = ctx.sampler.boost();
           const BoostParams b = ctx.sampler.boost();
           const BoostComposition c = compose_boosts(a, b);
           o.record(max_abs(boost_sl2(c.boost) * rot_su2(c.wigner) - boost_sl2(a) * boost_sl2(b)));
         }
         return o;
       }},
      {"wigner_angle",
       "Wigner angle of compose_boosts against the polar decomposition of the boost product, "
       "including u2 = x̂, u1 = ŷ",
       1e-10,
       [](Context& ctx) {
         Outcome o;
         const BoostParams x{Vector3::UnitX()};
         const BoostParams y{Vector3::UnitY()};
         const double oracle = polar_rotation_angle(boost_sl2(x) * boost_sl2(y));
         const double closed = compose_boosts(x, y).wigner.angle();
         o.record(std::abs(closed - oracle));
         o.record(std::abs(std::tan(0.5 * closed) - 1.0 / (3.0 + 2.0 * std::sqrt(2.0))));
         o.details = {{"unit_xy_tan_half_angle", std::tan(0.5 * oracle)}};
         int collinear = 0;
         for (int i = 0; i < ctx.samples; ++i) {
           const BoostParams a = ctx.sampler.boost();
           BoostParams b = ctx.sampler.boost();
           if (i % 10 == 0) {
             b.u = ctx.sampler.uniform(-3.0, 3.0) * a.u;
             ++collinear;
           }
           const BoostComposition c = compose_boosts(a, b);
           o.record(std::abs(c.wigner.angle() - polar_rotation_angle(boost_sl2(a) * boost_sl2(b))));
         }
         o.details["collinear_draws"] = collinear;
         return o;
       }},
      {"lorentz_composition", "matrix of compose_lorentz(p2,p1) = matrix(p2)·matrix(p1)", 1e-11,
       [](Context& ctx) {
         Outcome o;
         for (int i = 0; i < ctx.samples; ++i) {
           const LorentzParams a{ctx.sampler.boost(), ctx.sampler.rotation()};
           const LorentzParams b{ctx.sampler.boost(), ctx.sampler.rotation()};
           o.record(max_abs(lorentz_matrix(compose_lorentz(a, b)) -
                            lorentz_matrix(a) * lorentz_matrix(b)));
         }
         return o;
       }},
      {"lorentz_associativity",
       "(p3∘p2)∘p1 against p3∘(p2∘p1): matrices, and parameters up to the covering sign", 1e-10,
       [](Context& ctx) {
         Outcome o;
         double matrix_gap = 0.0;
         for (int i = 0; i < ctx.samples; ++i) {
           const LorentzParams a{ctx.sampler.boost(), ctx.sampler.rotation()};
           const LorentzParams b{ctx.sampler.boost(), ctx.sampler.rotation()};
           const LorentzParams c{ctx.sampler.boost(), ctx.sampler.rotation()};
           const LorentzParams left = compose_lorentz(compose_lorentz(a, b), c);
           const LorentzParams right = compose_lorentz(a, compose_lorentz(b, c));
           const double m = max_abs(lorentz_matrix(left) - lorentz_matrix(right));
           matrix_gap = std::max(matrix_gap, m);
           // Boost components grow to ~1e3 here, so compare them relatively.
           const double scale = std::max(1.0, left.boost.u.norm());
           o.record(std::max(m, chart_distance(lorentz_only(left), lorentz_only(right)) / scale));
         }
         o.details = {{"max_matrix_gap", matrix_gap}};
         return o;
       }},
      {"lorentz_inverse_matrix", "lorentz_matrix(inverse_lorentz(p)) = lorentz_matrix(p)⁻¹",
       1e-10,
       [](Context& ctx) {
         Outcome o;
         for (int i = 0; i < ctx.samples; ++i) {
           const LorentzParams p{ctx.sampler.boost(), ctx.sampler.rotation()};
           o.record(max_abs(lorentz_matrix(inverse_lorentz(p)) - lorentz_matrix(p).inverse()));
         }
         return o;
       }},
      {"lorentz_inverse_roundtrip", "compose_lorentz(p, inverse_lorentz(p)) = identity", 1e-9,
       [](Context& ctx) {
         Outcome o;
         for (int i = 0; i < ctx.samples; ++i) {
           const LorentzParams p{ctx.sampler.boost(), ctx.sampler.rotation()};
           o.record(chart_distance(lorentz_only(compose_lorentz(p, inverse_lorentz(p))),
                                   ExtendedParams::identity()));
         }
         return o;
       }},
      {"four_vector_matrices",
       "𝓛ᵀη𝓛 = η (relative), 𝓛(u)⁻¹ = 𝓛(−u), 𝓡(2πn̂) = 1, Γ-sector of O+ equals 𝓡 and η𝓛η",
       1e-12,
       [](Context& ctx) {
         Outcome o;
         const Matrix4& eta = minkowski();
         for (int i = 0; i < ctx.samples; ++i) {
           const LorentzParams p{ctx.sampler.boost(), ctx.sampler.rotation()};
           const Matrix4 l = four_lorentz(p);
           const double scale = std::max(1.0, l.squaredNorm());
           o.record((l.transpose() * eta * l - eta).cwiseAbs().maxCoeff() / scale);
           const Matrix4 b = four_boost(p.boost);
           o.record((b * four_boost(BoostParams{-p.boost.u}) - Matrix4::Identity())
                        .cwiseAbs()
                        .maxCoeff() /
                    scale);
           const Vector3 n = ctx.sampler.unit_vector();
           o.record((four_rotation(RotationParams{2.0 * std::numbers::pi * n}) - Matrix4::Identity())
                        .cwiseAbs()
                        .maxCoeff());
           o.record((rot_su2(RotationParams{2.0 * std::numbers::pi * n}) + Matrix4C::Identity())
                        .cwiseAbs()
                        .maxCoeff());
           const Matrix10 orot = oplus_of_matrix(rot_su2(p.rotation));
           o.record((orot.block<4, 4>(6, 6) - four_rotation(p.rotation)).cwiseAbs().maxCoeff());
           const Matrix10 oboost = oplus_of_matrix(boost_sl2(p.boost));
           o.record((oboost.block<4, 4>(6, 6) - eta * b * eta).cwiseAbs().maxCoeff() / scale);
         }
         return o;
       }},
      {"four_generators", "central differences of 𝓡 and 𝓛 at the identity give 𝒥_m and 𝒦_m",
       1e-6,
       [](Context& ctx) {
         Outcome o;
         const double h = ctx.tol.h_fd;
         const FourGenerators& g = four_generators();
         for (int m = 0; m < 3; ++m) {
           const Vector3 e = h * Vector3::Unit(m);
           const Matrix4 dr = (four_rotation(RotationParams{e}) - four_rotation(RotationParams{-e})) / (2 * h);
           const Matrix4 db = (four_boost(BoostParams{e}) - four_boost(BoostParams{-e})) / (2 * h);
           o.record((dr - g.J[m]).cwiseAbs().maxCoeff());
           o.record((db - g.K[m]).cwiseAbs().maxCoeff());
         }
         o.record(std::abs(g.J[2](1, 2) - 1.0));  // ε_312 = +1
         o.record(std::abs(g.K[0](0, 1) - (-1.0)));
         return o;
       }},
      {"extended_determinant", "det W(ω)L(u)R(θ) = 1", 1e-10,
       [](Context& ctx) {
         Outcome o;
         for (int i = 0; i < ctx.samples; ++i) {
           o.record(std::abs(extended_matrix(ctx.sampler.extended()).determinant() - 1.0));
         }
         return o;
       }},
      {"factorization_roundtrip", "factorize_wlr(extended_matrix(p)) recovers p", 1e-8,
       [](Context& ctx) {
         Outcome o;
         int iterations = 0;
         for (int i = 0; i < ctx.samples; ++i) {
           const ExtendedParams p = ctx.sampler.extended();
           const FactorizationReport f = factorize_wlr(extended_matrix(p), ctx.tol);
           iterations = std::max(iterations, f.iterations);
           o.record(chart_distance(f.params, p));
         }
         o.details = {{"max_iterations", iterations}};
         return o;
       }},
      {"group_closure",
       "products of two elements stay in the group; factorization succeeds exactly when the "
       "chart discriminant is positive, with residual below tol.fact·max(1, ‖M‖)",
       1e-10,
       [](Context& ctx) {
         Outcome o;
         int in_chart = 0;
         int out_of_chart = 0;
         int near_edge = 0;
         double worst_defect = 0.0;
         for (int i = 0; i < ctx.samples; ++i) {
           const Matrix4C m = extended_matrix(ctx.sampler.extended()) *
                              extended_matrix(ctx.sampler.extended());
           worst_defect = std::max(worst_defect, group_defect(m));
           const bool expect_chart = chart_discriminant(m) >= ctx.tol.chart;
           try {
             const FactorizationReport f = factorize_wlr(m, ctx.tol);
             ++in_chart;
             o.record(expect_chart ? f.residual / std::max(1.0, m.norm()) : kInf);
           } catch (const SolverError& e) {
             if (ill_conditioned(e) && expect_chart) {
               ++near_edge;
               o.record(0.0);
             } else {
               ++out_of_chart;
               o.record(outside_chart(e) && !expect_chart ? 0.0 : kInf);
             }
           }
         }
         o.record(worst_defect <= ctx.tol.group ? 0.0 : kInf);
         o.details = {{"in_chart", in_chart},
                      {"outside_chart", out_of_chart},
                      {"ill_conditioned", near_edge},
                      {"max_group_defect", worst_defect}};
         return o;
       }},
      {"extended_composition_routes",
       "closed-form compose_extended against factorize_wlr of the matrix product (distance "
       "relative to max(1, largest coordinate)) and the relative matrix identity; "
       "out-of-chart products must be reported by both routes",
       1e-7,
       [](Context& ctx) {
         Outcome o;
         int in_chart = 0;
         int out_of_chart = 0;
         int near_edge = 0;
         double matrix_gap = 0.0;
         for (int i = 0; i < ctx.samples; ++i) {
           const ExtendedParams a = ctx.sampler.extended();
           const ExtendedParams b = ctx.sampler.extended();
           const Matrix4C product = extended_matrix(a) * extended_matrix(b);
           bool closed_ok = true;
           bool direct_ok = true;
           bool edge = false;
           ExtendedParams closed, direct;
           try {
             closed = compose_extended(a, b, ctx.tol);
           } catch (const SolverError& e) {
             if (!chart_edge(e)) throw;
             closed_ok = false;
             edge = edge || ill_conditioned(e);
           }
           try {
             direct = factorize_wlr(product, ctx.tol).params;
           } catch (const SolverError& e) {
             if (!chart_edge(e)) throw;
             direct_ok = false;
             edge = edge || ill_conditioned(e);
           }
           if (edge) {
             ++near_edge;
           } else if (closed_ok != direct_ok) {
             o.record(kInf);
           } else if (!closed_ok) {
             ++out_of_chart;
             o.record(0.0);
           } else {
             ++in_chart;
             const double m = (extended_matrix(closed) - product).norm() /
                              std::max(1.0, product.norm());
             matrix_gap = std::max(matrix_gap, m);
             // Composed coordinates reach ~1e4, so distances are relative to their size.
             const double scale = std::max(1.0, direct.coordinates().cwiseAbs().maxCoeff());
             o.record(std::max(chart_distance(closed, direct) / scale, m));
           }
         }
         o.details = {{"in_chart", in_chart},
                      {"outside_chart", out_of_chart},
                      {"ill_conditioned", near_edge},
                      {"max_relative_matrix_gap", matrix_gap}};
         return o;
       }},
      {"dirac_composition_relations",
       "scalar and vector relations satisfied by the factors of W(ω2)·W(ω1)", 1e-9,
       [](Context& ctx) {
         Outcome o;
         int out_of_chart = 0;
         for (int i = 0; i < ctx.samples; ++i) {
           const DiracParams a = ctx.sampler.dirac();
           const DiracParams b = ctx.sampler.dirac();
           try {
             const DiracComposition d = compose_dirac(a, b, ctx.tol);
             const DiracCompositionResiduals r = dirac_composition_residuals(a, b, d);
             o.record(*std::max_element(r.relations.begin(), r.relations.end()));
           } catch (const SolverError& e) {
             if (!chart_edge(e)) throw;
             ++out_of_chart;
           }
         }
         o.details = {{"outside_chart", out_of_chart}};
         return o;
       }},
      {"dirac_composition_constraints",
       "orthogonality constraints satisfied by the factors of W(ω2)·W(ω1)", 1e-9,
       [](Context& ctx) {
         Outcome o;
         int out_of_chart = 0;
         for (int i = 0; i < ctx.samples; ++i) {
           const DiracParams a = ctx.sampler.dirac();
           const DiracParams b = ctx.sampler.dirac();
           try {
             const DiracComposition d = compose_dirac(a, b, ctx.tol);
             const DiracCompositionResiduals r = dirac_composition_residuals(a, b, d);
             o.record(*std::max_element(r.constraints.begin(), r.constraints.end()));
           } catch (const SolverError& e) {
             if (!chart_edge(e)) throw;
             ++out_of_chart;
           }
         }
         o.details = {{"outside_chart", out_of_chart}};
         return o;
       }},
      {"extended_inverse_matrix", "extended_matrix(inverse_extended(p))·extended_matrix(p) = 1",
       1e-10,
       [](Context& ctx) {
         Outcome o;
         for (int i = 0; i < ctx.samples; ++i) {
           const ExtendedParams p = ctx.sampler.extended();
           o.record(max_abs(extended_matrix(inverse_extended(p)) * extended_matrix(p) -
                            Matrix4C::Identity()));
         }
         return o;
       }},
      {"extended_inverse_roundtrip", "compose_extended(p, inverse_extended(p)) = identity", 1e-9,
       [](Context& ctx) {
         Outcome o;
         for (int i = 0; i < ctx.samples; ++i) {
           const ExtendedParams p = ctx.sampler.extended();
           o.record(chart_distance(compose_extended(p, inverse_extended(p), ctx.tol),
                                   ExtendedParams::identity()));
         }
         return o;
       }},
      {"extended_associativity",
       "factorized (M3M2)M1 against M3(M2M1), skipping products outside the chart", 1e-7,
       [](Context& ctx) {
         Outcome o;
         int skipped = 0;
         for (int i = 0; i < ctx.samples; ++i) {
           const Matrix4C m3 = extended_matrix(ctx.sampler.extended());
           const Matrix4C m2 = extended_matrix(ctx.sampler.extended());
           const Matrix4C m1 = extended_matrix(ctx.sampler.extended());
           try {
             const ExtendedParams left = factorize_wlr(
                 extended_matrix(factorize_wlr(m3 * m2, ctx.tol).params) * m1, ctx.tol).params;
             const ExtendedParams right = factorize_wlr(
                 m3 * extended_matrix(factorize_wlr(m2 * m1, ctx.tol).params), ctx.tol).params;
             const double scale = std::max(1.0, left.coordinates().cwiseAbs().maxCoeff());
             o.record(chart_distance(left, right) / scale);
           } catch (const SolverError& e) {
             if (!chart_edge(e)) throw;
             ++skipped;
           }
         }
         o.details = {{"outside_chart", skipped}};
         return o;
       }},
      {"oplus_identity", "O+ of the identity is exactly the 10x10 identity", 0.0,
       [](Context&) {
         Outcome o;
         o.record((oplus_closed(ExtendedParams::identity()) - Matrix10::Identity()).cwiseAbs().maxCoeff());
         o.record((oplus_numeric(ExtendedParams::identity()) - Matrix10::Identity()).cwiseAbs().maxCoeff());
         return o;
       }},
      {"oplus_conjugation",
       "S⁻¹X_rS = O_r^s X_s with the closed-form factorized O+, relative to max(1, ‖O‖)", 1e-10,
       [](Context& ctx) {
         Outcome o;
         for (int i = 0; i < ctx.samples; ++i) {
           const ExtendedParams p = ctx.sampler.extended();
           const Matrix4C s = extended_matrix(p);
           const Matrix4C inv = s.inverse();
           const Matrix10 op = oplus_closed(p);
           const double scale = std::max(1.0, op.cwiseAbs().maxCoeff());
           for (int r = 0; r < 10; ++r) {
             o.record((inv * generator(r) * s - combine_generators(op.row(r).transpose())).norm() /
                      scale);
           }
         }
         return o;
       }},
      {"oplus_closed_vs_numeric",
       "closed-form factorized O+ against conjugation-derived O+, entrywise relative to "
       "max(1, ‖O‖)",
       1e-9,
       [](Context& ctx) {
         Outcome o;
         double largest = 0.0;
         for (int i = 0; i < ctx.samples; ++i) {
           const ExtendedParams p = ctx.sampler.extended();
           const Matrix10 closed = oplus_closed(p);
           const double scale = std::max(1.0, closed.cwiseAbs().maxCoeff());
           largest = std::max(largest, scale);
           o.record((closed - oplus_numeric(p)).cwiseAbs().maxCoeff() / scale);
         }
         o.details = {{"largest_entry", largest}};
         return o;
       }},
      {"oplus_composition",
       "O+(M2·M1) = O+(M2)·O+(M1), max-abs error over κ² with κ = ‖M‖_F‖M⁻¹‖_F", 1e-13,
       [](Context& ctx) {
         Outcome o;
         for (int i = 0; i < ctx.samples; ++i) {
           const ExtendedParams a = ctx.sampler.extended();
           const ExtendedParams b = ctx.sampler.extended();
           const Matrix10 product = oplus_closed(a) * oplus_closed(b);
           const Matrix4C m = extended_matrix(a) * extended_matrix(b);
           // The conjugation oracle loses accuracy as κ² with κ = ‖m‖‖m⁻¹‖.
           const double kappa = m.norm() * m.inverse().norm();
           const double scale = std::max(1.0, kappa * kappa);
           o.record((oplus_of_matrix(m) - product)
                        .cwiseAbs()
                        .maxCoeff() /
                    scale);
         }
         return o;
       }},
      {"theta_identity", "Θ of the identity is the identity, closed form and finite differences",
       1e-7,
       [](Context& ctx) {
         Outcome o;
         o.record((theta_closed(ExtendedParams::identity()) - Matrix10::Identity()).cwiseAbs().maxCoeff());
         o.record((theta_numeric(ExtendedParams::identity(), ctx.tol.h_fd, false, ctx.tol) -
                   Matrix10::Identity())
                      .cwiseAbs()
                      .maxCoeff());
         return o;
       }},
      {"theta_closed_vs_fd",
       "closed-form Θ against central differences of compose_extended at the identity, "
       "Richardson-combined from steps h and h/2 with h = min(h_fd, (2π − |θ|)/100); "
       "entrywise error relative to "
       "max(1, |Θ_rs|)",
       1e-6,
       [](Context& ctx) {
         Outcome o;
         double worst_cond = 0.0;
         double plain = 0.0;
         double absolute = 0.0;
         int near_wrap = 0;
         for (int i = 0; i < ctx.samples; ++i) {
           const ExtendedParams p = ctx.sampler.extended();
           const Matrix10 closed = theta_closed(p);
           worst_cond = std::max(worst_cond, condition_number(closed));
           const double to_wrap = 2.0 * std::numbers::pi - p.rotation.angle();
           if (to_wrap < 0.1) ++near_wrap;
           // The step must stay well inside the distance to the chart singularity.
           const double h = std::min(ctx.tol.h_fd, to_wrap / 100.0);
           plain = std::max(plain, (closed - theta_numeric(p, ctx.tol.h_fd, false, ctx.tol))
                                       .cwiseAbs()
                                       .maxCoeff());
           const Matrix10 gap = closed - theta_numeric(p, h, true, ctx.tol);
           absolute = std::max(absolute, gap.cwiseAbs().maxCoeff());
           o.record(gap.cwiseAbs().cwiseQuotient(closed.cwiseAbs().cwiseMax(1.0)).maxCoeff());
         }
         o.details = {{"max_condition_number", worst_cond},
                      {"richardson_absolute_max_error", absolute},
                      {"plain_central_max_error", plain},
                      {"angles_within_0.1_of_2pi", near_wrap}};
         return o;
       }},
      {"theta_generator_identity",
       "Θ_r^s ∂S/∂p^s = iX_r S with central-difference derivatives, relative to max(1, ‖S‖)",
       1e-6,
       [](Context& ctx) {
         Outcome o;
         for (int i = 0; i < ctx.samples; ++i) {
           o.record(theta_generator_defect(ctx.sampler.extended(), ctx.tol.h_fd));
         }
         return o;
       }},
      {"structure_constant_routes",
       "c_rs^m from 4x4 commutators against antisymmetrized derivatives of Θ at the identity",
       1e-6,
       [](Context&) {
         Outcome o;
         o.record(structure_constants_commutator().max_abs_difference(structure_constants_theta()));
         return o;
       }},
      {"structure_constant_antisymmetry", "c_rs^m = −c_sr^m exactly", 0.0,
       [](Context&) {
         Outcome o;
         o.record(structure_constants_commutator().antisymmetry_defect());
         return o;
       }},
      {"structure_constant_jacobi", "Jacobi identity of the structure constants", 1e-6,
       [](Context&) {
         Outcome o;
         o.record(structure_constants_commutator().jacobi_defect());
         return o;
       }},
      {"structure_constant_so3_sector",
       "c_{JjJk}^{Jm} = −ε_jkm, the value implied by [J1,J2] = iJ3 and [X_r,X_s] = −ic X, "
       "on both routes",
       1e-9,
       [](Context&) {
         Outcome o;
         const StructureConstants a = structure_constants_commutator();
         const StructureConstants b = structure_constants_theta();
         for (int j = 0; j < 3; ++j) {
           for (int k = 0; k < 3; ++k) {
             for (int m = 0; m < 3; ++m) {
               o.record(std::abs(a(j, k, m) + levi_civita(j, k, m)));
               o.record(std::abs(b(j, k, m) + levi_civita(j, k, m)));
             }
           }
         }
         o.details = {{"c_J1J2_J3", a(0, 1, 2)}};
         return o;
       }},
      {"gauge_constant_field", "a constant field has pure-gauge component exactly 0", 0.0,
       [](Context& ctx) {
         Outcome o;
         FieldGrid g;
         g.shape.dims = {3, 3, 3, 3};
         g.values.assign(g.shape.size(), ctx.sampler.extended());
         for (const GaugeSite& s : pure_gauge_component(g, std::nullopt, ctx.tol).sites) {
           o.record(s.a.cwiseAbs().maxCoeff());
         }
         return o;
       }},
      {"gauge_reconstruction",
       "pure-gauge a_μ on an 8⁴ smooth field: a·Θ reproduces ∂𝓜 and a·X = −i(∂S)S⁻¹, "
       "relative error",
       1e-5,
       [](Context& ctx) {
         Outcome o;
         const FieldGrid grid = smooth_field(ctx.sampler, gauge_grid(), 0.5, 0.5);
         const GaugeField a = pure_gauge_component(grid, std::nullopt, ctx.tol);
         std::vector<Vector10> coords;
         std::vector<Matrix4C> mats;
         for (const auto& v : grid.values) {
           coords.push_back(v.coordinates());
           mats.push_back(extended_matrix(v));
         }
         double coordinate_gap = 0.0;
         double matrix_gap = 0.0;
         double largest = 0.0;
         int ok = 0;
         for (std::size_t i = 0; i < a.sites.size(); ++i) {
           if (a.sites[i].status != SiteStatus::Ok) continue;
           ++ok;
           const auto site = grid.shape.site(i);
           const Matrix10 th = theta_closed(grid.values[i]);
           const Matrix4C inv = mats[i].inverse();
           for (int mu = 0; mu < 4; ++mu) {
             const Vector10 am = a.sites[i].a.row(mu).transpose();
             const Vector10 dm = central_difference(grid.shape, coords, site, mu);
             auto step = [&](int dir) {
               auto s = site;
               s[mu] += dir;
               return mats[grid.shape.index(s)];
             };
             const Matrix4C ds = (step(+1) - step(-1)) / (2.0 * grid.shape.spacing[mu]);
             const Vector10 oracle = expand_in_generators(-kI * ds * inv);
             largest = std::max(largest, am.norm());
             coordinate_gap = std::max(coordinate_gap, (th.transpose() * am - dm).norm() /
                                                          std::max(dm.norm(), 1e-300));
             matrix_gap = std::max(matrix_gap, (oracle - am).norm() / std::max(am.norm(), 1e-300));
           }
         }
         o.samples = ok;
         o.max_error = std::max(coordinate_gap, matrix_gap);
         o.details = {{"coordinate_relative_error", coordinate_gap},
                      {"matrix_oracle_relative_error", matrix_gap},
                      {"largest_a", largest}};
         return o;
       }},
      {"gauge_first_order_scaling",
       "increment δA = ∂δ𝓜 + δ𝓜^s c_sm^r A^m against recomputing the pure gauge of the "
       "shifted field; the mismatch must fall as ε² (error = max(0, 2 − observed order))",
       0.1,
       [](Context& ctx) {
         Outcome o;
         const FieldGrid grid = smooth_field(ctx.sampler, gauge_grid(), 0.5, 0.5);
         const std::vector<Vector10> unit = smooth_delta(ctx.sampler, gauge_grid());
         const StructureConstants c = structure_constants_commutator();
         Json eps_json = Json::array();
         Json mismatch_json = Json::array();
         double previous = 0.0;
         double order = 0.0;
         for (double eps : {1e-2, 5e-3}) {
           std::vector<Vector10> delta(unit.size());
           for (std::size_t i = 0; i < unit.size(); ++i) delta[i] = eps * unit[i];
           const double m = gauge_shift_mismatch(grid, delta, c, ctx.tol);
           if (previous > 0.0) order = std::log2(previous / m);
           previous = m;
           eps_json.push_back(eps);
           mismatch_json.push_back(m);
         }
         o.samples = static_cast<int>(grid.values.size());
         o.max_error = std::max(0.0, 2.0 - order);
         if (!std::isfinite(order)) o.max_error = kInf;
         o.details = {{"epsilon", eps_json}, {"mismatch", mismatch_json}, {"observed_order", order}};
         return o;
       }},
  };
  return table;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Json VerifyReport::to_json() const {
  Json list = Json::array();
  for (const CheckResult& c : checks) {
    Json entry{{"name", c.name},
               {"description", c.description},
               {"samples", c.samples},
               {"max_error", std::isfinite(c.max_error) ? Json(c.max_error) : Json("inf")},
               {"tolerance", c.tolerance},
               {"passed", c.passed}};
    if (!c.details.empty()) entry["details"] = c.details;
    list.push_back(entry);
  }
  return Json{{"seed", seed}, {"samples", samples}, {"passed", passed()}, {"checks", list}};
}

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Check& c : checks()) out.emplace_back(c.name);
    return out;
  }();
  return names;
}

VerifyReport verify_suite(const VerifyOptions& options) {
  if (options.samples < 1) throw DomainError("verify: samples must be at least 1");
  for (const auto& [name, value] : options.tolerance_overrides) {
    const auto& names = verify_check_names();
    if (name != "all" && std::find(names.begin(), names.end(), name) == names.end()) {
      throw DomainError("verify: unknown check \"" + name + "\"");
    }
    if (!(value >= 0.0)) throw DomainError("verify: tolerance override must be >= 0");
  }

  VerifyReport report;
  report.seed = options.seed;
  report.samples = options.samples;
  const auto& table = checks();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Check& check = table[i];
    ParamSampler sampler(options.seed + 0x9E3779B97F4A7C15ULL * (i + 1));
    Context ctx{sampler, options.samples, options.tol};

    CheckResult result;
    result.name = check.name;
    result.description = check.description;
    result.tolerance = check.tolerance;
    if (auto it = options.tolerance_overrides.find("all"); it != options.tolerance_overrides.end()) {
      result.tolerance = it->second;
    }
    if (auto it = options.tolerance_overrides.find(check.name);
        it != options.tolerance_overrides.end()) {
      result.tolerance = it->second;
    }
    try {
      Outcome o = check.run(ctx);
      result.samples = o.samples;
      result.max_error = o.max_error;
      result.details = std::move(o.details);
    } catch (const std::exception& e) {
      result.max_error = kInf;
      result.details = {{"error", e.what()}};
    }
    result.passed = result.max_error <= result.tolerance;
    report.checks.push_back(std::move(result));
  }
  return report;
}

}  // namespace elg
