#pragma once

#include <array>
#include <optional>
#include <vector>

#include "elg/extended.hpp"
#include "elg/structure.hpp"
#include "elg/tolerances.hpp"
#include "elg/types.hpp"

namespace elg {

/// Extents and spacings of a 4-d grid. Sites are stored row-major with x⁰
/// slowest. An axis of extent 1 is not differentiated (its derivative is 0);
/// any other axis needs extent ≥ 3 for central differences.
struct GridShape {
  std::array<int, 4> dims{1, 1, 1, 1};
  std::array<double, 4> spacing{1.0, 1.0, 1.0, 1.0};

  std::size_t size() const;
  std::size_t index(const std::array<int, 4>& site) const;
  std::array<int, 4> site(std::size_t index) const;
  /// True when every differentiated axis has a neighbour on both sides.
  bool interior(const std::array<int, 4>& site) const;
  bool differentiated(int mu) const { return dims[mu] > 1; }
  /// Throws DomainError on non-positive extents/spacings or an extent of 2.
  void validate() const;
};

/// Group-valued field 𝓜(x).
struct FieldGrid {
  GridShape shape;
  std::vector<ExtendedParams> values;

  void validate() const;
};

enum class SiteStatus { Ok, Boundary, IllConditioned };

const char* to_string(SiteStatus s) noexcept;

/// Connection components A_μ^r at one site, row μ, column r.
using SiteConnection = Eigen::Matrix<double, 4, 10>;

struct GaugeSite {
  SiteConnection a = SiteConnection::Zero();
  SiteStatus status = SiteStatus::Boundary;
  double condition = 0.0;  // condition number of Θ at the site (0 if not computed)
};

struct GaugeField {
  GridShape shape;
  std::vector<GaugeSite> sites;
};

/// Central difference ∂_μ of per-site 10-vectors at an interior site.
Vector10 central_difference(const GridShape& shape, const std::vector<Vector10>& values,
                            const std::array<int, 4>& site, int mu);

/// a_μ^r from ∂_μ𝓜^s = a_μ^r Θ_r^s, plus an optional constant background
/// A_μ^r(x : 1). Boundary sites are flagged and left at zero; sites where
/// cond(Θ) > tol.cond_max are flagged IllConditioned.
GaugeField pure_gauge_component(const FieldGrid& grid,
                                const std::optional<SiteConnection>& background = std::nullopt,
                                const Tolerances& tol = {});

/// Matrix part −i A_μ^r X_r of D_μ = 1·∂_μ − i A_μ^r X_r, one entry per site.
struct CovariantDerivative {
  GridShape shape;
  int mu = 0;
  std::vector<Matrix4C> connection;

  /// D_μψ at interior sites (boundary sites are left at zero).
  std::vector<Vector4C> apply(const std::vector<Vector4C>& spinor) const;
};

CovariantDerivative covariant_derivative(const GaugeField& a, int mu);

/// δA_μ^r = ∂_μ δ𝓜^r + δ𝓜^s c_sm^r A_μ^m: the first-order change of the
/// connection under 𝓜 → Φ(δ𝓜; 𝓜). Evaluated at sites where `a` is Ok.
GaugeField infinitesimal_gauge_delta(const GaugeField& a, const std::vector<Vector10>& delta,
                                     const StructureConstants& c);

/// Φ(δ𝓜(x); 𝓜(x)) site by site.
FieldGrid shift_field(const FieldGrid& grid, const std::vector<Vector10>& delta,
                      const Tolerances& tol = {});

/// max over sites Ok in both fields of |A′ − A − δA|, where A′ is the pure
/// gauge of the shifted field.
double gauge_shift_mismatch(const FieldGrid& grid, const std::vector<Vector10>& delta,
                            const StructureConstants& c, const Tolerances& tol = {});

}  // namespace elg
