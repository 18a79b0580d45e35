#include "elg/gauge.hpp"

#include <algorithm>
#include <cmath>

#include "elg/core_algebra.hpp"

namespace elg {

namespace {

constexpr Complex kI{0.0, 1.0};

std::array<int, 4> neighbour(std::array<int, 4> site, int mu, int step) {
  site[mu] += step;
  return site;
}

}  // namespace

std::size_t GridShape::size() const {
  std::size_t n = 1;
  for (int d : dims) n *= static_cast<std::size_t>(d);
  return n;
}

std::size_t GridShape::index(const std::array<int, 4>& site) const {
  std::size_t i = 0;
  for (int mu = 0; mu < 4; ++mu) i = i * static_cast<std::size_t>(dims[mu]) + site[mu];
  return i;
}

std::array<int, 4> GridShape::site(std::size_t index) const {
  std::array<int, 4> s{};
  for (int mu = 3; mu >= 0; --mu) {
    s[mu] = static_cast<int>(index % static_cast<std::size_t>(dims[mu]));
    index /= static_cast<std::size_t>(dims[mu]);
  }
  return s;
}

bool GridShape::interior(const std::array<int, 4>& site) const {
  for (int mu = 0; mu < 4; ++mu) {
    if (differentiated(mu) && (site[mu] < 1 || site[mu] > dims[mu] - 2)) return false;
  }
  return true;
}

void GridShape::validate() const {
  for (int mu = 0; mu < 4; ++mu) {
    if (dims[mu] < 1) throw DomainError("grid: extents must be positive");
    if (dims[mu] == 2) throw DomainError("grid: a differentiated axis needs extent >= 3");
    if (!(spacing[mu] > 0.0) || !std::isfinite(spacing[mu])) {
      throw DomainError("grid: spacings must be positive and finite");
    }
  }
}

void FieldGrid::validate() const {
  shape.validate();
  if (values.size() != shape.size()) throw DomainError("grid: value count does not match extents");
  for (const auto& v : values) {
    if (!v.coordinates().allFinite()) throw DomainError("grid: non-finite site value");
  }
}

const char* to_string(SiteStatus s) noexcept {
  switch (s) {
    case SiteStatus::Ok: return "ok";
    case SiteStatus::Boundary: return "boundary";
    case SiteStatus::IllConditioned: return "ill_conditioned";
  }
  return "unknown";
}

Vector10 central_difference(const GridShape& shape, const std::vector<Vector10>& values,
                            const std::array<int, 4>& site, int mu) {
  if (!shape.differentiated(mu)) return Vector10::Zero();
  const Vector10& plus = values[shape.index(neighbour(site, mu, +1))];
  const Vector10& minus = values[shape.index(neighbour(site, mu, -1))];
  return (plus - minus) / (2.0 * shape.spacing[mu]);
}

GaugeField pure_gauge_component(const FieldGrid& grid,
                                const std::optional<SiteConnection>& background,
                                const Tolerances& tol) {
  grid.validate();
  std::vector<Vector10> coords(grid.values.size());
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = grid.values[i].coordinates();

  GaugeField out;
  out.shape = grid.shape;
  out.sites.resize(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const auto site = grid.shape.site(i);
    GaugeSite& g = out.sites[i];
    if (!grid.shape.interior(site)) continue;

    const ThetaMatrix th = theta_closed(grid.values[i]);
    g.condition = condition_number(th);
    if (!(g.condition <= tol.cond_max)) {
      g.status = SiteStatus::IllConditioned;
      continue;
    }
    // a_μ Θ = ∂_μ𝓜 as row vectors.
    const Eigen::PartialPivLU<Matrix10> lu(th.transpose());
    for (int mu = 0; mu < 4; ++mu) {
      g.a.row(mu) = lu.solve(central_difference(grid.shape, coords, site, mu)).transpose();
    }
    if (background) g.a += *background;
    g.status = SiteStatus::Ok;
  }
  return out;
}

std::vector<Vector4C> CovariantDerivative::apply(const std::vector<Vector4C>& spinor) const {
  if (spinor.size() != shape.size()) throw DomainError("covariant derivative: size mismatch");
  std::vector<Vector4C> out(spinor.size(), Vector4C::Zero());
  for (std::size_t i = 0; i < spinor.size(); ++i) {
    const auto site = shape.site(i);
    if (!shape.interior(site)) continue;
    Vector4C d = Vector4C::Zero();
    if (shape.differentiated(mu)) {
      d = (spinor[shape.index(neighbour(site, mu, +1))] -
           spinor[shape.index(neighbour(site, mu, -1))]) /
          (2.0 * shape.spacing[mu]);
    }
    out[i] = d + connection[i] * spinor[i];
  }
  return out;
}

CovariantDerivative covariant_derivative(const GaugeField& a, int mu) {
  if (mu < 0 || mu > 3) throw DomainError("covariant derivative: direction must be 0..3");
  CovariantDerivative d;
  d.shape = a.shape;
  d.mu = mu;
  d.connection.reserve(a.sites.size());
  for (const auto& site : a.sites) {
    d.connection.push_back(-kI * combine_generators(site.a.row(mu).transpose()));
  }
  return d;
}

GaugeField infinitesimal_gauge_delta(const GaugeField& a, const std::vector<Vector10>& delta,
                                     const StructureConstants& c) {
  if (delta.size() != a.shape.size()) throw DomainError("gauge delta: size mismatch");
  GaugeField out;
  out.shape = a.shape;
  out.sites.resize(a.sites.size());
  for (std::size_t i = 0; i < a.sites.size(); ++i) {
    const GaugeSite& in = a.sites[i];
    GaugeSite& g = out.sites[i];
    g.status = in.status;
    g.condition = in.condition;
    if (in.status != SiteStatus::Ok) continue;
    const auto site = a.shape.site(i);
    for (int mu = 0; mu < 4; ++mu) {
      Vector10 row = central_difference(a.shape, delta, site, mu);
      for (int r = 0; r < 10; ++r) {
        double sum = 0.0;
        for (int s = 0; s < 10; ++s) {
          if (delta[i](s) == 0.0) continue;
          for (int m = 0; m < 10; ++m) sum += delta[i](s) * c(s, m, r) * in.a(mu, m);
        }
        row(r) += sum;
      }
      g.a.row(mu) = row.transpose();
    }
  }
  return out;
}

FieldGrid shift_field(const FieldGrid& grid, const std::vector<Vector10>& delta,
                      const Tolerances& tol) {
  grid.validate();
  if (delta.size() != grid.values.size()) throw DomainError("shift: size mismatch");
  FieldGrid out;
  out.shape = grid.shape;
  out.values.reserve(grid.values.size());
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    out.values.push_back(
        compose_extended(ExtendedParams::from_coordinates(delta[i]), grid.values[i], tol));
  }
  return out;
}

double gauge_shift_mismatch(const FieldGrid& grid, const std::vector<Vector10>& delta,
                            const StructureConstants& c, const Tolerances& tol) {
  const GaugeField base = pure_gauge_component(grid, std::nullopt, tol);
  const GaugeField shifted = pure_gauge_component(shift_field(grid, delta, tol), std::nullopt, tol);
  const GaugeField increment = infinitesimal_gauge_delta(base, delta, c);
  double worst = 0.0;
  for (std::size_t i = 0; i < base.sites.size(); ++i) {
    if (base.sites[i].status != SiteStatus::Ok || shifted.sites[i].status != SiteStatus::Ok) {
      continue;
    }
    const SiteConnection gap = shifted.sites[i].a - base.sites[i].a - increment.sites[i].a;
    worst = std::max(worst, gap.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace elg
