#include "elg/io.hpp"

#include <cmath>

namespace elg {

namespace {

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw SchemaError(std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SchemaError(std::string(what) + ": non-finite number");
  return v;
}

template <int N>
Eigen::Matrix<double, N, 1> fixed_vector(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != N) {
    throw SchemaError(std::string(what) + ": expected an array of " + std::to_string(N) +
                      " numbers");
  }
  Eigen::Matrix<double, N, 1> v;
  for (int i = 0; i < N; ++i) v(i) = number(j[i], what);
  return v;
}

}  // namespace

Json params_to_json(const ExtendedParams& p) {
  return Json{{"omega", vector_to_json(p.dirac.omega)},
              {"u", vector_to_json(p.boost.u)},
              {"theta", vector_to_json(p.rotation.theta)}};
}

ExtendedParams params_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "identity") return ExtendedParams::identity();
  if (!j.is_object()) throw SchemaError("params: expected an object or \"identity\"");
  for (const auto& item : j.items()) {
    if (item.key() != "omega" && item.key() != "u" && item.key() != "theta") {
      throw SchemaError("params: unknown member \"" + item.key() + "\"");
    }
  }
  ExtendedParams p;
  if (j.contains("omega")) p.dirac.omega = fixed_vector<4>(j["omega"], "params.omega");
  if (j.contains("u")) p.boost.u = fixed_vector<3>(j["u"], "params.u");
  if (j.contains("theta")) p.rotation.theta = fixed_vector<3>(j["theta"], "params.theta");
  return p;
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(number(j, "complex"), 0.0);
  if (!j.is_array() || j.size() != 2) throw SchemaError("complex: expected [re, im]");
  return Complex(number(j[0], "complex"), number(j[1], "complex"));
}

Json matrix_to_json(const Matrix4C& m) {
  Json rows = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int k = 0; k < 4; ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Matrix4C matrix4c_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw SchemaError("matrix: expected 4 rows");
  Matrix4C m;
  for (int i = 0; i < 4; ++i) {
    if (!j[i].is_array() || j[i].size() != 4) throw SchemaError("matrix: expected 4 columns");
    for (int k = 0; k < 4; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

Json matrix_to_json(const Matrix10& m) {
  Json rows = Json::array();
  for (int i = 0; i < 10; ++i) rows.push_back(vector_to_json(m.row(i).transpose()));
  return rows;
}

Json vector_to_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  // Adding +0.0 turns −0.0 into 0.0 and leaves every other value unchanged.
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i) + 0.0);
  return out;
}

Vector10 vector10_from_json(const Json& j) { return fixed_vector<10>(j, "vector"); }

FieldGrid grid_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("grid: expected an object");
  if (!j.contains("dims") || !j.contains("values")) {
    throw SchemaError("grid: \"dims\" and \"values\" are required");
  }
  FieldGrid g;
  const Json& dims = j["dims"];
  if (!dims.is_array() || dims.size() != 4) throw SchemaError("grid.dims: expected 4 integers");
  for (int mu = 0; mu < 4; ++mu) {
    if (!dims[mu].is_number_integer()) throw SchemaError("grid.dims: expected 4 integers");
    g.shape.dims[mu] = dims[mu].get<int>();
  }
  if (j.contains("spacing")) {
    const Vector4 h = fixed_vector<4>(j["spacing"], "grid.spacing");
    for (int mu = 0; mu < 4; ++mu) g.shape.spacing[mu] = h(mu);
  }
  const Json& values = j["values"];
  if (!values.is_array()) throw SchemaError("grid.values: expected an array of params");
  for (const auto& v : values) g.values.push_back(params_from_json(v));
  try {
    g.validate();
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
  return g;
}

Json gauge_to_json(const GaugeField& a) {
  Json sites = Json::array();
  for (std::size_t i = 0; i < a.sites.size(); ++i) {
    const GaugeSite& s = a.sites[i];
    const auto pos = a.shape.site(i);
    Json site{{"site", Json::array({pos[0], pos[1], pos[2], pos[3]})},
              {"status", to_string(s.status)}};
    if (s.status != SiteStatus::Boundary) site["condition"] = s.condition;
    if (s.status == SiteStatus::Ok) {
      Json rows = Json::array();
      for (int mu = 0; mu < 4; ++mu) rows.push_back(vector_to_json(s.a.row(mu).transpose()));
      site["a"] = rows;
    }
    sites.push_back(site);
  }
  return Json{{"dims", a.shape.dims}, {"spacing", a.shape.spacing}, {"sites", sites}};
}

SiteConnection connection_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw SchemaError("background: expected 4 rows of 10");
  SiteConnection a;
  for (int mu = 0; mu < 4; ++mu) a.row(mu) = fixed_vector<10>(j[mu], "background").transpose();
  return a;
}

}  // namespace elg
