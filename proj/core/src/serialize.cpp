#include "mixmod/serialize.hpp"

#include <cmath>

namespace mixmod {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(std::string("field \"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

Json values_to_json(std::span<const Complex> values) {
  Json out = Json::array();
  for (const auto& z : values) out.push_back(complex_to_json(z));
  return out;
}

ComplexVector values_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("\"values\" must be an array");
  ComplexVector out;
  out.reserve(j.size());
  for (const auto& z : j) out.push_back(complex_from_json(z));
  return out;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index t = 0; t < m.rows(); ++t) {
    Json row = Json::array();
    for (Eigen::Index y = 0; y < m.cols(); ++y) row.push_back(complex_to_json(m(t, y)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  const std::size_t n = size_field(j, "N");
  const Json& rows = field(j, "matrix");
  if (!rows.is_array() || rows.size() != n) throw ParseError("\"matrix\" must have N rows");
  ComplexMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t t = 0; t < n; ++t) {
    if (!rows[t].is_array() || rows[t].size() != n) throw ParseError("\"matrix\" rows must have N entries");
    for (std::size_t y = 0; y < n; ++y)
      m(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(y)) = complex_from_json(rows[t][y]);
  }
  return m;
}

}  // namespace

Json real_to_json(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) throw DomainError("real_to_json: NaN is not representable");
  return v;
}

double real_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j == "inf") return kInfinity;
  if (j == "-inf") return -kInfinity;
  throw ParseError("expected a number or \"inf\"");
}

Json to_json(const Signal& f) { return Json{{"n", f.size()}, {"values", values_to_json(f.values())}}; }

Signal signal_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n");
  auto values = values_from_json(field(j, "values"));
  if (values.size() != n) throw ParseError("signal: \"values\" length differs from \"n\"");
  return Signal(std::move(values));
}

Json to_json(const CoeffArray& a) {
  Json axes = Json::array();
  for (const auto& ax : a.axes()) axes.push_back({{"role", to_string(ax.role)}, {"var", ax.var}, {"extent", ax.extent}});
  Json out{{"n", a.size()}, {"axes", std::move(axes)}, {"values", values_to_json(a.values())}};
  if (a.has_mask()) {
    Json mask = Json::array();
    for (bool b : a.mask()) mask.push_back(b ? 1 : 0);
    out["mask"] = std::move(mask);
  }
  return out;
}

CoeffArray coeff_array_from_json(const Json& j) {
  const Json& axes_json = field(j, "axes");
  if (!axes_json.is_array()) throw ParseError("\"axes\" must be an array");
  std::vector<Axis> axes;
  for (const auto& ax : axes_json) {
    const Json& role = field(ax, "role");
    if (!role.is_string()) throw ParseError("axis \"role\" must be a string");
    try {
      axes.push_back(Axis{axis_role_from_string(role.get<std::string>()), field(ax, "var").get<int>(),
                          size_field(ax, "extent")});
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  auto values = values_from_json(field(j, "values"));
  if (j.contains("n") && size_field(j, "n") != values.size())
    throw ParseError("coefficient array: \"values\" length differs from \"n\"");
  std::vector<bool> mask;
  if (j.contains("mask")) {
    for (const auto& b : j["mask"]) mask.push_back(b.get<int>() != 0);
  }
  try {
    return CoeffArray(std::move(axes), std::move(values), std::move(mask));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const GaborSystem& sys) {
  const auto& lat = sys.lattice();
  return Json{{"N", lat.dimension()},
              {"a", lat.time_step()},
              {"b", lat.frequency_step()},
              {"window", to_json(sys.window().signal())},
              {"kind", to_string(sys.kind())}};
}

GaborSystem gabor_system_from_json(const Json& j) {
  const GaborLattice lattice(size_field(j, "N"), size_field(j, "a"), size_field(j, "b"));
  Signal g = signal_from_json(field(j, "window"));
  const WindowKind kind = window_kind_from_string(field(j, "kind").get<std::string>());
  // The window is stored exactly as used; do not renormalize.
  return GaborSystem(lattice, Window::raw(std::move(g)), kind);
}

Json to_json(const WilsonBasis& basis) {
  return Json{{"N", basis.dimension()}, {"M", basis.channels()}, {"window", to_json(basis.window().signal())}};
}

WilsonBasis wilson_basis_from_json(const Json& j) {
  return WilsonBasis::from_window(size_field(j, "N"), size_field(j, "M"),
                                  Window::raw(signal_from_json(field(j, "window"))));
}

Json to_json(const MixedNormSpec& spec) {
  Json p = Json::array();
  for (double v : spec.exponents) p.push_back(real_to_json(v));
  Json weight;
  switch (spec.weight.kind()) {
    case Weight::Kind::One:
      weight = {{"kind", "one"}};
      break;
    case Weight::Kind::Poly:
      weight = {{"kind", "poly"}, {"s", spec.weight.exponent()}};
      break;
    case Weight::Kind::Custom:
      throw DomainError("to_json: custom weights are not serializable");
  }
  return Json{{"p", std::move(p)}, {"perm", spec.permutation.one_based()}, {"weight", std::move(weight)}};
}

MixedNormSpec mixed_norm_spec_from_json(const Json& j) {
  std::vector<double> p;
  for (const auto& v : field(j, "p")) p.push_back(real_from_json(v));
  const auto perm = field(j, "perm").get<std::vector<std::size_t>>();
  if (perm.size() != p.size()) throw ParseError("mixed norm spec: \"perm\" and \"p\" lengths differ");
  Weight w = Weight::one();
  if (j.contains("weight")) {
    const auto kind = field(j["weight"], "kind").get<std::string>();
    if (kind == "poly")
      w = Weight::poly(field(j["weight"], "s").get<double>());
    else if (kind != "one")
      throw ParseError("mixed norm spec: unknown weight kind \"" + kind + "\"");
  }
  try {
    return MixedNormSpec{std::move(p), Permutation::from_one_based(perm), std::move(w)};
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const KernelOperator& k) { return Json{{"N", k.size()}, {"matrix", matrix_to_json(k.matrix())}}; }

KernelOperator kernel_from_json(const Json& j) { return KernelOperator(matrix_from_json(j)); }

Json to_json(const KNSymbol& tau) { return Json{{"N", tau.size()}, {"matrix", matrix_to_json(tau.matrix())}}; }

KNSymbol symbol_from_json(const Json& j) { return KNSymbol(matrix_from_json(j)); }

}  // namespace mixmod
