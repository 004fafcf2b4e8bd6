#include "symtensor/json_io.hpp"

#include <string>

#include "symtensor/errors.hpp"

namespace symtensor {

using nlohmann::json;

namespace {

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

const json& field(const json& j, const std::string& name, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw ValidationError(where + ": missing field \"" + name + "\"");
  return *it;
}

unsigned read_unsigned(const json& j, const std::string& name, const std::string& where) {
  const json& v = field(j, name, where);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ValidationError(where + ": field \"" + name + "\" must be a nonnegative integer");
  }
  return v.get<unsigned>();
}

Complex read_complex(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw ValidationError("field \"" + path + "\" must be a [re, im] pair of numbers");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

const json& read_array(const json& j, const std::string& name, const std::string& where) {
  const json& v = field(j, name, where);
  if (!v.is_array()) throw ValidationError(where + ": field \"" + name + "\" must be an array");
  return v;
}

}  // namespace

json to_json(const DenseTensor& a) {
  json entries = json::array();
  for (const auto& e : a.entries()) entries.push_back(complex_to_json(e));
  return {{"order", a.order()}, {"dim", a.dim()}, {"format", "dense"}, {"entries", std::move(entries)}};
}

json to_json(const SymmetricTensor& a) {
  json coeffs = json::array();
  for (const auto& [p, v] : a.coeffs()) {
    coeffs.push_back({{"exponent", std::vector<unsigned>(p.exponents().begin(), p.exponents().end())},
                      {"value", complex_to_json(v)}});
  }
  return {{"order", a.order()}, {"dim", a.dim()}, {"format", "sym"}, {"coeffs", std::move(coeffs)}};
}

json to_json(const SymmetricDecomposition& d) {
  json terms = json::array();
  for (const auto& t : d.terms()) {
    json vec = json::array();
    for (const auto& c : t.vector) vec.push_back(complex_to_json(c));
    terms.push_back({{"weight", complex_to_json(t.weight)}, {"vector", std::move(vec)}});
  }
  return {{"order", d.order()},
          {"dim", d.dim()},
          {"field", d.field() == Field::Real ? "R" : "C"},
          {"terms", std::move(terms)}};
}

TensorDocument tensor_from_json(const json& j) {
  const std::string where = "tensor";
  const unsigned order = read_unsigned(j, "order", where);
  const unsigned dim = read_unsigned(j, "dim", where);
  if (dim == 0) throw ValidationError("tensor: field \"dim\" must be at least 1");
  const json& format = field(j, "format", where);
  if (!format.is_string()) throw ValidationError("tensor: field \"format\" must be a string");

  if (format == "dense") {
    const json& entries = read_array(j, "entries", where);
    std::vector<Complex> values;
    values.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      values.push_back(read_complex(entries[i], "entries[" + std::to_string(i) + "]"));
    }
    return DenseTensor(order, dim, std::move(values));
  }
  if (format == "sym") {
    const json& coeffs = read_array(j, "coeffs", where);
    SymmetricTensor::CoeffMap map;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const std::string path = "coeffs[" + std::to_string(i) + "]";
      const json& exp = read_array(coeffs[i], "exponent", path);
      std::vector<unsigned> e;
      for (const auto& v : exp) {
        if (!v.is_number_integer() || v.get<long long>() < 0) {
          throw ValidationError("field \"" + path + ".exponent\" must hold nonnegative integers");
        }
        e.push_back(v.get<unsigned>());
      }
      ExponentVector p(std::move(e));
      if (p.size() != dim || p.degree() != order) {
        throw ValidationError("field \"" + path + ".exponent\" does not match order and dim");
      }
      const Complex value = read_complex(field(coeffs[i], "value", path), path + ".value");
      if (!map.emplace(std::move(p), value).second) {
        throw ValidationError("field \"" + path + ".exponent\" is duplicated");
      }
    }
    return SymmetricTensor(order, dim, std::move(map));
  }
  throw ValidationError("tensor: field \"format\" must be \"dense\" or \"sym\"");
}

SymmetricTensor symmetric_from_json(const json& j, double tol) {
  auto doc = tensor_from_json(j);
  if (auto* dense = std::get_if<DenseTensor>(&doc)) return compress(*dense, tol);
  return std::get<SymmetricTensor>(std::move(doc));
}

SymmetricDecomposition decomposition_from_json(const json& j) {
  const std::string where = "decomposition";
  const unsigned order = read_unsigned(j, "order", where);
  const unsigned dim = read_unsigned(j, "dim", where);
  const json& f = field(j, "field", where);
  if (!f.is_string() || (f != "R" && f != "C")) {
    throw ValidationError("decomposition: field \"field\" must be \"R\" or \"C\"");
  }
  const json& terms = read_array(j, "terms", where);
  std::vector<Term> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = "terms[" + std::to_string(i) + "]";
    Term t;
    t.weight = read_complex(field(terms[i], "weight", path), path + ".weight");
    const json& vec = read_array(terms[i], "vector", path);
    for (std::size_t c = 0; c < vec.size(); ++c) {
      t.vector.push_back(read_complex(vec[c], path + ".vector[" + std::to_string(c) + "]"));
    }
    out.push_back(std::move(t));
  }
  return {order, dim, f == "R" ? Field::Real : Field::Complex, std::move(out)};
}

}  // namespace symtensor
