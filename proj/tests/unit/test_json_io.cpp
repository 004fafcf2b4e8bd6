#include <doctest.h>

#include <string>

#include "symtensor/errors.hpp"
#include "symtensor/json_io.hpp"
#include "test_support.hpp"

using namespace symtensor;
using nlohmann::json;
namespace t = symtensor::testing;

namespace {

std::string error_of(const json& j) {
  try {
    (void)tensor_from_json(j);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("sym document round trip") {
  for (int trial = 0; trial < 1000; ++trial) {
    const auto k = static_cast<unsigned>(t::uniform_int(0, 4));
    const auto n = static_cast<std::size_t>(t::uniform_int(1, 4));
    SymmetricTensor::CoeffMap m;
    for (const auto& p : enumerate_exponents(k, n)) {
      if (t::uniform() > 0.0) m[p] = t::random_complex();
    }
    const SymmetricTensor a(k, n, m);
    const auto text = to_json(a).dump();
    REQUIRE(std::get<SymmetricTensor>(tensor_from_json(json::parse(text))) == a);
  }
}

TEST_CASE("dense document round trip and compression") {
  const auto a = decompress(outer_power(ComplexVector{1.0, Complex(0.0, 2.0)}, 3));
  const auto j = to_json(a);
  CHECK(j["format"] == "dense");
  CHECK(j["entries"].size() == 8);
  const auto back = std::get<DenseTensor>(tensor_from_json(j));
  CHECK(t::max_abs_diff(back.entries(), a.entries()) == 0.0);
  CHECK(symmetric_from_json(j) == compress(a));

  DenseTensor skew(2, 2);
  skew.at(IndexTuple{0, 1}) = 1.0;
  CHECK_THROWS_AS((void)symmetric_from_json(to_json(skew)), SymmetryError);
}

TEST_CASE("sym document example") {
  const auto j = json::parse(R"({"order":4,"dim":2,"format":"sym","coeffs":[{"exponent":[3,1],"value":[12,0]}]})");
  const auto a = symmetric_from_json(j);
  CHECK(a.coeff(ExponentVector({3, 1})) == Complex(12.0));
  CHECK(a.coeffs().size() == 1);
}

TEST_CASE("decomposition document round trip") {
  const SymmetricDecomposition d(3, 2, Field::Real, {{0.5, {1.0, 1.0}}, {0.5, {1.0, -1.0}}, {-2.0, {1.0, 0.0}}});
  const auto j = to_json(d);
  CHECK(j["field"] == "R");
  const auto back = decomposition_from_json(json::parse(j.dump()));
  CHECK(back.field() == Field::Real);
  REQUIRE(back.rank() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(back.terms()[i].weight == d.terms()[i].weight);
    CHECK(back.terms()[i].vector == d.terms()[i].vector);
  }
}

TEST_CASE("errors name the offending field") {
  CHECK(error_of(json::parse(R"({"dim":2,"format":"sym","coeffs":[]})")).find("\"order\"") != std::string::npos);
  CHECK(error_of(json::parse(R"({"order":2,"dim":2,"format":"csv"})")).find("\"format\"") != std::string::npos);
  CHECK(error_of(json::parse(R"({"order":1,"dim":2,"format":"dense","entries":[[1,0],[1]]})"))
            .find("entries[1]") != std::string::npos);
  CHECK(error_of(json::parse(R"({"order":2,"dim":2,"format":"sym","coeffs":[{"exponent":[1,0],"value":[1,0]}]})"))
            .find("coeffs[0].exponent") != std::string::npos);
  CHECK(error_of(json::parse(
                     R"({"order":2,"dim":2,"format":"sym","coeffs":[{"exponent":[1,1],"value":[1,0]},{"exponent":[1,1],"value":[2,0]}]})"))
            .find("duplicated") != std::string::npos);
  CHECK(error_of(json::parse(R"({"order":2,"dim":2,"format":"sym","coeffs":[{"exponent":[2,0],"value":"x"}]})"))
            .find("coeffs[0].value") != std::string::npos);
  CHECK(error_of(json::parse(R"({"order":2,"dim":2,"format":"dense","entries":[[1,0]]})")) != "");

  try {
    (void)decomposition_from_json(json::parse(R"({"order":3,"dim":2,"field":"Q","terms":[]})"));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("\"field\"") != std::string::npos);
  }
  try {
    (void)decomposition_from_json(json::parse(R"({"order":3,"dim":2,"field":"C","terms":[{"weight":[1,0]}]})"));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("\"vector\"") != std::string::npos);
  }
}
