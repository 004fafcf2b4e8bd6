#pragma once

#include <json.hpp>
#include <variant>

#include "symtensor/decompose.hpp"
#include "symtensor/tensor.hpp"

namespace symtensor {

// Tensor documents:
//   {"order":k,"dim":n,"format":"dense","entries":[[re,im],...]}   row-major, first index slowest
//   {"order":k,"dim":n,"format":"sym","coeffs":[{"exponent":[p1,...,pn],"value":[re,im]},...]}
// Decomposition documents:
//   {"order":k,"dim":n,"field":"R"|"C","terms":[{"weight":[re,im],"vector":[[re,im],...]},...]}
//
// Readers throw ValidationError naming the offending field.

using TensorDocument = std::variant<DenseTensor, SymmetricTensor>;

[[nodiscard]] nlohmann::json to_json(const DenseTensor& a);
[[nodiscard]] nlohmann::json to_json(const SymmetricTensor& a);
[[nodiscard]] nlohmann::json to_json(const SymmetricDecomposition& d);

[[nodiscard]] TensorDocument tensor_from_json(const nlohmann::json& j);
[[nodiscard]] SymmetricDecomposition decomposition_from_json(const nlohmann::json& j);

/// Reads either tensor format; dense input must be symmetric within `tol`.
[[nodiscard]] SymmetricTensor symmetric_from_json(const nlohmann::json& j, double tol = kDefaultSymmetryTol);

}  // namespace symtensor
