#pragma once

// Shared JSON matrix format: {"dim": n, "re": [[...]], "im": [[...]]},
// with "im": null for real matrices, plus a deterministic JSON writer
// (fixed field order, floats printed with 17 significant digits).

#include <string>

#include <json.hpp>

#include "ccrflow/errors.hpp"
#include "ccrflow/linalg.hpp"

namespace ccrflow {

using json = nlohmann::ordered_json;

MatrixXcd matrix_from_json(const json& j);
MatrixXcd load_matrix(const std::string& path); // throws ParseError

json matrix_to_json(const MatrixXcd& M);
json matrix_to_json(const MatrixXd& M);

// Deterministic serialization: %.17g floats, fixed member order.
std::string dump_json(const json& j, int indent = 2);

std::string format_double(double v);

} // namespace ccrflow
