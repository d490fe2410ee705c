#pragma once

#include <filesystem>
#include <iosfwd>

#include "json.hpp"

#include "entsep/qstate.hpp"

namespace entsep {

// State files are JSON objects
//   { "dimA": int, "dimB": int, "matrix": [[re, im], ...] }
// with the (dimA*dimB)^2 entries in row-major order. Loading enforces every
// DensityMatrix invariant and throws ValidationError naming the one that failed.
DensityMatrix state_from_json(const nlohmann::json& j);
nlohmann::json state_to_json(const DensityMatrix& rho);

DensityMatrix read_state(std::istream& in);
DensityMatrix read_state_file(const std::filesystem::path& path);
void write_state_file(const std::filesystem::path& path, const DensityMatrix& rho);

// Row-major [[re, im], ...] encoding shared with the operator-set export.
nlohmann::json matrix_to_json(const ComplexMatrix& m);

}  // namespace entsep
