#include "entsep/state_io.hpp"

#include <fstream>
#include <sstream>

namespace entsep {

namespace {

int read_dim(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("state file: missing \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw ValidationError(std::string("state file: \"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back({m(r, c).real(), m(r, c).imag()});
  return entries;
}

DensityMatrix state_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("state file: top level must be an object");
  const int dim_a = read_dim(j, "dimA");
  const int dim_b = read_dim(j, "dimB");
  if (dim_a < 2 || dim_b < 2) throw ValidationError("state file: dimA and dimB must be >= 2");
  if (!j.contains("matrix") || !j.at("matrix").is_array()) {
    throw ValidationError("state file: \"matrix\" must be an array of [re, im] pairs");
  }
  const auto& entries = j.at("matrix");
  const std::size_t n = static_cast<std::size_t>(dim_a) * dim_b;
  if (entries.size() != n * n) {
    std::ostringstream msg;
    msg << "state file: \"matrix\" has " << entries.size() << " entries, expected " << n * n;
    throw ValidationError(msg.str());
  }
  ComplexMatrix m(n, n);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ValidationError("state file: entry " + std::to_string(k) + " is not a [re, im] pair");
    }
    m(k / n, k % n) = {e[0].get<double>(), e[1].get<double>()};
  }
  return DensityMatrix(dim_a, dim_b, std::move(m));
}

nlohmann::json state_to_json(const DensityMatrix& rho) {
  return {{"dimA", rho.dim_a()}, {"dimB", rho.dim_b()}, {"matrix", matrix_to_json(rho.matrix())}};
}

DensityMatrix read_state(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("state file: malformed JSON: ") + e.what());
  }
  return state_from_json(j);
}

DensityMatrix read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("state file: cannot open " + path.string());
  return read_state(in);
}

void write_state_file(const std::filesystem::path& path, const DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << state_to_json(rho).dump(2) << '\n';
}

}  // namespace entsep
