#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace entsep {

struct ReproduceOptions {
  int d = 0;            // also reproduce the d x d rows when d >= 3
  int starts_two_qubit = 512;
  int starts_dxd = 4096;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

// One reference-vs-computed comparison. `upper_bound` rows pass when
// computed <= reference + tolerance; the others when |computed - reference|
// <= tolerance.
struct ReproRow {
  std::string quantity;
  double reference = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool upper_bound = false;
  bool pass = false;
  std::string note;
};

std::vector<ReproRow> reproduce(const ReproduceOptions& options);

void write_report(std::ostream& out, const std::vector<ReproRow>& rows);

}  // namespace entsep
