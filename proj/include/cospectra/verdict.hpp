#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cospectra {

/// Outcome of an exact verification. `holds` is decided by exact
/// integer/rational identities only; the float spectra are display data.
struct Verdict {
  std::string claim;
  bool holds = false;
  std::string witness;
  std::vector<double> left_spectrum;   // reporting only
  std::vector<double> right_spectrum;  // reporting only
  std::optional<std::vector<int>> witness_permutation;  // isomorphism only
};

}  // namespace cospectra
