#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "cospectra/constructions.hpp"
#include "cospectra/verdict.hpp"

namespace cospectra {

/// Spectrum rendered the way the verdict tables print it: 4 decimals with
/// trailing zeros trimmed, e.g. "{0, 0.6667, 1, 1.3333}".
std::string format_spectrum(const std::vector<double>& values);

struct ReportOptions {
  int iso_bound = 12;
  bool include_isomorphism = true;
  /// Claim names whose failure flips all_claimed_hold:
  /// "adjacency-cospectral", "normalized-cospectral", "non-isomorphic".
  std::set<std::string> enforced;
};

/// Verification record for one pair or family run. Verdict booleans come
/// from exact comparisons only; float spectra are display data.
struct Report {
  std::string construction;
  nlohmann::json params = nlohmann::json::object();
  std::vector<int> orders;
  bool degenerate = false;
  std::string degenerate_reason;
  std::vector<Verdict> verdicts;
  std::set<std::string> enforced;
  std::vector<std::vector<std::string>> adjacency_coeffs;  // per member, ascending degree
  nlohmann::json normalized_polys = nlohmann::json::array();
  std::map<std::string, double> timings_ms;
  bool all_claimed_hold = true;

  nlohmann::json to_json() const;  // schema: 1
  std::string summary() const;
};

/// Runs the adjacency/normalized/isomorphism checks for a pair and collects
/// the outcome. The pair's own claims are enforced when opts.enforced is
/// empty.
Report report_for_pair(const CospectralPair& pair, const ReportOptions& opts = {});

/// Same for a divisor family: cospectrality of every member against the
/// first, pairwise non-isomorphism.
Report report_for_family(const CospectralFamily& family, const ReportOptions& opts = {});

/// Checks for two standalone graphs (the verify path): only the claims in
/// opts.enforced are run and counted.
Report report_for_graphs(const Graph& left, const Graph& right, const ReportOptions& opts);

}  // namespace cospectra
