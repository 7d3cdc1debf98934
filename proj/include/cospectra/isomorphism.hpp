#pragma once

#include <string>

#include "cospectra/graph.hpp"
#include "cospectra/verdict.hpp"

namespace cospectra {

struct IsoOptions {
  /// Largest order handled by the exact backtracking search.
  int exact_bound = 12;
};

/// Exact isomorphism test: degree/neighbor-color partition refinement, then
/// backtracking over color-compatible candidates (lowest index first). On
/// success the verdict carries a witness permutation mapping g-vertices to
/// h-vertices; otherwise the witness names the distinguishing certificate.
/// Throws OrderTooLarge above opts.exact_bound.
Verdict is_isomorphic(const Graph& g, const Graph& h, const IsoOptions& opts = {});

/// Certificate-only comparison for orders beyond the exact bound: degree
/// sequences and exact characteristic polynomials. `proved_nonisomorphic`
/// is true when the certificates already distinguish the graphs.
struct CertificateComparison {
  bool degrees_equal = false;
  bool charpoly_equal = false;
  bool proved_nonisomorphic = false;
  std::string text;
};
CertificateComparison certificate_comparison(const Graph& g, const Graph& h);

}  // namespace cospectra
