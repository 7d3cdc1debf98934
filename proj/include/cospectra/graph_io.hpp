#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cospectra/graph.hpp"

namespace cospectra {

/// graph6 text for g: N(n) header then the upper triangle packed
/// column-major, 6 bits per printable character offset by 63. Short header
/// for order <= 62, long forms above.
std::string export_graph6(const Graph& g);

/// Inverse of export_graph6. Throws MalformedGraph6 on bad characters,
/// wrong length, or nonzero padding bits.
Graph import_graph6(std::string_view text);

/// Deterministic DOT text: vertices in index order, then edges i < j in
/// lexicographic order. Throws LabelCountMismatch when labels are supplied
/// with the wrong length.
std::string export_dot(const Graph& g,
                       const std::optional<std::vector<std::string>>& labels = std::nullopt);

/// Binary-matrix text grammar: rows separated by ';', each row a run of
/// 0/1 digits; whitespace is ignored everywhere. Throws MatrixTextError.
IntMatrix parse_matrix_text(std::string_view text);
std::string render_matrix_text(const IntMatrix& m);

}  // namespace cospectra
