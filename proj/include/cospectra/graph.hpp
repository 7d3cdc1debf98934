#pragma once

#include <vector>

#include "cospectra/matrix_ops.hpp"
#include "cospectra/numeric.hpp"

namespace cospectra {

/// Simple undirected graph backed by a validated 0/1 adjacency matrix
/// (symmetric, zero diagonal). Immutable after construction.
class Graph {
 public:
  /// Validates and wraps m. Throws, naming the first offending index:
  /// NotSquare, NotSymmetric, NonBinaryEntry, NonzeroDiagonal.
  static Graph from_adjacency(IntMatrix m);

  int order() const { return static_cast<int>(adj_.rows()); }
  const IntMatrix& adjacency() const { return adj_; }
  bool edge(int i, int j) const { return adj_(i, j) == 1; }
  int degree(int v) const { return degrees_[v]; }
  const std::vector<int>& degrees() const { return degrees_; }
  int edge_count() const;

  bool operator==(const Graph& o) const { return matrices_equal(adj_, o.adj_); }

 private:
  explicit Graph(IntMatrix m);
  IntMatrix adj_;
  std::vector<int> degrees_;
};

struct DegreeSummary {
  std::vector<int> degree_sequence;  // ascending
  int isolated_count = 0;
  int max_degree = 0;
};

DegreeSummary degree_data(const Graph& g);

/// Component label per vertex (labels are 0-based, in order of discovery).
std::vector<int> component_labels(const Graph& g);
int component_count(const Graph& g);

/// The graph with vertices renamed by perm: vertex i of g becomes perm[i].
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace cospectra
