#include "cospectra/graph.hpp"

#include <algorithm>
#include <numeric>

#include "cospectra/errors.hpp"

namespace cospectra {

namespace {

std::string at(Eigen::Index i, Eigen::Index j) {
  return " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Graph Graph::from_adjacency(IntMatrix m) {
  if (m.rows() != m.cols()) throw NotSquare("adjacency matrix is " + shape_str(m));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) throw NotSymmetric("adjacency matrix asymmetric" + at(i, j));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && m(i, j) != 1)
        throw NonBinaryEntry("entry " + m(i, j).get_str() + at(i, j));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (m(i, i) != 0) throw NonzeroDiagonal("nonzero diagonal" + at(i, i));
  return Graph(std::move(m));
}

Graph::Graph(IntMatrix m) : adj_(std::move(m)) {
  degrees_.resize(adj_.rows());
  for (Eigen::Index i = 0; i < adj_.rows(); ++i) {
    int d = 0;
    for (Eigen::Index j = 0; j < adj_.cols(); ++j)
      if (adj_(i, j) == 1) ++d;
    degrees_[i] = d;
  }
}

int Graph::edge_count() const {
  int total = std::accumulate(degrees_.begin(), degrees_.end(), 0);
  return total / 2;
}

DegreeSummary degree_data(const Graph& g) {
  DegreeSummary out;
  out.degree_sequence = g.degrees();
  std::sort(out.degree_sequence.begin(), out.degree_sequence.end());
  out.isolated_count =
      static_cast<int>(std::count(out.degree_sequence.begin(), out.degree_sequence.end(), 0));
  out.max_degree = out.degree_sequence.empty() ? 0 : out.degree_sequence.back();
  return out;
}

std::vector<int> component_labels(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u)
        if (g.edge(v, u) && label[u] < 0) {
          label[u] = next;
          stack.push_back(u);
        }
    }
    ++next;
  }
  return label;
}

int component_count(const Graph& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : 1 + *std::max_element(labels.begin(), labels.end());
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw OrderMismatch("relabel: permutation length " + std::to_string(perm.size()) +
                        " for order " + std::to_string(n));
  IntMatrix m = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(perm[i], perm[j]) = g.adjacency()(i, j);
  return Graph::from_adjacency(std::move(m));
}

}  // namespace cospectra
