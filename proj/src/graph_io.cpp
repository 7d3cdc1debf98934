#include "cospectra/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cospectra/errors.hpp"

namespace cospectra {

namespace {

constexpr long kShortMax = 62;
constexpr long kMediumMax = 258047;        // 2^18 - 1
constexpr long long kLongMax = 68719476735LL;  // 2^36 - 1

void append_bits(std::string& out, unsigned long long value, int bits) {
  for (int shift = bits - 6; shift >= 0; shift -= 6)
    out += static_cast<char>(63 + ((value >> shift) & 0x3f));
}

}  // namespace

std::string export_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= kShortMax) {
    out += static_cast<char>(63 + n);
  } else if (n <= kMediumMax) {
    out += '~';
    append_bits(out, static_cast<unsigned long long>(n), 18);
  } else if (n <= kLongMax) {
    out += "~~";
    append_bits(out, static_cast<unsigned long long>(n), 36);
  } else {
    throw Error("export_graph6: order too large for graph6");
  }
  int acc = 0, filled = 0;
  for (long long j = 1; j < n; ++j) {
    for (long long i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.edge(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (acc << (6 - filled)));
  return out;
}

Graph import_graph6(std::string_view text) {
  if (text.empty()) throw MalformedGraph6("empty input");
  for (char c : text)
    if (c < 63 || c > 126)
      throw MalformedGraph6("character out of range: code " + std::to_string(int(c)));

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw MalformedGraph6("truncated order header");
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - 63);
    pos = 4;
  } else {
    if (text.size() < 8) throw MalformedGraph6("truncated order header");
    for (int i = 2; i <= 7; ++i) n = (n << 6) | (text[i] - 63);
    pos = 8;
  }
  const long long bits = n * (n - 1) / 2;
  const std::size_t chars = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != chars)
    throw MalformedGraph6("expected " + std::to_string(chars) + " payload characters, got " +
                          std::to_string(text.size() - pos));

  IntMatrix m = IntMatrix::Zero(n, n);
  long long index = 0;
  for (long long j = 1; j < n; ++j) {
    for (long long i = 0; i < j; ++i, ++index) {
      const int chunk = text[pos + index / 6] - 63;
      const int bit = (chunk >> (5 - index % 6)) & 1;
      if (bit) {
        m(i, j) = 1;
        m(j, i) = 1;
      }
    }
  }
  // Padding bits beyond the triangle must be zero.
  for (long long pad = index; pad < static_cast<long long>(chars) * 6; ++pad) {
    const int chunk = text[pos + pad / 6] - 63;
    if ((chunk >> (5 - pad % 6)) & 1) throw MalformedGraph6("nonzero padding bit");
  }
  return Graph::from_adjacency(std::move(m));
}

std::string export_dot(const Graph& g, const std::optional<std::vector<std::string>>& labels) {
  if (labels && static_cast<int>(labels->size()) != g.order())
    throw LabelCountMismatch("got " + std::to_string(labels->size()) + " labels for order " +
                             std::to_string(g.order()));
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (labels) out << " [label=\"" << (*labels)[v] << "\"]";
    out << ";\n";
  }
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.edge(i, j)) out << "  " << i << " -- " << j << ";\n";
  out << "}\n";
  return out.str();
}

IntMatrix parse_matrix_text(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty()) throw MatrixTextError("empty matrix text");

  std::vector<std::string> rows;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = compact.find(';', start);
    rows.push_back(compact.substr(start, semi == std::string::npos ? semi : semi - start));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  const std::size_t cols = rows.front().size();
  if (cols == 0) throw MatrixTextError("empty row in matrix text");
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw MatrixTextError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                            " entries, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1')
        throw MatrixTextError(std::string("entry '") + c + "' at (" + std::to_string(i) + "," +
                              std::to_string(j) + ") is not 0/1");
      m(i, j) = c - '0';
    }
  }
  return m;
}

std::string render_matrix_text(const IntMatrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i > 0) out += ';';
    for (Eigen::Index j = 0; j < m.cols(); ++j) out += (m(i, j) == 0 ? '0' : '1');
  }
  return out;
}

}  // namespace cospectra
