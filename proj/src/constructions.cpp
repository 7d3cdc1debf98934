#include "cospectra/constructions.hpp"

#include <utility>

#include "cospectra/errors.hpp"

namespace cospectra {

std::string construction_name(Construction c) {
  switch (c) {
    case Construction::I: return "I";
    case Construction::Fk: return "Fk";
    case Construction::II: return "II";
    case Construction::III: return "III";
    case Construction::IV: return "IV";
    case Construction::IVGeneral: return "IVg";
  }
  return "?";
}

std::vector<int> divisors_of(int n) {
  std::vector<int> out;
  for (int k = 1; k <= n; ++k)
    if (n % k == 0) out.push_back(k);
  return out;
}

namespace {

void check_binary(const IntMatrix& m, const std::string& name) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && m(i, j) != 1)
        throw NonBinaryEntry(name + " entry " + m(i, j).get_str() + " at (" + std::to_string(i) +
                             "," + std::to_string(j) + ")");
}

// Symmetric binary block of a given order; zero diagonal unless loops_ok.
void check_block(const IntMatrix& m, Eigen::Index order, const std::string& name, bool loops_ok) {
  if (m.rows() != order || m.cols() != order)
    throw ShapeViolation(name + " is " + shape_str(m) + ", expected " + std::to_string(order) +
                         "x" + std::to_string(order));
  check_binary(m, name);
  if (!is_symmetric(m)) throw NotSymmetric(name + " is not symmetric");
  if (!loops_ok)
    for (Eigen::Index i = 0; i < order; ++i)
      if (m(i, i) != 0) throw NonzeroDiagonal(name + " has a nonzero diagonal entry at " +
                                              std::to_string(i));
}

bool is_zero_matrix(const IntMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

bool has_zero_line(const IntMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    bool all_zero = true;
    for (Eigen::Index j = 0; j < m.cols() && all_zero; ++j)
      if (m(i, j) != 0) all_zero = false;
    if (all_zero) return true;
  }
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    bool all_zero = true;
    for (Eigen::Index i = 0; i < m.rows() && all_zero; ++i)
      if (m(i, j) != 0) all_zero = false;
    if (all_zero) return true;
  }
  return false;
}

// A zero seed is tolerated (flagged degenerate); a partially zero row or
// column is rejected unless explicitly allowed, since it plants isolated
// vertices inside the otherwise-connected pattern.
bool check_seed(const IntMatrix& B, bool allow_zero_lines) {
  if (B.rows() == 0 || B.cols() == 0) throw ShapeViolation("seed matrix B is empty");
  check_binary(B, "seed matrix B");
  if (is_zero_matrix(B)) return true;
  if (!allow_zero_lines && has_zero_line(B))
    throw SeedError("seed matrix B has an all-zero row or column (pass allow_zero_lines to keep it)");
  return false;
}

void require(bool cond, const std::string& message) {
  if (!cond) throw ShapeViolation(message);
}

void flag_degenerate(CospectralPair& pair, bool zero_seed) {
  if (zero_seed) {
    pair.degenerate = true;
    pair.degenerate_reason = "seed matrix B is zero";
  } else if (pair.left == pair.right) {
    pair.degenerate = true;
    pair.degenerate_reason = "sides are entrywise equal";
  }
}

IntMatrix zero(Eigen::Index r, Eigen::Index c) { return IntMatrix::Zero(r, c); }

}  // namespace

IntMatrix base_bipartite(const IntMatrix& B) {
  BlockGrid<Int> grid(2, 2);
  grid.set_zero(0, 0, B.rows(), B.rows());
  grid.set(0, 1, B);
  grid.set(1, 0, B.transpose());
  grid.set_zero(1, 1, B.cols(), B.cols());
  return grid.assemble();
}

IntMatrix bipartite_double(const IntMatrix& M) {
  BlockGrid<Int> grid(2, 2);
  grid.set_zero(0, 0, M.rows(), M.rows());
  grid.set(0, 1, M);
  grid.set(1, 0, M.transpose());
  grid.set_zero(1, 1, M.rows(), M.rows());
  return grid.assemble();
}

IntMatrix complete_graph_adjacency(int n) {
  IntMatrix m = IntMatrix::Constant(n, n, Int(1));
  for (int i = 0; i < n; ++i) m(i, i) = 0;
  return m;
}

IntMatrix construction_I_C(const IntMatrix& B, int n) {
  const Eigen::Index p = B.rows(), q = B.cols();
  BlockGrid<Int> grid(n + 1, n + 1);
  grid.set_zero(0, 0, p, p);
  for (int j = 1; j <= n; ++j) {
    grid.set(0, j, B);
    grid.set(j, 0, B.transpose());
    for (int i = 1; i <= n; ++i) grid.set_zero(i, j, q, q);
  }
  return grid.assemble();
}

IntMatrix construction_I_D(const IntMatrix& B, int n) {
  return construction_I_C(B.transpose(), n);
}

IntMatrix construction_III_C(const IntMatrix& B, int n) {
  const Eigen::Index p = B.rows(), q = B.cols();
  BlockGrid<Int> grid(n + 1, n + 1);
  grid.set_zero(0, 0, p, p);
  for (int j = 1; j <= n; ++j) {
    grid.set(0, j, B);
    grid.set(j, 0, B.transpose());
    for (int i = 1; i <= n; ++i) {
      if (i == j)
        grid.set_zero(i, j, q, q);
      else
        grid.set(i, j, IntMatrix::Identity(q, q));
    }
  }
  return grid.assemble();
}

IntMatrix construction_III_D(const IntMatrix& B, int n) {
  return construction_III_C(B.transpose(), n);
}

IntMatrix construction_Fk_block(const IntMatrix& B, int n, int k) {
  const Eigen::Index p = B.rows(), q = B.cols();
  const int blocks = k + n / k;
  // Block index types: 0 and everything past the k seed columns carry the
  // row space (height p); indexes 1..k carry the column space (height q).
  auto is_row_side = [&](int t) { return t == 0 || t > k; };
  BlockGrid<Int> grid(blocks, blocks);
  for (int i = 0; i < blocks; ++i) {
    for (int j = 0; j < blocks; ++j) {
      if (is_row_side(i) && !is_row_side(j))
        grid.set(i, j, B);
      else if (!is_row_side(i) && is_row_side(j))
        grid.set(i, j, B.transpose());
      else if (is_row_side(i))
        grid.set_zero(i, j, p, p);
      else
        grid.set_zero(i, j, q, q);
    }
  }
  return grid.assemble();
}

CospectralPair construct_I(const IntMatrix& B, int n, bool allow_zero_lines) {
  const Eigen::Index p = B.rows(), q = B.cols();
  require(p >= q, "construction I needs p >= q, got " + shape_str(B));
  require(n >= 2, "construction I needs n >= 2, got n = " + std::to_string(n));
  const bool zero_seed = check_seed(B, allow_zero_lines);
  const Eigen::Index pad = static_cast<Eigen::Index>(n - 1) * (p - q);
  IntMatrix left = direct_sum(construction_I_C(B, n), zero(pad, pad));
  IntMatrix right = construction_I_D(B, n);
  CospectralPair pair{Graph::from_adjacency(std::move(left)),
                      Graph::from_adjacency(std::move(right)),
                      Construction::I,
                      SeedInputs{B, n, 0, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                                 allow_zero_lines},
                      {SpectralClaim::Adjacency, SpectralClaim::NormalizedLaplacian}};
  flag_degenerate(pair, zero_seed);
  return pair;
}

Graph construct_Fk(const IntMatrix& B, int n, int k, bool allow_zero_lines) {
  const Eigen::Index p = B.rows(), q = B.cols();
  require(p >= q, "construction F_k needs p >= q, got " + shape_str(B));
  require(n >= 1, "construction F_k needs n >= 1, got n = " + std::to_string(n));
  if (k < 1 || n % k != 0)
    throw NotADivisor("k = " + std::to_string(k) + " does not divide n = " + std::to_string(n));
  check_seed(B, allow_zero_lines);
  const Eigen::Index pad = (n - n / k) * p + (1 - k) * q;
  return Graph::from_adjacency(direct_sum(construction_Fk_block(B, n, k), zero(pad, pad)));
}

CospectralFamily construct_family(const IntMatrix& B, int n, bool allow_zero_lines) {
  CospectralFamily family;
  family.divisors = divisors_of(n);
  family.params = SeedInputs{B,          n,          0,
                             std::nullopt, std::nullopt, std::nullopt,
                             std::nullopt, allow_zero_lines};
  family.claims = {SpectralClaim::Adjacency, SpectralClaim::NormalizedLaplacian};
  for (int k : family.divisors) family.members.push_back(construct_Fk(B, n, k, allow_zero_lines));
  return family;
}

CospectralPair construct_II(const IntMatrix& B, const IntMatrix& G, const IntMatrix& Gprime,
                            bool allow_zero_lines) {
  const Eigen::Index p = B.rows(), q = B.cols();
  const bool zero_seed = check_seed(B, allow_zero_lines);
  check_block(G, q, "G", false);
  check_block(Gprime, p, "G'", false);

  BlockGrid<Int> a(3, 3);
  a.set(0, 0, Gprime).set(0, 1, B).set(0, 2, B);
  a.set(1, 0, B.transpose()).set_zero(1, 1, q, q).set(1, 2, G);
  a.set(2, 0, B.transpose()).set(2, 1, G).set_zero(2, 2, q, q);

  BlockGrid<Int> c(3, 3);
  c.set(0, 0, G).set(0, 1, B.transpose()).set(0, 2, B.transpose());
  c.set(1, 0, B).set_zero(1, 1, p, p).set(1, 2, Gprime);
  c.set(2, 0, B).set(2, 1, Gprime).set_zero(2, 2, p, p);

  IntMatrix left = direct_sum(direct_sum(a.assemble(), bipartite_double(Gprime)), G);
  IntMatrix right = direct_sum(direct_sum(c.assemble(), bipartite_double(G)), Gprime);
  CospectralPair pair{Graph::from_adjacency(std::move(left)),
                      Graph::from_adjacency(std::move(right)),
                      Construction::II,
                      SeedInputs{B, 0, 0, G, Gprime, std::nullopt, std::nullopt, allow_zero_lines},
                      {SpectralClaim::Adjacency}};
  flag_degenerate(pair, zero_seed);
  return pair;
}

CospectralPair construct_III(const IntMatrix& B, int n, bool allow_zero_lines) {
  const Eigen::Index p = B.rows(), q = B.cols();
  require(p >= q, "construction III needs p >= q, got " + shape_str(B));
  require(n >= 2, "construction III needs n >= 2, got n = " + std::to_string(n));
  const bool zero_seed = check_seed(B, allow_zero_lines);
  IntMatrix left = direct_sum(construction_III_D(B, n), zero(p - q, p - q));
  IntMatrix right = construction_III_C(B, n);
  for (Eigen::Index copy = 0; copy < p - q; ++copy)
    right = direct_sum(right, complete_graph_adjacency(n));
  CospectralPair pair{Graph::from_adjacency(std::move(left)),
                      Graph::from_adjacency(std::move(right)),
                      Construction::III,
                      SeedInputs{B, n, 0, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                                 allow_zero_lines},
                      {SpectralClaim::Adjacency}};
  flag_degenerate(pair, zero_seed);
  return pair;
}

namespace {

// Shared layout of constructions IV and IVg: [[G', B, B], [B^T, X, Y], [B^T, Y, X]].
IntMatrix hub_with_tail(const IntMatrix& B, const IntMatrix& Gprime, const IntMatrix& X,
                        const IntMatrix& Y) {
  BlockGrid<Int> grid(3, 3);
  grid.set(0, 0, Gprime).set(0, 1, B).set(0, 2, B);
  grid.set(1, 0, B.transpose()).set(1, 1, X).set(1, 2, Y);
  grid.set(2, 0, B.transpose()).set(2, 1, Y).set(2, 2, X);
  return grid.assemble();
}

}  // namespace

CospectralPair construct_IV(const IntMatrix& B, const IntMatrix& G, const IntMatrix& Gprime,
                            bool allow_zero_lines) {
  const Eigen::Index p = B.rows(), q = B.cols();
  const bool zero_seed = check_seed(B, allow_zero_lines);
  check_block(G, q, "G", false);
  check_block(Gprime, p, "G'", false);

  IntMatrix a = hub_with_tail(B, Gprime, zero(q, q), G);
  IntMatrix c = hub_with_tail(B, Gprime, G, zero(q, q));
  IntMatrix left = direct_sum(a, direct_sum(G, G));
  IntMatrix right = direct_sum(c, bipartite_double(G));
  CospectralPair pair{Graph::from_adjacency(std::move(left)),
                      Graph::from_adjacency(std::move(right)),
                      Construction::IV,
                      SeedInputs{B, 0, 0, G, Gprime, std::nullopt, std::nullopt, allow_zero_lines},
                      {SpectralClaim::Adjacency}};
  flag_degenerate(pair, zero_seed);
  return pair;
}

CospectralPair construct_IV_general(const IntMatrix& B, const IntMatrix& Gprime,
                                    const IntMatrix& E, const IntMatrix& F,
                                    bool allow_zero_lines) {
  const Eigen::Index p = B.rows(), q = B.cols();
  const bool zero_seed = check_seed(B, allow_zero_lines);
  check_block(Gprime, p, "G'", false);
  check_block(E, q, "E", false);
  check_block(F, q, "F", true);  // a diagonal entry of F is a legal edge in [[E,F],[F,E]]
  IntMatrix g_sum = E + F;
  for (Eigen::Index i = 0; i < q; ++i)
    for (Eigen::Index j = 0; j < q; ++j)
      if (g_sum(i, j) != 0 && g_sum(i, j) != 1)
        throw EFSumViolation("(E+F) entry " + g_sum(i, j).get_str() + " at (" + std::to_string(i) +
                             "," + std::to_string(j) + ") is not 0/1");

  IntMatrix a = hub_with_tail(B, Gprime, zero(q, q), g_sum);
  IntMatrix d = hub_with_tail(B, Gprime, E, F);

  BlockGrid<Int> ef(2, 2);
  ef.set(0, 0, E).set(0, 1, F).set(1, 0, F.transpose()).set(1, 1, E);

  IntMatrix left = direct_sum(a, ef.assemble());
  IntMatrix right = direct_sum(d, bipartite_double(g_sum));
  CospectralPair pair{Graph::from_adjacency(std::move(left)),
                      Graph::from_adjacency(std::move(right)),
                      Construction::IVGeneral,
                      SeedInputs{B, 0, 0, g_sum, Gprime, E, F, allow_zero_lines},
                      {SpectralClaim::Adjacency}};
  flag_degenerate(pair, zero_seed);
  return pair;
}

}  // namespace cospectra
