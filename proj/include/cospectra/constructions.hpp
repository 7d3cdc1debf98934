#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cospectra/graph.hpp"
#include "cospectra/matrix_ops.hpp"

namespace cospectra {

enum class Construction { I, Fk, II, III, IV, IVGeneral };
std::string construction_name(Construction c);

enum class SpectralClaim { Adjacency, NormalizedLaplacian };

/// Inputs a builder was called with, kept for reporting.
struct SeedInputs {
  IntMatrix B;  // p x q, binary
  int n = 0;
  int k = 0;  // F_k only
  std::optional<IntMatrix> G, Gprime, E, F;
  bool allow_zero_lines = false;
};

struct CospectralPair {
  Graph left, right;
  Construction construction;
  SeedInputs params;
  std::set<SpectralClaim> claims;
  bool degenerate = false;
  std::string degenerate_reason;
};

struct CospectralFamily {
  std::vector<Graph> members;  // one per divisor, ascending divisor order
  std::vector<int> divisors;
  SeedInputs params;
  std::set<SpectralClaim> claims;
};

std::vector<int> divisors_of(int n);

/// [[0, B], [B^T, 0]] of order p+q.
IntMatrix base_bipartite(const IntMatrix& B);

/// [[0, M], [M, 0]] of twice the order of M.
IntMatrix bipartite_double(const IntMatrix& M);

/// Adjacency of the complete graph: all-ones minus identity.
IntMatrix complete_graph_adjacency(int n);

// Raw theorem blocks, exposed for structural checks. construction_I_C is the
// (nq+p)-order block matrix with n seed copies in its first block row;
// construction_I_D is its (np+q)-order transpose-seeded counterpart. The
// III variants carry identity blocks off the diagonal of the trailing grid.
IntMatrix construction_I_C(const IntMatrix& B, int n);
IntMatrix construction_I_D(const IntMatrix& B, int n);
IntMatrix construction_III_C(const IntMatrix& B, int n);
IntMatrix construction_III_D(const IntMatrix& B, int n);
/// The order kq + (n/k)p family block.
IntMatrix construction_Fk_block(const IntMatrix& B, int n, int k);

/// Pair of order np+q: C padded with (n-1)(p-q) isolated vertices vs D.
/// Claims both the adjacency and the normalized-Laplacian spectrum.
CospectralPair construct_I(const IntMatrix& B, int n, bool allow_zero_lines = false);

/// One padded family member of order np+q (k must divide n).
Graph construct_Fk(const IntMatrix& B, int n, int k, bool allow_zero_lines = false);

/// All sigma(n) padded members, one per divisor of n.
CospectralFamily construct_family(const IntMatrix& B, int n, bool allow_zero_lines = false);

/// Pair of order 3p+3q built from B with symmetric blocks G (q x q) and
/// G' (p x p). Claims the adjacency spectrum only.
CospectralPair construct_II(const IntMatrix& B, const IntMatrix& G, const IntMatrix& Gprime,
                            bool allow_zero_lines = false);

/// Pair of order (n+1)p: D padded with p-q isolated vertices vs C padded
/// with p-q complete components of order n. Adjacency claim only.
CospectralPair construct_III(const IntMatrix& B, int n, bool allow_zero_lines = false);

/// Pair of order p+4q. Adjacency claim only.
CospectralPair construct_IV(const IntMatrix& B, const IntMatrix& G, const IntMatrix& Gprime,
                            bool allow_zero_lines = false);

/// Generalized pair of order p+4q from a split E + F = G (E zero-diagonal).
/// Adjacency claim only.
CospectralPair construct_IV_general(const IntMatrix& B, const IntMatrix& Gprime,
                                    const IntMatrix& E, const IntMatrix& F,
                                    bool allow_zero_lines = false);

}  // namespace cospectra
