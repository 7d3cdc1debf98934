#pragma once

#include <vector>

#include "cospectra/graph.hpp"
#include "cospectra/poly.hpp"
#include "cospectra/verdict.hpp"

namespace cospectra {

/// Exact characteristic polynomial of the adjacency matrix.
IntPoly adjacency_charpoly(const Graph& g);

/// Exact characteristic polynomial of the normalized Laplacian. On the
/// non-isolated part with adjacency A1 and degree matrix D1 this is
/// det((x-1)D1 + A1) / det(D1), monic by construction; each isolated vertex
/// contributes a factor (x - 1).
RationalPoly normalized_laplacian_charpoly(const Graph& g);

/// Exact coefficientwise comparison; float spectra attached for display.
Verdict adjacency_cospectral(const Graph& g, const Graph& h);
Verdict normalized_cospectral(const Graph& g, const Graph& h);

struct JacobiOptions {
  double rel_tolerance = 1e-12;  // off-diagonal Frobenius norm, relative
  int max_sweeps = 100;
};

struct EigenSystem {
  RealVector values;   // ascending
  RealMatrix vectors;  // columns follow values
};

/// Cyclic Jacobi rotations with a deterministic pivot order.
EigenSystem jacobi_eigensystem(RealMatrix s, const JacobiOptions& opts = {});

/// Eigenvalues of a symmetric integer matrix by cyclic Jacobi, ascending.
/// Throws NotSymmetric.
std::vector<double> float_spectrum(const IntMatrix& m, const JacobiOptions& opts = {});

/// Dense floating normalized Laplacian (isolated vertices contribute
/// identity rows, matching the exact convention).
RealMatrix normalized_laplacian_dense(const Graph& g);

/// ||(D-A)y - lambda*D*y||_inf / ||y||_inf. Throws ZeroVector.
double harmonic_eigen_residual(const Graph& g, double lambda, const RealVector& y);

}  // namespace cospectra
