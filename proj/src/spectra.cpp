#include "cospectra/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cospectra/errors.hpp"
#include "cospectra/matrix_ops.hpp"

namespace cospectra {

IntPoly adjacency_charpoly(const Graph& g) { return char_poly(g.adjacency()); }

RationalPoly normalized_laplacian_charpoly(const Graph& g) {
  const int n = g.order();
  std::vector<int> live;  // non-isolated vertices, in index order
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > 0) live.push_back(v);
  const int isolated = n - static_cast<int>(live.size());
  const IntPoly isolated_factor = IntPoly{-1, 1}.pow(static_cast<unsigned>(isolated));
  if (live.empty()) return RationalPoly(isolated_factor, 1);

  const int m = static_cast<int>(live.size());
  IntMatrix laplacian = IntMatrix::Zero(m, m);  // D1 - A1
  IntMatrix degree = IntMatrix::Zero(m, m);
  Int det_degree = 1;
  for (int i = 0; i < m; ++i) {
    const int d = g.degree(live[i]);
    degree(i, i) = d;
    laplacian(i, i) = d;
    det_degree *= d;
    for (int j = 0; j < m; ++j)
      if (i != j && g.edge(live[i], live[j])) laplacian(i, j) = -1;
  }
  // det(x*D1 - (D1 - A1)) = det((x-1)D1 + A1), leading coefficient det(D1).
  IntPoly pencil = gen_char_poly(laplacian, degree);
  return RationalPoly(pencil * isolated_factor, det_degree);
}

namespace {

std::string first_difference(const IntPoly& a, const IntPoly& b) {
  const int top = std::max(a.degree(), b.degree());
  for (int i = 0; i <= top; ++i) {
    if (a.coeff(i) != b.coeff(i)) {
      return "first differing coefficient at degree " + std::to_string(i) + ": " +
             a.coeff(i).get_str() + " vs " + b.coeff(i).get_str();
    }
  }
  return "polynomials identical";
}

std::vector<double> sorted_eigenvalues(const RealMatrix& s) {
  EigenSystem es = jacobi_eigensystem(s);
  return std::vector<double>(es.values.data(), es.values.data() + es.values.size());
}

}  // namespace

Verdict adjacency_cospectral(const Graph& g, const Graph& h) {
  Verdict v;
  v.claim = "adjacency-cospectral";
  v.left_spectrum = sorted_eigenvalues(to_real(g.adjacency()));
  v.right_spectrum = sorted_eigenvalues(to_real(h.adjacency()));
  if (g.order() != h.order()) {
    v.holds = false;
    v.witness = "orders differ: " + std::to_string(g.order()) + " vs " + std::to_string(h.order());
    return v;
  }
  const IntPoly pg = adjacency_charpoly(g), ph = adjacency_charpoly(h);
  v.holds = pg == ph;
  v.witness = v.holds ? "char_poly = " + pg.str("x") : first_difference(pg, ph);
  return v;
}

Verdict normalized_cospectral(const Graph& g, const Graph& h) {
  Verdict v;
  v.claim = "normalized-cospectral";
  v.left_spectrum = sorted_eigenvalues(normalized_laplacian_dense(g));
  v.right_spectrum = sorted_eigenvalues(normalized_laplacian_dense(h));
  if (g.order() != h.order()) {
    v.holds = false;
    v.witness = "orders differ: " + std::to_string(g.order()) + " vs " + std::to_string(h.order());
    return v;
  }
  const RationalPoly pg = normalized_laplacian_charpoly(g);
  const RationalPoly ph = normalized_laplacian_charpoly(h);
  v.holds = pg == ph;
  if (v.holds) {
    v.witness = "normalized char_poly = " + pg.str("x");
  } else {
    // Compare on a common denominator so the witness names one coefficient.
    v.witness = first_difference(pg.numerator() * ph.denominator(),
                                 ph.numerator() * pg.denominator());
  }
  return v;
}

EigenSystem jacobi_eigensystem(RealMatrix a, const JacobiOptions& opts) {
  const int n = static_cast<int>(a.rows());
  RealMatrix v = RealMatrix::Identity(n, n);
  auto off_norm = [&]() {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };
  const double initial = off_norm();
  if (initial > 0) {
    const double target = opts.rel_tolerance * initial;
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const double apq = a(p, q);
          if (apq == 0.0) continue;
          const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
          const double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          const double c = 1.0 / std::sqrt(t * t + 1.0);
          const double s = t * c;
          const double app = a(p, p), aqq = a(q, q);
          a(p, p) = app - t * apq;
          a(q, q) = aqq + t * apq;
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          for (int i = 0; i < n; ++i) {
            if (i == p || i == q) continue;
            const double aip = a(i, p), aiq = a(i, q);
            a(i, p) = c * aip - s * aiq;
            a(p, i) = a(i, p);
            a(i, q) = s * aip + c * aiq;
            a(q, i) = a(i, q);
          }
          for (int i = 0; i < n; ++i) {
            const double vip = v(i, p), viq = v(i, q);
            v(i, p) = c * vip - s * viq;
            v(i, q) = s * vip + c * viq;
          }
        }
      }
      if (off_norm() <= target) break;
    }
  }
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return a(x, x) < a(y, y); });
  EigenSystem out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = a(idx[k], idx[k]);
    out.vectors.col(k) = v.col(idx[k]);
  }
  return out;
}

std::vector<double> float_spectrum(const IntMatrix& m, const JacobiOptions& opts) {
  if (!is_symmetric(m)) throw NotSymmetric("float_spectrum: matrix is not symmetric");
  EigenSystem es = jacobi_eigensystem(to_real(m), opts);
  return std::vector<double>(es.values.data(), es.values.data() + es.values.size());
}

RealMatrix normalized_laplacian_dense(const Graph& g) {
  const int n = g.order();
  RealMatrix out = RealMatrix::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    if (g.degree(i) == 0) continue;
    for (int j = i + 1; j < n; ++j) {
      if (!g.edge(i, j)) continue;
      const double w = -1.0 / std::sqrt(double(g.degree(i)) * double(g.degree(j)));
      out(i, j) = w;
      out(j, i) = w;
    }
  }
  return out;
}

double harmonic_eigen_residual(const Graph& g, double lambda, const RealVector& y) {
  const int n = g.order();
  if (y.size() != n)
    throw OrderMismatch("harmonic_eigen_residual: vector length " + std::to_string(y.size()) +
                        " for order " + std::to_string(n));
  const double ynorm = y.lpNorm<Eigen::Infinity>();
  if (ynorm == 0.0) throw ZeroVector("harmonic_eigen_residual: zero vector");
  RealVector r(n);
  for (int i = 0; i < n; ++i) {
    double acc = g.degree(i) * y[i];  // (D y)_i
    for (int j = 0; j < n; ++j)
      if (g.edge(i, j)) acc -= y[j];  // -(A y)_i
    r[i] = acc - lambda * g.degree(i) * y[i];
  }
  return r.lpNorm<Eigen::Infinity>() / ynorm;
}

}  // namespace cospectra
