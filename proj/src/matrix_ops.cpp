#include "cospectra/matrix_ops.hpp"

namespace cospectra {

void multiply_into(IntMatrix& dest, const IntMatrix& a, const IntMatrix& b) {
  const Eigen::Index n = a.rows(), m = b.cols(), inner = a.cols();
  dest.resize(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      Int& s = dest(i, j);
      s = 0;
      for (Eigen::Index l = 0; l < inner; ++l) {
        if (a(i, l) == 0) continue;
        mpz_addmul(s.get_mpz_t(), a(i, l).get_mpz_t(), b(l, j).get_mpz_t());
      }
    }
  }
}

IntPoly char_poly(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw NotSquare("char_poly: matrix is " + shape_str(m));
  const int n = static_cast<int>(m.rows());
  std::vector<Int> c(n + 1, Int(0));
  c[n] = 1;
  if (n == 0) return IntPoly(std::move(c));
  // Faddeev-LeVerrier: M_k = m*(M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
  IntMatrix work = IntMatrix::Zero(n, n);
  IntMatrix tmp(n, n);
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) work(i, i) += c[n - k + 1];
    multiply_into(tmp, m, work);
    work.swap(tmp);
    Int tr = 0;
    for (int i = 0; i < n; ++i) tr += work(i, i);
    c[n - k] = exact_div(-tr, Int(k));
  }
  return IntPoly(std::move(c));
}

Int determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw NotSquare("determinant: matrix is " + shape_str(m));
  const int n = static_cast<int>(m.rows());
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = exact_div(t, prev);
      }
    }
    prev = m(k, k);
  }
  Int det = m(n - 1, n - 1);
  return sign < 0 ? Int(-det) : det;
}

PolyMatrix PolyMatrix::pencil(const IntMatrix& m, const IntMatrix& w) {
  const int n = static_cast<int>(m.rows());
  PolyMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Int> c{-m(i, j), w(i, j)};
      out(i, j) = IntPoly(std::move(c));
    }
  return out;
}

IntPoly poly_determinant(PolyMatrix m) {
  const int n = m.order();
  if (n == 0) return IntPoly{1};
  int sign = 1;
  IntPoly prev{1};
  for (int k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m(i, k).is_zero()) {
          pivot = i;
          break;
        }
      if (pivot < 0) return IntPoly();
      for (int j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        IntPoly t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = t.divide_exact(prev);
      }
      m(i, k) = IntPoly();
    }
    prev = m(k, k);
  }
  IntPoly det = m(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

IntPoly gen_char_poly(const IntMatrix& m, const IntMatrix& w) {
  if (m.rows() != m.cols()) throw NotSquare("gen_char_poly: m is " + shape_str(m));
  if (w.rows() != w.cols()) throw NotSquare("gen_char_poly: w is " + shape_str(w));
  if (m.rows() != w.rows())
    throw OrderMismatch("gen_char_poly: orders " + std::to_string(m.rows()) + " vs " +
                        std::to_string(w.rows()));
  return poly_determinant(PolyMatrix::pencil(m, w));
}

}  // namespace cospectra
