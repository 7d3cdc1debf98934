#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cospectra/errors.hpp"
#include "cospectra/numeric.hpp"
#include "cospectra/poly.hpp"

namespace cospectra {

/// Block-diagonal composition [[a, 0], [0, b]].
template <class Scalar>
DenseMatrix<Scalar> direct_sum(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

/// Grid of matrix blocks. Every cell must be set explicitly: either a
/// concrete matrix or a zero block with a declared shape (no shape
/// inference). assemble() concatenates in row-major block order.
template <class Scalar>
class BlockGrid {
 public:
  BlockGrid(int block_rows, int block_cols)
      : br_(block_rows), bc_(block_cols), cells_(static_cast<std::size_t>(block_rows) * block_cols) {}

  BlockGrid& set(int i, int j, DenseMatrix<Scalar> m) {
    cell(i, j) = std::move(m);
    return *this;
  }

  BlockGrid& set_zero(int i, int j, Eigen::Index rows, Eigen::Index cols) {
    cell(i, j) = ZeroCell{rows, cols};
    return *this;
  }

  int block_rows() const { return br_; }
  int block_cols() const { return bc_; }

  DenseMatrix<Scalar> assemble() const {
    std::vector<Eigen::Index> heights(br_, -1), widths(bc_, -1);
    for (int i = 0; i < br_; ++i) {
      for (int j = 0; j < bc_; ++j) {
        const Cell& c = cells_[idx(i, j)];
        Eigen::Index r, w;
        if (std::holds_alternative<std::monostate>(c))
          throw ShapeMismatch("block (" + std::to_string(i) + "," + std::to_string(j) + ") is not set");
        if (const auto* z = std::get_if<ZeroCell>(&c)) {
          r = z->rows;
          w = z->cols;
        } else {
          const auto& m = std::get<DenseMatrix<Scalar>>(c);
          r = m.rows();
          w = m.cols();
        }
        if (heights[i] < 0) heights[i] = r;
        if (widths[j] < 0) widths[j] = w;
        if (heights[i] != r || widths[j] != w)
          throw ShapeMismatch("block (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                              std::to_string(r) + "x" + std::to_string(w) + ", expected " +
                              std::to_string(heights[i]) + "x" + std::to_string(widths[j]));
      }
    }
    Eigen::Index total_r = 0, total_c = 0;
    for (Eigen::Index h : heights) total_r += h;
    for (Eigen::Index w : widths) total_c += w;
    DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(total_r, total_c);
    Eigen::Index roff = 0;
    for (int i = 0; i < br_; ++i) {
      Eigen::Index coff = 0;
      for (int j = 0; j < bc_; ++j) {
        const Cell& c = cells_[idx(i, j)];
        if (const auto* m = std::get_if<DenseMatrix<Scalar>>(&c))
          out.block(roff, coff, heights[i], widths[j]) = *m;
        coff += widths[j];
      }
      roff += heights[i];
    }
    return out;
  }

 private:
  struct ZeroCell {
    Eigen::Index rows, cols;
  };
  using Cell = std::variant<std::monostate, DenseMatrix<Scalar>, ZeroCell>;

  std::size_t idx(int i, int j) const {
    if (i < 0 || i >= br_ || j < 0 || j >= bc_)
      throw ShapeMismatch("block index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    return static_cast<std::size_t>(i) * bc_ + j;
  }
  Cell& cell(int i, int j) { return cells_[idx(i, j)]; }

  int br_, bc_;
  std::vector<Cell> cells_;
};

template <class Scalar>
DenseMatrix<Scalar> block_assemble(const BlockGrid<Scalar>& grid) {
  return grid.assemble();
}

/// dest = a * b with fused multiply-adds; dest must not alias a or b.
void multiply_into(IntMatrix& dest, const IntMatrix& a, const IntMatrix& b);

/// Exact characteristic polynomial det(xI - m) via Faddeev-LeVerrier.
/// Monic of degree order(m). Throws NotSquare.
IntPoly char_poly(const IntMatrix& m);

/// Exact determinant by fraction-free Bareiss elimination.
Int determinant(IntMatrix m);

/// Square matrix with integer-polynomial entries, row-major.
class PolyMatrix {
 public:
  explicit PolyMatrix(int order) : n_(order), a_(static_cast<std::size_t>(order) * order) {}

  int order() const { return n_; }
  IntPoly& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const IntPoly& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  /// The pencil x*w - m.
  static PolyMatrix pencil(const IntMatrix& m, const IntMatrix& w);

 private:
  int n_;
  std::vector<IntPoly> a_;
};

/// Exact determinant over the polynomial ring (fraction-free Bareiss with
/// row pivoting; all interior divisions are exact).
IntPoly poly_determinant(PolyMatrix m);

/// Exact det(x*w - m). Throws NotSquare / OrderMismatch.
IntPoly gen_char_poly(const IntMatrix& m, const IntMatrix& w);

}  // namespace cospectra
