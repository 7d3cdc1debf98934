#pragma once

#include <stdexcept>
#include <string>

namespace cospectra {

/// Base class of every validation or input error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define COSPECTRA_DEFINE_ERROR(Name)                     \
  struct Name : Error {                                  \
    explicit Name(const std::string& m) : Error(m) {}    \
  }

COSPECTRA_DEFINE_ERROR(NotSquare);
COSPECTRA_DEFINE_ERROR(OrderMismatch);
COSPECTRA_DEFINE_ERROR(NotSymmetric);
COSPECTRA_DEFINE_ERROR(NonBinaryEntry);
COSPECTRA_DEFINE_ERROR(NonzeroDiagonal);
COSPECTRA_DEFINE_ERROR(ShapeMismatch);    // inconsistent block grids
COSPECTRA_DEFINE_ERROR(ShapeViolation);   // construction preconditions
COSPECTRA_DEFINE_ERROR(NotADivisor);
COSPECTRA_DEFINE_ERROR(EFSumViolation);
COSPECTRA_DEFINE_ERROR(SeedError);        // zero row/column in a seed matrix
COSPECTRA_DEFINE_ERROR(ZeroPolynomial);
COSPECTRA_DEFINE_ERROR(ZeroVector);
COSPECTRA_DEFINE_ERROR(LabelCountMismatch);
COSPECTRA_DEFINE_ERROR(MalformedGraph6);
COSPECTRA_DEFINE_ERROR(MatrixTextError);
COSPECTRA_DEFINE_ERROR(OrderTooLarge);

#undef COSPECTRA_DEFINE_ERROR

}  // namespace cospectra
