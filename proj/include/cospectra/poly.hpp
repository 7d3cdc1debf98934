#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cospectra/numeric.hpp"

namespace cospectra {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree order. Invariant: the leading coefficient is
/// nonzero; the zero polynomial has an empty coefficient list.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<Int> coeffs);

  static IntPoly constant(Int c);
  /// coeff * x^degree
  static IntPoly monomial(int degree, Int coeff = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  /// Coefficient of x^i (zero outside the stored range).
  Int coeff(int i) const;
  const Int& leading() const;
  const std::vector<Int>& coeffs() const { return c_; }

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Int& s, const IntPoly& p);
  friend IntPoly operator*(const IntPoly& p, const Int& s) { return s * p; }
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  Int evaluate(const Int& x) const;
  Rat evaluate(const Rat& x) const;
  IntPoly derivative() const;
  /// gcd of all coefficients (nonnegative); 0 for the zero polynomial.
  Int content() const;
  IntPoly primitive_part() const;  // content divided out, sign kept
  IntPoly pow(unsigned e) const;
  IntPoly shifted(int k) const;  // multiply by x^k

  /// Exact quotient this/divisor; throws Error if the division is not exact,
  /// ZeroPolynomial on a zero divisor.
  IntPoly divide_exact(const IntPoly& divisor) const;

  std::string str(std::string_view var = "x") const;

 private:
  std::vector<Int> c_;
  void normalize();
};

/// gcd over the integer polynomial ring (primitive PRS); result has positive
/// leading coefficient, content = gcd of the operand contents.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Pseudo-remainder of a by b, rescaled by a positive constant so its sign
/// agrees with the true remainder's (Sturm chains rely on this).
IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Largest e such that (x - r)^e divides p, by exact synthetic division.
/// Throws ZeroPolynomial when p = 0.
int root_multiplicity(const IntPoly& p, const Int& r);

/// Multiplicity of the root 0 (count of leading zero coefficients).
int trailing_zero_roots(const IntPoly& p);

/// Yun squarefree decomposition of the primitive part: list of
/// (squarefree factor, multiplicity) pairs with multiplicities ascending.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

/// p(a*x + b)
IntPoly compose_linear(const IntPoly& p, const Int& a, const Int& b);

/// For p with only even-degree terms, the g with p(x) = g(x^2).
/// Throws Error if an odd-degree coefficient is nonzero.
IntPoly even_part(const IntPoly& p);

/// g(s*x): coefficient i scaled by s^i.
IntPoly scale_argument(const IntPoly& g, const Int& s);

/// Content-reduced quotient of an integer polynomial by a positive integer.
/// Invariant: denominator > 0 and gcd(content(numerator), denominator) = 1.
class RationalPoly {
 public:
  RationalPoly() : den_(1) {}
  RationalPoly(IntPoly num, Int den);

  const IntPoly& numerator() const { return num_; }
  const Int& denominator() const { return den_; }
  int degree() const { return num_.degree(); }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the leading coefficient of the represented polynomial is 1.
  bool is_monic() const { return !num_.is_zero() && num_.leading() == den_; }
  Rat coeff(int i) const;
  Rat evaluate(const Rat& x) const;

  bool operator==(const RationalPoly& o) const {
    return den_ == o.den_ && num_ == o.num_;
  }
  friend RationalPoly operator*(const RationalPoly& a, const IntPoly& b) {
    return RationalPoly(a.num_ * b, a.den_);
  }

  std::string str(std::string_view var = "x") const;

 private:
  IntPoly num_;
  Int den_;
};

}  // namespace cospectra
