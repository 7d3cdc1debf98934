#pragma once

#include <vector>

#include "cospectra/poly.hpp"

namespace cospectra {

/// All real roots of p with multiplicity, ascending. Roots are located with
/// exact arithmetic (Yun squarefree split, then Sturm isolation and
/// bisection) and returned once the enclosing interval is narrower than
/// `width`. Throws ZeroPolynomial for p = 0.
std::vector<double> real_roots(const IntPoly& p, double width = 1e-12);

}  // namespace cospectra
