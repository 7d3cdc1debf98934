#include "cospectra/poly_roots.hpp"

#include <algorithm>

#include "cospectra/errors.hpp"

namespace cospectra {

namespace {

int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

struct SturmChain {
  std::vector<IntPoly> f;

  explicit SturmChain(const IntPoly& squarefree) {
    f.push_back(squarefree);
    IntPoly d = squarefree.derivative();
    if (d.is_zero()) return;
    f.push_back(d.primitive_part());
    while (f.back().degree() > 0) {
      IntPoly r = signed_pseudo_remainder(f[f.size() - 2], f.back());
      if (r.is_zero()) break;
      f.push_back(-r.primitive_part());
    }
  }

  int variations(const Rat& x) const {
    int count = 0, last = 0;
    for (const IntPoly& p : f) {
      const int s = sgn(p.evaluate(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }
};

struct Isolation {
  std::vector<std::pair<Rat, Rat>> intervals;  // each holds exactly one root
  std::vector<Rat> exact;                      // rational roots hit head-on
};

// Endpoints passed in are never roots of f0; counts are Sturm counts on
// the half-open interval (lo, hi].
void isolate(const SturmChain& chain, const Rat& lo, const Rat& hi, int vlo, int vhi,
             Isolation& out) {
  const int count = vlo - vhi;
  if (count <= 0) return;
  if (count == 1) {
    out.intervals.emplace_back(lo, hi);
    return;
  }
  Rat mid = (lo + hi) / 2;
  mid.canonicalize();
  if (sgn(chain.f.front().evaluate(mid)) == 0) {
    out.exact.push_back(mid);
    Rat eps = (hi - lo) / 4;
    eps.canonicalize();
    while (true) {
      Rat a = mid - eps, b = mid + eps;
      a.canonicalize();
      b.canonicalize();
      if (sgn(chain.f.front().evaluate(a)) != 0 && sgn(chain.f.front().evaluate(b)) != 0) {
        const int va = chain.variations(a), vb = chain.variations(b);
        if (va - vb == 1) {
          isolate(chain, lo, a, vlo, va, out);
          isolate(chain, b, hi, vb, vhi, out);
          return;
        }
      }
      eps /= 2;
      eps.canonicalize();
    }
  }
  const int vm = chain.variations(mid);
  isolate(chain, lo, mid, vlo, vm, out);
  isolate(chain, mid, hi, vm, vhi, out);
}

// One simple root inside (lo, hi), endpoints non-roots with opposite signs.
double refine(const IntPoly& p, Rat lo, Rat hi, const Rat& width) {
  int slo = sgn(p.evaluate(lo));
  while (hi - lo >= width) {
    Rat mid = (lo + hi) / 2;
    mid.canonicalize();
    const int sm = sgn(p.evaluate(mid));
    if (sm == 0) return mid.get_d();
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  Rat mid = (lo + hi) / 2;
  return mid.get_d();
}

// Power of two strictly above the Cauchy root bound 1 + max |c_i| / |lc|.
Rat root_bound(const IntPoly& p) {
  Rat bound = 0;
  const Int lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rat q(abs(p.coeff(i)), lead);
    q.canonicalize();
    bound = std::max(bound, q);
  }
  bound += 1;
  Rat hi = 2;
  while (hi <= bound) hi *= 2;
  return hi;
}

}  // namespace

std::vector<double> real_roots(const IntPoly& p, double width) {
  if (p.is_zero()) throw ZeroPolynomial("real_roots: zero polynomial");
  std::vector<double> roots;
  const Rat w(width);
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    SturmChain chain(factor);
    const Rat hi = root_bound(factor);
    const Rat lo = -hi;
    Isolation iso;
    isolate(chain, lo, hi, chain.variations(lo), chain.variations(hi), iso);
    std::vector<double> found;
    found.reserve(iso.exact.size() + iso.intervals.size());
    for (const Rat& r : iso.exact) found.push_back(r.get_d());
    for (const auto& [a, b] : iso.intervals) found.push_back(refine(factor, a, b, w));
    for (double r : found)
      for (int t = 0; t < mult; ++t) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace cospectra
