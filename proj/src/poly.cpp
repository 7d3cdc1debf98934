#include "cospectra/poly.hpp"

#include <algorithm>
#include <sstream>

#include "cospectra/errors.hpp"

namespace cospectra {

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.assign(coeffs.begin(), coeffs.end());
  normalize();
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(Int c) {
  IntPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::monomial(int degree, Int coeff) {
  IntPoly p;
  if (coeff != 0) {
    p.c_.assign(degree + 1, Int(0));
    p.c_[degree] = std::move(coeff);
  }
  return p;
}

Int IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

const Int& IntPoly::leading() const {
  if (c_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly out(*this);
  for (Int& c : out.c_) c = -c;
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> out(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const Int& s, const IntPoly& p) {
  if (s == 0) return IntPoly();
  IntPoly out(p);
  for (Int& c : out.c_) c *= s;
  return out;
}

Int IntPoly::evaluate(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPoly::evaluate(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return IntPoly();
  std::vector<Int> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = Int(static_cast<long>(i)) * c_[i];
  return IntPoly(std::move(out));
}

Int IntPoly::content() const {
  Int g = 0;
  for (const Int& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  Int g = content();
  IntPoly out(*this);
  for (Int& c : out.c_) c = exact_div(c, g);
  return out;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly acc{1};
  IntPoly base(*this);
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return acc;
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Int> out(c_.size() + k, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw ZeroPolynomial("divide_exact: zero divisor");
  if (is_zero()) return IntPoly();
  if (degree() < divisor.degree())
    throw Error("divide_exact: quotient degree would be negative");
  std::vector<Int> rem = c_;
  std::vector<Int> quot(c_.size() - divisor.c_.size() + 1, Int(0));
  int rdeg = degree();
  const int ddeg = divisor.degree();
  while (rdeg >= ddeg) {
    const Int& lead = rem[rdeg];
    if (lead != 0) {
      Int qc = exact_div(lead, divisor.c_.back());
      const int k = rdeg - ddeg;
      quot[k] = qc;
      for (int i = 0; i <= ddeg; ++i)
        mpz_submul(rem[k + i].get_mpz_t(), qc.get_mpz_t(), divisor.c_[i].get_mpz_t());
    }
    --rdeg;
  }
  for (const Int& c : rem)
    if (c != 0) throw Error("divide_exact: division leaves a remainder");
  return IntPoly(std::move(quot));
}

std::string IntPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int c = coeff(i);
    if (c == 0) continue;
    Int a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || a != 1) out << a.get_str();
    if (i > 0) {
      if (a != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  const int ddeg = b.degree();
  const Int& lead = b.leading();
  int steps = 0;
  while (!r.is_zero() && r.degree() >= ddeg) {
    const int k = r.degree() - ddeg;
    IntPoly t = r.leading() * b.shifted(k);
    r = lead * r - t;
    ++steps;
  }
  if (lead < 0 && (steps % 2) == 1) return -r;
  return r;
}

namespace {

IntPoly normalize_positive(IntPoly p) {
  if (!p.is_zero() && p.leading() < 0) return -p;
  return p;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return normalize_positive(b);
  if (b.is_zero()) return normalize_positive(a);
  Int c;
  mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  IntPoly u = a.primitive_part();
  IntPoly v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = signed_pseudo_remainder(u, v);
    u = std::move(v);
    v = r.is_zero() ? IntPoly() : r.primitive_part();
  }
  return c * normalize_positive(u);
}

int root_multiplicity(const IntPoly& p, const Int& r) {
  if (p.is_zero()) throw ZeroPolynomial("root_multiplicity: zero polynomial");
  std::vector<Int> cur = p.coeffs();
  int mult = 0;
  while (cur.size() > 1) {
    // Synthetic division by (x - r): quotient coefficients top-down.
    std::vector<Int> quot(cur.size() - 1);
    Int carry = 0;
    for (std::size_t i = cur.size(); i-- > 1;) {
      carry = cur[i] + r * carry;
      quot[i - 1] = carry;
    }
    Int remainder = cur[0] + r * carry;
    if (remainder != 0) break;
    ++mult;
    cur = std::move(quot);
  }
  if (cur.size() == 1 && cur[0] == 0) {
    // p was the zero polynomial after divisions; unreachable given p != 0.
  }
  return mult;
}

int trailing_zero_roots(const IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("trailing_zero_roots: zero polynomial");
  int t = 0;
  while (p.coeff(t) == 0) ++t;
  return t;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() < 1) return out;
  IntPoly f = normalize_positive(p.primitive_part());
  IntPoly fp = f.derivative();
  IntPoly g = poly_gcd(f, fp);
  IntPoly c = f.divide_exact(g);
  IntPoly d = fp.divide_exact(g) - c.derivative();
  int k = 1;
  while (c.degree() > 0) {
    IntPoly s = poly_gcd(c, d);
    if (s.degree() > 0) out.emplace_back(s, k);
    c = c.divide_exact(s);
    d = d.divide_exact(s) - c.derivative();
    ++k;
  }
  return out;
}

IntPoly compose_linear(const IntPoly& p, const Int& a, const Int& b) {
  // Horner in the argument a*x + b.
  IntPoly arg;
  {
    std::vector<Int> c{b, a};
    arg = IntPoly(std::move(c));
  }
  IntPoly acc;
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * arg;
    acc += IntPoly::constant(p.coeff(i));
  }
  return acc;
}

IntPoly even_part(const IntPoly& p) {
  std::vector<Int> out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i % 2 == 1) {
      if (p.coeff(i) != 0) throw Error("even_part: nonzero odd-degree coefficient");
    } else {
      out.push_back(p.coeff(i));
    }
  }
  return IntPoly(std::move(out));
}

IntPoly scale_argument(const IntPoly& g, const Int& s) {
  std::vector<Int> out(g.coeffs());
  Int power = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] *= power;
    power *= s;
  }
  return IntPoly(std::move(out));
}

RationalPoly::RationalPoly(IntPoly num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error("RationalPoly: zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Int g;
  mpz_gcd(g.get_mpz_t(), num_.content().get_mpz_t(), den_.get_mpz_t());
  if (g > 1) {
    std::vector<Int> reduced = num_.coeffs();
    for (Int& c : reduced) c = exact_div(c, g);
    num_ = IntPoly(std::move(reduced));
    den_ = exact_div(den_, g);
  }
}

Rat RationalPoly::coeff(int i) const {
  Rat q(num_.coeff(i), den_);
  q.canonicalize();
  return q;
}

Rat RationalPoly::evaluate(const Rat& x) const {
  Rat v = num_.evaluate(x);
  Rat q = v / Rat(den_);
  q.canonicalize();
  return q;
}

std::string RationalPoly::str(std::string_view var) const {
  std::string s = "(" + num_.str(var) + ")";
  if (den_ != 1) s += " / " + den_.get_str();
  return s;
}

}  // namespace cospectra
