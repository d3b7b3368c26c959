#include "dwb/quad.hpp"

#include <stdexcept>

namespace dwb {

namespace {

void same_ring(const QuadExtElement& a, const QuadExtElement& b) {
  if (!(a.s() == b.s())) {
    throw std::invalid_argument("mixed discriminants: " + a.s().to_string("t") + " vs " +
                                b.s().to_string("t"));
  }
}

}  // namespace

QuadExtElement::QuadExtElement(Polynomial u, Polynomial w, Polynomial s)
    : u_(std::move(u)), w_(std::move(w)), s_(std::move(s)) {
  if (s_.is_constant()) throw std::invalid_argument("quadratic extension needs a nonconstant s");
}

QuadExtElement QuadExtElement::epsilon(const Polynomial& s) {
  return QuadExtElement(s, Polynomial(-1), s);
}

Polynomial QuadExtElement::radicand() const { return s_ * s_ - Polynomial(1); }

Polynomial QuadExtElement::norm() const { return u_ * u_ - radicand() * w_ * w_; }

QuadExtElement operator+(const QuadExtElement& a, const QuadExtElement& b) {
  same_ring(a, b);
  return QuadExtElement(a.u_ + b.u_, a.w_ + b.w_, a.s_);
}

QuadExtElement operator-(const QuadExtElement& a, const QuadExtElement& b) {
  same_ring(a, b);
  return QuadExtElement(a.u_ - b.u_, a.w_ - b.w_, a.s_);
}

QuadExtElement operator*(const QuadExtElement& a, const QuadExtElement& b) {
  same_ring(a, b);
  return QuadExtElement(a.u_ * b.u_ + a.radicand() * a.w_ * b.w_, a.u_ * b.w_ + a.w_ * b.u_,
                        a.s_);
}

Rational QuadExtElement::evaluate(const Rational& t0, const Rational& root) const {
  return u_.eval(t0) + w_.eval(t0) * root;
}

std::string QuadExtElement::to_string(std::string_view var) const {
  return "(" + u_.to_string(var) + ") + (" + w_.to_string(var) + ")*sqrt(" +
         radicand().to_string(var) + ")";
}

QuadExtElement pow(const QuadExtElement& x, long n) {
  QuadExtElement base = x;
  if (n < 0) {
    Polynomial nm = x.norm();
    if (nm.is_zero() || !nm.is_constant()) {
      throw std::domain_error("negative power of a non-unit");
    }
    const Rational inv = Rational(1) / nm.leading();
    QuadExtElement c = x.conjugate();
    base = QuadExtElement(c.u() * Polynomial(inv), c.w() * Polynomial(inv), x.s());
    n = -n;
  }
  QuadExtElement result = QuadExtElement::constant(Polynomial(1), x.s());
  auto e = static_cast<unsigned long>(n);
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

QuadDivision quad_divisible(const QuadExtElement& x, const QuadExtElement& m,
                            const RingDescriptor& ring) {
  same_ring(x, m);
  if (m.is_zero()) throw std::invalid_argument("divisibility by zero");
  const Polynomial nm = m.norm();
  const QuadExtElement num = x * m.conjugate();
  auto [qu, ru] = divmod(num.u(), nm);
  auto [qw, rw] = divmod(num.w(), nm);
  QuadDivision out;
  out.remainder_u = ru;
  out.remainder_w = rw;
  if (!ru.is_zero() || !rw.is_zero()) return out;
  for (const auto* p : {&qu, &qw}) {
    for (const auto& c : p->coefficients()) {
      if (!ring.contains(c)) out.outside_ring = true;
    }
  }
  if (out.outside_ring) return out;
  out.divisible = true;
  out.quotient = QuadExtElement(qu, qw, x.s());
  return out;
}

std::pair<Rational, Rational> eps_minus_b_point(const Rational& b) {
  if (sgn(b) == 0) throw std::invalid_argument("base must be nonzero");
  Rational t0 = (b * b + 1) / (2 * b);
  t0.canonicalize();
  Rational root = t0 - b;
  return {t0, root};
}

}  // namespace dwb
