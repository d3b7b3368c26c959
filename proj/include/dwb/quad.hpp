#pragma once

// Elements u + w*sqrt(s^2 - 1) of the quadratic extension of a polynomial ring.

#include <optional>
#include <string>

#include "dwb/arith.hpp"
#include "dwb/poly.hpp"

namespace dwb {

class QuadExtElement {
 public:
  /// Throws std::invalid_argument for constant s.
  QuadExtElement(Polynomial u, Polynomial w, Polynomial s);

  /// s - sqrt(s^2 - 1), the generator of the Pell solution group.
  static QuadExtElement epsilon(const Polynomial& s);
  static QuadExtElement constant(const Polynomial& c, const Polynomial& s) {
    return QuadExtElement(c, Polynomial(), s);
  }

  const Polynomial& u() const { return u_; }
  const Polynomial& w() const { return w_; }
  const Polynomial& s() const { return s_; }
  /// s^2 - 1.
  Polynomial radicand() const;

  bool is_zero() const { return u_.is_zero() && w_.is_zero(); }
  QuadExtElement conjugate() const { return QuadExtElement(u_, -w_, s_); }
  /// u^2 - (s^2 - 1) w^2.
  Polynomial norm() const;

  QuadExtElement operator-() const { return QuadExtElement(-u_, -w_, s_); }
  friend QuadExtElement operator+(const QuadExtElement& a, const QuadExtElement& b);
  friend QuadExtElement operator-(const QuadExtElement& a, const QuadExtElement& b);
  friend QuadExtElement operator*(const QuadExtElement& a, const QuadExtElement& b);
  bool operator==(const QuadExtElement& o) const {
    return u_ == o.u_ && w_ == o.w_ && s_ == o.s_;
  }

  /// Value at the point (t, sqrt) = (t0, root) of the curve y^2 = s^2 - 1.
  Rational evaluate(const Rational& t0, const Rational& root) const;

  std::string to_string(std::string_view var = "t") const;

 private:
  Polynomial u_, w_, s_;
};

/// Binary powering. Negative exponents need a constant nonzero norm and go
/// through the conjugate. Throws std::domain_error otherwise.
QuadExtElement pow(const QuadExtElement& x, long n);

struct QuadDivision {
  bool divisible = false;
  /// x / m when divisible.
  std::optional<QuadExtElement> quotient;
  /// Components of x*conj(m) modulo norm(m); both zero when divisible over Q.
  Polynomial remainder_u, remainder_w;
  /// Set when the quotient exists over Q but has coefficients outside the ring.
  bool outside_ring = false;
};

/// Decides m | x in R[t][sqrt(s^2-1)] by dividing x*conj(m) by norm(m).
QuadDivision quad_divisible(const QuadExtElement& x, const QuadExtElement& m,
                            const RingDescriptor& ring = RingDescriptor::rationals());

/// The degree-one point where s = t and epsilon - b vanishes:
/// t0 = (b^2 + 1)/(2b), sqrt = t0 - b. Requires b != 0.
std::pair<Rational, Rational> eps_minus_b_point(const Rational& b);

}  // namespace dwb
