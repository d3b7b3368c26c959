#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials with exact rational coefficients.
 *
 * Coefficients are stored in ascending degree with no trailing zeros, so the
 * zero polynomial is the empty vector and its degree is an empty optional.
 */

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dwb/arith.hpp"

namespace dwb {

/// Degree of a polynomial; nullopt for the zero polynomial.
using Degree = std::optional<std::size_t>;

/// nullopt compares below every real degree.
inline bool degree_less(const Degree& a, const Degree& b) {
  if (!b) return false;
  if (!a) return true;
  return *a < *b;
}

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT

  /// The indeterminate T.
  static Polynomial variable();
  static Polynomial monomial(const Rational& c, std::size_t k);
  static Polynomial from_ints(std::initializer_list<long> ascending);

  /// Accepts forms like "3 - 2*t^2 + t", "1/2x", "T^3-T". One letter is
  /// the variable; parentheses are not supported. Throws std::invalid_argument.
  static Polynomial parse(std::string_view text);

  Degree degree() const;
  /// Degree with the zero polynomial mapped to 0.
  std::size_t degree_or_zero() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Zero beyond the degree.
  Rational coeff(std::size_t k) const;
  Rational leading() const;
  bool has_integer_coefficients() const;

  Rational eval(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial compose(const Polynomial& inner) const;
  /// Reduction modulo T^n.
  Polynomial truncate(std::size_t n) const;
  Polynomial monic() const;
  /// Scaled by a positive rational to a primitive integer polynomial.
  Polynomial primitive() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  /// Canonical text "c0 + c1*T + c2*T^2", zero terms omitted; "0" for zero.
  std::string to_string(std::string_view var = "T") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& f, unsigned long e);

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division over Q. Throws std::domain_error for g = 0.
DivMod divmod(const Polynomial& f, const Polynomial& g);
bool divides(const Polynomial& g, const Polynomial& f);
/// f / g; throws std::domain_error when the division is not exact.
Polynomial exact_div(const Polynomial& f, const Polynomial& g);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

/// Resultant of two nonzero polynomials. Throws std::invalid_argument on zero input.
Rational resultant(const Polynomial& f, const Polynomial& g);

/// Yun decomposition f = lc * prod a_i^i, returned as (a_i, i) with a_i monic and nonconstant.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f);
Polynomial squarefree_part(const Polynomial& f);

/// Distinct real roots on the whole line.
long sturm_real_roots(const Polynomial& f);
/// Distinct real roots in the closed interval [lo, hi].
long sturm_real_roots(const Polynomial& f, const Rational& lo, const Rational& hi);
/// Every real root has absolute value strictly below this bound.
Rational cauchy_bound(const Polynomial& f);

/// Rational roots, ascending, without multiplicity.
std::vector<Rational> rational_roots(const Polynomial& f);

struct Factorization {
  Rational unit;
  /// Monic irreducible factors with multiplicities, by degree then text.
  std::vector<std::pair<Polynomial, int>> factors;
  Polynomial expand() const;
};

/// Complete factorization over Q for degree at most 4.
Factorization factor_small(const Polynomial& f);
bool is_irreducible_small(const Polynomial& f);

/// Ratio of polynomials in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction(Polynomial num, Polynomial den = Polynomial(1));
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  /// Order at the pole of T: deg den - deg num. Infinite for zero.
  Valuation order_at_infinity() const;
  std::string to_string(std::string_view var = "T") const;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace dwb
