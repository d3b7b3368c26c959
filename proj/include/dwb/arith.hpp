#pragma once

/**
 * @file arith.hpp
 * @brief Exact integer/rational arithmetic and the local number theory used
 *        throughout the workbench.
 *
 * Integers and rationals are GMP values. Everything here is a pure function
 * of its arguments. Primality is decided deterministically for inputs that
 * fit in 64 bits; larger inputs are rejected rather than guessed.
 */

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dwb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Order of an element at a prime. Zero has infinite order.
class Valuation {
 public:
  explicit Valuation(long v) : value_(v) {}
  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error on the infinite marker.
  long value() const;

  bool operator==(const Valuation&) const = default;
  std::strong_ordering operator<=>(const Valuation& other) const;

  /// Decimal value, or "inf".
  std::string to_string() const;

 private:
  Valuation() = default;
  std::optional<long> value_;
};

// ---- small helpers -------------------------------------------------------

/// Rejects values outside [0, 2^64).
std::uint64_t to_u64(const Integer& x);
Integer from_u64(std::uint64_t x);
Integer ipow(const Integer& base, unsigned long e);
/// Non-negative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);
bool is_integer(const Rational& q);

/// Deterministic Miller-Rabin. Throws std::domain_error above 2^64 - 1.
bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);
std::vector<long> primes_up_to(long limit);
/// Trial-division factorization, ascending primes with multiplicities.
std::vector<std::pair<long, int>> factorize(long n);
std::vector<long> divisors(long n);
long euler_phi(long n);
int mobius(long n);
long largest_prime_factor(long n);

// ---- ring descriptors ----------------------------------------------------

/// Either the full rationals or the semi-local ring of rationals whose
/// denominators avoid a finite list of primes (those primes stay
/// non-invertible).
class RingDescriptor {
 public:
  static RingDescriptor rationals(std::string variable = "t");
  /// Throws std::invalid_argument for an empty, repeated or non-prime list.
  static RingDescriptor localized(std::vector<Integer> primes,
                                  std::string variable = "t");

  bool is_full_rationals() const { return primes_.empty(); }
  const std::vector<Integer>& primes() const { return primes_; }
  const std::string& variable() const { return variable_; }

  bool contains(const Rational& q) const;
  bool is_unit(const Rational& q) const;
  /// Product of the non-invertible primes; 1 for the full rationals.
  Integer non_invertible_product() const;
  bool is_non_invertible(const Integer& p) const;

  /// "Q[t]" or "Z_(2,3)[t]".
  std::string to_string() const;

 private:
  RingDescriptor(std::vector<Integer> primes, std::string variable)
      : primes_(std::move(primes)), variable_(std::move(variable)) {}
  std::vector<Integer> primes_;
  std::string variable_;
};

// ---- operations ----------------------------------------------------------

/// Exponent of p in x; infinite for x = 0. Throws std::invalid_argument
/// when p is not prime.
Valuation ord_p(const Rational& x, const Integer& p);

/// Unique c in [0, prod moduli) with c = residues[i] mod moduli[i]. Throws
/// std::invalid_argument naming the first non-coprime pair.
Integer crt(const std::vector<Integer>& residues,
            const std::vector<Integer>& moduli);

/// Smallest c in [0, p^k) of multiplicative order exactly m modulo p^k.
/// Requires p prime, m | p - 1, k >= 1.
Integer hensel_root_of_unity(long m, const Integer& p, long k);

/// Multiplicative order of x modulo n (gcd(x, n) = 1).
Integer multiplicative_order(const Integer& x, const Integer& n);

/// Lexicographically largest (x1 >= x2 >= x3 >= x4 >= 0) with sum of
/// squares n. Throws for negative n or n >= 2^62.
std::array<Integer, 4> four_squares(const Integer& n);

struct InverseClosure {
  Rational inverse;  ///< 1/b
  Integer x1;        ///< a*x1 + b*x2 = 1, x1 in [0, b)
  Integer x2;
};

/// For q = a/b in R, exhibits 1/b in R from integer Bezout coefficients.
InverseClosure local_inverse_closure(const Rational& q, const RingDescriptor& ring);

struct GateValue {
  Rational value;   ///< p*x - 1
  bool integral;    ///< value is a rational integer
};

/// p*x - 1 for x in R where p has no inverse in R; never zero.
GateValue nonzero_gate(const Rational& x, const Integer& p, const RingDescriptor& ring);

}  // namespace dwb
