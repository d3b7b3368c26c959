#pragma once

/**
 * @file cyclo.hpp
 * @brief Cyclotomic polynomials, special-form indices n = p*m with m | p - 1,
 *        signed products of their cyclotomics, and the p-adic point data.
 */

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dwb/arith.hpp"
#include "dwb/check.hpp"
#include "dwb/poly.hpp"

namespace dwb {

/// Phi_n for 1 <= n <= 10^4, from T^n - 1 = prod_{d | n} Phi_d.
Polynomial cyclotomic(long n);
/// Phi_1 .. Phi_N (index 0 unused), built by dividing T^n - 1 by the earlier entries.
std::vector<Polynomial> cyclotomic_table(long N);
/// Phi_n mod T^prec from prod_{e | n} (1 - T^e)^mu(n/e), valid for n >= 2.
Polynomial cyclotomic_series(long n, std::size_t prec);

struct SpecialFormIndex {
  long n = 0;
  long p = 0;
  long m = 0;
  bool operator==(const SpecialFormIndex&) const = default;
  std::string to_string() const;  // "n=p*m"
};

/// Decomposition n = p*m with p the largest prime factor and m | p - 1.
std::optional<SpecialFormIndex> special_form(long n);
/// Throws std::invalid_argument unless p is prime and m | p - 1.
SpecialFormIndex make_special(long p, long m);

/// The smallest `count` special-form n with Phi_n = 1 + s T^d mod T^(2d).
/// Indices are p*m or p1*p2*m with m = prod q^(e+1) over d = prod q^e;
/// primes in `excluded` are never used for the p part. Every result is
/// verified by series expansion. Throws std::runtime_error if the prime
/// search bound runs out.
std::vector<long> find_special_congruent(long d, int s, long count,
                                         const std::set<long>& excluded = {});

struct CycloProductSpec {
  int sign = 1;
  std::vector<SpecialFormIndex> indices;  ///< strictly increasing n
  /// Full expansion; only sensible for small total degree.
  Polynomial expand() const;
  Polynomial series(std::size_t prec) const;
  long total_degree() const;
  std::string to_string() const;
};

/// Structural membership: sign +-1, distinct strictly increasing special indices.
bool in_special_set(const CycloProductSpec& spec);

struct ForweakResult {
  CycloProductSpec product;
  std::vector<Check> checks;
};

/// M with F = M mod T^d, built left to right. Requires F(0) = +-1, integer
/// coefficients, 1 <= d <= 12 and deg F <= 16.
ForweakResult forweak_approx(const Polynomial& F, long d);

struct ApproxRecord {
  SpecialFormIndex index;
  Integer lift;          ///< root of unity of order m modulo p^(phi(m)+1)
  long target = 0;       ///< phi(m)
  Valuation measured{0};  ///< ord_p Phi_n(c)
  /// (j, ord_p Phi_j(c)) for divisors j of l other than n with nonzero order.
  std::vector<std::pair<long, Valuation>> off_index_nonzero;
  long off_index_checked = 0;
};

struct ApproxPoint {
  Integer c;
  Integer modulus;
  long ell = 1;
  std::vector<ApproxRecord> records;
};

/// Throws std::invalid_argument naming the first non-coprime pair among p_i, m_i.
ApproxPoint approx_point(const std::vector<SpecialFormIndex>& indices);

/// Phi_{p^s}(1) = p and (Phi_r(1), p) = 1 when r has another prime factor.
std::vector<Check> ap1_checks(long max_n, long max_p);

struct NondivisibilityViolation {
  long r, m, p;
  Rational res;
  bool r_is_m_pa;      ///< r = m p^a for some a >= 1
  bool m_divides_pa1;  ///< m | p^a - 1 for that a
};

/// Every (r, m, p) with r, m <= max_rm, p <= max_p prime, p not dividing m,
/// r != m and p | Res(Phi_m, Phi_r) that breaks "r = m p^a and m | p^a - 1".
/// Uses a precomputed resultant table indexed [m][r].
std::vector<NondivisibilityViolation> nondivisibility_violations(
    const std::vector<std::vector<Rational>>& res_table, long max_rm, long max_p);

struct PdividesProbe {
  SpecialFormIndex index;
  Integer norm;        ///< |Res(Phi_m, Phi_n)|
  long norm_exponent;  ///< ord_p of the norm
  long target;         ///< phi(m)
  Valuation local_order{0};  ///< ord_p Phi_n(xi_m) through a high lift of xi_m
};

PdividesProbe pdivides_probe(const SpecialFormIndex& idx);

/// Divisibility of T^l - 1 by prod Phi_{n_i} with l = prod n_i, the value at 1,
/// the degree and the p_i-orders at the approximation point.
std::vector<Check> alpha_shadow_check(const std::vector<SpecialFormIndex>& indices);

}  // namespace dwb
