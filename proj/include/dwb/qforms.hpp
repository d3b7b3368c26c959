#pragma once

/**
 * @file qforms.hpp
 * @brief Local behaviour of the form <1, -a, -b, ab> over Q, a generalized
 *        Eisenstein certifier and the xi-parameter constructors.
 */

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dwb/arith.hpp"
#include "dwb/check.hpp"
#include "dwb/poly.hpp"

namespace dwb {

struct Place {
  long prime = 0;  ///< 0 for the real place
  static Place real() { return {}; }
  static Place finite(long p);
  bool is_real() const { return prime == 0; }
  auto operator<=>(const Place&) const = default;
  /// "p:<prime>" or "real".
  std::string to_string() const;
};

/// (a, b)_v from the closed-form local rules.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Required precision for the brute-force search: 2*(ord_p 2 + max ord) + 1
/// after removing square factors p^2 from a and b.
long oracle_precision(const Integer& a, const Integer& b, long p);

/// +1 iff z^2 = a x^2 + b y^2 has a primitive solution modulo p^k. Throws
/// std::invalid_argument when k is below oracle_precision.
int local_solubility_oracle(const Integer& a, const Integer& b, long p, long k);

struct FormDiagnosis {
  Rational a, b;
  std::map<Place, int> symbols;
  std::vector<Place> anisotropic_places;
  bool globally_isotropic = false;
  std::vector<Check> checks;  ///< reciprocity and the three local statements
};

FormDiagnosis anisotropy_report(const Rational& a, const Rational& b);

struct EisensteinCert {
  long p = 0;
  long degree = 0;
  long r = 0;  ///< 0 when no parameter fits
  std::vector<Valuation> valuations;  ///< ord_p of a_0 .. a_m
  std::vector<Check> checks;
  bool verdict = false;
};

/// Searches r in [2, max finite valuation + 1] for ord a_m = 0,
/// ord a_i >= r (0 < i < m), ord a_0 = r - 1 and gcd(m, r - 1) = 1.
/// Throws std::invalid_argument for degree below 2.
EisensteinCert eisenstein_certify(const Polynomial& f, long p);

struct XiTriple {
  Rational xi1, xi2, xi3;
};

struct PadicXi {
  XiTriple xi;
  Polynomial F;  ///< f^3 + T
  /// Per prime: the shift r with W = p^r T, h(W) and its certificate.
  struct Local {
    long p;
    long r;
    Polynomial h;
    EisensteinCert cert;
  };
  std::vector<Local> locals;
};

/// xi_1 = p^(n r) / a_n, xi_2 = 1, xi_3 = p for one prime. With a form
/// given, rejects primes where it is isotropic. Throws for odd deg f.
PadicXi padic_xi_construct(const Polynomial& f, long p,
                           std::optional<std::pair<Rational, Rational>> form = std::nullopt);
/// One xi-triple serving every prime in the list, one certificate each.
PadicXi padic_xi_construct(const Polynomial& f, const std::vector<long>& primes);

struct RealXi {
  XiTriple xi;
  Polynomial h;  ///< xi_1 f^3 + T + xi_3
  long real_roots = 0;
  bool used_fallback = false;
};

/// Throws std::invalid_argument for constant f or odd degree.
RealXi real_xi_construct(const Polynomial& f);

struct ParityGate {
  RationalFunction h;
  Valuation ord_g;
  Valuation ord_h;
  bool h_even = false;
  bool biconditional = false;
};

/// h = T g^2 + T^2 and ord at the pole of T: ord g >= 0 iff ord h even.
ParityGate even_order_gate(const RationalFunction& g);

}  // namespace dwb
