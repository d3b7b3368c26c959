#pragma once

/**
 * @file defsys.hpp
 * @brief Witness checkers and constructors for the existential systems over
 *        Q[t] (or a localization Z_(p)[t]) with a = t and eps = t - sqrt(t^2 - 1).
 *
 * Every checker reports the witnesses it found inside an explicit bound, so a
 * negative answer is a bounded refutation unless the system itself pins the
 * witnesses down.
 */

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dwb/arith.hpp"
#include "dwb/check.hpp"
#include "dwb/poly.hpp"
#include "dwb/quad.hpp"

namespace dwb {

enum class Verdict { accepted, refuted, refuted_to_bound, invalid };

const char* to_string(Verdict v);

using Fields = std::vector<std::pair<std::string, std::string>>;

struct WitnessReport {
  std::string system;
  Fields inputs;
  Verdict verdict = Verdict::invalid;
  std::optional<long> bound;
  std::vector<Fields> witnesses;
  long fold_count = 0;
  std::vector<Check> checks;
  std::vector<std::string> notes;
};

/// a0 f^n + a1 f^(n-1) g + ... + g^n for monic h = a0 + a1 T + ... + T^n.
/// Throws std::invalid_argument if h is not monic or has a rational root.
Polynomial combine_and(const Polynomial& f, const Polynomial& g, const Polynomial& h);

/// j_k (pi x^2 + (k-1) pi + 1) = 1 for k = 1..s_size+1, pi the product of the
/// non-invertible primes.
WitnessReport constants_system(const Polynomial& x, const RingDescriptor& ring, long s_size);

/// Integer membership through eps-powers with index in [-N, N]. The
/// quotients (+-eps^n - 1)/(eps - 1) are computed once per instance.
class SingleFoldInt {
 public:
  explicit SingleFoldInt(long bound);
  WitnessReport check(const Polynomial& c) const;
  long bound() const { return bound_; }

 private:
  struct Entry {
    long n;
    int sign;
    QuadExtElement z;  // (sign*eps^n - 1)/(eps - 1)
  };
  long bound_;
  std::vector<Entry> entries_;
};

WitnessReport singlefold_int(const Polynomial& c, long bound);

/// Exponentiation witnesses (n, s1, s2, x, y) with n in [0, N]:
///   eps^n - s1*result = (eps - base) x
///   exponent*(eps - 1) - s2*(eps^n - 1) = (eps - 1)^2 y
/// The second condition only involves the exponent and is solved once.
class ExpSystem {
 public:
  ExpSystem(long exponent, long bound);

  long exponent() const { return exponent_; }
  long bound() const { return bound_; }

  /// Cheap membership test: the first condition is evaluated at the
  /// degree-one point where eps - base vanishes.
  bool quick_accepts(const Integer& base, const Integer& result) const;
  /// eps^n at that point for every candidate n (equals base^n); a result is
  /// accepted when it matches one of these up to sign.
  std::vector<Rational> point_values(const Integer& base) const;
  /// Full witness report with both quotients computed in the quadratic ring.
  WitnessReport check(const Integer& base, const Integer& result) const;

 private:
  struct Candidate {
    long n;
    int sign;
    QuadExtElement y;
    QuadExtElement power;  // eps^n
  };
  long exponent_;
  long bound_;
  std::vector<Candidate> candidates_;
};

/// Throws std::invalid_argument for base 0.
WitnessReport exp_system(const Integer& base, const Integer& result, long exponent, long bound);

/// Tuple for the odd-integer system in the variable x.
struct OddIntegerWitness {
  Polynomial a;
  Polynomial f, g;
  Polynomial f2, g2, f3, g3;
  Polynomial tvar;
};

/// The seven relations, one check each.
std::vector<Check> odd_integer_relations(const OddIntegerWitness& w);

/// Canonical witness for odd r. Throws std::invalid_argument for even r.
OddIntegerWitness odd_integer_witness(long r);
WitnessReport odd_integer_construct(long r);
/// Searches Pell indices 1..bound with both signs for f and g.
WitnessReport odd_integer_check(const Polynomial& a, long bound);
/// Runs the odd-integer system on 2m + 1.
WitnessReport integer_via_odd(const Rational& m, long bound);

/// b = (d^4 + 1)^|2d|, exponentiation membership and 2d = (b - 1)/d^4 mod d^4.
WitnessReport nonneg_gadget(long d, long bound);

}  // namespace dwb
