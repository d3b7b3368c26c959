#pragma once

/**
 * @file parcheck.hpp
 * @brief Enumeration of Z[T] by positive integers, positivity, bounded
 *        five-squares identities and the relation Par tying an index to the
 *        data that pins its polynomial down.
 *
 * The enumeration is documented bit for bit in docs/theta.md.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dwb/arith.hpp"
#include "dwb/check.hpp"
#include "dwb/exec.hpp"
#include "dwb/pell.hpp"
#include "dwb/poly.hpp"

namespace dwb {

/// 1 maps to 0; n >= 2 decodes n - 2 in bijective base 2. Throws for n < 1.
Polynomial theta(const Integer& n);
/// Exact inverse. Throws std::invalid_argument for non-integer coefficients.
Integer theta_inverse(const Polynomial& p);

/// (X_n, Y_n) with X_n - sqrt(T^2 - 1) Y_n = (T - sqrt(T^2 - 1))^n.
PellPair chebyshev_Y(long n);

/// F(t) >= 0 for every real t.
bool pos_check(const Polynomial& F);

using FiveSquares = std::array<Polynomial, 5>;

/// g^2 F = F_1^2 + ... + F_5^2 exactly, g != 0.
bool five_squares_verify(const Integer& g, const Polynomial& F, const FiveSquares& parts);

struct FiveSquaresResult {
  bool found = false;
  bool exhausted = false;  ///< bound reached or work cap hit without a decision
  long g = 0;
  FiveSquares parts;
  /// Witnesses at the returned g with the quadratic coefficients sorted
  /// descending and non-negative (one representative per permutation/sign
  /// class of that vector).
  long count = 0;
};

/// Smallest g in [1, g_max] with a decomposition into polynomials of degree
/// <= deg F / 2. Needs integer coefficients and deg F <= 4.
FiveSquaresResult five_squares_search(const Polynomial& F, long g_max,
                                      Exec exec = Exec::parallel);

struct ParTuple {
  Integer n, b, c, d, g, v;
};

struct ParVerdict {
  bool accepted = false;  ///< no condition failed
  std::vector<Check> conditions;
};

struct ParWitness {
  Integer g;
  FiveSquares parts;
};

/// Y_{d+2}^2 + c - F^2 - 1.
Polynomial par_positivity_target(const Polynomial& F, long d, const Integer& c);

/// Builds the tuple for index n. g is 0 when the bounded search cannot
/// decide it (deg P_n >= 2 or no witness with g <= 3).
ParTuple par_find(const Integer& n);
ParVerdict par_eval(const ParTuple& t, const std::optional<ParWitness>& witness = std::nullopt);

/// Positivity condition for F plus F(2b + 2c + d) = v. The tuple must already
/// be accepted by par_eval.
ParVerdict reconstruct_check(const Polynomial& F, const ParTuple& t,
                             const std::optional<ParWitness>& witness = std::nullopt);

struct PerturbationSummary {
  long tried = 0;
  long rejected = 0;
  bool exhaustive = false;
  std::vector<std::string> accepted_examples;
};

/// F' = P_n + (2b + 2c + d - T) S with deg S <= d, coefficients of S in
/// [-3, 3], S != 0. Exhaustive for d <= 1, otherwise 24 draws from `seed`.
PerturbationSummary perturbation_sweep(const ParTuple& t, std::uint64_t seed);

}  // namespace dwb
