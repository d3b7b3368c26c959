#pragma once

/**
 * @file kernels.hpp
 * @brief Data-parallel sweeps. Each has an OpenMP path and a serial
 *        reference; both produce identical results in identical order.
 */

#include <string>
#include <vector>

#include "dwb/arith.hpp"
#include "dwb/exec.hpp"

namespace dwb {

struct HilbertSweep {
  long cases = 0;
  long mismatches = 0;
  std::vector<std::string> first_mismatches;  ///< at most 10, "(a,b,v)"
};

/// Closed-form symbol against the brute-force oracle for a, b in
/// [-range, range] \ {0} at each prime, plus the real place against a
/// sign test.
HilbertSweep hilbert_sweep(long range, const std::vector<long>& primes, Exec exec);

struct ExpGridCell {
  long base;
  long exponent;
  long result;
};

struct ExpGrid {
  long cells = 0;
  std::vector<ExpGridCell> accepted;    ///< sorted (exponent, base, result)
  std::vector<ExpGridCell> mismatches;  ///< against |result| = |base|^|exponent|
};

/// Every (base, exponent, result) with 0 < |base| <= max_base,
/// |exponent| <= max_exp, |result| <= max_result, decided at the degree-one
/// point of eps - base.
ExpGrid exp_grid_sweep(long max_base, long max_exp, long max_result, long bound, Exec exec);

/// table[m][r] = Res(Phi_m, Phi_r) for 1 <= m, r <= n (row and column 0 unused).
std::vector<std::vector<Rational>> cyclotomic_resultant_table(long n, Exec exec);

/// Indices in [1, n] where theta_inverse(theta(i)) != i.
std::vector<long> theta_roundtrip_failures(long n, Exec exec);

/// Values in [0, n] whose four-squares decomposition fails to re-verify.
std::vector<long> four_squares_failures(long n, Exec exec);

}  // namespace dwb
