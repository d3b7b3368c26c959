#pragma once

/**
 * @file pell.hpp
 * @brief Polynomial Pell pairs (f_n, g_n) with f_n - sqrt(s^2-1) g_n = (s - sqrt(s^2-1))^n.
 */

#include <optional>
#include <string>

#include "dwb/check.hpp"
#include "dwb/poly.hpp"
#include "dwb/quad.hpp"

namespace dwb {

struct PellPair {
  long n = 0;
  Polynomial f;
  Polynomial g;
  Polynomial s;
};

/// Negative n gives (f_n, -g_n). Throws std::invalid_argument for constant s.
PellPair pell_pair(const Polynomial& s, long n);

/// f^2 - (s^2 - 1) g^2 == 1.
bool pell_identity(const Polynomial& f, const Polynomial& g, const Polynomial& s);

/// deg f_n = n deg s and deg g_n = (n - 1) deg s, for n >= 1.
Check check_degree_law(const Polynomial& s, long n);

/// l | n exactly when g_l | g_n, for l, n >= 1.
Check check_divisibility_law(long l, long n, const Polynomial& s);

struct PellIndex {
  long n;
  int sign;  ///< (f, g) = sign * (f_n, g_n)
};

/// Recovers (n, sign) from a Pell solution. Throws std::invalid_argument when
/// the identity fails; nullopt would mean a solution outside the known family.
std::optional<PellIndex> recognize_solution(const Polynomial& f, const Polynomial& g,
                                            const Polynomial& s);

/// w_n = n mod (t - 1) for s = t, where eps^n = u_n - w_n sqrt(t^2-1).
Check wn_congruence(long n);

struct EpsQuotient {
  QuadExtElement quotient;  ///< (eps^n - 1)/(eps - 1)
  Check congruence;         ///< quotient = n mod (eps - 1)
};

/// Requires n >= 0.
EpsQuotient eps_quotient(long n);

}  // namespace dwb
