#pragma once

// Slow reference implementations. They share no code paths with the library
// beyond GMP and the Polynomial container.

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dwb/arith.hpp"
#include "dwb/poly.hpp"

namespace oracle {

using dwb::Integer;
using dwb::Polynomial;
using dwb::Rational;
using Coeffs = std::vector<long long>;  // ascending

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact quotient by a monic divisor; aborts on a remainder.
inline Coeffs div_monic(Coeffs num, const Coeffs& den) {
  const std::size_t dn = den.size() - 1;
  Coeffs q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long long c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) std::abort();
  }
  return q;
}

// Phi_n as (T^n - 1) / prod_{d | n, d < n} Phi_d, memoized.
inline const Coeffs& cyclotomic(long n) {
  static std::map<long, Coeffs> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  Coeffs num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  Coeffs den{1};
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) den = mul(den, cyclotomic(d));
  }
  return memo[n] = div_monic(num, den);
}

inline Polynomial to_poly(const Coeffs& c) {
  std::vector<Rational> q;
  for (long long v : c) q.emplace_back(static_cast<long>(v));
  return Polynomial(q);
}

inline long long value_at_one(const Coeffs& c) {
  long long s = 0;
  for (long long v : c) s += v;
  return s;
}

// (s + sqrt(D))^n expanded with binomials, D = s^2 - 1.
inline std::pair<Polynomial, Polynomial> pell_binomial(const Polynomial& s, long n) {
  const Polynomial D = s * s - Polynomial(1);
  Polynomial f, g;
  Integer binom = 1;
  for (long k = 0; k <= n; ++k) {
    const Polynomial term = Polynomial(Rational(binom)) * dwb::pow(s, n - k) * dwb::pow(D, k / 2);
    if (k % 2 == 0) f += term; else g += term;
    binom = binom * (n - k) / (k + 1);
  }
  return {f, g};
}

// +1 iff z^2 = a x^2 + b y^2 has a solution mod p^k with not all of x, y, z
// divisible by p. Full triple loop.
inline int hilbert_brute(long a, long b, long p, long k) {
  long q = 1;
  for (long i = 0; i < k; ++i) q *= p;
  auto md = [q](long long v) { return ((v % q) + q) % q; };
  for (long x = 0; x < q; ++x) {
    for (long y = 0; y < q; ++y) {
      const long long rhs = md(md(a) * md(1LL * x * x) + md(b) * md(1LL * y * y));
      for (long z = 0; z < q; ++z) {
        if (x % p == 0 && y % p == 0 && z % p == 0) continue;
        if (md(1LL * z * z) == rhs) return 1;
      }
    }
  }
  return -1;
}

// Determinant of the Sylvester matrix by fraction-exact elimination.
inline Rational sylvester_resultant(const Polynomial& f, const Polynomial& g) {
  const long m = static_cast<long>(f.degree_or_zero());
  const long n = static_cast<long>(g.degree_or_zero());
  const long size = m + n;
  std::vector<std::vector<Rational>> M(size, std::vector<Rational>(size, 0));
  for (long r = 0; r < n; ++r) {
    for (long i = 0; i <= m; ++i) M[r][r + i] = f.coeff(m - i);
  }
  for (long r = 0; r < m; ++r) {
    for (long i = 0; i <= n; ++i) M[n + r][r + i] = g.coeff(n - i);
  }
  Rational det = 1;
  for (long c = 0; c < size; ++c) {
    long piv = c;
    while (piv < size && M[piv][c] == 0) ++piv;
    if (piv == size) return 0;
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = -det;
    }
    det *= M[c][c];
    for (long r = c + 1; r < size; ++r) {
      const Rational factor = M[r][c] / M[c][c];
      for (long j = c; j < size; ++j) M[r][j] -= factor * M[c][j];
    }
  }
  return det;
}

// True when F is negative at some grid point k/den with |k/den| <= span.
inline bool grid_finds_negative(const Polynomial& F, long span, long den) {
  for (long k = -span * den; k <= span * den; ++k) {
    if (F.eval(Rational(k, den)) < 0) return true;
  }
  return false;
}

// Index decoding written directly from docs/theta.md.
inline std::vector<long> theta_coefficients(long n) {
  if (n == 1) return {};
  long k = n - 2;
  std::vector<int> digits;  // least significant first
  while (k > 0) {
    const int dgt = (k % 2 == 1) ? 1 : 2;
    digits.push_back(dgt);
    k = (k - dgt) / 2;
  }
  auto zz = [](long z) { return z % 2 == 0 ? z / 2 : -(z + 1) / 2; };
  std::vector<long> out;
  long run = 0;
  for (int dgt : digits) {
    if (dgt == 2) {
      ++run;
    } else {
      out.push_back(zz(run));
      run = 0;
    }
  }
  out.push_back(zz(run + 1));
  return out;
}

// Largest prime factor p of n with n / p dividing p - 1.
inline std::optional<std::pair<long, long>> special_split(long n) {
  long p = 0;
  long r = n;
  for (long q = 2; q * q <= r; ++q) {
    while (r % q == 0) {
      p = q;
      r /= q;
    }
  }
  if (r > 1) p = r;
  if (p == 0) return std::nullopt;
  const long m = n / p;
  if ((p - 1) % m != 0) return std::nullopt;
  return std::make_pair(p, m);
}

}  // namespace oracle
