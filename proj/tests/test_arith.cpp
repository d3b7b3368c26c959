#include <numeric>

#include "doctest.h"

#include "dwb/arith.hpp"

using namespace dwb;

namespace {

bool trial_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

long brute_order(long x, long n) {
  long v = x % n, k = 1;
  while (v != 1) {
    v = v * x % n;
    ++k;
  }
  return k;
}

}  // namespace

TEST_SUITE("arith") {

TEST_CASE("primality matches trial division") {
  for (long n = 0; n < 5000; ++n) CHECK(is_prime(static_cast<std::uint64_t>(n)) == trial_prime(n));
  CHECK(is_prime(Integer("18446744073709551557")));
  CHECK_THROWS_AS(is_prime(Integer("18446744073709551616")), std::domain_error);
}

TEST_CASE("totient and mobius from their definitions") {
  for (long n = 1; n <= 300; ++n) {
    long count = 0;
    for (long k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    CHECK(euler_phi(n) == count);
    long mu_sum = 0;
    for (long d : divisors(n)) mu_sum += mobius(d);
    CHECK(mu_sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("p-adic order") {
  CHECK(ord_p(Rational(12), 2) == Valuation(2));
  CHECK(ord_p(Rational(5, 27), 3) == Valuation(-3));
  CHECK(ord_p(Rational(0), 7).is_infinite());
  CHECK(ord_p(Rational(7, 3), 5) == Valuation(0));
  CHECK_THROWS_AS(ord_p(Rational(4), 4), std::invalid_argument);
}

TEST_CASE("chinese remainder") {
  const Integer c = crt({1, 8}, {25, 9});
  CHECK(c == 26);
  CHECK_THROWS_AS(crt({1, 2}, {6, 9}), std::invalid_argument);
}

TEST_CASE("roots of unity modulo prime powers have the requested order") {
  for (long p : {3L, 5L, 7L, 13L}) {
    for (long m : divisors(p - 1)) {
      for (long k = 1; k <= 3; ++k) {
        long q = 1;
        for (long i = 0; i < k; ++i) q *= p;
        const Integer c = hensel_root_of_unity(m, p, k);
        CHECK(brute_order(c.get_si(), q) == m);
        for (long smaller = 1; smaller < c.get_si(); ++smaller) {
          if (smaller % p != 0) CHECK(brute_order(smaller, q) != m);
        }
      }
    }
  }
}

TEST_CASE("four squares sum back") {
  for (long n = 0; n <= 2000; ++n) {
    const auto s = four_squares(n);
    CHECK(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3] == n);
    CHECK(s[0] >= s[1]);
    CHECK(s[1] >= s[2]);
    CHECK(s[2] >= s[3]);
    CHECK(s[3] >= 0);
  }
}

TEST_CASE("localized rings") {
  const RingDescriptor r = RingDescriptor::localized({2, 3});
  CHECK(r.contains(Rational(1, 5)));
  CHECK_FALSE(r.contains(Rational(1, 2)));
  CHECK(r.is_unit(Rational(5, 7)));
  CHECK_FALSE(r.is_unit(Rational(6, 7)));
  CHECK(r.non_invertible_product() == 6);
  CHECK(r.to_string() == "Z_(2,3)[t]");
  CHECK(RingDescriptor::rationals().to_string() == "Q[t]");
  CHECK_THROWS_AS(RingDescriptor::localized({4}), std::invalid_argument);
}

TEST_CASE("inverse closure and the nonzero gate") {
  const RingDescriptor r = RingDescriptor::localized({2});
  const InverseClosure ic = local_inverse_closure(Rational(3, 5), r);
  CHECK(ic.inverse == Rational(1, 5));
  CHECK(3 * ic.x1 + 5 * ic.x2 == 1);
  const GateValue g = nonzero_gate(Rational(3, 5), 2, r);
  CHECK(g.value == Rational(1, 5));
  CHECK(g.value != 0);
}

}  // TEST_SUITE
