#include <cmath>
#include <numeric>

#include "doctest.h"

#include "dwb/qforms.hpp"
#include "oracles.hpp"

using namespace dwb;

namespace {

bool has_place(const FormDiagnosis& d, const Place& v) {
  for (const auto& w : d.anisotropic_places) {
    if (w == v) return true;
  }
  return false;
}

long strip_squares(long a, long p) {
  while (a % (p * p) == 0) a /= p * p;
  return a;
}

// ord a_deg = 0, ord a_i >= r in between, ord a_0 = r - 1, gcd(deg, r - 1) = 1.
bool eisenstein_shape(const Polynomial& h, long p, long r) {
  const long deg = static_cast<long>(h.degree_or_zero());
  if (ord_p(h.coeff(deg), p) != Valuation(0)) return false;
  for (long i = 1; i < deg; ++i) {
    const Valuation v = ord_p(h.coeff(i), p);
    if (!v.is_infinite() && v.value() < r) return false;
  }
  return ord_p(h.coeff(0), p) == Valuation(r - 1) && std::gcd(deg, r - 1) == 1;
}

}  // namespace

TEST_SUITE("qforms") {

TEST_CASE("closed-form symbols match the triple-loop search") {
  for (long p : {2L, 3L}) {
    for (long a = -10; a <= 10; ++a) {
      for (long b = -10; b <= 10; ++b) {
        if (a == 0 || b == 0) continue;
        const long sa = strip_squares(a, p), sb = strip_squares(b, p);
        const long k = oracle_precision(sa, sb, p);
        if (std::pow(static_cast<double>(p), static_cast<double>(k)) > 200) continue;
        CHECK_MESSAGE(hilbert_symbol(a, b, Place::finite(p)) == oracle::hilbert_brute(sa, sb, p, k),
                      "a=", a, " b=", b, " p=", p);
      }
    }
  }
  for (auto [a, b] : {std::pair{2L, 5L}, {3L, 5L}, {5L, 5L}, {7L, 3L}, {-1L, 7L}, {3L, 7L}}) {
    for (long p : {5L, 7L}) {
      CHECK(hilbert_symbol(a, b, Place::finite(p)) == oracle::hilbert_brute(a, b, p, oracle_precision(a, b, p)));
    }
  }
}

TEST_CASE("library oracle agrees with the triple loop") {
  for (long a : {-3L, -1L, 2L, 3L, 6L}) {
    for (long b : {-2L, 1L, 5L, 7L}) {
      const long k = oracle_precision(a, b, 3);
      CHECK(local_solubility_oracle(a, b, 3, k) == oracle::hilbert_brute(a, b, 3, k));
    }
  }
  CHECK_THROWS_AS(local_solubility_oracle(2, 3, 2, 1), std::invalid_argument);
}

TEST_CASE("real place and rational inputs") {
  CHECK(hilbert_symbol(-1, -1, Place::real()) == -1);
  CHECK(hilbert_symbol(-1, 3, Place::real()) == 1);
  // Square factors do not change the symbol.
  CHECK(hilbert_symbol(Rational(2, 9), Rational(5), Place::finite(5)) == hilbert_symbol(2, 5, Place::finite(5)));
  CHECK(hilbert_symbol(Rational(8), Rational(20), Place::finite(5)) == hilbert_symbol(2, 5, Place::finite(5)));
  CHECK_THROWS_AS(Place::finite(6), std::invalid_argument);
}

TEST_CASE("anisotropy reports") {
  const FormDiagnosis iso = anisotropy_report(1, 7);
  CHECK(iso.globally_isotropic);
  CHECK(iso.anisotropic_places.empty());
  const FormDiagnosis d = anisotropy_report(2, 5);
  CHECK_FALSE(d.globally_isotropic);
  CHECK(has_place(d, Place::finite(5)));
  CHECK(has_place(d, Place::finite(2)));
  CHECK(d.anisotropic_places.size() % 2 == 0);
  const FormDiagnosis q = anisotropy_report(-1, -1);
  CHECK(has_place(q, Place::real()));
  CHECK(has_place(q, Place::finite(2)));
  for (const auto& f : {iso, d, q}) {
    for (const auto& c : f.checks) CHECK(c.status == Status::pass);
  }
}

TEST_CASE("Eisenstein certificates") {
  const EisensteinCert ok = eisenstein_certify(Polynomial::parse("T^2 + 2"), 2);
  CHECK(ok.verdict);
  CHECK(ok.r == 2);
  const EisensteinCert high = eisenstein_certify(Polynomial::parse("T^3 + 9T + 3"), 3);
  CHECK(high.verdict);
  CHECK(high.r == 2);
  CHECK_FALSE(eisenstein_certify(Polynomial::parse("T^2 + 2T + 2"), 2).verdict);
  CHECK_FALSE(eisenstein_certify(Polynomial::parse("T^2 + 4"), 2).verdict);
  CHECK_THROWS_AS(eisenstein_certify(Polynomial::parse("T + 2"), 2), std::invalid_argument);
}

TEST_CASE("p-adic xi triples certify f^3 + T") {
  for (const char* text : {"T^2 + 1", "T^2 - 3", "2T^4 + T + 5"}) {
    const Polynomial f = Polynomial::parse(text);
    const PadicXi x = padic_xi_construct(f, std::vector<long>{3, 5});
    CHECK(x.F == f * f * f + Polynomial::variable());
    CHECK(x.locals.size() == 2);
    for (const auto& l : x.locals) {
      CHECK(l.cert.verdict);
      CHECK(eisenstein_shape(l.h, l.p, l.cert.r));
    }
  }
  CHECK_THROWS(padic_xi_construct(Polynomial::parse("T^3 + 1"), 3));
}

TEST_CASE("real xi triples remove every real root") {
  for (const char* text : {"T^2 - 3", "-T^2 + 5", "T^4 - 10T^2 + 1", "3T^2 + T - 7"}) {
    const RealXi x = real_xi_construct(Polynomial::parse(text));
    CHECK(x.real_roots == 0);
    CHECK_FALSE(oracle::grid_finds_negative(x.h, 30, 8));
  }
  CHECK_THROWS_AS(real_xi_construct(Polynomial(4)), std::invalid_argument);
}

TEST_CASE("even-order gate") {
  const Polynomial T = Polynomial::variable();
  for (const auto& [num, den] : {std::pair{Polynomial(1), T}, {T + Polynomial(1), T * T}, {T * T, Polynomial(1)},
                                 {T, Polynomial(1)}, {Polynomial(3), Polynomial(1)}}) {
    const ParityGate g = even_order_gate(RationalFunction(num, den));
    CHECK(g.biconditional);
    const bool nonneg = !g.ord_g.is_infinite() && g.ord_g.value() >= 0;
    CHECK(g.h_even == nonneg);
  }
}

}  // TEST_SUITE
