#include "dwb/qforms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dwb {

Place Place::finite(long p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument("place needs a prime, got " + std::to_string(p));
  }
  return {p};
}

std::string Place::to_string() const {
  return is_real() ? "real" : "p:" + std::to_string(prime);
}

namespace {

// Same square class as q, integral.
Integer square_class_integer(const Rational& q) { return q.get_num() * q.get_den(); }

long strip(Integer& x, const Integer& p) {
  return static_cast<long>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

int legendre(const Integer& u, long p) {
  return mpz_kronecker_si(u.get_mpz_t(), p);
}

// Removes p^2 factors; returns the remaining order (0 or 1).
long strip_squares(Integer& x, long p) {
  long e = 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) {
    x /= p;
    ++e;
  }
  for (long i = 0; i < e % 2; ++i) x *= p;
  return e % 2;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (sgn(a) == 0 || sgn(b) == 0) throw std::invalid_argument("hilbert symbol needs nonzero a, b");
  if (v.is_real()) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  const long p = v.prime;
  const Integer P(p);
  Integer u = square_class_integer(a);
  Integer w = square_class_integer(b);
  const long alpha = strip(u, P);
  const long beta = strip(w, P);
  if (p != 2) {
    int s = (alpha * beta % 2 == 1 && (p - 1) / 2 % 2 == 1) ? -1 : 1;
    if (beta % 2 == 1) s *= legendre(u, p);
    if (alpha % 2 == 1) s *= legendre(w, p);
    return s;
  }
  auto eps = [](const Integer& x) { return mod(x, 4) == 3 ? 1 : 0; };
  auto omega = [](const Integer& x) {
    const Integer r = mod(x, 8);
    return (r == 3 || r == 5) ? 1 : 0;
  };
  const long e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
  return e % 2 == 0 ? 1 : -1;
}

long oracle_precision(const Integer& a, const Integer& b, long p) {
  if (a == 0 || b == 0) throw std::invalid_argument("oracle needs nonzero a, b");
  Integer x = a, y = b;
  const long m = std::max(strip_squares(x, p), strip_squares(y, p));
  const long delta = (p == 2 ? 1 : 0) + m;
  return 2 * delta + 1;
}

int local_solubility_oracle(const Integer& a, const Integer& b, long p, long k) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument("oracle needs a prime");
  }
  const long need = oracle_precision(a, b, p);
  if (k < need) {
    throw std::invalid_argument("insufficient precision: k=" + std::to_string(k) +
                                " but lifting needs k >= " + std::to_string(need));
  }
  const Integer Mz = ipow(Integer(p), static_cast<unsigned long>(k));
  if (Mz > 10000000) throw std::invalid_argument("modulus p^k above 10^7");
  const long M = Mz.get_si();
  Integer x = a, y = b;
  strip_squares(x, p);
  strip_squares(y, p);
  const long A = mod(x, Mz).get_si();
  const long B = mod(y, Mz).get_si();
  std::vector<char> square(static_cast<std::size_t>(M), 0);
  for (long t = 0; t < M; ++t) square[static_cast<std::size_t>(t * t % M)] = 1;
  // A primitive solution has x or y a unit (otherwise z is divisible by p too);
  // scale that coordinate to 1.
  for (long t = 0; t < M; ++t) {
    const long t2 = t * t % M;
    if (square[static_cast<std::size_t>((A + B * t2) % M)]) return 1;
    if (square[static_cast<std::size_t>((A * t2 + B) % M)]) return 1;
  }
  return -1;
}

FormDiagnosis anisotropy_report(const Rational& a, const Rational& b) {
  if (sgn(a) == 0 || sgn(b) == 0) throw std::invalid_argument("form needs nonzero a, b");
  FormDiagnosis out;
  out.a = a;
  out.b = b;
  std::set<long> primes{2};
  for (const Integer& x : {a.get_num(), a.get_den(), b.get_num(), b.get_den()}) {
    Integer y = abs(x);
    if (y > Integer(1) << 62) throw std::invalid_argument("form entries too large to factor");
    for (auto [p, e] : factorize(y.get_si())) primes.insert(p);
  }
  out.symbols[Place::real()] = hilbert_symbol(a, b, Place::real());
  for (long p : primes) out.symbols[Place::finite(p)] = hilbert_symbol(a, b, Place::finite(p));
  int product = 1;
  for (const auto& [v, s] : out.symbols) {
    product *= s;
    if (s < 0) out.anisotropic_places.push_back(v);
  }
  out.globally_isotropic = out.anisotropic_places.empty();
  out.checks.push_back(make_check("reciprocity", product == 1,
                                  "product over " + std::to_string(out.symbols.size()) +
                                      " places = " + std::to_string(product)));

  long n1 = 0, n2 = 0, n3 = 0;
  bool ok1 = true, ok2 = true, ok3 = true;
  for (long p : primes) {
    if (p == 2) continue;
    const Integer P(p);
    const long oa = ord_p(a, P).value();
    const long ob = ord_p(b, P).value();
    const int s = out.symbols[Place::finite(p)];
    if (oa != 0) continue;
    const bool nonresidue = legendre(square_class_integer(a), p) == -1;
    if (nonresidue && ob % 2 != 0) {
      ++n1;
      ok1 = ok1 && s == -1;
    }
    if (ob == 0) {
      ++n2;
      ok2 = ok2 && s == 1;
    }
    if (ob % 2 == 0) {
      ++n3;
      ok3 = ok3 && s == 1;
    }
  }
  out.checks.push_back(make_check("nonresidue_odd_order_anisotropic", ok1,
                                  std::to_string(n1) + " odd places apply"));
  out.checks.push_back(make_check("units_isotropic", ok2, std::to_string(n2) + " odd places apply"));
  out.checks.push_back(make_check("unit_even_order_isotropic", ok3,
                                  std::to_string(n3) + " odd places apply"));
  return out;
}

EisensteinCert eisenstein_certify(const Polynomial& f, long p) {
  const auto deg = f.degree();
  if (!deg || *deg < 2) throw std::invalid_argument("Eisenstein certificate needs degree >= 2");
  EisensteinCert out;
  out.p = p;
  out.degree = static_cast<long>(*deg);
  const Integer P(p);
  long max_finite = 0;
  for (std::size_t i = 0; i <= *deg; ++i) {
    out.valuations.push_back(ord_p(f.coeff(i), P));
    if (!out.valuations.back().is_infinite()) {
      max_finite = std::max(max_finite, out.valuations.back().value());
    }
  }
  const std::size_t m = *deg;
  auto fits = [&](long r) {
    if (!(out.valuations[m] == Valuation(0))) return false;
    for (std::size_t i = 1; i < m; ++i) {
      if (out.valuations[i] < Valuation(r)) return false;
    }
    return out.valuations[0] == Valuation(r - 1) && std::gcd(out.degree, r - 1) == 1;
  };
  for (long r = 2; r <= max_finite + 1; ++r) {
    if (fits(r)) {
      out.r = r;
      break;
    }
  }
  // Report against the found parameter, or the only one the constant term allows.
  long r = out.r;
  if (r == 0 && !out.valuations[0].is_infinite()) r = out.valuations[0].value() + 1;
  bool middle = true;
  for (std::size_t i = 1; i < m; ++i) middle = middle && !(out.valuations[i] < Valuation(r));
  out.checks.push_back(make_check("leading_unit", out.valuations[m] == Valuation(0),
                                  "ord a_" + std::to_string(m) + " = " + out.valuations[m].to_string()));
  out.checks.push_back(make_check("middle_orders", middle, "ord a_i >= " + std::to_string(r)));
  out.checks.push_back(make_check("constant_order", r > 1 && out.valuations[0] == Valuation(r - 1),
                                  "ord a_0 = " + out.valuations[0].to_string() + ", r = " +
                                      std::to_string(r)));
  out.checks.push_back(make_check("degree_coprime", r > 1 && std::gcd(out.degree, r - 1) == 1,
                                  "gcd(" + std::to_string(out.degree) + ", " +
                                      std::to_string(r - 1) + ")"));
  out.verdict = out.r != 0;
  return out;
}

namespace {

void require_even_nonconstant(const Polynomial& f) {
  if (f.is_constant()) throw std::invalid_argument("f is not a constant: required nonconstant f");
  if (*f.degree() % 2 != 0) {
    throw std::invalid_argument("deg f must be even (odd degree is the no-solution direction)");
  }
}

long initial_shift(const Polynomial& F, long p) {
  const std::size_t n = *F.degree();
  const Rational an = F.leading();
  long r = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (sgn(F.coeff(i)) == 0) continue;
    r = std::max(r, 2 - ord_p(F.coeff(i) / an, Integer(p)).value());
  }
  return r;
}

}  // namespace

PadicXi padic_xi_construct(const Polynomial& f, const std::vector<long>& primes) {
  require_even_nonconstant(f);
  if (primes.empty()) throw std::invalid_argument("need at least one prime");
  std::set<long> seen;
  for (long p : primes) {
    Place::finite(p);
    if (!seen.insert(p).second) throw std::invalid_argument("repeated prime " + std::to_string(p));
  }
  PadicXi out;
  const Polynomial T = Polynomial::variable();
  out.F = pow(f, 3) + T;
  const long n = static_cast<long>(*out.F.degree());
  const Rational an = out.F.leading();
  std::vector<long> shifts;
  for (long p : primes) shifts.push_back(initial_shift(out.F, p));

  for (int attempt = 0; attempt < 16; ++attempt) {
    Rational xi1 = 1 / an;
    Rational xi3 = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      xi1 *= Rational(ipow(Integer(primes[i]), static_cast<unsigned long>(n * shifts[i])));
      xi3 *= primes[i];
    }
    out.xi = {xi1, Rational(1), xi3};
    out.locals.clear();
    bool all = true;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const Rational scale = 1 / Rational(ipow(Integer(primes[i]), static_cast<unsigned long>(shifts[i])));
      const Polynomial h = out.F.compose(T * Polynomial(scale)) * Polynomial(xi1) + Polynomial(xi3);
      EisensteinCert cert = eisenstein_certify(h, primes[i]);
      if (!cert.verdict) {
        all = false;
        ++shifts[i];
      }
      out.locals.push_back({primes[i], shifts[i], h, std::move(cert)});
    }
    if (all) return out;
  }
  throw std::runtime_error("no Eisenstein shift found");
}

PadicXi padic_xi_construct(const Polynomial& f, long p,
                           std::optional<std::pair<Rational, Rational>> form) {
  if (form && hilbert_symbol(form->first, form->second, Place::finite(p)) == 1) {
    throw std::invalid_argument("form is isotropic at p:" + std::to_string(p));
  }
  return padic_xi_construct(f, std::vector<long>{p});
}

RealXi real_xi_construct(const Polynomial& f) {
  require_even_nonconstant(f);
  RealXi out;
  const Rational xi1 = sgn(f.leading()) > 0 ? 1 : -1;
  const Polynomial g = pow(f, 3) * Polynomial(xi1) + Polynomial::variable();
  const Rational B = cauchy_bound(g);
  out.xi = {xi1, Rational(1), 1 + B};
  out.h = g + Polynomial(out.xi.xi3);
  out.real_roots = sturm_real_roots(out.h);
  if (out.real_roots != 0) {
    // |g| <= sum |a_i| B^i on [-B, B] and g > 0 outside it.
    Rational bound = 1;
    Rational power = 1;
    for (std::size_t i = 0; i <= *g.degree(); ++i) {
      bound += abs(g.coeff(i)) * power;
      power *= B;
    }
    out.xi.xi3 = bound;
    out.h = g + Polynomial(bound);
    out.real_roots = sturm_real_roots(out.h);
    out.used_fallback = true;
  }
  return out;
}

ParityGate even_order_gate(const RationalFunction& g) {
  const Polynomial T = Polynomial::variable();
  const Polynomial& N = g.numerator();
  const Polynomial& D = g.denominator();
  ParityGate out{RationalFunction(T * N * N + T * T * D * D, D * D), g.order_at_infinity(),
                 Valuation(0), false, false};
  out.ord_h = out.h.order_at_infinity();
  out.h_even = !out.ord_h.is_infinite() && out.ord_h.value() % 2 == 0;
  const bool g_nonneg = out.ord_g.is_infinite() || out.ord_g.value() >= 0;
  out.biconditional = g_nonneg == out.h_even;
  return out;
}

}  // namespace dwb
