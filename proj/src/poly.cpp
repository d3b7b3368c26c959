#include "dwb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace dwb {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

Polynomial Polynomial::variable() { return monomial(1, 1); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  if (sgn(c) == 0) return {};
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_ints(std::initializer_list<long> ascending) {
  std::vector<Rational> v;
  for (long c : ascending) v.emplace_back(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Degree Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), is_integer);
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Polynomial(*it);
  return acc;
}

Polynomial Polynomial::truncate(std::size_t n) const {
  if (coeffs_.size() <= n) return *this;
  return Polynomial(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial out = *this;
  const Rational lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return {};
  Integer l = 1;
  Integer g = 0;
  for (const auto& c : coeffs_) l = lcm(l, Integer(c.get_den()));
  for (const auto& c : coeffs_) g = gcd(g, Integer(c.get_num() * (l / c.get_den())));
  Polynomial out = *this;
  const Rational scale(l, g);
  for (auto& c : out.coeffs_) {
    c *= scale;
    c.canonicalize();
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  Polynomial out;
  out.coeffs_ = std::move(v);
  out.trim();
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

std::string Polynomial::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    std::string mag = Rational(abs(c)).get_str();
    std::string term;
    if (k == 0) {
      term = mag;
    } else {
      term = (mag == "1" ? std::string() : mag + "*") + std::string(var);
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (out.empty()) {
      out = (sgn(c) < 0 ? "-" : "") + term;
    } else {
      out += (sgn(c) < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t i = 0;
  char var = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(s) + "': " + what);
  }
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek_digit() const { return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); }
  Integer number() {
    std::size_t start = i;
    while (peek_digit()) ++i;
    return Integer(std::string(s.substr(start, i - start)));
  }
  Polynomial term() {
    skip();
    Rational c = 1;
    bool have_coeff = false;
    if (peek_digit()) {
      Integer num = number();
      skip();
      Integer den = 1;
      if (i < s.size() && s[i] == '/') {
        ++i;
        skip();
        if (!peek_digit()) fail("expected denominator");
        den = number();
        if (den == 0) fail("zero denominator");
      }
      c = Rational(num, den);
      c.canonicalize();
      have_coeff = true;
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip();
        if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i]))) fail("dangling '*'");
      }
    }
    std::size_t k = 0;
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      char v = s[i++];
      if (var && v != var) fail("mixed variables");
      var = v;
      k = 1;
      skip();
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip();
        if (!peek_digit()) fail("expected exponent");
        k = to_u64(number());
      }
    } else if (!have_coeff) {
      fail("expected a term at position " + std::to_string(i));
    }
    return Polynomial::monomial(c, k);
  }
  Polynomial run() {
    Polynomial acc;
    skip();
    bool first = true;
    while (i < s.size()) {
      int sign = 1;
      skip();
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      } else if (!first) {
        fail("expected '+' or '-' at position " + std::to_string(i));
      }
      Polynomial t = term();
      acc += sign < 0 ? -t : t;
      first = false;
      skip();
    }
    if (first) fail("empty input");
    return acc;
  }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser{text}.run(); }

Polynomial pow(const Polynomial& f, unsigned long e) {
  Polynomial result(1);
  Polynomial base = f;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

DivMod divmod(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::size_t dg = *g.degree();
  std::vector<Rational> r = f.coefficients();
  if (r.size() <= dg) return {Polynomial(), f};
  std::vector<Rational> q(r.size() - dg, Rational(0));
  const Rational lc = g.leading();
  const auto& gc = g.coefficients();
  for (std::size_t k = r.size(); k-- > dg;) {
    if (sgn(r[k]) == 0) continue;
    Rational factor = r[k] / lc;
    q[k - dg] = factor;
    for (std::size_t j = 0; j <= dg; ++j) r[k - dg + j] -= factor * gc[j];
  }
  r.resize(dg);
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

bool divides(const Polynomial& g, const Polynomial& f) {
  if (g.is_zero()) return f.is_zero();
  return divmod(f, g).remainder.is_zero();
}

Polynomial exact_div(const Polynomial& f, const Polynomial& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) {
    throw std::domain_error(g.to_string() + " does not divide " + f.to_string());
  }
  return q;
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  Polynomial a = f;
  Polynomial b = g;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.primitive();
  }
  return a.monic();
}

Rational resultant(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of the zero polynomial");
  Rational scale = 1;
  Polynomial a = f;
  Polynomial b = g;
  for (;;) {
    const std::size_t m = *a.degree();
    const std::size_t n = *b.degree();
    if (n == 0) {
      Rational bc;
      mpz_pow_ui(mpq_numref(bc.get_mpq_t()), b.leading().get_num_mpz_t(), m);
      mpz_pow_ui(mpq_denref(bc.get_mpq_t()), b.leading().get_den_mpz_t(), m);
      return scale * bc;
    }
    if (m == 0) {
      Rational ac;
      mpz_pow_ui(mpq_numref(ac.get_mpq_t()), a.leading().get_num_mpz_t(), n);
      mpz_pow_ui(mpq_denref(ac.get_mpq_t()), a.leading().get_den_mpz_t(), n);
      return scale * ac;
    }
    Polynomial r = divmod(a, b).remainder;
    if (r.is_zero()) return 0;
    const std::size_t dr = *r.degree();
    // Res(a, b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r)
    if ((m * n) % 2 == 1) scale = -scale;
    Rational lcb = b.leading();
    for (std::size_t k = 0; k < m - dr; ++k) scale *= lcb;
    a = std::move(b);
    b = std::move(r);
  }
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f) {
  std::vector<std::pair<Polynomial, int>> out;
  if (f.is_constant()) return out;
  Polynomial fm = f.monic();
  Polynomial d = fm.derivative();
  Polynomial a = gcd(fm, d);
  Polynomial b = exact_div(fm, a);
  Polynomial c = exact_div(d, a) - b.derivative();
  for (int i = 1; !b.is_constant(); ++i) {
    Polynomial ai = gcd(b, c);
    if (!ai.is_constant()) out.emplace_back(ai, i);
    b = exact_div(b, ai);
    c = exact_div(c, ai) - b.derivative();
  }
  return out;
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) return {};
  if (f.is_constant()) return Polynomial(1);
  return exact_div(f, gcd(f, f.derivative())).monic();
}

namespace {

std::vector<Polynomial> sturm_chain(const Polynomial& f) {
  std::vector<Polynomial> chain{squarefree_part(f)};
  chain.push_back(chain[0].derivative());
  while (!chain.back().is_constant()) {
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    // Positive rescaling keeps the signs the chain depends on.
    chain.push_back(-r.primitive());
  }
  return chain;
}

int sign_at(const Polynomial& p, const Rational& x) { return sgn(p.eval(x)); }

int sign_at_infinity(const Polynomial& p, bool positive) {
  int s = sgn(p.leading());
  if (!positive && p.degree_or_zero() % 2 == 1) s = -s;
  return s;
}

template <typename SignFn>
long variations(const std::vector<Polynomial>& chain, SignFn sign) {
  long v = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sign(p);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

long sturm_real_roots(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("sturm count of the zero polynomial");
  if (f.is_constant()) return 0;
  auto chain = sturm_chain(f);
  return variations(chain, [](const Polynomial& p) { return sign_at_infinity(p, false); }) -
         variations(chain, [](const Polynomial& p) { return sign_at_infinity(p, true); });
}

long sturm_real_roots(const Polynomial& f, const Rational& lo, const Rational& hi) {
  if (f.is_zero()) throw std::invalid_argument("sturm count of the zero polynomial");
  if (hi < lo || f.is_constant()) return 0;
  auto chain = sturm_chain(f);
  long count = variations(chain, [&](const Polynomial& p) { return sign_at(p, lo); }) -
               variations(chain, [&](const Polynomial& p) { return sign_at(p, hi); });
  if (sgn(chain[0].eval(lo)) == 0) ++count;
  return count;
}

Rational cauchy_bound(const Polynomial& f) {
  if (f.is_constant()) return 1;
  Rational m = 0;
  const Rational lc = abs(f.leading());
  for (std::size_t k = 0; k + 1 < f.coefficients().size(); ++k) {
    m = std::max(m, Rational(abs(f.coefficients()[k]) / lc));
  }
  return 1 + m;
}

namespace {

/// Positive divisors of |n| for n != 0, with trial division to 10^6.
std::vector<Integer> integer_divisors(const Integer& n) {
  Integer v = abs(n);
  std::vector<std::pair<Integer, int>> fac;
  for (unsigned long p = 2; Integer(p) * p <= v; ++p) {
    if (p > 1000000) throw std::domain_error("coefficient too large to factor: " + n.get_str());
    int e = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
      v /= p;
      ++e;
    }
    if (e) fac.emplace_back(Integer(p), e);
  }
  if (v > 1) fac.emplace_back(v, 1);
  std::vector<Integer> out{1};
  for (auto& [p, e] : fac) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial linear(const Rational& root) { return Polynomial({Rational(-root), Rational(1)}); }

bool factor_less(const std::pair<Polynomial, int>& a, const std::pair<Polynomial, int>& b) {
  if (a.first.degree() != b.first.degree()) return degree_less(a.first.degree(), b.first.degree());
  const auto& ca = a.first.coefficients();
  const auto& cb = b.first.coefficients();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

/// Integer quadratic pair (A T^2 + B T + C)(D T^2 + E T + F) equal to a
/// primitive quartic with no rational roots.
std::optional<std::pair<Polynomial, Polynomial>> split_quartic(const Polynomial& f) {
  std::vector<Integer> a(5);
  for (int k = 0; k < 5; ++k) a[k] = f.coeff(k).get_num();
  auto check = [&](const Integer& A, const Integer& B, const Integer& C, const Integer& D,
                   const Integer& E, const Integer& F)
      -> std::optional<std::pair<Polynomial, Polynomial>> {
    Polynomial p({Rational(C), Rational(B), Rational(A)});
    Polynomial q({Rational(F), Rational(E), Rational(D)});
    if (p * q == f) return std::make_pair(p, q);
    return std::nullopt;
  };
  for (const Integer& A : integer_divisors(a[4])) {
    const Integer D = a[4] / A;
    for (const Integer& c0 : integer_divisors(a[0])) {
      for (int sgnc : {1, -1}) {
        const Integer C = c0 * sgnc;
        const Integer F = a[0] / C;
        // a3 = A E + B D, a1 = B F + C E
        const Integer det = D * C - A * F;
        if (det != 0) {
          const Integer bn = a[3] * C - A * a[1];
          const Integer en = D * a[1] - F * a[3];
          if (!mpz_divisible_p(bn.get_mpz_t(), det.get_mpz_t()) ||
              !mpz_divisible_p(en.get_mpz_t(), det.get_mpz_t())) {
            continue;
          }
          if (auto r = check(A, bn / det, C, D, en / det, F)) return r;
          continue;
        }
        // Degenerate: B E = K and A E = a3 - B D, so D B^2 - a3 B + A K = 0.
        const Integer K = a[2] - A * F - C * D;
        Polynomial quad({Rational(A * K), Rational(-a[3]), Rational(D)});
        for (const Rational& B : rational_roots(quad)) {
          if (!is_integer(B)) continue;
          const Integer bi = B.get_num();
          const Integer en = a[3] - bi * D;
          if (!mpz_divisible_p(en.get_mpz_t(), A.get_mpz_t())) continue;
          if (auto r = check(A, bi, C, D, en / A, F)) return r;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("rational roots of the zero polynomial");
  std::set<Rational> roots;
  Polynomial g = f.primitive();
  // Strip the root at zero so the constant term is nonzero.
  std::size_t low = 0;
  while (sgn(g.coeff(low)) == 0) ++low;
  if (low > 0) {
    roots.insert(Rational(0));
    g = Polynomial(std::vector<Rational>(g.coefficients().begin() + low, g.coefficients().end()));
  }
  if (!g.is_constant()) {
    const auto nums = integer_divisors(g.coeff(0).get_num());
    const auto dens = integer_divisors(g.leading().get_num());
    for (const auto& p : nums) {
      for (const auto& q : dens) {
        for (int s : {1, -1}) {
          Rational r(p * s, q);
          r.canonicalize();
          if (sgn(g.eval(r)) == 0) roots.insert(r);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

Polynomial Factorization::expand() const {
  Polynomial out(unit);
  for (const auto& [p, e] : factors) out *= pow(p, static_cast<unsigned long>(e));
  return out;
}

Factorization factor_small(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  if (f.degree_or_zero() > 4) {
    throw std::invalid_argument("factor_small handles degree at most 4, got " +
                                std::to_string(f.degree_or_zero()));
  }
  Factorization out{f.leading(), {}};
  Polynomial rest = f.monic();
  auto add = [&](const Polynomial& p) {
    for (auto& [q, e] : out.factors) {
      if (q == p) {
        ++e;
        return;
      }
    }
    out.factors.emplace_back(p, 1);
  };
  for (const Rational& r : rational_roots(rest)) {
    Polynomial lin = linear(r);
    while (divides(lin, rest)) {
      add(lin);
      rest = exact_div(rest, lin);
    }
  }
  if (rest.degree_or_zero() == 4) {
    if (auto split = split_quartic(rest.primitive())) {
      Polynomial p = split->first.monic();
      Polynomial q = split->second.monic();
      add(p);
      add(q);
      rest = Polynomial(1);
    }
  }
  // Anything left has no rational root: degree 2 or 3 is then irreducible,
  // and a quartic that failed to split into quadratics is too.
  if (!rest.is_constant()) add(rest);
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  return out;
}

bool is_irreducible_small(const Polynomial& f) {
  if (f.is_constant()) return false;
  auto fac = factor_small(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  Polynomial g = gcd(num, den);
  if (!g.is_zero() && !g.is_constant()) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  if (num.is_zero()) den = Polynomial(1);
  const Rational lc = den.leading();
  num_ = num * Polynomial(Rational(1) / lc);
  den_ = den.monic();
}

Valuation RationalFunction::order_at_infinity() const {
  if (num_.is_zero()) return Valuation::infinity();
  return Valuation(static_cast<long>(den_.degree_or_zero()) -
                   static_cast<long>(num_.degree_or_zero()));
}

std::string RationalFunction::to_string(std::string_view var) const {
  if (den_.is_constant()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace dwb
