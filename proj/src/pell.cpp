#include "dwb/pell.hpp"

#include <stdexcept>

namespace dwb {

PellPair pell_pair(const Polynomial& s, long n) {
  if (s.is_constant()) throw std::invalid_argument("pell_pair needs a nonconstant s");
  QuadExtElement e = pow(QuadExtElement::epsilon(s), n);
  // e = f - sqrt(D) g
  return {n, e.u(), -e.w(), s};
}

bool pell_identity(const Polynomial& f, const Polynomial& g, const Polynomial& s) {
  return f * f - (s * s - Polynomial(1)) * g * g == Polynomial(1);
}

Check check_degree_law(const Polynomial& s, long n) {
  if (n < 1) throw std::invalid_argument("degree law needs n >= 1");
  PellPair p = pell_pair(s, n);
  const std::size_t ds = s.degree_or_zero();
  const std::size_t want_f = static_cast<std::size_t>(n) * ds;
  const std::size_t want_g = static_cast<std::size_t>(n - 1) * ds;
  const bool ok = p.f.degree() == Degree(want_f) && p.g.degree() == Degree(want_g);
  return make_check("degree_law", ok,
                    "n=" + std::to_string(n) + " deg f=" + std::to_string(p.f.degree_or_zero()) +
                        " deg g=" + std::to_string(p.g.degree_or_zero()) + " expected (" +
                        std::to_string(want_f) + ", " + std::to_string(want_g) + ")");
}

Check check_divisibility_law(long l, long n, const Polynomial& s) {
  if (l < 1 || n < 1) throw std::invalid_argument("divisibility law needs l, n >= 1");
  const bool idx = n % l == 0;
  const bool poly = divides(pell_pair(s, l).g, pell_pair(s, n).g);
  return make_check("divisibility_law", idx == poly,
                    "l=" + std::to_string(l) + " n=" + std::to_string(n) +
                        " l|n=" + (idx ? "yes" : "no") + " g_l|g_n=" + (poly ? "yes" : "no"));
}

std::optional<PellIndex> recognize_solution(const Polynomial& f, const Polynomial& g,
                                            const Polynomial& s) {
  if (!pell_identity(f, g, s)) {
    throw std::invalid_argument("not a Pell solution: f^2 - (s^2-1) g^2 != 1");
  }
  const std::size_t ds = s.degree_or_zero();
  const std::size_t df = f.degree_or_zero();
  if (ds == 0 || df % ds != 0) return std::nullopt;
  const long n = static_cast<long>(df / ds);
  for (long idx : {n, -n}) {
    PellPair p = pell_pair(s, idx);
    for (int sign : {1, -1}) {
      if (f == p.f * Polynomial(sign) && g == p.g * Polynomial(sign)) return PellIndex{idx, sign};
    }
  }
  return std::nullopt;
}

Check wn_congruence(long n) {
  const Polynomial t = Polynomial::variable();
  const Polynomial w = pell_pair(t, n).g;
  const Polynomial diff = w - Polynomial(n);
  const bool ok = divides(t - Polynomial(1), diff);
  return make_check("wn_congruence", ok,
                    "n=" + std::to_string(n) + " w_n(1)=" + w.eval(1).get_str());
}

EpsQuotient eps_quotient(long n) {
  if (n < 0) throw std::invalid_argument("eps_quotient needs n >= 0");
  const Polynomial t = Polynomial::variable();
  const QuadExtElement eps = QuadExtElement::epsilon(t);
  const QuadExtElement one = QuadExtElement::constant(Polynomial(1), t);
  QuadDivision q = quad_divisible(pow(eps, n) - one, eps - one);
  if (!q.divisible) throw std::logic_error("eps - 1 must divide eps^n - 1");
  QuadDivision c = quad_divisible(*q.quotient - QuadExtElement::constant(Polynomial(n), t),
                                  eps - one);
  return {*q.quotient,
          make_check("eps_quotient_congruence", c.divisible,
                     "n=" + std::to_string(n) + " q_n - n divisible by eps - 1: " +
                         (c.divisible ? "yes" : "no"))};
}

}  // namespace dwb
