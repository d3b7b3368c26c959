#include "dwb/defsys.hpp"

#include <set>
#include <stdexcept>

#include "dwb/pell.hpp"

namespace dwb {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::accepted: return "accepted";
    case Verdict::refuted: return "refuted";
    case Verdict::refuted_to_bound: return "refuted_to_bound";
    case Verdict::invalid: return "invalid";
  }
  return "invalid";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::measured: return "measured";
    case Status::exhausted: return "exhausted";
  }
  return "fail";
}

namespace {

const Polynomial& T() {
  static const Polynomial t = Polynomial::variable();
  return t;
}

QuadExtElement qconst(const Rational& c) { return QuadExtElement::constant(Polynomial(c), T()); }

const QuadExtElement& eps() {
  static const QuadExtElement e = QuadExtElement::epsilon(T());
  return e;
}

std::string sign_str(int s) { return s > 0 ? "+" : "-"; }

}  // namespace

Polynomial combine_and(const Polynomial& f, const Polynomial& g, const Polynomial& h) {
  if (h.is_constant() || h.leading() != 1) {
    throw std::invalid_argument("combiner polynomial must be monic of positive degree");
  }
  // A polynomial over Q has a root in Q(t) exactly when it has one in Q.
  if (!rational_roots(h).empty()) {
    throw std::invalid_argument("combiner polynomial " + h.to_string() + " has a rational root");
  }
  const std::size_t n = *h.degree();
  Polynomial out;
  for (std::size_t i = 0; i <= n; ++i) {
    out += Polynomial(h.coeff(i)) * pow(f, n - i) * pow(g, i);
  }
  return out;
}

WitnessReport constants_system(const Polynomial& x, const RingDescriptor& ring, long s_size) {
  WitnessReport rep;
  rep.system = "constants";
  rep.inputs = {{"x", x.to_string("t")}, {"ring", ring.to_string()},
                {"s_size", std::to_string(s_size)}};
  if (s_size < 0) throw std::invalid_argument("s_size must be non-negative");
  for (const auto& c : x.coefficients()) {
    if (!ring.contains(c)) {
      rep.notes.push_back("x is not in " + ring.to_string());
      return rep;
    }
  }
  const Polynomial pi(Rational(ring.non_invertible_product()));
  Fields witness;
  bool ok = true;
  for (long k = 1; k <= s_size + 1; ++k) {
    Polynomial e = pi * x * x + pi * Polynomial(k - 1) + Polynomial(1);
    const bool unit = e.is_constant() && ring.is_unit(e.coeff(0));
    rep.checks.push_back(make_check("unit_" + std::to_string(k), unit,
                                    e.to_string("t") + (unit ? " is a unit" : " is not a unit")));
    if (unit) {
      Rational j = 1 / e.coeff(0);
      witness.emplace_back("j" + std::to_string(k), j.get_str());
    } else {
      ok = false;
    }
  }
  // Inverses are unique, so the decision is exact.
  rep.verdict = ok ? Verdict::accepted : Verdict::refuted;
  if (ok) {
    rep.witnesses.push_back(witness);
    rep.fold_count = 1;
  }
  return rep;
}

SingleFoldInt::SingleFoldInt(long bound) : bound_(bound) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  const QuadExtElement one = qconst(1);
  const QuadExtElement em1 = eps() - one;
  for (long n = -bound; n <= bound; ++n) {
    const QuadExtElement p = pow(eps(), n);
    for (int sign : {1, -1}) {
      QuadDivision q = quad_divisible((sign > 0 ? p : -p) - one, em1);
      if (q.divisible) entries_.push_back({n, sign, *q.quotient});
    }
  }
}

WitnessReport SingleFoldInt::check(const Polynomial& c) const {
  WitnessReport rep;
  rep.system = "singlefold-int";
  rep.inputs = {{"c", c.to_string("t")}};
  rep.bound = bound_;
  const QuadExtElement em1 = eps() - qconst(1);
  const QuadExtElement cq = QuadExtElement::constant(c, T());
  for (const auto& e : entries_) {
    if (!c.is_constant()) break;
    if (!quad_divisible(cq - e.z, em1).divisible) continue;
    const QuadExtElement p = pow(eps(), e.n);
    const Polynomial u = p.u() * Polynomial(e.sign);
    const Polynomial w = -p.w() * Polynomial(e.sign);
    if (!pell_identity(u, w, T())) throw std::logic_error("eps-power violates the Pell identity");
    rep.witnesses.push_back({{"n", std::to_string(e.n)},
                             {"sign", sign_str(e.sign)},
                             {"u", u.to_string("t")},
                             {"w", w.to_string("t")}});
  }
  rep.checks.push_back(make_check("constant", c.is_constant(), c.to_string("t")));
  rep.fold_count = static_cast<long>(rep.witnesses.size());
  rep.verdict = rep.witnesses.empty() ? Verdict::refuted_to_bound : Verdict::accepted;
  return rep;
}

WitnessReport singlefold_int(const Polynomial& c, long bound) {
  return SingleFoldInt(bound).check(c);
}

ExpSystem::ExpSystem(long exponent, long bound) : exponent_(exponent), bound_(bound) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  const QuadExtElement one = qconst(1);
  const QuadExtElement em1 = eps() - one;
  const QuadExtElement em1sq = em1 * em1;
  const QuadExtElement lhs = qconst(exponent) * em1;
  QuadExtElement p = one;
  for (long n = 0; n <= bound; ++n) {
    for (int sign : {1, -1}) {
      QuadDivision q = quad_divisible(lhs - qconst(sign) * (p - one), em1sq);
      if (q.divisible) candidates_.push_back({n, sign, *q.quotient, p});
    }
    p = p * eps();
  }
}

bool ExpSystem::quick_accepts(const Integer& base, const Integer& result) const {
  if (base == 0) throw std::invalid_argument("base must be nonzero");
  // At the point where eps = base the first condition reads base^n = s1*result.
  for (const Rational& v : point_values(base)) {
    if (v == Rational(result) || v == Rational(-result)) return true;
  }
  return false;
}

std::vector<Rational> ExpSystem::point_values(const Integer& base) const {
  auto [t0, root] = eps_minus_b_point(Rational(base));
  std::vector<Rational> out;
  out.reserve(candidates_.size());
  for (const auto& c : candidates_) out.push_back(c.power.evaluate(t0, root));
  return out;
}

WitnessReport ExpSystem::check(const Integer& base, const Integer& result) const {
  if (base == 0) throw std::invalid_argument("base must be nonzero");
  WitnessReport rep;
  rep.system = "exp";
  rep.inputs = {{"base", base.get_str()},
                {"result", result.get_str()},
                {"exponent", std::to_string(exponent_)}};
  rep.bound = bound_;
  const QuadExtElement m = eps() - qconst(Rational(base));
  std::set<std::pair<std::string, std::string>> distinct;
  for (const auto& c : candidates_) {
    const QuadExtElement& p = c.power;
    for (int s1 : {1, -1}) {
      QuadDivision q = quad_divisible(p - qconst(Rational(result * s1)), m);
      if (!q.divisible) continue;
      const std::string xs = q.quotient->to_string("t");
      const std::string ys = c.y.to_string("t");
      if (!distinct.insert({std::to_string(c.n) + "|" + xs, ys}).second) continue;
      rep.witnesses.push_back({{"n", std::to_string(c.n)},
                               {"s1", sign_str(s1)},
                               {"s2", sign_str(c.sign)},
                               {"x", xs},
                               {"y", ys}});
    }
  }
  if (rep.witnesses.empty()) {
    // Report the remainder of the natural candidate to explain the refusal.
    const long n = exponent_ < 0 ? -exponent_ : exponent_;
    if (n <= bound_) {
      auto [t0, root] = eps_minus_b_point(Rational(base));
      Rational r = (pow(eps(), n) - qconst(Rational(result))).evaluate(t0, root);
      rep.notes.push_back("remainder of eps^" + std::to_string(n) + " - result modulo eps - base: " +
                          "value " + r.get_str() + " at the vanishing point of eps - base");
    }
  }
  rep.fold_count = static_cast<long>(rep.witnesses.size());
  rep.verdict = rep.witnesses.empty() ? Verdict::refuted_to_bound : Verdict::accepted;
  return rep;
}

WitnessReport exp_system(const Integer& base, const Integer& result, long exponent, long bound) {
  if (base == 0) throw std::invalid_argument("base must be nonzero");
  return ExpSystem(exponent, bound).check(base, result);
}

// ---- odd integers --------------------------------------------------------

std::vector<Check> odd_integer_relations(const OddIntegerWitness& w) {
  std::vector<Check> out;
  const Polynomial x = Polynomial::variable();
  const Polynomial s = w.a * x;
  if (s.is_constant()) {
    out.push_back(make_check("a_nonzero", false, "a = 0"));
    return out;
  }
  PellPair p2 = pell_pair(s, 2);
  PellPair p3 = pell_pair(s, 3);
  out.push_back(make_check("r0_pell_pairs", p2.f == w.f2 && p2.g == w.g2 && p3.f == w.f3 &&
                                                p3.g == w.g3,
                           "(f_i, g_i) generated from s = a*x for i = 2, 3"));
  out.push_back(make_check("r1_pell_identity", pell_identity(w.f, w.g, s),
                           "f^2 - (a^2 x^2 - 1) g^2 = 1"));
  out.push_back(make_check("r2_g3_divides_g", divides(w.g3, w.g), "g3 | g"));
  out.push_back(make_check("r3_t_divides_g3g2", !w.tvar.is_zero() && divides(w.tvar, w.g3 * w.g2),
                           "t | g3 g2"));
  out.push_back(make_check("r4_t_congruent_g", divides(w.g3 * w.g3, w.tvar - w.g),
                           "t = g mod g3^2"));
  out.push_back(make_check("r5_ax_divides_f", divides(s, w.f), "a x | f"));
  out.push_back(make_check("r6_a_is_t_over_g3", w.tvar == w.a * w.g3, "a = t / g3"));
  return out;
}

OddIntegerWitness odd_integer_witness(long r) {
  if (r % 2 == 0) throw std::invalid_argument("r must be odd, got " + std::to_string(r));
  const Polynomial a(r);
  const Polynomial s = a * Polynomial::variable();
  const long m = 3 * (r < 0 ? -r : r);
  PellPair pm = pell_pair(s, m);
  PellPair p2 = pell_pair(s, 2);
  PellPair p3 = pell_pair(s, 3);
  return {a, pm.f, pm.g * Polynomial(r < 0 ? -1 : 1), p2.f, p2.g, p3.f, p3.g, a * p3.g};
}

namespace {

Fields witness_fields(const OddIntegerWitness& w) {
  return {{"f", w.f.to_string("x")}, {"g", w.g.to_string("x")}, {"t", w.tvar.to_string("x")}};
}

}  // namespace

WitnessReport odd_integer_construct(long r) {
  WitnessReport rep;
  rep.system = "odd-int";
  rep.inputs = {{"r", std::to_string(r)}};
  OddIntegerWitness w = odd_integer_witness(r);
  rep.checks = odd_integer_relations(w);
  if (all_pass(rep.checks)) {
    rep.verdict = Verdict::accepted;
    rep.witnesses.push_back(witness_fields(w));
    rep.fold_count = 1;
  } else {
    rep.verdict = Verdict::invalid;
  }
  return rep;
}

WitnessReport odd_integer_check(const Polynomial& a, long bound) {
  WitnessReport rep;
  rep.system = "odd-int";
  rep.inputs = {{"a", a.to_string("x")}};
  rep.bound = bound;
  if (a.is_zero()) {
    rep.notes.push_back("a must be nonzero");
    return rep;
  }
  const Polynomial s = a * Polynomial::variable();
  PellPair p2 = pell_pair(s, 2);
  PellPair p3 = pell_pair(s, 3);
  for (long m = 1; m <= bound; ++m) {
    PellPair pm = pell_pair(s, m);
    for (int sf : {1, -1}) {
      for (int sg : {1, -1}) {
        OddIntegerWitness w{a, pm.f * Polynomial(sf), pm.g * Polynomial(sg), p2.f, p2.g, p3.f,
                            p3.g, a * p3.g};
        if (!all_pass(odd_integer_relations(w))) continue;
        Fields fields = witness_fields(w);
        fields.insert(fields.begin(), {"m", std::to_string(m)});
        rep.witnesses.push_back(fields);
      }
    }
  }
  rep.fold_count = static_cast<long>(rep.witnesses.size());
  rep.verdict = rep.witnesses.empty() ? Verdict::refuted_to_bound : Verdict::accepted;
  if (rep.fold_count > 1) {
    rep.notes.push_back("f -> -f preserves every relation, so witnesses come in sign pairs");
  }
  return rep;
}

WitnessReport integer_via_odd(const Rational& m, long bound) {
  Rational a = 2 * m + 1;
  a.canonicalize();
  WitnessReport rep = odd_integer_check(Polynomial(a), bound);
  rep.inputs.insert(rep.inputs.begin(), {"m", m.get_str()});
  return rep;
}

// ---- non-negativity ------------------------------------------------------

WitnessReport nonneg_gadget(long d, long bound) {
  WitnessReport rep;
  rep.system = "nonneg";
  rep.inputs = {{"d", std::to_string(d)}};
  if (d == 0) {
    rep.verdict = Verdict::accepted;
    rep.fold_count = 1;
    rep.witnesses.push_back({{"b", "1"}});
    rep.checks.push_back({"zero_convention", Status::measured,
                          "d = 0 accepted by convention; the modulus d^4 vanishes"});
    return rep;
  }
  const Integer dd(d);
  const Integer d4 = ipow(dd, 4);
  const Integer base = d4 + 1;
  const long e = 2 * (d < 0 ? -d : d);
  const Integer b = ipow(base, static_cast<unsigned long>(e));
  rep.bound = std::max(bound, e);
  WitnessReport exp = ExpSystem(2 * d, *rep.bound).check(base, b);
  rep.checks.push_back(make_check("exp_membership", exp.verdict == Verdict::accepted,
                                  "base=" + base.get_str() + " exponent=" + std::to_string(2 * d) +
                                      " folds=" + std::to_string(exp.fold_count)));
  const Integer q = (b - 1) / d4;
  const Integer lhs = mod(Integer(2 * d), d4);
  const Integer rhs = mod(q, d4);
  const bool congruent = lhs == rhs;
  std::string detail = "2d mod d^4 = " + lhs.get_str() + ", (b-1)/d^4 mod d^4 = " + rhs.get_str();
  if (d4 == 1) {
    rep.checks.push_back({"congruence", Status::measured,
                          detail + "; modulus 1 makes the congruence vacuous"});
    rep.notes.push_back("d = " + std::to_string(d) + " passes the congruence because the modulus d^4 = 1");
  } else {
    rep.checks.push_back(make_check("congruence", congruent, detail));
  }
  const bool accepted = exp.verdict == Verdict::accepted && congruent;
  rep.verdict = accepted ? Verdict::accepted : Verdict::refuted;
  if (accepted) {
    rep.witnesses.push_back({{"b", b.get_str()}});
    rep.fold_count = 1;
  }
  return rep;
}

}  // namespace dwb
