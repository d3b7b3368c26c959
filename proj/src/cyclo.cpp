#include "dwb/cyclo.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dwb {

namespace {

using Coeffs = std::vector<Integer>;

Polynomial to_poly(const Coeffs& c) {
  std::vector<Rational> v;
  v.reserve(c.size());
  for (const auto& x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

// f * (T^e - 1)
Coeffs times_binomial(const Coeffs& f, long e) {
  Coeffs out(f.size() + static_cast<std::size_t>(e), Integer(0));
  for (std::size_t k = 0; k < f.size(); ++k) {
    out[k + static_cast<std::size_t>(e)] += f[k];
    out[k] -= f[k];
  }
  return out;
}

// f / (T^e - 1), exact
Coeffs over_binomial(const Coeffs& f, long e) {
  const std::size_t E = static_cast<std::size_t>(e);
  if (f.size() <= E) throw std::logic_error("cyclotomic: inexact binomial division");
  Coeffs q(f.size() - E, Integer(0));
  // f[k] = q[k - e] - q[k]
  for (std::size_t k = f.size(); k-- > E;) {
    q[k - E] = f[k] + (k < q.size() ? q[k] : Integer(0));
  }
  for (std::size_t k = 0; k < E; ++k) {
    const Integer qk = k < q.size() ? q[k] : Integer(0);
    if (f[k] != -qk) throw std::logic_error("cyclotomic: inexact binomial division");
  }
  return q;
}

long phi_of(long n) { return euler_phi(n); }

}  // namespace

Polynomial cyclotomic(long n) {
  if (n < 1 || n > 10000) throw std::invalid_argument("cyclotomic index out of range [1, 10^4]");
  // T^n - 1 = prod_{d | n} Phi_d, inverted by Moebius: Phi_n = prod (T^e - 1)^mu(n/e).
  Coeffs f{Integer(1)};
  std::vector<long> divide_by;
  for (long e : divisors(n)) {
    const int mu = mobius(n / e);
    if (mu == 1) f = times_binomial(f, e);
    if (mu == -1) divide_by.push_back(e);
  }
  for (long e : divide_by) f = over_binomial(f, e);
  return to_poly(f);
}

std::vector<Polynomial> cyclotomic_table(long N) {
  if (N < 1 || N > 10000) throw std::invalid_argument("cyclotomic table size out of range");
  std::vector<Polynomial> table(static_cast<std::size_t>(N) + 1);
  for (long n = 1; n <= N; ++n) {
    Polynomial f = Polynomial::monomial(1, static_cast<std::size_t>(n)) - Polynomial(1);
    for (long d : divisors(n)) {
      if (d < n) f = exact_div(f, table[static_cast<std::size_t>(d)]);
    }
    table[static_cast<std::size_t>(n)] = f;
  }
  return table;
}

Polynomial cyclotomic_series(long n, std::size_t prec) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  if (n == 1) return Polynomial::from_ints({-1, 1}).truncate(prec);
  Coeffs f(prec, Integer(0));
  if (prec == 0) return {};
  f[0] = 1;
  for (long e : divisors(n)) {
    const auto E = static_cast<std::size_t>(e);
    if (E >= prec) continue;
    const int mu = mobius(n / e);
    if (mu == 1) {
      for (std::size_t k = prec; k-- > E;) f[k] -= f[k - E];
    } else if (mu == -1) {
      // 1 / (1 - T^e) = 1 + T^e + T^2e + ...
      for (std::size_t k = E; k < prec; ++k) f[k] += f[k - E];
    }
  }
  return to_poly(f);
}

std::string SpecialFormIndex::to_string() const {
  return std::to_string(n) + "=" + std::to_string(p) + "*" + std::to_string(m);
}

std::optional<SpecialFormIndex> special_form(long n) {
  if (n < 2) return std::nullopt;
  const long p = largest_prime_factor(n);
  const long m = n / p;
  if ((p - 1) % m != 0) return std::nullopt;
  return SpecialFormIndex{n, p, m};
}

SpecialFormIndex make_special(long p, long m) {
  if (!is_prime(static_cast<std::uint64_t>(p > 0 ? p : 0)) || m < 1 || (p - 1) % m != 0) {
    throw std::invalid_argument("not a special form: p=" + std::to_string(p) +
                                " m=" + std::to_string(m));
  }
  return {p * m, p, m};
}

std::vector<long> find_special_congruent(long d, int s, long count,
                                         const std::set<long>& excluded) {
  if (d < 1 || d > 16) throw std::invalid_argument("d must lie in [1, 16]");
  if (s != 1 && s != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (count < 0) throw std::invalid_argument("count must be non-negative");
  std::vector<long> out;
  if (count == 0) return out;

  long m = 1;
  long omega_d = 0;
  for (auto [q, e] : factorize(d)) {
    for (int i = 0; i <= e; ++i) m *= q;
    ++omega_d;
  }
  // Phi_{r m} = 1 - mu(r rad d) T^d mod T^{2d} for squarefree r coprime to m,
  // so the sign is (-1)^(omega(r) + omega(d) + 1).
  const bool single = s == (omega_d % 2 == 0 ? 1 : -1);
  const long limit = 1L << 22;
  auto usable = [&](long p) { return !excluded.count(p); };

  for (long L = 256;; L *= 2) {
    if (L > limit) {
      throw std::runtime_error("prime search exhausted for d=" + std::to_string(d) +
                               " s=" + std::to_string(s) + " count=" + std::to_string(count));
    }
    const auto primes = primes_up_to(L);
    std::vector<long> cand;
    long safe = 0;  // every index below this bound has been generated
    if (single) {
      for (long p : primes) {
        if ((p - 1) % m == 0 && usable(p)) cand.push_back(p * m);
      }
      safe = (L + 1) * m;
    } else {
      std::vector<bool> is_p(static_cast<std::size_t>(L) + 1, false);
      for (long p : primes) is_p[static_cast<std::size_t>(p)] = true;
      for (long p2 : primes) {
        if (p2 * m > L) break;
        if (m % p2 == 0) continue;
        const long step = p2 * m;
        for (long p1 = step + 1; p1 <= L; p1 += step) {
          if (is_p[static_cast<std::size_t>(p1)] && usable(p1)) cand.push_back(p1 * p2 * m);
        }
      }
      safe = 2 * m * (L + 1);
    }
    std::sort(cand.begin(), cand.end());
    std::vector<long> picked;
    for (long n : cand) {
      if (n >= safe) break;
      picked.push_back(n);
      if (static_cast<long>(picked.size()) == count) break;
    }
    if (static_cast<long>(picked.size()) < count) continue;
    const Polynomial want = Polynomial(1) + Polynomial::monomial(s, static_cast<std::size_t>(d));
    for (long n : picked) {
      if (!special_form(n)) throw std::logic_error("generated index is not special: " + std::to_string(n));
      if (!(cyclotomic_series(n, static_cast<std::size_t>(2 * d)) == want)) {
        throw std::logic_error("series check failed for Phi_" + std::to_string(n));
      }
    }
    return picked;
  }
}

// ---- signed products -----------------------------------------------------

Polynomial CycloProductSpec::expand() const {
  Polynomial out(sign);
  for (const auto& idx : indices) out *= cyclotomic(idx.n);
  return out;
}

Polynomial CycloProductSpec::series(std::size_t prec) const {
  Polynomial out = Polynomial(sign).truncate(prec);
  for (const auto& idx : indices) out = (out * cyclotomic_series(idx.n, prec)).truncate(prec);
  return out;
}

long CycloProductSpec::total_degree() const {
  long deg = 0;
  for (const auto& idx : indices) deg += phi_of(idx.n);
  return deg;
}

std::string CycloProductSpec::to_string() const {
  std::string out = sign > 0 ? "+" : "-";
  out += "[";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(indices[i].n);
  }
  return out + "]";
}

bool in_special_set(const CycloProductSpec& spec) {
  if (spec.sign != 1 && spec.sign != -1) return false;
  for (std::size_t i = 0; i < spec.indices.size(); ++i) {
    const auto& idx = spec.indices[i];
    auto sf = special_form(idx.n);
    if (!sf || !(*sf == idx)) return false;
    if (i > 0 && spec.indices[i - 1].n >= idx.n) return false;
  }
  return true;
}

ForweakResult forweak_approx(const Polynomial& F, long d) {
  if (!F.has_integer_coefficients()) throw std::invalid_argument("F must have integer coefficients");
  const Rational f0 = F.coeff(0);
  if (f0 != 1 && f0 != -1) throw std::invalid_argument("F(0) must be +1 or -1");
  if (d < 1 || d > 12) throw std::invalid_argument("d must lie in [1, 12]");
  if (F.degree_or_zero() > 16) throw std::invalid_argument("deg F must be at most 16");

  const auto prec = static_cast<std::size_t>(d);
  const int sigma = f0 > 0 ? 1 : -1;
  const Polynomial G = (F * Polynomial(sigma)).truncate(prec);
  Polynomial P(1);
  std::set<long> used;
  std::vector<long> ns;
  for (long e = 1; e < d; ++e) {
    const Rational delta = G.coeff(static_cast<std::size_t>(e)) - P.coeff(static_cast<std::size_t>(e));
    if (sgn(delta) == 0) continue;
    const int s = sgn(delta);
    const long k = Rational(abs(delta)).get_num().get_si();
    for (long n : find_special_congruent(e, s, k, used)) {
      ns.push_back(n);
      used.insert(largest_prime_factor(n));
      P = (P * cyclotomic_series(n, prec)).truncate(prec);
    }
  }
  std::sort(ns.begin(), ns.end());
  ForweakResult out;
  out.product.sign = sigma;
  for (long n : ns) out.product.indices.push_back(*special_form(n));

  const Polynomial M = out.product.series(prec);
  out.checks.push_back(make_check("congruence", M == F.truncate(prec),
                                  "M = F mod T^" + std::to_string(d)));
  out.checks.push_back(make_check("special_set", in_special_set(out.product),
                                  "distinct special-form indices " + out.product.to_string()));
  const long deg = out.product.total_degree();
  if (deg <= 400) {
    const Polynomial full = out.product.expand();
    const bool squarefree = gcd(full, full.derivative()).is_constant();
    out.checks.push_back(make_check("squarefree", squarefree, "degree " + std::to_string(deg)));
    long u = 1;
    for (long n : ns) u = std::lcm(u, n);
    if (u <= 4000) {
      const Polynomial tu = Polynomial::monomial(1, static_cast<std::size_t>(u)) - Polynomial(1);
      out.checks.push_back(make_check("divides_T^u-1", divides(full, tu),
                                      "u = " + std::to_string(u)));
    }
    out.checks.push_back(make_check("expanded_congruence", full.truncate(prec) == F.truncate(prec),
                                    "full expansion agrees mod T^" + std::to_string(d)));
  } else {
    // Distinct cyclotomic factors are pairwise coprime, so the product is squarefree.
    std::set<long> distinct(ns.begin(), ns.end());
    out.checks.push_back(make_check("squarefree", distinct.size() == ns.size(),
                                    "distinct cyclotomic factors, degree " + std::to_string(deg) +
                                        " not expanded"));
  }
  return out;
}

// ---- approximation point -------------------------------------------------

ApproxPoint approx_point(const std::vector<SpecialFormIndex>& indices) {
  if (indices.empty()) throw std::invalid_argument("approx_point needs at least one index");
  std::vector<std::pair<std::string, long>> parts;
  for (const auto& idx : indices) {
    make_special(idx.p, idx.m);
    parts.emplace_back("p=" + std::to_string(idx.p), idx.p);
    parts.emplace_back("m=" + std::to_string(idx.m), idx.m);
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (std::gcd(parts[i].second, parts[j].second) != 1) {
        throw std::invalid_argument("components not coprime: " + parts[i].first + " and " +
                                    parts[j].first);
      }
    }
  }
  ApproxPoint out;
  std::vector<Integer> residues, moduli;
  for (const auto& idx : indices) {
    ApproxRecord rec;
    rec.index = idx;
    rec.target = phi_of(idx.m);
    const Integer pk = ipow(Integer(idx.p), static_cast<unsigned long>(rec.target + 1));
    rec.lift = hensel_root_of_unity(idx.m, Integer(idx.p), rec.target + 1);
    residues.push_back(rec.lift);
    moduli.push_back(pk);
    out.records.push_back(rec);
    out.ell *= idx.n;
  }
  out.c = moduli.size() == 1 ? residues[0] : crt(residues, moduli);
  out.modulus = 1;
  for (const auto& q : moduli) out.modulus *= q;

  std::map<long, Rational> values;
  for (long j : divisors(out.ell)) values[j] = cyclotomic(j).eval(Rational(out.c));
  for (auto& rec : out.records) {
    const Integer p(rec.index.p);
    rec.measured = ord_p(values[rec.index.n], p);
    for (const auto& [j, v] : values) {
      if (j == rec.index.n) continue;
      ++rec.off_index_checked;
      Valuation o = ord_p(v, p);
      if (!(o == Valuation(0))) rec.off_index_nonzero.emplace_back(j, o);
    }
  }
  return out;
}

// ---- appendix facts ------------------------------------------------------

std::vector<Check> ap1_checks(long max_n, long max_p) {
  std::vector<Check> out;
  std::string bad;
  long count = 0;
  for (long p : primes_up_to(max_p)) {
    for (long q = p; q <= max_n; q *= p) {
      ++count;
      const Rational v = cyclotomic(q).eval(1);
      if (v != p) bad += " Phi_" + std::to_string(q) + "(1)=" + v.get_str();
    }
  }
  out.push_back(make_check("prime_power_value_at_one", bad.empty(),
                           std::to_string(count) + " prime powers" + bad));
  bad.clear();
  count = 0;
  for (long r = 2; r <= max_n; ++r) {
    const Integer v = cyclotomic(r).eval(1).get_num();
    for (long p : primes_up_to(max_p)) {
      long rest = r;
      while (rest % p == 0) rest /= p;
      if (rest == 1) continue;
      ++count;
      if (gcd(v, Integer(p)) != 1) {
        bad += " (r=" + std::to_string(r) + ",p=" + std::to_string(p) + ")";
      }
    }
  }
  out.push_back(make_check("value_at_one_prime_to_p", bad.empty(),
                           std::to_string(count) + " pairs" + bad));
  return out;
}

std::vector<NondivisibilityViolation> nondivisibility_violations(
    const std::vector<std::vector<Rational>>& res_table, long max_rm, long max_p) {
  std::vector<NondivisibilityViolation> out;
  for (long p : primes_up_to(max_p)) {
    for (long m = 1; m <= max_rm; ++m) {
      if (m % p == 0) continue;
      for (long r = 1; r <= max_rm; ++r) {
        if (r == m) continue;
        const Rational& res = res_table[static_cast<std::size_t>(m)][static_cast<std::size_t>(r)];
        if (!mpz_divisible_ui_p(res.get_num_mpz_t(), static_cast<unsigned long>(p))) continue;
        NondivisibilityViolation v{r, m, p, res, false, false};
        if (r % m == 0) {
          long q = r / m;
          long pa = 1;
          while (q % p == 0) {
            q /= p;
            pa *= p;
          }
          if (q == 1 && pa > 1) {
            v.r_is_m_pa = true;
            v.m_divides_pa1 = (pa - 1) % m == 0;
          }
        }
        if (!(v.r_is_m_pa && v.m_divides_pa1)) out.push_back(v);
      }
    }
  }
  return out;
}

PdividesProbe pdivides_probe(const SpecialFormIndex& idx) {
  make_special(idx.p, idx.m);
  PdividesProbe out;
  out.index = idx;
  out.target = phi_of(idx.m);
  const Polynomial phin = cyclotomic(idx.n);
  out.norm = Rational(abs(resultant(cyclotomic(idx.m), phin))).get_num();
  out.norm_exponent = ord_p(Rational(out.norm), Integer(idx.p)).value();
  const long k = out.target + 4;
  const Integer xi = hensel_root_of_unity(idx.m, Integer(idx.p), k);
  // Orders below k are exact for the p-adic root of unity.
  out.local_order = ord_p(phin.eval(Rational(xi)), Integer(idx.p));
  return out;
}

std::vector<Check> alpha_shadow_check(const std::vector<SpecialFormIndex>& indices) {
  std::vector<Check> out;
  Polynomial alpha(1);
  long ell = 1;
  long deg = 0;
  Rational at_one = 1;
  for (const auto& idx : indices) {
    const Polynomial phi = cyclotomic(idx.n);
    alpha *= phi;
    ell *= idx.n;
    deg += phi_of(idx.n);
    at_one *= phi.eval(1);
  }
  if (ell <= 20000) {
    const Polynomial tl = Polynomial::monomial(1, static_cast<std::size_t>(ell)) - Polynomial(1);
    out.push_back(make_check("divides_T^l-1", divides(alpha, tl), "l = " + std::to_string(ell)));
  } else {
    out.push_back({"divides_T^l-1", Status::exhausted, "l = " + std::to_string(ell) + " too large"});
  }
  out.push_back(make_check("value_at_one", alpha.eval(1) == at_one, "alpha(1) = " + at_one.get_str()));
  out.push_back(make_check("degree", alpha.degree() == Degree(static_cast<std::size_t>(deg)),
                           "deg alpha = " + std::to_string(deg)));
  ApproxPoint pt = approx_point(indices);
  const Rational value = alpha.eval(Rational(pt.c));
  std::string detail = "c = " + pt.c.get_str() + ";";
  for (const auto& rec : pt.records) {
    detail += " ord_" + std::to_string(rec.index.p) + " alpha(c) = " +
              ord_p(value, Integer(rec.index.p)).to_string() + " (Phi_" +
              std::to_string(rec.index.n) + " part " + rec.measured.to_string() + ", target " +
              std::to_string(rec.target) + ")";
  }
  out.push_back({"orders_at_point", Status::measured, detail});
  return out;
}

}  // namespace dwb
