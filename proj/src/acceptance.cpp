#include "dwb/acceptance.hpp"

#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "dwb/cyclo.hpp"
#include "dwb/defsys.hpp"
#include "dwb/kernels.hpp"
#include "dwb/parcheck.hpp"
#include "dwb/pell.hpp"
#include "dwb/qforms.hpp"

namespace dwb {

namespace {

// Counts cases and keeps the first few failures for the details line.
struct Tally {
  explicit Tally(std::string n) : name(std::move(n)) {}
  std::string name;
  long cases = 0;
  long failures = 0;
  std::vector<std::string> examples;

  void add(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failures;
    if (examples.size() < 6) examples.push_back(what);
  }
  Check check() const {
    std::string d = std::to_string(cases - failures) + "/" + std::to_string(cases) + " hold";
    for (const auto& e : examples) d += "; " + e;
    return make_check(name, failures == 0, d);
  }
};

bool quick(const AcceptanceOptions& o) { return o.profile == Profile::quick; }

std::mt19937_64 rng_for(const AcceptanceOptions& o, int id) {
  return std::mt19937_64(o.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(id));
}

long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Polynomial tpoly(const char* text) { return Polynomial::parse(text); }

// ---- 1 -------------------------------------------------------------------

std::vector<Check> pell_laws(const AcceptanceOptions&) {
  Tally identity{"identity"}, degree{"degree_law"}, divis{"divisibility"}, round{"roundtrip"};
  for (const char* text : {"t", "2t", "t^2", "3t+1"}) {
    const Polynomial s = tpoly(text);
    std::vector<PellPair> pairs;
    for (long n = 0; n <= 20; ++n) pairs.push_back(pell_pair(s, n));
    for (long n = 1; n <= 20; ++n) {
      const std::string tag = std::string("s=") + text + " n=" + std::to_string(n);
      identity.add(pell_identity(pairs[n].f, pairs[n].g, s), tag);
      degree.add(check_degree_law(s, n).status == Status::pass, tag);
      for (long l = 1; l <= 20; ++l) {
        const bool want = n % l == 0;
        divis.add(want == divides(pairs[l].g, pairs[n].g),
                  tag + " l=" + std::to_string(l));
      }
    }
    for (long n = -20; n <= 20; ++n) {
      const PellPair p = pell_pair(s, n);
      for (int sign : {1, -1}) {
        auto idx = recognize_solution(p.f * Polynomial(sign), p.g * Polynomial(sign), s);
        round.add(idx && idx->n == n && idx->sign == sign,
                  std::string("s=") + text + " n=" + std::to_string(n) + " sign=" + std::to_string(sign));
      }
    }
  }
  return {identity.check(), degree.check(), divis.check(), round.check()};
}

// ---- 2 -------------------------------------------------------------------

std::vector<Check> singlefold_integers(const AcceptanceOptions&) {
  const SingleFoldInt sys(50);
  Tally single{"integers_single_fold"}, refuted{"non_integers_refuted"};
  for (long c = -10; c <= 10; ++c) {
    const WitnessReport r = sys.check(Polynomial(c));
    bool ok = r.verdict == Verdict::accepted && r.fold_count == 1;
    ok = ok && r.witnesses[0][0].second == std::to_string(c);
    single.add(ok, "c=" + std::to_string(c) + " folds=" + std::to_string(r.fold_count));
  }
  for (const char* text : {"1/2", "t", "t^2+1"}) {
    const WitnessReport r = sys.check(tpoly(text));
    refuted.add(r.verdict == Verdict::refuted_to_bound, std::string("c=") + text);
  }
  return {single.check(), refuted.check()};
}

// ---- 3 -------------------------------------------------------------------

std::vector<Check> exp_system_grid(const AcceptanceOptions& o) {
  const long max_result = quick(o) ? 1024 : 65536;
  const long bound = 8;
  const ExpGrid grid = exp_grid_sweep(16, 4, max_result, bound, o.exec);
  Tally oracle{"grid_matches_power_oracle"};
  oracle.cases = grid.cells;
  for (const auto& m : grid.mismatches) {
    ++oracle.failures;
    if (oracle.examples.size() < 6) {
      oracle.examples.push_back("(" + std::to_string(m.base) + "," + std::to_string(m.exponent) +
                                "," + std::to_string(m.result) + ")");
    }
  }
  std::map<long, ExpSystem> systems;
  for (long d = -4; d <= 4; ++d) systems.emplace(d, ExpSystem(d, bound));
  Tally fold{"acceptances_single_fold"};
  for (const auto& c : grid.accepted) {
    const WitnessReport r = systems.at(c.exponent).check(c.base, c.result);
    fold.add(r.verdict == Verdict::accepted && r.fold_count == 1,
             "(" + std::to_string(c.base) + "," + std::to_string(c.exponent) + "," +
                 std::to_string(c.result) + ") folds=" + std::to_string(r.fold_count));
  }
  auto rng = rng_for(o, 3);
  Tally sampled{"sampled_refusals_confirmed"};
  std::set<std::tuple<long, long, long>> acc;
  for (const auto& c : grid.accepted) acc.insert({c.base, c.exponent, c.result});
  while (sampled.cases < 64) {
    long b = draw(rng, -16, 16);
    const long d = draw(rng, -4, 4);
    const long c = draw(rng, -max_result, max_result);
    if (b == 0 || acc.count({b, d, c})) continue;
    const WitnessReport r = systems.at(d).check(b, c);
    sampled.add(r.verdict != Verdict::accepted,
                "(" + std::to_string(b) + "," + std::to_string(d) + "," + std::to_string(c) + ")");
  }
  return {oracle.check(), fold.check(), sampled.check()};
}

// ---- 4 -------------------------------------------------------------------

std::vector<Check> odd_integer_system(const AcceptanceOptions&) {
  Tally constructed{"constructed_witnesses_verify"}, even{"even_refuted"}, nonconst{"nonconstant_refuted"};
  for (long r = -9; r <= 9; r += 2) {
    const OddIntegerWitness w = odd_integer_witness(r);
    for (const auto& c : odd_integer_relations(w)) {
      constructed.add(c.status == Status::pass, "r=" + std::to_string(r) + " " + c.name);
    }
  }
  const long bound = 12;
  for (long a : {-8, -6, -4, -2, 2, 4, 6, 8}) {
    const WitnessReport rep = odd_integer_check(Polynomial(a), bound);
    even.add(rep.verdict == Verdict::refuted_to_bound, "a=" + std::to_string(a));
  }
  for (const char* text : {"x", "x^2+1", "2x+1"}) {
    const WitnessReport rep = odd_integer_check(Polynomial::parse(text), bound);
    nonconst.add(rep.verdict == Verdict::refuted_to_bound, std::string("a=") + text);
  }
  return {constructed.check(), even.check(), nonconst.check()};
}

// ---- 5 -------------------------------------------------------------------

std::vector<Check> nonneg_gadget_set(const AcceptanceOptions&) {
  std::vector<long> accepted;
  std::string anomaly;
  for (long d = -20; d <= 20; ++d) {
    const WitnessReport r = nonneg_gadget(d, 8);
    if (r.verdict == Verdict::accepted) accepted.push_back(d);
    if (d == -1) {
      for (const auto& c : r.checks) {
        if (c.status == Status::measured) anomaly = c.details;
      }
      anomaly = std::string("d = -1 ") + (r.verdict == Verdict::accepted ? "accepted" : "refuted") +
                "; " + anomaly;
    }
  }
  std::vector<long> expected{-1};
  for (long d = 0; d <= 20; ++d) expected.push_back(d);
  std::string listed;
  for (long d : accepted) listed += (listed.empty() ? "" : ",") + std::to_string(d);
  return {make_check("accepted_set", accepted == expected, "accepted {" + listed + "}"),
          {"minus_one_anomaly", Status::measured, anomaly}};
}

// ---- 6 -------------------------------------------------------------------

std::vector<Check> cyclotomic_base(const AcceptanceOptions&) {
  Tally product{"divisor_product"}, table{"table_agrees"};
  const auto tab = cyclotomic_table(200);
  for (long n = 1; n <= 200; ++n) {
    Polynomial prod(1);
    for (long d : divisors(n)) prod *= cyclotomic(d);
    const Polynomial want = Polynomial::monomial(1, static_cast<std::size_t>(n)) - Polynomial(1);
    product.add(prod == want, "n=" + std::to_string(n));
    table.add(tab[static_cast<std::size_t>(n)] == cyclotomic(n), "n=" + std::to_string(n));
  }
  std::vector<Check> out{product.check(), table.check()};
  for (auto& c : ap1_checks(200, 13)) out.push_back(c);
  return out;
}

// ---- 7 -------------------------------------------------------------------

std::vector<Check> forweak_approximation(const AcceptanceOptions& o) {
  auto rng = rng_for(o, 7);
  const int samples = quick(o) ? 50 : 200;
  std::map<std::string, Tally> tallies;
  long max_degree = 0;
  for (int i = 0; i < samples; ++i) {
    const long d = draw(rng, 1, 8);
    const long deg = draw(rng, 0, 6);
    std::vector<Rational> c;
    c.emplace_back(draw(rng, 0, 1) ? 1 : -1);
    for (long k = 1; k <= deg; ++k) c.emplace_back(draw(rng, -3, 3));
    const Polynomial F(std::move(c));
    const ForweakResult r = forweak_approx(F, d);
    max_degree = std::max(max_degree, r.product.total_degree());
    for (const auto& ch : r.checks) {
      Tally& t = tallies.try_emplace(ch.name, ch.name).first->second;
      t.add(ch.status == Status::pass, "F=" + F.to_string() + " d=" + std::to_string(d));
    }
  }
  std::vector<Check> out;
  for (auto& [name, t] : tallies) out.push_back(t.check());
  out.push_back({"largest_total_degree", Status::measured, std::to_string(max_degree)});
  return out;
}

// ---- 8 -------------------------------------------------------------------

std::vector<Check> approx_point_orders(const AcceptanceOptions&) {
  const std::vector<std::pair<long, long>> pool{{2, 1}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1},
                                               {7, 2}, {5, 4}, {7, 3}, {7, 6}, {13, 4}};
  std::vector<std::vector<SpecialFormIndex>> sets;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    sets.push_back({make_special(pool[i].first, pool[i].second)});
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      const std::vector<long> parts{pool[i].first, pool[i].second, pool[j].first, pool[j].second};
      bool coprime = true;
      for (std::size_t a = 0; a < parts.size(); ++a) {
        for (std::size_t b = a + 1; b < parts.size(); ++b) {
          coprime = coprime && std::gcd(parts[a], parts[b]) == 1;
        }
      }
      if (coprime) {
        sets.push_back({make_special(pool[i].first, pool[i].second),
                        make_special(pool[j].first, pool[j].second)});
      }
    }
  }
  Tally off{"off_index_orders_zero"}, small{"on_index_order_small_m"};
  std::string measured;
  long measured_count = 0;
  for (const auto& set : sets) {
    const ApproxPoint pt = approx_point(set);
    std::string label = "{";
    for (const auto& idx : set) label += (label.size() > 1 ? "," : "") + idx.to_string();
    label += "} c=" + pt.c.get_str();
    for (const auto& rec : pt.records) {
      std::string bad;
      for (const auto& [j, v] : rec.off_index_nonzero) {
        bad += " j=" + std::to_string(j) + ":ord_" + std::to_string(rec.index.p) + "=" + v.to_string();
      }
      off.add(rec.off_index_nonzero.empty(), label + bad);
      if (rec.index.m <= 2) {
        small.add(rec.measured == Valuation(rec.target),
                  label + " n=" + std::to_string(rec.index.n) + " ord=" + rec.measured.to_string());
      } else {
        ++measured_count;
        if (measured_count <= 8) {
          measured += (measured.empty() ? "" : "; ") + label + " n=" + std::to_string(rec.index.n) +
                      " measured " + rec.measured.to_string() + " target " + std::to_string(rec.target);
        }
      }
    }
  }
  return {off.check(), small.check(),
          {"on_index_order_large_m", Status::measured,
           std::to_string(measured_count) + " records; " + measured},
          {"index_sets", Status::measured, std::to_string(sets.size()) + " coprime sets of size <= 2"}};
}

// ---- 9 -------------------------------------------------------------------

std::vector<Check> resultant_nondivisibility(const AcceptanceOptions& o) {
  const auto table = cyclotomic_resultant_table(60, o.exec);
  const auto violations = nondivisibility_violations(table, 60, 13);
  std::string d = std::to_string(violations.size()) + " violating (r,m,p)";
  for (std::size_t i = 0; i < violations.size() && i < 8; ++i) {
    const auto& v = violations[i];
    d += "; (" + std::to_string(v.r) + "," + std::to_string(v.m) + "," + std::to_string(v.p) +
         ") r=m*p^a:" + (v.r_is_m_pa ? "yes" : "no") + " m|p^a-1:" + (v.m_divides_pa1 ? "yes" : "no");
  }
  std::vector<Check> out{make_check("implication", violations.empty(), d)};
  std::string probes;
  for (auto [p, m] : std::vector<std::pair<long, long>>{{5, 1}, {3, 2}, {5, 4}, {7, 3}, {7, 6}, {13, 4}}) {
    const PdividesProbe pr = pdivides_probe(make_special(p, m));
    probes += (probes.empty() ? "" : "; ") + pr.index.to_string() + " ord_p norm=" +
              std::to_string(pr.norm_exponent) + " local=" + pr.local_order.to_string() +
              " target=" + std::to_string(pr.target);
  }
  out.push_back({"pdivides_exponents", Status::measured, probes});
  return out;
}

// ---- 10 ------------------------------------------------------------------

std::vector<Check> hilbert_symbols(const AcceptanceOptions& o) {
  const HilbertSweep sweep = hilbert_sweep(20, {2, 3, 5, 7, 11, 13}, o.exec);
  std::string d = std::to_string(sweep.cases - sweep.mismatches) + "/" + std::to_string(sweep.cases) + " agree";
  for (const auto& m : sweep.first_mismatches) d += "; " + m;
  std::vector<Check> out{make_check("oracle_agreement", sweep.mismatches == 0, d)};

  auto rng = rng_for(o, 10);
  auto random_rational = [&]() {
    long num = 0;
    while (num == 0) num = draw(rng, -1000, 1000);
    Rational q(num, draw(rng, 1, 1000));
    q.canonicalize();
    return q;
  };
  Tally recip{"reciprocity"}, bimult{"bimultiplicativity"};
  const int pairs = quick(o) ? 100 : 500;
  for (int i = 0; i < pairs; ++i) {
    const Rational a = random_rational();
    const Rational b = random_rational();
    const FormDiagnosis diag = anisotropy_report(a, b);
    bool ok = true;
    for (const auto& c : diag.checks) ok = ok && c.status == Status::pass;
    recip.add(ok, "(" + a.get_str() + "," + b.get_str() + ")");
  }
  for (int i = 0; i < pairs / 5; ++i) {
    const Rational a = random_rational(), a2 = random_rational(), b = random_rational();
    for (long p : {0L, 2L, 3L, 5L, 7L, 11L}) {
      const Place v = p == 0 ? Place::real() : Place::finite(p);
      bimult.add(hilbert_symbol(a * a2, b, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a2, b, v),
                 "(" + a.get_str() + "*" + a2.get_str() + "," + b.get_str() + ")_" + v.to_string());
    }
  }
  out.push_back(recip.check());
  out.push_back(bimult.check());
  return out;
}

// ---- 11 ------------------------------------------------------------------

std::vector<Check> xi_constructors(const AcceptanceOptions& o) {
  Tally padic{"padic_certificates"}, multi{"padic_multi_prime"}, real{"real_no_roots"},
      eisen{"eisenstein_irreducible"}, gate{"parity_gate"};
  const std::vector<std::pair<long, long>> forms{{5, 13}, {2, 5}};
  for (const char* text : {"T^2", "T^2+1", "T^2+T+1"}) {
    const Polynomial f = tpoly(text);
    for (auto [a, b] : forms) {
      const FormDiagnosis diag = anisotropy_report(a, b);
      std::vector<long> primes;
      for (const auto& v : diag.anisotropic_places) {
        if (!v.is_real()) primes.push_back(v.prime);
      }
      for (long p : primes) {
        const PadicXi x = padic_xi_construct(f, p, std::make_pair(Rational(a), Rational(b)));
        const auto& cert = x.locals[0].cert;
        padic.add(cert.verdict && cert.degree % 2 == 0 && std::gcd(cert.degree, cert.r - 1) == 1,
                  std::string("f=") + text + " p=" + std::to_string(p));
      }
      if (!primes.empty()) {
        const PadicXi x = padic_xi_construct(f, primes);
        bool ok = true;
        for (const auto& l : x.locals) ok = ok && l.cert.verdict;
        multi.add(ok, std::string("f=") + text + " form=(" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
    const RealXi r = real_xi_construct(f);
    real.add(r.real_roots == 0, std::string("f=") + text);
  }
  auto rng = rng_for(o, 11);
  std::vector<std::pair<Polynomial, long>> candidates{{tpoly("T^2+9T+3"), 3}, {tpoly("T^3+9T^2+9T+3"), 3}};
  for (int i = 0; i < 300; ++i) {
    const long p = std::vector<long>{2, 3, 5}[static_cast<std::size_t>(draw(rng, 0, 2))];
    const long m = draw(rng, 2, 4);
    const long r = draw(rng, 2, 3);
    const Integer pr = ipow(Integer(p), static_cast<unsigned long>(r));
    std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
    long u = 0;
    while (u % p == 0) u = draw(rng, -9, 9);
    c[0] = Rational(ipow(Integer(p), static_cast<unsigned long>(r - 1)) * u);
    for (long k = 1; k < m; ++k) {
      c[static_cast<std::size_t>(k)] = Rational(pr * draw(rng, -3, 3));
    }
    long lead = 0;
    while (lead % p == 0) lead = draw(rng, -5, 5);
    c[static_cast<std::size_t>(m)] = lead;
    // Occasional unstructured noise keeps uncertified inputs in the mix.
    if (i % 4 == 0) c[0] += draw(rng, -2, 2);
    candidates.push_back({Polynomial(std::move(c)), p});
  }
  long certified = 0;
  for (const auto& [f, p] : candidates) {
    const EisensteinCert cert = eisenstein_certify(f, p);
    if (!cert.verdict) continue;
    ++certified;
    eisen.add(is_irreducible_small(f), "f=" + f.to_string() + " p=" + std::to_string(p));
  }
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> num, den;
    for (long k = draw(rng, 0, 4); k >= 0; --k) num.emplace_back(draw(rng, -5, 5));
    for (long k = draw(rng, 0, 3); k >= 0; --k) den.emplace_back(draw(rng, -5, 5));
    Polynomial D(std::move(den));
    if (D.is_zero()) D = Polynomial(1);
    const RationalFunction g(Polynomial(std::move(num)), D);
    gate.add(even_order_gate(g).biconditional, "g=" + g.to_string());
  }
  return {padic.check(), multi.check(), real.check(), eisen.check(), gate.check(),
          {"eisenstein_certified", Status::measured,
           std::to_string(certified) + " of " + std::to_string(candidates.size()) + " candidates"}};
}

// ---- 12 ------------------------------------------------------------------

std::vector<Check> theta_par(const AcceptanceOptions& o) {
  const long theta_n = quick(o) ? 10000 : 100000;
  const auto bad = theta_roundtrip_failures(theta_n, o.exec);
  std::vector<Check> out{make_check("theta_roundtrip", bad.empty(),
                                    std::to_string(theta_n - static_cast<long>(bad.size())) + "/" +
                                        std::to_string(theta_n) + " round trips")};
  const long par_n = quick(o) ? 60 : 200;
  Tally accepted{"par_tuple_accepted"}, rejected{"perturbations_rejected"};
  long g_decided = 0, tried = 0;
  for (long n = 1; n <= par_n; ++n) {
    const ParTuple t = par_find(n);
    const ParVerdict v = par_eval(t);
    std::string why;
    for (const auto& c : v.conditions) {
      if (c.status == Status::fail) why += " " + c.name;
    }
    accepted.add(v.accepted, "n=" + std::to_string(n) + why);
    if (t.g > 0) ++g_decided;
    const PerturbationSummary ps = perturbation_sweep(t, o.seed);
    tried += ps.tried;
    std::string acc;
    for (const auto& e : ps.accepted_examples) acc += " " + e;
    rejected.add(ps.rejected == ps.tried, "n=" + std::to_string(n) + acc);
  }
  out.push_back(accepted.check());
  Check r = rejected.check();
  r.details += "; " + std::to_string(tried) + " perturbations";
  out.push_back(r);
  out.push_back({"g_decided", Status::measured,
                 std::to_string(g_decided) + " of " + std::to_string(par_n) +
                     " indices have g from the bounded five-squares search"});
  return out;
}

// ---- 13 ------------------------------------------------------------------

std::vector<Check> four_squares_sweep(const AcceptanceOptions& o) {
  const auto bad = four_squares_failures(10000, o.exec);
  return {make_check("decompositions_verify", bad.empty(),
                     std::to_string(10001 - static_cast<long>(bad.size())) + "/10001 values")};
}

struct Entry {
  const char* name;
  std::vector<Check> (*run)(const AcceptanceOptions&);
};

const Entry kEntries[kCriterionCount] = {
    {"pell_laws", pell_laws},
    {"singlefold_integers", singlefold_integers},
    {"exp_system_grid", exp_system_grid},
    {"odd_integer_system", odd_integer_system},
    {"nonneg_gadget", nonneg_gadget_set},
    {"cyclotomic_base", cyclotomic_base},
    {"forweak_approximation", forweak_approximation},
    {"approx_point_orders", approx_point_orders},
    {"resultant_nondivisibility", resultant_nondivisibility},
    {"hilbert_symbols", hilbert_symbols},
    {"xi_constructors", xi_constructors},
    {"theta_par", theta_par},
    {"four_squares", four_squares_sweep},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opts) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id " + std::to_string(id));
  const Entry& e = kEntries[id - 1];
  CriterionResult out;
  out.id = id;
  out.name = e.name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    out.checks = e.run(opts);
  } catch (const std::exception& ex) {
    out.checks = {make_check("completed", false, std::string("exception: ") + ex.what())};
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opts));
  return out;
}

}  // namespace dwb
