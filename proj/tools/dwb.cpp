#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dwb/acceptance.hpp"
#include "dwb/cyclo.hpp"
#include "dwb/defsys.hpp"
#include "dwb/parcheck.hpp"
#include "dwb/pell.hpp"
#include "dwb/qforms.hpp"
#include "dwb/report.hpp"
#include "dwb/serialize.hpp"

using namespace dwb;

namespace {

// WORKBENCH_BOUND replaces every default search bound when set.
long default_bound(long fallback) {
  const char* env = std::getenv("WORKBENCH_BOUND");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    const long v = std::stol(env);
    if (v > 0) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(std::string("WORKBENCH_BOUND must be a positive integer, got ") + env);
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: " + text);
  q.canonicalize();
  return q;
}

Integer parse_integer(const std::string& text) {
  Integer z;
  if (z.set_str(text, 10) != 0) throw std::invalid_argument("not an integer: " + text);
  return z;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// "3:2,5:1" -> p:m pairs.
std::vector<SpecialFormIndex> parse_indices(const std::string& text) {
  std::vector<SpecialFormIndex> out;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2) throw std::invalid_argument("index must be p:m, got " + item);
    out.push_back(make_special(std::stol(parts[0]), std::stol(parts[1])));
  }
  if (out.empty()) throw std::invalid_argument("no indices given");
  return out;
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  for (const auto& item : split(text, ',')) out.push_back(std::stol(item));
  return out;
}

Place parse_place(const std::string& text) {
  if (text == "real") return Place::real();
  const std::string digits = text.rfind("p:", 0) == 0 ? text.substr(2) : text;
  return Place::finite(std::stol(digits));
}

// Integrity of a witness report plus its measured/exhausted conditions.
std::vector<Check> witness_integrity(const WitnessReport& r) {
  std::vector<Check> out;
  out.push_back(make_check("fold_count_matches",
                           r.fold_count == static_cast<long>(r.witnesses.size()),
                           std::to_string(r.fold_count) + " witnesses"));
  const bool accepted = r.verdict == Verdict::accepted;
  out.push_back(make_check("verdict_consistent", accepted == !r.witnesses.empty() || r.verdict == Verdict::invalid,
                           to_string(r.verdict)));
  for (const auto& c : r.checks) {
    if (c.status == Status::measured || c.status == Status::exhausted) out.push_back(c);
  }
  return out;
}

Report defsys_report(const std::string& name, const WitnessReport& r) {
  Report rep;
  rep.command = "defsys " + name;
  for (const auto& [k, v] : r.inputs) rep.inputs[k] = v;
  rep.result = to_json(r);
  rep.checks = witness_integrity(r);
  return rep;
}

struct Cli {
  CLI::App app{"Exact-arithmetic workbench for Pell polynomials, witness systems, cyclotomics, quadratic forms and polynomial indexing"};
  std::string format = "json";
  bool timing = false;
  std::function<Report()> action;

  // Option storage; each subcommand reads only what it registered.
  std::string s_text = "t", poly_text, c_text, a_text, b_text, indices_text, primes_text, place_text;
  std::string n_text, base_text, result_text, num_text, den_text = "1";
  std::string tb, tc, td, tg, tv;
  long n = 0, bound = 0, exp = 0, d = 0, count = 0, sign = 1, p = 0, m = 0, k = 0, g_max = 3;
  long s_size = 2, construct = 0, max_n = 60, max_p = 13;
  bool check_laws = false;
  std::string profile = "full";
  std::uint64_t seed = 1;
  std::string criteria;

  Cli() {
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--timing", timing, "Add elapsed seconds to the report");
    add_pell();
    add_defsys();
    add_cyclo();
    add_qform();
    add_par();
    add_verify_all();
  }

  void add_pell() {
    auto* sub = app.add_subcommand("pell", "Pell pairs (f_n, g_n) for s and the divisibility/degree laws");
    sub->add_option("--s", s_text, "Polynomial s of positive degree")->capture_default_str();
    sub->add_option("--n", n, "Index (negative allowed)");
    sub->add_flag("--check-laws", check_laws, "Check both laws for 1 <= l, n <= bound");
    sub->add_option("--bound", bound, "Law-check bound");
    sub->callback([this, sub] {
      action = [this, sub] {
        const Polynomial s = Polynomial::parse(s_text);
        Report rep;
        rep.command = "pell";
        rep.inputs["s"] = s.to_string("t");
        if (check_laws) {
          const long b = bound > 0 ? bound : default_bound(20);
          rep.inputs["bound"] = b;
          long div_ok = 0, deg_ok = 0, total = 0;
          std::vector<std::string> bad;
          for (long nn = 1; nn <= b; ++nn) {
            const Check dc = check_degree_law(s, nn);
            if (dc.status == Status::pass) ++deg_ok; else bad.push_back("degree n=" + std::to_string(nn));
            for (long l = 1; l <= b; ++l) {
              ++total;
              const Check c = check_divisibility_law(l, nn, s);
              if (c.status == Status::pass) ++div_ok;
              else if (bad.size() < 8) bad.push_back("divisibility l=" + std::to_string(l) + " n=" + std::to_string(nn));
            }
          }
          rep.result = {{"divisibility_pairs", total}, {"divisibility_pass", div_ok}, {"degree_pass", deg_ok}};
          rep.checks.push_back(make_check("divisibility_law", div_ok == total,
                                          std::to_string(div_ok) + "/" + std::to_string(total)));
          rep.checks.push_back(make_check("degree_law", deg_ok == b,
                                          std::to_string(deg_ok) + "/" + std::to_string(b)));
          if (!bad.empty()) rep.result["failures"] = bad;
        }
        if (sub->count("--n") > 0 || !check_laws) {
          rep.inputs["n"] = n;
          const PellPair pair = pell_pair(s, n);
          rep.result["pair"] = to_json(pair, "t");
          rep.checks.push_back(make_check("identity", pell_identity(pair.f, pair.g, s), "f^2 - (s^2 - 1) g^2 = 1"));
        }
        return rep;
      };
    });
  }

  void add_defsys() {
    auto* sys = app.add_subcommand("defsys", "Witness systems");
    sys->require_subcommand(1);

    auto* cons = sys->add_subcommand("constants", "Constants system for x over Q[t] or a localization");
    cons->add_option("--x", poly_text, "Polynomial x")->required();
    cons->add_option("--primes", primes_text, "Comma-separated primes to localize at");
    cons->add_option("--s-size", s_size, "Size of the constant set")->capture_default_str();
    cons->callback([this] {
      action = [this] {
        const RingDescriptor ring = primes_text.empty()
                                        ? RingDescriptor::rationals()
                                        : RingDescriptor::localized([&] {
                                            std::vector<Integer> ps;
                                            for (long q : parse_longs(primes_text)) ps.emplace_back(q);
                                            return ps;
                                          }());
        return defsys_report("constants", constants_system(Polynomial::parse(poly_text), ring, s_size));
      };
    });

    auto* sf = sys->add_subcommand("singlefold-int", "Integer membership with one witness");
    sf->add_option("--c", c_text, "Candidate polynomial")->required();
    sf->add_option("--bound", bound, "Index bound");
    sf->callback([this] {
      action = [this] {
        const long b = bound > 0 ? bound : default_bound(50);
        return defsys_report("singlefold-int", singlefold_int(Polynomial::parse(c_text), b));
      };
    });

    auto* ex = sys->add_subcommand("exp", "Exponentiation system");
    ex->add_option("--base", base_text, "Non-zero integer base")->required();
    ex->add_option("--result", result_text, "Integer result")->required();
    ex->add_option("--exp", exp, "Integer exponent")->required();
    ex->add_option("--bound", bound, "Index bound");
    ex->callback([this] {
      action = [this] {
        const long b = bound > 0 ? bound : default_bound(8);
        return defsys_report("exp", exp_system(parse_integer(base_text), parse_integer(result_text), exp, b));
      };
    });

    auto* odd = sys->add_subcommand("odd-int", "Odd-integer system");
    odd->add_option("--a", a_text, "Candidate polynomial in x");
    odd->add_option("--construct", construct, "Build the canonical witness for an odd integer");
    odd->add_option("--bound", bound, "Pell index bound");
    odd->callback([this, odd] {
      action = [this, odd] {
        if (odd->count("--construct") > 0) {
          Report rep = defsys_report("odd-int", odd_integer_construct(construct));
          for (const auto& c : odd_integer_relations(odd_integer_witness(construct))) rep.checks.push_back(c);
          return rep;
        }
        if (a_text.empty()) throw std::invalid_argument("odd-int needs --a or --construct");
        const long b = bound > 0 ? bound : default_bound(12);
        return defsys_report("odd-int", odd_integer_check(Polynomial::parse(a_text), b));
      };
    });

    auto* nn = sys->add_subcommand("nonneg", "Non-negativity gadget");
    nn->add_option("--d", d, "Integer d")->required();
    nn->add_option("--bound", bound, "Index bound");
    nn->callback([this] {
      action = [this] {
        const long b = bound > 0 ? bound : default_bound(8);
        return defsys_report("nonneg", nonneg_gadget(d, b));
      };
    });
  }

  void add_cyclo() {
    auto* cy = app.add_subcommand("cyclo", "Cyclotomic polynomials and special-form products");
    cy->require_subcommand(1);

    auto* phi = cy->add_subcommand("phi", "Phi_n");
    phi->add_option("--n", n, "Index 1..10000")->required();
    phi->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "cyclo phi";
        rep.inputs["n"] = n;
        const Polynomial f = cyclotomic(n);
        rep.result = {{"phi", f.to_string()}, {"degree", f.degree_or_zero()}};
        rep.checks.push_back(make_check("degree_is_totient", static_cast<long>(f.degree_or_zero()) == euler_phi(n),
                                        "phi(n) = " + std::to_string(euler_phi(n))));
        return rep;
      };
    });

    auto* sp = cy->add_subcommand("special", "Special-form decomposition n = p*m, m | p - 1");
    sp->add_option("--n", n, "Index")->required();
    sp->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "cyclo special";
        rep.inputs["n"] = n;
        const auto idx = special_form(n);
        rep.result = {{"special", idx.has_value()}};
        if (idx) rep.result["index"] = to_json(*idx);
        return rep;
      };
    });

    auto* cg = cy->add_subcommand("congruent", "Special indices with Phi_n = 1 + s T^d mod T^(2d)");
    cg->add_option("--d", d, "Exponent d >= 1")->required();
    cg->add_option("--sign", sign, "Sign s")->check(CLI::IsMember({-1, 1}))->capture_default_str();
    cg->add_option("--count", count, "How many indices")->capture_default_str();
    cg->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "cyclo congruent";
        const long c = count > 0 ? count : 4;
        rep.inputs = {{"d", d}, {"sign", sign}, {"count", c}};
        const auto found = find_special_congruent(d, static_cast<int>(sign), c);
        rep.result["indices"] = found;
        rep.checks.push_back(make_check("count_reached", static_cast<long>(found.size()) == c,
                                        std::to_string(found.size()) + " found"));
        return rep;
      };
    });

    auto* fw = cy->add_subcommand("forweak", "Special-form product M with F = M mod T^d");
    fw->add_option("--F", poly_text, "Polynomial with F(0) = +-1")->required();
    fw->add_option("--d", d, "Precision 1..12")->required();
    fw->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "cyclo forweak";
        const Polynomial F = Polynomial::parse(poly_text);
        rep.inputs = {{"F", F.to_string()}, {"d", d}};
        const ForweakResult r = forweak_approx(F, d);
        rep.result["product"] = to_json(r.product);
        rep.checks = r.checks;
        return rep;
      };
    });

    auto* ap = cy->add_subcommand("approx", "Approximation point for special indices");
    ap->add_option("--indices", indices_text, "Comma-separated p:m pairs")->required();
    ap->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "cyclo approx";
        const auto idx = parse_indices(indices_text);
        rep.inputs["indices"] = indices_text;
        const ApproxPoint pt = approx_point(idx);
        rep.result = to_json(pt);
        for (const auto& r : pt.records) {
          const std::string tag = r.index.to_string();
          const std::string vs = r.measured.is_infinite() ? "inf" : std::to_string(r.measured.value());
          const std::string details = "ord " + vs + ", target " + std::to_string(r.target);
          if (r.index.m <= 2) {
            rep.checks.push_back(make_check("on_index " + tag,
                                            !r.measured.is_infinite() && r.measured.value() == r.target, details));
          } else {
            rep.checks.push_back({"on_index " + tag, Status::measured, details});
          }
          std::string off;
          for (const auto& [j, v] : r.off_index_nonzero) {
            off += (off.empty() ? "" : ", ") + std::string("j=") + std::to_string(j) + " ord " +
                   (v.is_infinite() ? std::string("inf") : std::to_string(v.value()));
          }
          rep.checks.push_back(make_check("off_index " + tag, r.off_index_nonzero.empty(),
                                          std::to_string(r.off_index_checked) + " divisors checked" +
                                              (off.empty() ? "" : "; nonzero: " + off)));
        }
        return rep;
      };
    });

    auto* a1 = cy->add_subcommand("ap1", "Values of cyclotomics at 1");
    a1->add_option("--max-n", max_n, "Largest index")->capture_default_str();
    a1->add_option("--max-p", max_p, "Largest prime")->capture_default_str();
    a1->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "cyclo ap1";
        rep.inputs = {{"max_n", max_n}, {"max_p", max_p}};
        rep.checks = ap1_checks(max_n, max_p);
        return rep;
      };
    });

    auto* pd = cy->add_subcommand("pdivides", "p-order of the norm and of Phi_n at a root of unity");
    pd->add_option("--p", p, "Prime")->required();
    pd->add_option("--m", m, "Divisor of p - 1")->required();
    pd->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "cyclo pdivides";
        rep.inputs = {{"p", p}, {"m", m}};
        const PdividesProbe probe = pdivides_probe(make_special(p, m));
        rep.result = to_json(probe);
        rep.checks.push_back({"norm_exponent", Status::measured,
                              std::to_string(probe.norm_exponent) + ", target " + std::to_string(probe.target)});
        const Valuation& lo = probe.local_order;
        rep.checks.push_back({"local_order", Status::measured,
                              (lo.is_infinite() ? std::string("inf") : std::to_string(lo.value())) + ", target " +
                                  std::to_string(probe.target)});
        return rep;
      };
    });
  }

  void add_qform() {
    auto* qf = app.add_subcommand("qform", "Local behaviour of <1, -a, -b, ab> and xi-constructors");
    qf->require_subcommand(1);

    auto* sym = qf->add_subcommand("symbol", "Hilbert symbol (a, b)_v");
    sym->add_option("--a", a_text)->required();
    sym->add_option("--b", b_text)->required();
    sym->add_option("--place", place_text, "p:<prime>, <prime> or real")->required();
    sym->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "qform symbol";
        const Rational a = parse_rational(a_text), b = parse_rational(b_text);
        const Place v = parse_place(place_text);
        rep.inputs = {{"a", a.get_str()}, {"b", b.get_str()}, {"place", v.to_string()}};
        const int s = hilbert_symbol(a, b, v);
        rep.result["symbol"] = s;
        if (v.is_real()) {
          rep.checks.push_back(make_check("sign_rule", (s == 1) == (a > 0 || b > 0)));
        } else if (is_integer(a) && is_integer(b)) {
          const Integer ai = a.get_num(), bi = b.get_num();
          const long kk = oracle_precision(ai, bi, v.prime);
          const int o = local_solubility_oracle(ai, bi, v.prime, kk);
          rep.checks.push_back(make_check("oracle_agreement", o == s, "k = " + std::to_string(kk)));
        }
        return rep;
      };
    });

    auto* orc = qf->add_subcommand("oracle", "Primitive solutions of z^2 = a x^2 + b y^2 mod p^k");
    orc->add_option("--a", a_text)->required();
    orc->add_option("--b", b_text)->required();
    orc->add_option("--p", p)->required();
    orc->add_option("--k", k, "Precision; defaults to the required one");
    orc->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "qform oracle";
        const Integer a = parse_integer(a_text), b = parse_integer(b_text);
        const long kk = k > 0 ? k : oracle_precision(a, b, p);
        rep.inputs = {{"a", a.get_str()}, {"b", b.get_str()}, {"p", p}, {"k", kk}};
        const int o = local_solubility_oracle(a, b, p, kk);
        rep.result["oracle"] = o;
        rep.checks.push_back(make_check("closed_form_agreement",
                                        o == hilbert_symbol(Rational(a), Rational(b), Place::finite(p))));
        return rep;
      };
    });

    auto* rp = qf->add_subcommand("report", "Places where the form is anisotropic");
    rp->add_option("--a", a_text)->required();
    rp->add_option("--b", b_text)->required();
    rp->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "qform report";
        const Rational a = parse_rational(a_text), b = parse_rational(b_text);
        rep.inputs = {{"a", a.get_str()}, {"b", b.get_str()}};
        const FormDiagnosis diag = anisotropy_report(a, b);
        rep.result = to_json(diag);
        rep.checks = diag.checks;
        return rep;
      };
    });

    auto* ei = qf->add_subcommand("eisenstein", "Generalized Eisenstein certificate");
    ei->add_option("--f", poly_text)->required();
    ei->add_option("--p", p)->required();
    ei->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "qform eisenstein";
        const Polynomial f = Polynomial::parse(poly_text);
        rep.inputs = {{"f", f.to_string()}, {"p", p}};
        const EisensteinCert cert = eisenstein_certify(f, p);
        rep.result = to_json(cert);
        rep.checks.push_back(make_check("verdict_consistent", cert.verdict == all_pass(cert.checks),
                                        cert.verdict ? "certified" : "not certified"));
        return rep;
      };
    });

    auto* px = qf->add_subcommand("padic-xi", "xi-triple making f^3 + T irreducible over Q_p");
    px->add_option("--f", poly_text)->required();
    px->add_option("--primes", primes_text, "Comma-separated primes")->required();
    px->add_option("--a", a_text, "Form coefficient a (single prime only)");
    px->add_option("--b", b_text, "Form coefficient b (single prime only)");
    px->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "qform padic-xi";
        const Polynomial f = Polynomial::parse(poly_text);
        const auto primes = parse_longs(primes_text);
        rep.inputs = {{"f", f.to_string()}, {"primes", primes}};
        std::optional<std::pair<Rational, Rational>> form;
        if (!a_text.empty() || !b_text.empty()) {
          if (a_text.empty() || b_text.empty()) throw std::invalid_argument("--a and --b go together");
          if (primes.size() != 1) throw std::invalid_argument("a form needs exactly one prime");
          form = std::make_pair(parse_rational(a_text), parse_rational(b_text));
          rep.inputs["a"] = form->first.get_str();
          rep.inputs["b"] = form->second.get_str();
        }
        const PadicXi x = primes.size() == 1 ? padic_xi_construct(f, primes[0], form)
                                             : padic_xi_construct(f, primes);
        rep.result = to_json(x);
        for (const auto& l : x.locals) {
          rep.checks.push_back(make_check("certificate p=" + std::to_string(l.p), l.cert.verdict,
                                          "r = " + std::to_string(l.r)));
        }
        return rep;
      };
    });

    auto* rx = qf->add_subcommand("real-xi", "xi-triple making xi1 f^3 + T + xi3 root-free over R");
    rx->add_option("--f", poly_text)->required();
    rx->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "qform real-xi";
        const Polynomial f = Polynomial::parse(poly_text);
        rep.inputs["f"] = f.to_string();
        const RealXi x = real_xi_construct(f);
        rep.result = to_json(x);
        rep.checks.push_back(make_check("no_real_roots", x.real_roots == 0, std::to_string(x.real_roots)));
        return rep;
      };
    });

    auto* gt = qf->add_subcommand("gate", "Even-order gate at the pole of T");
    gt->add_option("--num", num_text, "Numerator of g")->required();
    gt->add_option("--den", den_text, "Denominator of g")->capture_default_str();
    gt->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "qform gate";
        const RationalFunction g(Polynomial::parse(num_text), Polynomial::parse(den_text));
        rep.inputs = {{"num", g.numerator().to_string()}, {"den", g.denominator().to_string()}};
        const ParityGate gate = even_order_gate(g);
        rep.result = to_json(gate);
        rep.checks.push_back(make_check("biconditional", gate.biconditional));
        return rep;
      };
    });
  }

  void add_par() {
    auto* pa = app.add_subcommand("par", "Enumeration of Z[T] and the relation pinning P_n down");
    pa->require_subcommand(1);

    auto* th = pa->add_subcommand("theta", "P_n for an index n >= 1");
    th->add_option("--n", n_text)->required();
    th->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "par theta";
        const Integer nn = parse_integer(n_text);
        rep.inputs["n"] = nn.get_str();
        const Polynomial P = theta(nn);
        rep.result["poly"] = P.to_string();
        rep.checks.push_back(make_check("roundtrip", theta_inverse(P) == nn));
        return rep;
      };
    });

    auto* ti = pa->add_subcommand("theta-inverse", "Index of an integer polynomial");
    ti->add_option("--poly", poly_text)->required();
    ti->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "par theta-inverse";
        const Polynomial P = Polynomial::parse(poly_text);
        rep.inputs["poly"] = P.to_string();
        const Integer nn = theta_inverse(P);
        rep.result["n"] = nn.get_str();
        rep.checks.push_back(make_check("roundtrip", theta(nn) == P));
        return rep;
      };
    });

    auto* fd = pa->add_subcommand("find", "Tuple (b, c, d, g, v) for index n");
    fd->add_option("--n", n_text)->required();
    fd->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "par find";
        const Integer nn = parse_integer(n_text);
        rep.inputs["n"] = nn.get_str();
        const ParTuple t = par_find(nn);
        const ParVerdict v = par_eval(t);
        rep.result = {{"tuple", to_json(t)}, {"verdict", to_json(v)}};
        rep.checks.push_back(make_check("tuple_accepted", v.accepted));
        return rep;
      };
    });

    auto* ev = pa->add_subcommand("eval", "Decide the relation on a given tuple");
    ev->add_option("--n", n_text)->required();
    ev->add_option("--b", tb)->required();
    ev->add_option("--c", tc)->required();
    ev->add_option("--d", td)->required();
    ev->add_option("--g", tg)->required();
    ev->add_option("--v", tv)->required();
    ev->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "par eval";
        const ParTuple t{parse_integer(n_text), parse_integer(tb), parse_integer(tc),
                         parse_integer(td), parse_integer(tg), parse_integer(tv)};
        rep.inputs = to_json(t);
        const ParVerdict v = par_eval(t);
        rep.result = to_json(v);
        rep.checks.push_back(make_check("verdict_consistent", v.accepted == all_pass(v.conditions),
                                        v.accepted ? "accepted" : "rejected"));
        return rep;
      };
    });

    auto* rc = pa->add_subcommand("reconstruct", "Check that a polynomial fits the tuple found for n");
    rc->add_option("--F", poly_text)->required();
    rc->add_option("--n", n_text)->required();
    rc->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "par reconstruct";
        const Polynomial F = Polynomial::parse(poly_text);
        const Integer nn = parse_integer(n_text);
        rep.inputs = {{"F", F.to_string()}, {"n", nn.get_str()}};
        const ParTuple t = par_find(nn);
        const ParVerdict v = reconstruct_check(F, t);
        rep.result = {{"tuple", to_json(t)}, {"verdict", to_json(v)}};
        rep.checks.push_back(make_check("reconstructs", v.accepted == (F == theta(nn)),
                                        v.accepted ? "accepted" : "rejected"));
        return rep;
      };
    });

    auto* po = pa->add_subcommand("pos", "F(t) >= 0 for all real t");
    po->add_option("--F", poly_text)->required();
    po->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "par pos";
        const Polynomial F = Polynomial::parse(poly_text);
        rep.inputs["F"] = F.to_string();
        rep.result["nonnegative"] = pos_check(F);
        return rep;
      };
    });

    auto* fs = pa->add_subcommand("five-squares", "Smallest g with g^2 F a sum of five squares");
    fs->add_option("--F", poly_text)->required();
    fs->add_option("--g-max", g_max)->capture_default_str();
    fs->callback([this] {
      action = [this] {
        Report rep;
        rep.command = "par five-squares";
        const Polynomial F = Polynomial::parse(poly_text);
        rep.inputs = {{"F", F.to_string()}, {"g_max", g_max}};
        const FiveSquaresResult r = five_squares_search(F, g_max);
        rep.result = to_json(r);
        if (r.found) {
          rep.checks.push_back(make_check("identity", five_squares_verify(Integer(r.g), F, r.parts)));
        } else if (r.exhausted) {
          rep.checks.push_back({"search", Status::exhausted, "no decision within g <= " + std::to_string(g_max)});
        }
        return rep;
      };
    });
  }

  void add_verify_all() {
    auto* va = app.add_subcommand("verify-all", "Run every acceptance criterion");
    va->add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
    va->add_option("--seed", seed)->capture_default_str();
    va->add_option("--criteria", criteria, "Comma-separated ids; all by default");
    va->callback([this] {
      action = [this] {
        AcceptanceOptions opts;
        opts.profile = profile == "quick" ? Profile::quick : Profile::full;
        opts.seed = seed;
        std::vector<long> ids;
        if (criteria.empty()) {
          for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
        } else {
          ids = parse_longs(criteria);
        }
        Report rep;
        rep.command = "verify-all";
        rep.inputs = {{"profile", profile}, {"seed", seed}, {"criteria", ids}};
        json crit = json::array();
        for (long id : ids) {
          const CriterionResult r = run_criterion(static_cast<int>(id), opts);
          crit.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed()}});
          char prefix[8];
          std::snprintf(prefix, sizeof prefix, "%02d", r.id);
          for (const auto& c : r.checks) {
            rep.checks.push_back({std::string(prefix) + "_" + r.name + "." + c.name, c.status, c.details});
          }
        }
        rep.result["criteria"] = crit;
        return rep;
      };
    });
  }
};

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  try {
    cli.app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return cli.app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    const auto start = std::chrono::steady_clock::now();
    Report rep = cli.action();
    if (cli.timing) {
      rep.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    std::cout << (cli.format == "text" ? render_text(rep) : render_json(rep));
    return exit_code(rep);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
