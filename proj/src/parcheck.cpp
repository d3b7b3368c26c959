#include "dwb/parcheck.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace dwb {

// ---- enumeration ---------------------------------------------------------

namespace {

long zigzag_decode(long z) { return z % 2 == 0 ? z / 2 : -(z + 1) / 2; }
long zigzag_encode(long v) { return v >= 0 ? 2 * v : -2 * v - 1; }

}  // namespace

Polynomial theta(const Integer& n) {
  if (n < 1) throw std::invalid_argument("theta needs n >= 1");
  if (n == 1) return {};
  Integer k = n - 2;
  std::vector<long> groups;
  long run = 0;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) {
      groups.push_back(run);
      run = 0;
      k = (k - 1) / 2;
    } else {
      ++run;
      k = (k - 2) / 2;
    }
  }
  groups.push_back(run);
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i + 1 < groups.size(); ++i) coeffs.emplace_back(zigzag_decode(groups[i]));
  coeffs.emplace_back(zigzag_decode(groups.back() + 1));
  return Polynomial(std::move(coeffs));
}

Integer theta_inverse(const Polynomial& p) {
  if (p.is_zero()) return 1;
  if (!p.has_integer_coefficients()) {
    throw std::invalid_argument("theta_inverse needs integer coefficients");
  }
  const std::size_t j = *p.degree();
  std::vector<long> groups;
  for (std::size_t i = 0; i <= j; ++i) {
    const Integer a = p.coeff(i).get_num();
    if (!a.fits_slong_p()) throw std::invalid_argument("coefficient too large to encode");
    groups.push_back(zigzag_encode(a.get_si()));
  }
  groups.back() -= 1;
  // Most significant digit first: walk the groups backwards.
  Integer k = 0;
  for (std::size_t i = groups.size(); i-- > 0;) {
    if (i + 1 < groups.size()) k = 2 * k + 1;
    for (long r = 0; r < groups[i]; ++r) k = 2 * k + 2;
  }
  return k + 2;
}

PellPair chebyshev_Y(long n) {
  if (n < 0) throw std::invalid_argument("chebyshev_Y needs n >= 0");
  return pell_pair(Polynomial::variable(), n);
}

bool pos_check(const Polynomial& F) {
  if (F.is_zero()) return true;
  if (F.is_constant()) return F.coeff(0) > 0;
  if (F.leading() < 0 || *F.degree() % 2 != 0) return false;
  Polynomial odd(1);
  for (const auto& [factor, mult] : squarefree_decomposition(F)) {
    if (mult % 2 == 1) odd *= factor;
  }
  return odd.is_constant() || sturm_real_roots(odd) == 0;
}

// ---- five squares --------------------------------------------------------

bool five_squares_verify(const Integer& g, const Polynomial& F, const FiveSquares& parts) {
  if (g == 0) return false;
  Polynomial sum;
  for (const auto& p : parts) sum += p * p;
  return sum == F * Polynomial(Rational(g * g));
}

namespace {

using Vec5 = std::array<long, 5>;

long isqrt(long x) {
  if (x < 0) return -1;
  long r = static_cast<long>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// All vectors with sum of squares N.
void all_vectors(long N, std::vector<Vec5>& out) {
  Vec5 v{};
  auto rec = [&](auto&& self, int i, long rest) -> void {
    if (i == 4) {
      const long r = isqrt(rest);
      if (r * r != rest) return;
      v[4] = r;
      out.push_back(v);
      if (r != 0) {
        v[4] = -r;
        out.push_back(v);
      }
      return;
    }
    const long lim = isqrt(rest);
    for (long a = -lim; a <= lim; ++a) {
      v[i] = a;
      self(self, i + 1, rest - a * a);
    }
  };
  rec(rec, 0, N);
}

// Non-negative, sorted descending, sum of squares N.
void canonical_vectors(long N, std::vector<Vec5>& out) {
  Vec5 v{};
  auto rec = [&](auto&& self, int i, long rest, long cap) -> void {
    if (i == 5) {
      if (rest == 0) out.push_back(v);
      return;
    }
    for (long a = std::min(cap, isqrt(rest)); a >= 0; --a) {
      v[i] = a;
      self(self, i + 1, rest - a * a, a);
    }
  };
  rec(rec, 0, N, N);
}

long dot(const Vec5& a, const Vec5& b) {
  long s = 0;
  for (int i = 0; i < 5; ++i) s += a[i] * b[i];
  return s;
}

struct Shard {
  long count = 0;
  bool found = false;
  bool capped = false;
  Vec5 x{}, y{}, z{};
};

constexpr long kWorkCap = 50'000'000;

// Coefficients h0..h4 of g^2 F; top vector fixed to `top`.
Shard solve_shard(const std::vector<long>& h, int half, const Vec5& top,
                  const std::vector<Vec5>& xs) {
  Shard s;
  long work = 0;
  auto record = [&](const Vec5& x, const Vec5& y, const Vec5& z) {
    if (!s.found) {
      s.found = true;
      s.x = x;
      s.y = y;
      s.z = z;
    }
    ++s.count;
  };
  if (half == 0) {
    record(top, Vec5{}, Vec5{});
    return s;
  }
  if (half == 1) {
    // parts x + y T with y = top
    for (const auto& x : xs) {
      if (++work > kWorkCap) {
        s.capped = true;
        return s;
      }
      if (2 * dot(x, top) == h[1]) record(x, top, Vec5{});
    }
    return s;
  }
  // half == 2: parts x + y T + z T^2 with z = top; top[0] > 0 is the pivot.
  const Vec5& z = top;
  if (h[3] % 2 != 0 || h[1] % 2 != 0) return s;
  for (const auto& x : xs) {
    const long Y2 = h[2] - 2 * dot(x, z);
    if (Y2 < 0) continue;
    Vec5 y{};
    auto rec = [&](auto&& self, int i, long rest, long lin) -> void {
      if (s.capped) return;
      if (i == 5) {
        const long num = h[3] / 2 - lin;
        if (num % z[0] != 0) return;
        y[0] = num / z[0];
        if (y[0] * y[0] != rest) return;
        if (2 * dot(x, y) == h[1]) record(x, y, z);
        return;
      }
      const long lim = isqrt(rest);
      for (long a = -lim; a <= lim; ++a) {
        if (++work > kWorkCap) {
          s.capped = true;
          return;
        }
        y[i] = a;
        self(self, i + 1, rest - a * a, lin + a * z[i]);
      }
    };
    rec(rec, 1, Y2, 0);
    if (s.capped) return s;
  }
  return s;
}

Polynomial part(const Vec5& x, const Vec5& y, const Vec5& z, int i) {
  return Polynomial(std::vector<Rational>{Rational(x[i]), Rational(y[i]), Rational(z[i])});
}

}  // namespace

FiveSquaresResult five_squares_search(const Polynomial& F, long g_max, Exec exec) {
  if (!F.has_integer_coefficients()) throw std::invalid_argument("five squares needs integer coefficients");
  if (F.degree_or_zero() > 4) throw std::invalid_argument("five squares search needs deg F <= 4");
  FiveSquaresResult out;
  if (F.is_zero()) {
    out.found = true;
    out.g = 1;
    out.count = 1;
    return out;
  }
  if (!pos_check(F)) return out;  // no decomposition exists for any g
  const int half = static_cast<int>(F.degree_or_zero() / 2);
  for (long g = 1; g <= g_max; ++g) {
    std::vector<long> h(5, 0);
    for (std::size_t i = 0; i <= 4; ++i) {
      const Integer v = F.coeff(i).get_num() * g * g;
      if (!v.fits_slong_p() || abs(v) > (1L << 40)) {
        out.exhausted = true;
        return out;
      }
      h[i] = v.get_si();
    }
    std::vector<Vec5> tops;
    canonical_vectors(h[static_cast<std::size_t>(2 * half)], tops);
    std::vector<Vec5> xs;
    if (half > 0) all_vectors(h[0], xs);
    std::vector<Shard> shards(tops.size());
    const long n = static_cast<long>(tops.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long i = 0; i < n; ++i) shards[i] = solve_shard(h, half, tops[i], xs);
    } else {
      for (long i = 0; i < n; ++i) shards[i] = solve_shard(h, half, tops[i], xs);
    }
    bool capped = false;
    for (const auto& s : shards) {
      capped = capped || s.capped;
      out.count += s.count;
      if (s.found && !out.found) {
        out.found = true;
        out.g = g;
        for (int i = 0; i < 5; ++i) out.parts[i] = part(s.x, s.y, s.z, i);
      }
    }
    if (out.found || capped) {
      out.exhausted = capped;
      return out;
    }
    out.count = 0;
  }
  out.exhausted = true;
  return out;
}

// ---- Par -----------------------------------------------------------------

namespace {

constexpr long kMaxParDegree = 200;
constexpr long kGBound = 3;

long par_degree(const Polynomial& P) { return static_cast<long>(P.degree_or_zero()); }

Polynomial y_poly(long d) { return chebyshev_Y(d + 2).g; }

bool probe_negative(const Polynomial& Q, long d) {
  for (long x = 0; x <= d; ++x) {
    if (Q.eval(Rational(x)) < 0) return true;
  }
  return false;
}

Integer minimal_c(const Polynomial& P, long d) {
  const Polynomial base = par_positivity_target(P, d, Integer(0));
  auto ok = [&](const Integer& c) { return pos_check(base + Polynomial(Rational(c))); };
  if (ok(1)) return 1;
  Integer lo = 1, hi = 2;
  while (!ok(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const Integer mid = (lo + hi) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

Integer max_y(long d) {
  const Polynomial Y = y_poly(d);
  Integer b = 0;
  for (long x = 0; x <= d; ++x) {
    const Integer v = Y.eval(Rational(x)).get_num();
    if (v > b) b = v;
  }
  return b;
}

}  // namespace

Polynomial par_positivity_target(const Polynomial& F, long d, const Integer& c) {
  const Polynomial Y = y_poly(d);
  return Y * Y + Polynomial(Rational(c)) - F * F - Polynomial(1);
}

ParTuple par_find(const Integer& n) {
  const Polynomial P = theta(n);
  const long d = par_degree(P);
  ParTuple t;
  t.n = n;
  t.d = d;
  t.c = minimal_c(P, d);
  t.b = max_y(d);
  t.g = 0;
  if (d <= 1) {
    const Polynomial Q = par_positivity_target(P, d, t.c);
    FiveSquaresResult r = five_squares_search(Q, kGBound);
    if (r.found && !r.exhausted) t.g = r.g;
  }
  t.v = P.eval(Rational(2 * t.b + 2 * t.c + d)).get_num();
  return t;
}

ParVerdict par_eval(const ParTuple& t, const std::optional<ParWitness>& witness) {
  ParVerdict out;
  auto& cs = out.conditions;
  if (t.n < 1) {
    cs.push_back(make_check("1_index", false, "n must be >= 1"));
    return out;
  }
  const Polynomial P = theta(t.n);
  cs.push_back(make_check("1_index", true, "P_n = " + P.to_string()));
  const bool signs = t.b >= 0 && t.c >= 0 && t.d >= 0 && t.g >= 0;
  cs.push_back(make_check("2_signs", signs, "b, c, d, g >= 0"));
  const long true_d = par_degree(P);
  cs.push_back(make_check("3_degree", t.d == true_d,
                          "d = " + t.d.get_str() + ", deg P_n = " + std::to_string(true_d)));
  if (!signs || t.d > kMaxParDegree) {
    cs.push_back(make_check("4_c_minimal", false, "d out of range"));
    return out;
  }
  const long d = t.d.get_si();
  const Polynomial Q = par_positivity_target(P, d, t.c);
  {
    const bool pos = t.c >= 1 && pos_check(Q);
    const bool below = t.c == 1 || (t.c > 1 && !pos_check(Q - Polynomial(1)));
    cs.push_back(make_check("4_c_minimal", pos && below,
                            "Pos at c = " + t.c.get_str() + ": " + (pos ? "yes" : "no") +
                                ", at c - 1: " + (below ? "no" : "yes")));
  }
  {
    Check c5{"5_g_minimal", Status::pass, ""};
    bool searchable = d <= 1;
    if (witness) {
      if (witness->g != t.g || !five_squares_verify(witness->g, Q, witness->parts)) {
        c5 = make_check("5_g_minimal", false, "supplied witness does not verify at g = " + t.g.get_str());
      } else if (searchable) {
        FiveSquaresResult r = five_squares_search(Q, t.g.get_si());
        const bool ok = r.found && r.g == t.g;
        c5 = make_check("5_g_minimal", ok, "witness verifies; smallest g found " + std::to_string(r.g));
      } else {
        c5 = {"5_g_minimal", Status::exhausted,
              "witness verifies at g = " + t.g.get_str() + "; minimality not searched for degree " +
                  std::to_string(2 * d + 2)};
      }
    } else if (searchable) {
      FiveSquaresResult r = five_squares_search(Q, kGBound);
      if (r.found && !r.exhausted) {
        c5 = make_check("5_g_minimal", r.g == t.g,
                        "smallest g = " + std::to_string(r.g) + " (" + std::to_string(r.count) +
                            " canonical witnesses)");
      } else {
        c5 = {"5_g_minimal", Status::exhausted,
              "no witness with g <= " + std::to_string(kGBound) + "; semi-decided"};
      }
    } else {
      c5 = {"5_g_minimal", Status::exhausted,
            "five-squares search limited to degree 4, target has degree " + std::to_string(2 * d + 2)};
    }
    cs.push_back(c5);
  }
  {
    const Polynomial Y = y_poly(d);
    bool ok = true;
    for (long x = 0; x <= d; ++x) ok = ok && Y.eval(Rational(x)) <= Rational(t.b);
    cs.push_back(make_check("6_b_bound", ok, "Y_(d+2)(x) <= " + t.b.get_str() + " for 0 <= x <= d"));
  }
  {
    const Rational at = P.eval(Rational(2 * t.b + 2 * t.c + t.d));
    cs.push_back(make_check("7_value", at == Rational(t.v),
                            "P_n(2b+2c+d) = " + at.get_str() + ", v = " + t.v.get_str()));
  }
  out.accepted = all_pass(cs);
  return out;
}

ParVerdict reconstruct_check(const Polynomial& F, const ParTuple& t,
                             const std::optional<ParWitness>& witness) {
  ParVerdict out;
  if (!F.has_integer_coefficients()) {
    out.conditions.push_back(make_check("integral", false, "F must lie in Z[T]"));
    return out;
  }
  if (t.d < 0 || t.d > kMaxParDegree) {
    out.conditions.push_back(make_check("ii_positivity", false, "d out of range"));
    return out;
  }
  const long d = t.d.get_si();
  const Polynomial Q = par_positivity_target(F, d, t.c);
  bool pos;
  std::string how;
  if (witness) {
    pos = five_squares_verify(witness->g, Q, witness->parts);
    how = "five-squares witness";
  } else if (probe_negative(Q, d)) {
    pos = false;
    how = "negative at an integer point of [0, d]";
  } else {
    pos = pos_check(Q);
    how = "Sturm";
  }
  out.conditions.push_back(make_check("ii_positivity", pos, how));
  const Rational at = F.eval(Rational(2 * t.b + 2 * t.c + t.d));
  out.conditions.push_back(make_check("iii_value", at == Rational(t.v),
                                      "F(2b+2c+d) = " + at.get_str() + ", v = " + t.v.get_str()));
  out.accepted = all_pass(out.conditions);
  return out;
}

PerturbationSummary perturbation_sweep(const ParTuple& t, std::uint64_t seed) {
  PerturbationSummary out;
  const Polynomial P = theta(t.n);
  const long d = t.d.get_si();
  const Polynomial shift = Polynomial(Rational(2 * t.b + 2 * t.c + t.d)) - Polynomial::variable();
  auto test = [&](const std::vector<long>& s) {
    std::vector<Rational> c(s.begin(), s.end());
    const Polynomial S(std::move(c));
    const Polynomial F = P + shift * S;
    ++out.tried;
    if (!reconstruct_check(F, t).accepted) {
      ++out.rejected;
    } else if (out.accepted_examples.size() < 3) {
      out.accepted_examples.push_back("S = " + S.to_string());
    }
  };
  std::vector<long> s(static_cast<std::size_t>(d) + 1, 0);
  if (d <= 1) {
    out.exhaustive = true;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == s.size()) {
        if (std::any_of(s.begin(), s.end(), [](long x) { return x != 0; })) test(s);
        return;
      }
      for (long a = -3; a <= 3; ++a) {
        s[i] = a;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    return out;
  }
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (t.n.get_ui() + 1)));
  for (int draw = 0; draw < 24; ++draw) {
    do {
      for (auto& x : s) x = static_cast<long>(rng() % 7) - 3;
    } while (std::all_of(s.begin(), s.end(), [](long x) { return x == 0; }));
    test(s);
  }
  return out;
}

}  // namespace dwb
