#include "dwb/kernels.hpp"

#include <algorithm>
#include <set>

#include "dwb/cyclo.hpp"
#include "dwb/defsys.hpp"
#include "dwb/parcheck.hpp"
#include "dwb/qforms.hpp"

namespace dwb {

namespace {

// Runs body(i) for i in [0, n); results land in per-index slots so the
// merge order never depends on scheduling.
template <class Body>
void for_each_index(long n, Exec exec, Body&& body) {
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) body(i);
  } else {
    for (long i = 0; i < n; ++i) body(i);
  }
}

}  // namespace

HilbertSweep hilbert_sweep(long range, const std::vector<long>& primes, Exec exec) {
  std::vector<long> values;
  for (long a = -range; a <= range; ++a) {
    if (a != 0) values.push_back(a);
  }
  const long nv = static_cast<long>(values.size());
  std::vector<long> places(primes);
  places.push_back(0);  // real place
  const long total = static_cast<long>(places.size()) * nv * nv;
  std::vector<char> agree(static_cast<std::size_t>(total), 1);
  for_each_index(total, exec, [&](long idx) {
    const long p = places[static_cast<std::size_t>(idx / (nv * nv))];
    const long a = values[static_cast<std::size_t>(idx / nv % nv)];
    const long b = values[static_cast<std::size_t>(idx % nv)];
    int symbol;
    int oracle;
    if (p == 0) {
      symbol = hilbert_symbol(a, b, Place::real());
      oracle = (a > 0 || b > 0) ? 1 : -1;
    } else {
      symbol = hilbert_symbol(a, b, Place::finite(p));
      oracle = local_solubility_oracle(a, b, p, oracle_precision(a, b, p));
    }
    agree[static_cast<std::size_t>(idx)] = symbol == oracle;
  });
  HilbertSweep out;
  out.cases = total;
  for (long idx = 0; idx < total; ++idx) {
    if (agree[static_cast<std::size_t>(idx)]) continue;
    ++out.mismatches;
    if (out.first_mismatches.size() < 10) {
      const long p = places[static_cast<std::size_t>(idx / (nv * nv))];
      out.first_mismatches.push_back(
          "(" + std::to_string(values[static_cast<std::size_t>(idx / nv % nv)]) + "," +
          std::to_string(values[static_cast<std::size_t>(idx % nv)]) + "," +
          (p == 0 ? std::string("real") : std::to_string(p)) + ")");
    }
  }
  return out;
}

ExpGrid exp_grid_sweep(long max_base, long max_exp, long max_result, long bound, Exec exec) {
  std::vector<ExpSystem> systems;
  for (long d = -max_exp; d <= max_exp; ++d) systems.emplace_back(d, bound);
  std::vector<long> bases;
  for (long b = -max_base; b <= max_base; ++b) {
    if (b != 0) bases.push_back(b);
  }
  const long nb = static_cast<long>(bases.size());
  const long cells = static_cast<long>(systems.size()) * nb;
  std::vector<std::vector<ExpGridCell>> accepted(static_cast<std::size_t>(cells));
  std::vector<std::vector<ExpGridCell>> wrong(static_cast<std::size_t>(cells));
  for_each_index(cells, exec, [&](long idx) {
    const ExpSystem& sys = systems[static_cast<std::size_t>(idx / nb)];
    const long b = bases[static_cast<std::size_t>(idx % nb)];
    std::set<long> hits;
    for (const Rational& v : sys.point_values(Integer(b))) {
      if (abs(v) <= max_result) {
        hits.insert(v.get_num().get_si());
        hits.insert(-v.get_num().get_si());
      }
    }
    const Integer want = ipow(Integer(std::abs(b)), static_cast<unsigned long>(std::abs(sys.exponent())));
    for (long c = -max_result; c <= max_result; ++c) {
      const bool acc = hits.count(c) > 0;
      const bool oracle = Integer(std::abs(c)) == want;
      const ExpGridCell cell{b, sys.exponent(), c};
      if (acc) accepted[static_cast<std::size_t>(idx)].push_back(cell);
      if (acc != oracle) wrong[static_cast<std::size_t>(idx)].push_back(cell);
    }
  });
  ExpGrid out;
  out.cells = cells * (2 * max_result + 1);
  for (long idx = 0; idx < cells; ++idx) {
    for (const auto& c : accepted[static_cast<std::size_t>(idx)]) out.accepted.push_back(c);
    for (const auto& c : wrong[static_cast<std::size_t>(idx)]) out.mismatches.push_back(c);
  }
  return out;
}

std::vector<std::vector<Rational>> cyclotomic_resultant_table(long n, Exec exec) {
  const auto cyc = cyclotomic_table(n);
  const auto N = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<Rational>> table(N, std::vector<Rational>(N, Rational(0)));
  const long cells = n * n;
  for_each_index(cells, exec, [&](long idx) {
    const auto m = static_cast<std::size_t>(idx / n + 1);
    const auto r = static_cast<std::size_t>(idx % n + 1);
    table[m][r] = resultant(cyc[m], cyc[r]);
  });
  return table;
}

std::vector<long> theta_roundtrip_failures(long n, Exec exec) {
  std::vector<char> bad(static_cast<std::size_t>(n) + 1, 0);
  for_each_index(n, exec, [&](long i) {
    const Integer k(i + 1);
    bad[static_cast<std::size_t>(i + 1)] = theta_inverse(theta(k)) != k;
  });
  std::vector<long> out;
  for (long i = 1; i <= n; ++i) {
    if (bad[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

std::vector<long> four_squares_failures(long n, Exec exec) {
  std::vector<char> bad(static_cast<std::size_t>(n) + 1, 0);
  for_each_index(n + 1, exec, [&](long i) {
    const auto q = four_squares(Integer(i));
    Integer sum = 0;
    for (const auto& x : q) sum += x * x;
    bad[static_cast<std::size_t>(i)] = sum != i;
  });
  std::vector<long> out;
  for (long i = 0; i <= n; ++i) {
    if (bad[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

}  // namespace dwb
