#include "dwb/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dwb {

long Valuation::value() const {
  if (!value_) throw std::logic_error("valuation is infinite");
  return *value_;
}

std::strong_ordering Valuation::operator<=>(const Valuation& other) const {
  if (is_infinite() || other.is_infinite()) {
    return is_infinite() == other.is_infinite() ? std::strong_ordering::equal
           : is_infinite()                      ? std::strong_ordering::greater
                                                : std::strong_ordering::less;
  }
  return *value_ <=> *other.value_;
}

std::string Valuation::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

std::uint64_t to_u64(const Integer& x) {
  if (sgn(x) < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 64) {
    throw std::domain_error("value outside [0, 2^64): " + x.get_str());
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, x.get_mpz_t());
  return out;
}

Integer from_u64(std::uint64_t x) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(x), 0, 0, &x);
  return out;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (sgn(n) <= 0) return false;
  return is_prime(to_u64(n));
}

std::vector<long> primes_up_to(long limit) {
  std::vector<long> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (long i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (long j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw std::invalid_argument("factorize expects n >= 1");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    long pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long euler_phi(long n) {
  long phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

int mobius(long n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

long largest_prime_factor(long n) {
  auto f = factorize(n);
  return f.empty() ? 1 : f.back().first;
}

// ---- RingDescriptor ------------------------------------------------------

RingDescriptor RingDescriptor::rationals(std::string variable) {
  return RingDescriptor({}, std::move(variable));
}

RingDescriptor RingDescriptor::localized(std::vector<Integer> primes, std::string variable) {
  if (primes.empty()) throw std::invalid_argument("localized ring needs at least one prime");
  std::sort(primes.begin(), primes.end());
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end()) {
    throw std::invalid_argument("localized ring primes must be distinct");
  }
  for (const auto& p : primes) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + p.get_str());
  }
  return RingDescriptor(std::move(primes), std::move(variable));
}

bool RingDescriptor::contains(const Rational& q) const {
  for (const auto& p : primes_) {
    if (mpz_divisible_p(q.get_den_mpz_t(), p.get_mpz_t())) return false;
  }
  return true;
}

bool RingDescriptor::is_unit(const Rational& q) const {
  if (sgn(q) == 0 || !contains(q)) return false;
  for (const auto& p : primes_) {
    if (mpz_divisible_p(q.get_num_mpz_t(), p.get_mpz_t())) return false;
  }
  return true;
}

Integer RingDescriptor::non_invertible_product() const {
  Integer out = 1;
  for (const auto& p : primes_) out *= p;
  return out;
}

bool RingDescriptor::is_non_invertible(const Integer& p) const {
  return std::find(primes_.begin(), primes_.end(), p) != primes_.end();
}

std::string RingDescriptor::to_string() const {
  if (primes_.empty()) return "Q[" + variable_ + "]";
  std::string s = "Z_(";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) s += ",";
    s += primes_[i].get_str();
  }
  return s + ")[" + variable_ + "]";
}

// ---- operations ----------------------------------------------------------

Valuation ord_p(const Rational& x, const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("ord_p: not a prime: " + p.get_str());
  if (sgn(x) == 0) return Valuation::infinity();
  Integer rest;
  long up = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_num_mpz_t(), p.get_mpz_t()));
  long down = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_den_mpz_t(), p.get_mpz_t()));
  return Valuation(up - down);
}

Integer crt(const std::vector<Integer>& residues, const std::vector<Integer>& moduli) {
  if (residues.size() != moduli.size()) {
    throw std::invalid_argument("crt: residues and moduli differ in length");
  }
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] < 2) throw std::invalid_argument("crt: modulus below 2: " + moduli[i].get_str());
    for (std::size_t j = i + 1; j < moduli.size(); ++j) {
      if (gcd(moduli[i], moduli[j]) != 1) {
        throw std::invalid_argument("crt: moduli " + moduli[i].get_str() + " and " +
                                    moduli[j].get_str() + " are not coprime");
      }
    }
  }
  Integer c = 0;
  Integer m = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    // c + m*k = r_i (mod m_i)
    Integer inv;
    mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), moduli[i].get_mpz_t());
    Integer k = mod((residues[i] - c) * inv, moduli[i]);
    c += m * k;
    m *= moduli[i];
  }
  return mod(c, m);
}

Integer multiplicative_order(const Integer& x, const Integer& n) {
  if (gcd(x, n) != 1) throw std::invalid_argument("order: element not invertible");
  if (n == 1) return 1;
  // The order divides the group exponent; strip prime factors of phi(n).
  Integer phi = 1;
  for (auto [q, e] : factorize(static_cast<long>(to_u64(n)))) {
    phi *= ipow(Integer(q), static_cast<unsigned long>(e - 1)) * (q - 1);
  }
  Integer ord = phi;
  for (auto [q, e] : factorize(static_cast<long>(to_u64(phi)))) {
    for (int i = 0; i < e; ++i) {
      Integer candidate = ord / q;
      Integer r;
      mpz_powm(r.get_mpz_t(), x.get_mpz_t(), candidate.get_mpz_t(), n.get_mpz_t());
      if (r != 1) break;
      ord = candidate;
    }
  }
  return ord;
}

Integer hensel_root_of_unity(long m, const Integer& p, long k) {
  if (!is_prime(p)) throw std::invalid_argument("hensel: not a prime: " + p.get_str());
  if (m < 1 || k < 1) throw std::invalid_argument("hensel: need m >= 1 and k >= 1");
  if ((p - 1) % m != 0) {
    throw std::invalid_argument("hensel: " + std::to_string(m) + " does not divide " +
                                Integer(p - 1).get_str());
  }
  const Integer modulus = ipow(p, static_cast<unsigned long>(k));
  if (m == 1) return 1 % modulus;

  // A residue of order m modulo p.
  Integer root = 0;
  for (Integer x = 2; x < p; ++x) {
    if (multiplicative_order(x, p) == m) {
      root = x;
      break;
    }
  }
  // Newton iteration on x^m - 1; the derivative m*x^(m-1) is a unit since p does not divide m.
  const Integer em = m;
  for (long i = 0; i < k + 1; ++i) {
    Integer value, deriv, inv;
    mpz_powm_ui(value.get_mpz_t(), root.get_mpz_t(), static_cast<unsigned long>(m),
                modulus.get_mpz_t());
    mpz_powm_ui(deriv.get_mpz_t(), root.get_mpz_t(), static_cast<unsigned long>(m - 1),
                modulus.get_mpz_t());
    deriv = mod(deriv * em, modulus);
    mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), modulus.get_mpz_t());
    root = mod(root - (value - 1) * inv, modulus);
  }
  // The roots of order m form the primitive powers of one lift.
  Integer best = modulus;
  for (long j = 1; j <= m; ++j) {
    if (std::gcd(j, m) != 1) continue;
    Integer c;
    mpz_powm_ui(c.get_mpz_t(), root.get_mpz_t(), static_cast<unsigned long>(j),
                modulus.get_mpz_t());
    best = std::min(best, c);
  }
  return best;
}

namespace {

std::uint64_t isqrt_u64(std::uint64_t n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), from_u64(n).get_mpz_t());
  return to_u64(r);
}

bool is_square_u64(std::uint64_t n, std::uint64_t& root) {
  root = isqrt_u64(n);
  return root * root == n;
}

}  // namespace

std::array<Integer, 4> four_squares(const Integer& n) {
  if (sgn(n) < 0) throw std::invalid_argument("four_squares: negative input");
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 62) {
    throw std::domain_error("four_squares: input exceeds desk range (2^62)");
  }
  const std::uint64_t v = to_u64(n);
  for (std::uint64_t a = isqrt_u64(v);; --a) {
    const std::uint64_t ra = v - a * a;
    // Remaining three squares are each at most a, so ra <= 3a^2.
    if (ra > 3 * a * a) break;
    for (std::uint64_t b = std::min(a, isqrt_u64(ra));; --b) {
      const std::uint64_t rb = ra - b * b;
      if (rb > 2 * b * b) break;
      for (std::uint64_t c = std::min(b, isqrt_u64(rb));; --c) {
        const std::uint64_t rc = rb - c * c;
        if (rc > c * c) break;
        std::uint64_t d = 0;
        if (is_square_u64(rc, d) && d <= c) {
          return {from_u64(a), from_u64(b), from_u64(c), from_u64(d)};
        }
        if (c == 0) break;
      }
      if (b == 0) break;
    }
    if (a == 0) break;
  }
  throw std::logic_error("four_squares: no decomposition found for " + n.get_str());
}

InverseClosure local_inverse_closure(const Rational& q, const RingDescriptor& ring) {
  if (!ring.contains(q)) {
    throw std::invalid_argument(q.get_str() + " is not in " + ring.to_string());
  }
  const Integer a = q.get_num();
  const Integer b = q.get_den();
  InverseClosure out;
  out.inverse = Rational(1, b);
  if (b == 1) {
    out.x1 = 0;
  } else {
    mpz_invert(out.x1.get_mpz_t(), mod(a, b).get_mpz_t(), b.get_mpz_t());
  }
  out.x2 = (1 - a * out.x1) / b;
  return out;
}

GateValue nonzero_gate(const Rational& x, const Integer& p, const RingDescriptor& ring) {
  if (!ring.is_non_invertible(p)) {
    throw std::invalid_argument(p.get_str() + " is invertible in " + ring.to_string());
  }
  if (!ring.contains(x)) {
    throw std::invalid_argument(x.get_str() + " is not in " + ring.to_string());
  }
  Rational value = Rational(p) * x - 1;
  value.canonicalize();
  return {value, is_integer(value)};
}

}  // namespace dwb
