#include "modpar/numth.hpp"

#include <algorithm>

namespace modpar {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mulmod64(result, base, m);
    base = mulmod64(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = powmod64(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mulmod64(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // This base set is a proven deterministic witness set below 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

PrimePool::PrimePool(std::uint64_t seed, std::vector<Integer> forbidden)
    : seed_(seed), rng_(seed), forbidden_(std::move(forbidden)) {
  for (auto& f : forbidden_) f = abs(f);
}

void PrimePool::add_forbidden(const Integer& value) { forbidden_.push_back(abs(value)); }

bool PrimePool::is_used(std::uint64_t p) const {
  return std::binary_search(sorted_.begin(), sorted_.end(), p);
}

bool PrimePool::is_forbidden(std::uint64_t p) const {
  return std::any_of(forbidden_.begin(), forbidden_.end(), [p](const Integer& f) {
    return f != 0 && mpz_divisible_ui_p(f.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
  });
}

std::vector<std::uint64_t> gen_primes(std::size_t count, PrimePool& pool) {
  std::vector<std::uint64_t> fresh;
  fresh.reserve(count);
  constexpr std::uint64_t span = kPrimeHigh - kPrimeLow;
  while (fresh.size() < count) {
    const std::uint64_t candidate = (kPrimeLow + pool.rng_() % span) | 1U;
    if (candidate >= kPrimeHigh || !is_prime(candidate)) continue;
    if (pool.is_used(candidate) || pool.is_forbidden(candidate)) continue;
    fresh.push_back(candidate);
    pool.primes_.push_back(candidate);
    pool.sorted_.insert(std::upper_bound(pool.sorted_.begin(), pool.sorted_.end(), candidate), candidate);
  }
  return fresh;
}

Integer mod_floor(const Integer& a, const Integer& modulus) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

std::uint32_t mod_word(const Integer& a, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(a.get_mpz_t(), p));
}

Integer mod_inverse(const Integer& a, const Integer& modulus) {
  Integer u;
  if (modulus <= 1 || mpz_invert(u.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw ArithmeticError("mod_inverse: " + a.get_str() + " is not invertible modulo " + modulus.get_str());
  }
  return u;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw ArithmeticError("mod_inverse: not invertible modulo " + std::to_string(p));
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Residue crt_combine(const Residue& a, const Residue& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.modulus.get_mpz_t(), b.modulus.get_mpz_t());
  if (g != 1) {
    throw ArithmeticError("crt_lift: moduli " + a.modulus.get_str() + " and " + b.modulus.get_str() +
                          " are not coprime");
  }
  // x = a.value + a.modulus * t,  t = (b.value - a.value) * a.modulus^-1 mod b.modulus
  const Integer inv = mod_inverse(mod_floor(a.modulus, b.modulus), b.modulus);
  const Integer t = mod_floor((b.value - a.value) * inv, b.modulus);
  Residue out{a.value + a.modulus * t, a.modulus * b.modulus};
  return out;
}

Residue crt_lift(std::span<const Residue> residues) {
  if (residues.empty()) throw std::invalid_argument("crt_lift: no residues");
  Residue acc{mod_floor(residues.front().value, residues.front().modulus), residues.front().modulus};
  for (const auto& r : residues.subspan(1)) acc = crt_combine(acc, r);
  return acc;
}

CrtBasis::CrtBasis(std::span<const std::uint64_t> primes) : modulus_(1) {
  for (std::uint64_t p : primes) modulus_ *= static_cast<unsigned long>(p);
  idempotents_.reserve(primes.size());
  for (std::uint64_t p : primes) {
    const Integer q = modulus_ / static_cast<unsigned long>(p);
    const Integer pz = static_cast<unsigned long>(p);
    idempotents_.push_back(q * mod_inverse(mod_floor(q, pz), pz));
  }
}

Integer CrtBasis::lift(std::span<const std::uint32_t> residues) const {
  if (residues.size() != idempotents_.size()) throw std::invalid_argument("CrtBasis::lift: residue count mismatch");
  Integer acc = 0;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (residues[i] != 0) mpz_addmul_ui(acc.get_mpz_t(), idempotents_[i].get_mpz_t(), residues[i]);
  }
  return mod_floor(acc, modulus_);
}

std::optional<Rational> farey_reconstruct(const Integer& c, const Integer& modulus) {
  if (modulus < 2) throw std::invalid_argument("farey_reconstruct: modulus must be >= 2");
  // bound = floor(sqrt(N/2))
  Integer half = modulus / 2;
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());

  Integer r0 = modulus, r1 = mod_floor(c, modulus);
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    r0 = std::exchange(r1, Integer(r0 - q * r1));
    t0 = std::exchange(t1, Integer(t0 - q * t1));
  }
  if (abs(t1) > bound || t1 == 0) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), t1.get_mpz_t(), modulus.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  if (out.get_num() != 0) {
    Integer g2;
    mpz_gcd(g2.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g2 != 1) return std::nullopt;
  }
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

}  // namespace modpar
