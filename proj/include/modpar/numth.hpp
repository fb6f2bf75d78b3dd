#pragma once

// Number theory layer: prime pools, modular inverses, Chinese remaindering
// and Farey (rational) reconstruction on GMP integers.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace modpar {

using Integer = mpz_class;
using Rational = mpq_class;

/// Primes are drawn from [kPrimeLow, kPrimeHigh).
inline constexpr std::uint64_t kPrimeLow = std::uint64_t{1} << 28;
inline constexpr std::uint64_t kPrimeHigh = std::uint64_t{1} << 31;

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Seeded source of fresh word-size primes.
///
/// Every prime handed out is recorded in `primes()` and never handed out
/// again. A prime dividing any integer of the forbidden set is skipped.
class PrimePool {
 public:
  explicit PrimePool(std::uint64_t seed = 0, std::vector<Integer> forbidden = {});

  std::span<const std::uint64_t> primes() const { return primes_; }
  std::span<const Integer> forbidden() const { return forbidden_; }
  std::uint64_t seed() const { return seed_; }

  void add_forbidden(const Integer& value);
  bool is_used(std::uint64_t p) const;
  /// True if p divides some forbidden integer.
  bool is_forbidden(std::uint64_t p) const;

 private:
  friend std::vector<std::uint64_t> gen_primes(std::size_t count, PrimePool& pool);

  std::uint64_t seed_;
  std::mt19937_64 rng_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::uint64_t> sorted_;
  std::vector<Integer> forbidden_;
};

/// Extends the pool by `count` new primes and returns them in draw order.
std::vector<std::uint64_t> gen_primes(std::size_t count, PrimePool& pool);

struct Residue {
  Integer value;
  Integer modulus;
};

/// Combines residues with pairwise coprime moduli. Throws ArithmeticError
/// when two moduli share a factor.
Residue crt_lift(std::span<const Residue> residues);

/// Incremental two-modulus step used by the lifting code.
Residue crt_combine(const Residue& a, const Residue& b);

/// Precomputed Chinese remainder basis for a fixed list of word primes, so
/// lifting many coefficients costs one dot product each.
class CrtBasis {
 public:
  explicit CrtBasis(std::span<const std::uint64_t> primes);

  const Integer& modulus() const { return modulus_; }
  std::size_t size() const { return idempotents_.size(); }
  /// Value in [0, N) congruent to residues[i] modulo primes[i].
  Integer lift(std::span<const std::uint32_t> residues) const;

 private:
  Integer modulus_;
  std::vector<Integer> idempotents_;
};

/// Rational a/b with a = c*b mod N, |a| <= sqrt(N/2), 0 < b <= sqrt(N/2).
std::optional<Rational> farey_reconstruct(const Integer& c, const Integer& modulus);

/// u with a*u = 1 mod N, 0 < u < N. Throws ArithmeticError if gcd(a, N) != 1.
Integer mod_inverse(const Integer& a, const Integer& modulus);
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

/// a mod N in [0, N).
Integer mod_floor(const Integer& a, const Integer& modulus);
std::uint32_t mod_word(const Integer& a, std::uint32_t p);

/// splitmix64 step; used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace modpar
