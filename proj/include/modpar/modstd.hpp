#pragma once

// Modular Groebner bases over Q: Groebner bases modulo a batch of primes,
// majority vote on leading monomials, Chinese remainder + Farey lifting, a
// cheap test modulo a fresh prime, and the final verification over Q.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "modpar/groebner.hpp"
#include "modpar/numth.hpp"

namespace modpar {

struct ModStdConfig {
  std::size_t batch_size = 10;  // primes per round; also the enlargement step
  bool verify = true;           // false: probabilistic mode
  std::size_t max_rounds = 20;
  std::uint64_t seed = 0;
  unsigned cores = 1;
};

struct ModularGBRecord {
  std::uint64_t prime;
  PBasis gb;
};

struct RoundReport {
  std::vector<std::uint64_t> computed;  // primes whose basis was computed this round
  std::size_t discarded = 0;            // bad primes among `computed`
  std::size_t records = 0;              // cached records after the round
  std::size_t kept = 0;                 // majority class size
  bool lifted = false;
  std::optional<std::uint64_t> test_prime;
  std::optional<bool> p_test;
  std::optional<bool> verified;
};

struct ModStdReport {
  std::vector<RoundReport> rounds;
  double seconds_modular = 0;
  double seconds_lift = 0;
  double seconds_p_test = 0;
  double seconds_verify = 0;
};

class MaxRoundsExceeded : public std::runtime_error {
 public:
  MaxRoundsExceeded(const std::string& what, std::optional<QBasis> best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const std::optional<QBasis>& best_candidate() const { return best_; }

 private:
  std::optional<QBasis> best_;
};

/// Reduced basis of I_p. Throws ArithmeticError if p divides a denominator.
ModularGBRecord compute_modular_gb(const Ideal& I, std::uint64_t p);

/// Largest class of records with equal leading monomial sets; ties go to
/// the class holding the smallest prime. Output sorted by prime.
std::vector<ModularGBRecord> delete_unlucky_primes_sb(std::vector<ModularGBRecord> records);

/// Coefficientwise CRT + Farey lift; polynomials are matched by leading
/// monomial and supports are merged. nullopt if some coefficient has no
/// rational preimage yet. Throws std::invalid_argument on mismatched
/// leading monomial sets.
std::optional<std::vector<QPoly>> lift_gb(const Ring& ring, std::span<const ModularGBRecord> records);

/// Checks G modulo a fresh prime from `pool` (which records it as used).
/// Positive iff every generator of I reduces to zero modulo G_p, G_p lies in
/// std(I_p) and both have the same leading monomials.
bool p_test_sb(const Ideal& I, std::span<const QPoly> G, PrimePool& pool, std::uint64_t* used_prime = nullptr);

/// I ⊆ <G> and G is a Groebner basis of <G>, with subtasks spread over
/// `cores` workers.
bool verify_gb(const Ideal& I, const QBasis& G, unsigned cores);

/// Reduced Groebner basis of I over Q.
QBasis mod_std(const Ideal& I, const ModStdConfig& config, ModStdReport* report = nullptr);

}  // namespace modpar
