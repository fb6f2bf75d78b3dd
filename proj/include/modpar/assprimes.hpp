#pragma once

// Associated primes and primary decomposition of zero-dimensional ideals
// over Q, via the minimal polynomial of a random linear form.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "modpar/modstd.hpp"
#include "modpar/unifactor.hpp"
#include "modpar/zerodim.hpp"

namespace modpar {

struct AssPrimesConfig {
  ModStdConfig modstd;
  unsigned max_depth = 8;
};

struct AssPrimesReport {
  std::size_t rounds = 0;
  std::size_t radical_computations = 0;
  std::size_t stagnations = 0;
  std::size_t recursions = 0;
  std::vector<bool> p_test_rad;  // one entry per call, in call order
};

struct AssPrimesResult {
  std::vector<QBasis> primes;  // reduced bases in the input ordering, sorted
  LinearForm linear_form;      // of the top-level call
  QDense F;                    // monic, of the top-level call
  Factorization factors;
};

enum class VerifyKind { full, partial, fail };

struct VerifyOutcome {
  VerifyKind kind = VerifyKind::fail;
  /// For partial: indices into factors.factors of the irreducibles dividing H.
  std::vector<std::size_t> h_factors;
  QDense H;
};

/// Coefficients a_1..a_{n-1} uniform in [-99, 99].
LinearForm random_linear_form(std::size_t nvars, std::mt19937_64& rng);

/// F(r) in <G>, and which proper divisors of F also evaluate into <G>.
VerifyOutcome verify_F(const QBasis& G, const QDense& F, const Factorization& factors, const LinearForm& r,
                       unsigned cores = 1);

/// Minimal primes of the zero-dimensional ideal I. Throws
/// PositiveDimensional or MaxRoundsExceeded.
AssPrimesResult ass_primes(const Ideal& I, const AssPrimesConfig& config, AssPrimesReport* report = nullptr);

/// sigma_i outside M_i and inside every other M_j.
std::vector<QPoly> separators(std::span<const QBasis> primes);

/// I : f^infinity, as a reduced basis in I's ordering.
QBasis saturate(const Ideal& I, const QPoly& f, const ModStdConfig& config);

/// I cap J, as a reduced basis in I's ordering.
QBasis intersect(const Ideal& I, const Ideal& J, const ModStdConfig& config);

struct PrimaryComponent {
  QBasis primary;
  QBasis associated_prime;
};

/// Throws std::runtime_error if the components do not intersect to I.
std::vector<PrimaryComponent> primary_decomposition(const Ideal& I, const AssPrimesConfig& config,
                                                    AssPrimesReport* report = nullptr);

/// Canonical text of a basis, one element per entry; used for sorting and
/// output.
std::vector<std::string> basis_strings(const QBasis& G);

}  // namespace modpar
