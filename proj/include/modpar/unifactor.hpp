#pragma once

// Univariate factorization over Q: squarefree decomposition, Cantor-
// Zassenhaus over F_p, Hensel lifting and Zassenhaus recombination.

#include <cstdint>
#include <utility>
#include <vector>

#include "modpar/univariate.hpp"

namespace modpar {

struct Factor {
  ZDense poly;  // primitive, positive leading coefficient, irreducible over Q
  unsigned multiplicity;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// F = unit * prod poly^multiplicity. Factors are sorted by degree, then by
/// coefficients from the top down.
struct Factorization {
  Rational unit;
  std::vector<Factor> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Yun's algorithm: F = lc(F) * prod G_i^i with G_i monic, squarefree and
/// pairwise coprime. Only nonconstant G_i are returned, in increasing i.
std::vector<std::pair<QDense, unsigned>> squarefree_decomposition(const QDense& F);

/// Monic irreducible factors of a squarefree monic F over F_p (p odd),
/// sorted by degree then coefficients. Throws std::invalid_argument if F is
/// not squarefree mod p.
std::vector<PDense> factor_mod_p(const PDense& F, std::uint32_t p, std::uint64_t seed = 0);

/// Lifts F = lc(F) * prod factors (mod p), factors monic and pairwise
/// coprime, to monic g_i with F = lc(F) * prod g_i mod p^k. Coefficients are
/// returned in [0, p^k). Throws std::invalid_argument on non-coprime input.
std::vector<ZDense> hensel_lift(const ZDense& F, const std::vector<PDense>& factors, std::uint32_t p, unsigned k);

Factorization factor_rational(const QDense& F);

/// unit * prod factors, for round-trip checks.
QDense expand(const Factorization& f);

/// Canonical factor order used by factor_rational.
bool factor_less(const ZDense& a, const ZDense& b);

}  // namespace modpar
