#pragma once

// Zero-dimensional ideals: staircases, minimal polynomials of linear forms
// via Krylov sequences mod p, and the modular radical.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "modpar/groebner.hpp"
#include "modpar/modstd.hpp"
#include "modpar/univariate.hpp"

namespace modpar {

class PositiveDimensional : public std::invalid_argument {
 public:
  PositiveDimensional() : std::invalid_argument("positive-dimensional ideal") {}
};

/// Monomials outside LM(G), ascending in the ring ordering.
struct QuotientBasis {
  std::vector<Monomial> monomials;
  std::size_t dimension() const { return monomials.size(); }
};

/// Throws PositiveDimensional when the staircase is infinite.
QuotientBasis quotient_basis(const Ring& ring, std::span<const Monomial> leading_monomials);

template <class E>
QuotientBasis quotient_basis(const GroebnerBasis<E>& G) {
  return quotient_basis(G.ring, G.lm_set);
}

struct ModularMinPolyRecord {
  std::uint64_t prime;
  PDense poly;  // monic
  long degree() const { return modpar::degree(poly); }
};

struct UnivariateVectorRecord {
  std::uint64_t prime;
  std::vector<PDense> polys;  // f_i monic in x_i
  std::vector<long> degrees;
};

/// Multiplication by each variable on F_p[X]/<G_p> in the staircase basis.
class MultiplicationMaps {
 public:
  /// Gp.gb must be a reduced Groebner basis of a zero-dimensional ideal.
  explicit MultiplicationMaps(const ModularGBRecord& Gp);

  std::size_t dimension() const { return basis_.dimension(); }
  const QuotientBasis& basis() const { return basis_; }
  /// Coordinates of x_var * v.
  std::vector<std::uint32_t> apply(std::size_t var, std::span<const std::uint32_t> v) const;
  /// Monic minimal polynomial of the class of sum coeffs[i] * x_i.
  PDense min_poly(std::span<const long> coeffs) const;

 private:
  PrimeField field_;
  std::size_t nvars_;
  QuotientBasis basis_;
  std::size_t one_index_ = 0;
  // columns_[var][b]: sparse coordinates of x_var * basis[b]
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>> columns_;
};

/// Reduced basis of <G mod p>. Throws ArithmeticError if p divides a
/// denominator of G.
ModularGBRecord reduce_basis_mod_p(const QBasis& G, std::uint64_t p);

ModularMinPolyRecord min_poly_of_form(const ModularGBRecord& Gp, const LinearForm& r);
PDense eliminant_mod_p(const ModularGBRecord& Gp, std::size_t var);
UnivariateVectorRecord eliminants_mod_p(const ModularGBRecord& Gp);

/// Draws fresh primes until one gives quotient dimension d (at most
/// `max_resamples` draws, then std::runtime_error). Positive iff the minimal
/// polynomial of r there has degree d and is squarefree.
bool p_test_rad(std::size_t d, const LinearForm& r, const QBasis& G, PrimePool& pool, unsigned max_resamples = 5);

/// Majority class by degree vector, ties to the smallest prime.
std::vector<UnivariateVectorRecord> delete_unlucky_primes_rad(std::vector<UnivariateVectorRecord> records);
/// Records whose minimal polynomial has degree d.
std::vector<ModularMinPolyRecord> delete_unlucky_primes_rad(std::vector<ModularMinPolyRecord> records, long d);

/// CRT + Farey on aligned monic polynomials. Throws std::invalid_argument on
/// mismatched degrees.
std::optional<QDense> lift_univariate(std::span<const ModularMinPolyRecord> records);
std::optional<std::vector<QDense>> lift_univariate(std::span<const UnivariateVectorRecord> records);

/// NF(F(r), G) by Horner's rule, reducing after every step.
QPoly evaluate_normal_form(const QRing& R, const QDense& F, const QPoly& r, std::span<const QPoly> G);

struct ZeroRadicalReport {
  std::size_t rounds = 0;
  std::size_t primes = 0;
  std::vector<long> eliminant_degrees;
  std::vector<long> squarefree_degrees;
  ModStdReport final_gb;
};

/// Radical of the zero-dimensional ideal generated by the reduced basis G,
/// as a reduced basis for degrevlex on the same variables.
QBasis zero_radical(const QBasis& G, const ModStdConfig& config, ZeroRadicalReport* report = nullptr);

}  // namespace modpar
