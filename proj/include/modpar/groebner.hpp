#pragma once

#include <span>
#include <utility>
#include <vector>

#include "modpar/polynomial.hpp"

namespace modpar {

/// Reduced Groebner basis: interreduced, normalized (monic over a field,
/// primitive over Z), sorted by leading monomial descending.
template <class E>
struct GroebnerBasis {
  Ring ring;
  std::vector<Polynomial<E>> elements;
  std::vector<Monomial> lm_set;  // LM(elements[i]) in the same order

  std::size_t size() const { return elements.size(); }
  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

using QBasis = GroebnerBasis<Rational>;
using ZBasis = GroebnerBasis<Integer>;
using PBasis = GroebnerBasis<std::uint32_t>;

/// Ideal of Q[X] given by generators.
struct Ideal {
  Ring ring;
  std::vector<QPoly> generators;

  Ideal() = default;
  /// Drops nothing; throws std::invalid_argument on a zero generator.
  Ideal(Ring ring, std::vector<QPoly> generators);
};

/// Sorts (LM descending), normalizes and fills lm_set.
template <class D>
GroebnerBasis<typename D::Element> make_basis(const PolyRing<D>& R,
                                              std::vector<Polynomial<typename D::Element>> elements);

template <class D>
Polynomial<typename D::Element> s_poly(const PolyRing<D>& R, const Polynomial<typename D::Element>& f,
                                       const Polynomial<typename D::Element>& g);

/// Full reduction. Reducers are tried in the given order and the largest
/// reducible term is reduced first. Over Z the remainder is defined up to a
/// nonzero integer factor (fraction-free pseudo-reduction).
template <class D>
Polynomial<typename D::Element> normal_form(const PolyRing<D>& R, const Polynomial<typename D::Element>& f,
                                            std::span<const Polynomial<typename D::Element>> G);

/// Reduced Groebner basis of the ideal generated by `generators`.
template <class D>
GroebnerBasis<typename D::Element> buchberger(const PolyRing<D>& R,
                                              std::vector<Polynomial<typename D::Element>> generators);

template <class D>
bool ideal_contains(const PolyRing<D>& R, const GroebnerBasis<typename D::Element>& G,
                    const Polynomial<typename D::Element>& f);

/// Pairs (i < j) surviving the product and chain criteria when the
/// elements of G are inserted one by one.
template <class D>
std::vector<std::pair<std::size_t, std::size_t>> critical_pairs(const PolyRing<D>& R,
                                                                std::span<const Polynomial<typename D::Element>> G);

/// Buchberger's criterion on the surviving pairs; pair reductions run on up
/// to `cores` workers.
template <class D>
bool is_self_gb(const PolyRing<D>& R, std::span<const Polynomial<typename D::Element>> G, unsigned cores = 1);

/// Direct (non-modular) reduced Groebner basis over Q: fraction-free
/// Buchberger over Z, returned monic.
QBasis groebner_over_q(const Ring& ring, std::span<const QPoly> generators);

/// Integral primitive copy of a rational basis.
ZBasis to_primitive(const QBasis& G);

/// Generators reduced mod p. Throws ArithmeticError if p divides a denominator.
std::vector<PPoly> reduce_mod_p(std::span<const QPoly> polys, std::uint32_t p);

/// Re-computes the reduced basis of ideal generated by G under another
/// ordering of the same variables, directly over Q.
QBasis change_order_direct(const QBasis& G, const MonomialOrder& order);

}  // namespace modpar
