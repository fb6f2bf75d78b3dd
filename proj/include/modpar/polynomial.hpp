#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modpar/domain.hpp"
#include "modpar/monomial.hpp"

namespace modpar {

/// Variables and a global monomial ordering. The coefficient domain is
/// attached separately by PolyRing.
class Ring {
 public:
  Ring() = default;
  Ring(std::vector<std::string> variables, MonomialOrder order);

  std::size_t size() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  Ring with_order(MonomialOrder order) const { return Ring(variables_, order); }

  int compare(const Monomial& a, const Monomial& b) const {
    return modpar::compare(order_, variables_.size(), a, b);
  }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

template <class E>
struct Term {
  Monomial mono;
  E coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: terms strictly descending in the ring ordering, no
/// zero coefficients. Only PolyRing produces new polynomials, so the
/// invariant is established there.
template <class E>
class Polynomial {
 public:
  using Element = E;

  Polynomial() = default;
  /// Trusted constructor: `terms` must already be canonical.
  explicit Polynomial(std::vector<Term<E>> terms) : terms_(std::move(terms)) {}

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term<E>>& terms() const { return terms_; }
  const Term<E>& operator[](std::size_t i) const { return terms_[i]; }

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const E& leading_coeff() const { return terms_.front().coeff; }
  Polynomial tail() const { return Polynomial(std::vector<Term<E>>(terms_.begin() + 1, terms_.end())); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term<E>> terms_;
};

using QPoly = Polynomial<Rational>;
using ZPoly = Polynomial<Integer>;
using PPoly = Polynomial<std::uint32_t>;

template <class D>
class PolyRing {
 public:
  using Domain = D;
  using Element = typename D::Element;
  using Poly = Polynomial<Element>;
  using TermT = Term<Element>;

  explicit PolyRing(Ring ring, D domain = {}) : ring_(std::move(ring)), domain_(std::move(domain)) {}

  const Ring& ring() const { return ring_; }
  const D& domain() const { return domain_; }
  std::size_t nvars() const { return ring_.size(); }
  int compare(const Monomial& a, const Monomial& b) const { return ring_.compare(a, b); }

  /// Sorts, merges equal monomials and drops zeros.
  Poly canonicalize(std::vector<TermT> terms) const {
    std::sort(terms.begin(), terms.end(),
              [this](const TermT& a, const TermT& b) { return compare(a.mono, b.mono) > 0; });
    std::vector<TermT> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = domain_.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && domain_.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && domain_.is_zero(out.back().coeff)) out.pop_back();
    return Poly(std::move(out));
  }

  Poly zero() const { return Poly(); }
  Poly constant(const Element& c) const { return term(Monomial(), c); }
  Poly one() const { return constant(domain_.one()); }
  Poly term(const Monomial& m, const Element& c) const {
    if (domain_.is_zero(c)) return Poly();
    return Poly(std::vector<TermT>{TermT{m, c}});
  }
  Poly variable(std::size_t i) const { return term(Monomial::variable(i), domain_.one()); }

  Poly neg(const Poly& f) const {
    std::vector<TermT> out = f.terms();
    for (auto& t : out) t.coeff = domain_.neg(t.coeff);
    return Poly(std::move(out));
  }

  Poly scale(const Poly& f, const Element& c) const {
    if (domain_.is_zero(c)) return Poly();
    std::vector<TermT> out = f.terms();
    for (auto& t : out) t.coeff = domain_.mul(t.coeff, c);
    return Poly(std::move(out));
  }

  /// c * m * f
  Poly mul_term(const Poly& f, const Element& c, const Monomial& m) const {
    if (domain_.is_zero(c)) return Poly();
    std::vector<TermT> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) out.push_back(TermT{t.mono * m, domain_.mul(t.coeff, c)});
    return Poly(std::move(out));
  }

  /// a*f + b*m*g in one merge pass.
  Poly combine(const Element& a, const Poly& f, const Element& b, const Monomial& m, const Poly& g) const {
    std::vector<TermT> out;
    combine_into(out, a, f.terms(), 0, b, m, g.terms(), 0);
    return Poly(std::move(out));
  }

  /// Appends a*f[fi..] + b*m*g[gi..] to `out`.
  void combine_into(std::vector<TermT>& out, const Element& a, const std::vector<TermT>& f, std::size_t fi,
                    const Element& b, const Monomial& m, const std::vector<TermT>& g, std::size_t gi) const {
    const bool a_one = domain_.is_one(a);
    out.reserve(out.size() + (f.size() - fi) + (g.size() - gi));
    while (fi < f.size() && gi < g.size()) {
      Monomial gm = g[gi].mono * m;
      const int c = compare(f[fi].mono, gm);
      if (c > 0) {
        out.push_back(TermT{f[fi].mono, a_one ? f[fi].coeff : domain_.mul(a, f[fi].coeff)});
        ++fi;
      } else if (c < 0) {
        out.push_back(TermT{gm, domain_.mul(b, g[gi].coeff)});
        ++gi;
      } else {
        Element s = domain_.add(a_one ? f[fi].coeff : domain_.mul(a, f[fi].coeff), domain_.mul(b, g[gi].coeff));
        if (!domain_.is_zero(s)) out.push_back(TermT{gm, std::move(s)});
        ++fi;
        ++gi;
      }
    }
    for (; fi < f.size(); ++fi) out.push_back(TermT{f[fi].mono, a_one ? f[fi].coeff : domain_.mul(a, f[fi].coeff)});
    for (; gi < g.size(); ++gi) out.push_back(TermT{g[gi].mono * m, domain_.mul(b, g[gi].coeff)});
  }

  Poly add(const Poly& f, const Poly& g) const { return combine(domain_.one(), f, domain_.one(), Monomial(), g); }
  Poly sub(const Poly& f, const Poly& g) const {
    return combine(domain_.one(), f, domain_.neg(domain_.one()), Monomial(), g);
  }

  Poly mul(const Poly& f, const Poly& g) const {
    if (f.is_zero() || g.is_zero()) return Poly();
    const Poly& small = f.size() <= g.size() ? f : g;
    const Poly& large = f.size() <= g.size() ? g : f;
    Poly acc;
    for (const auto& t : small.terms()) acc = combine(domain_.one(), acc, t.coeff, t.mono, large);
    return acc;
  }

  Poly pow(const Poly& f, unsigned e) const {
    Poly result = one();
    Poly base = f;
    while (e != 0) {
      if (e & 1U) result = mul(result, base);
      e >>= 1U;
      if (e != 0) base = mul(base, base);
    }
    return result;
  }

  Poly tail(const Poly& f) const { return f.is_zero() ? Poly() : f.tail(); }

  /// Leading coefficient 1. Fields only.
  Poly monic(const Poly& f) const
    requires D::is_field
  {
    if (f.is_zero() || domain_.is_one(f.leading_coeff())) return f;
    return scale(f, domain_.inv(f.leading_coeff()));
  }

  Element content(const Poly& f) const
    requires(!D::is_field)
  {
    Element g = domain_.zero();
    for (const auto& t : f.terms()) {
      g = domain_.gcd(g, t.coeff);
      if (domain_.is_one(g)) break;
    }
    return g;
  }

  /// Content removed, positive leading coefficient. Integer ring only.
  Poly primitive(const Poly& f) const
    requires(!D::is_field)
  {
    if (f.is_zero()) return f;
    Element c = content(f);
    if (sgn(f.leading_coeff()) < 0) c = -c;
    if (domain_.is_one(c)) return f;
    std::vector<TermT> out = f.terms();
    for (auto& t : out) t.coeff = domain_.exact_div(t.coeff, c);
    return Poly(std::move(out));
  }

  /// Canonical normalization: monic over a field, primitive over Z.
  Poly normalize(const Poly& f) const {
    if constexpr (D::is_field) {
      return monic(f);
    } else {
      return primitive(f);
    }
  }

  bool is_canonical(const Poly& f) const {
    const auto& t = f.terms();
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (domain_.is_zero(t[i].coeff)) return false;
      if (i > 0 && compare(t[i - 1].mono, t[i].mono) <= 0) return false;
    }
    return true;
  }

 private:
  Ring ring_;
  D domain_;
};

using QRing = PolyRing<RationalField>;
using ZRing = PolyRing<IntegerRing>;
using PRing = PolyRing<PrimeField>;

/// Coefficientwise image mod p. Throws ArithmeticError ("bad prime") when p
/// divides a denominator.
PPoly reduce_mod_p(const QPoly& f, std::uint32_t p);
PPoly reduce_mod_p(const ZPoly& f, std::uint32_t p);

/// Scales by the lcm of denominators and removes content.
ZPoly to_primitive(const QPoly& f);
QPoly to_rational(const ZPoly& f);
/// Monic copy over Q.
QPoly to_monic(const QRing& ring, const ZPoly& f);

/// Re-sorts a polynomial for a ring with the same variables and a different
/// ordering.
template <class D>
typename PolyRing<D>::Poly reorder(const PolyRing<D>& target, const typename PolyRing<D>::Poly& f) {
  return target.canonicalize(f.terms());
}

/// Canonical text, e.g. `3/2*x1^2*x2 - x3 + 1`.
std::string to_string(const Ring& ring, const QPoly& f);
std::string to_string(const Ring& ring, const ZPoly& f);
std::string to_string(const Ring& ring, const PPoly& f);
std::string to_string(const Ring& ring, const Monomial& m);

/// Parses a polynomial in the canonical syntax. Throws ParseError.
QPoly parse_polynomial(const Ring& ring, std::string_view text, std::size_t line = 1, std::size_t column = 1);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Integer linear form a_1 x_1 + ... + a_{n-1} x_{n-1} + x_n.
struct LinearForm {
  std::vector<long> coeffs;  // a_1..a_{n-1}

  template <class D>
  typename PolyRing<D>::Poly to_polynomial(const PolyRing<D>& R) const {
    const std::size_t n = R.nvars();
    if (coeffs.size() + 1 != n) throw std::invalid_argument("linear form has wrong arity");
    std::vector<Term<typename D::Element>> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      terms.push_back({Monomial::variable(i), R.domain().from_int(coeffs[i])});
    }
    terms.push_back({Monomial::variable(n - 1), R.domain().one()});
    return R.canonicalize(std::move(terms));
  }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

std::string to_string(const Ring& ring, const LinearForm& r);

}  // namespace modpar
