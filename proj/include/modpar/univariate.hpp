#pragma once

// Dense univariate polynomials over any coefficient domain. Coefficients are
// stored low degree first with no trailing zeros; the zero polynomial is the
// empty vector.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "modpar/domain.hpp"
#include "modpar/polynomial.hpp"

namespace modpar {

template <class E>
using Dense = std::vector<E>;

using QDense = Dense<Rational>;
using ZDense = Dense<Integer>;
using PDense = Dense<std::uint32_t>;

/// Z/m for an arbitrary modulus m >= 2. inv() only works on units, which is
/// all the Hensel code needs.
struct IntegerModRing {
  using Element = Integer;
  static constexpr bool is_field = true;

  Integer m = 2;

  IntegerModRing() = default;
  explicit IntegerModRing(Integer modulus) : m(std::move(modulus)) {}

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  Element reduce(const Element& a) const { return mod_floor(a, m); }
  Element add(const Element& a, const Element& b) const { return reduce(a + b); }
  Element sub(const Element& a, const Element& b) const { return reduce(a - b); }
  Element neg(const Element& a) const { return reduce(-a); }
  Element mul(const Element& a, const Element& b) const { return reduce(a * b); }
  Element inv(const Element& a) const { return mod_inverse(a, m); }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  Element from_int(std::int64_t v) const { return reduce(Integer(static_cast<long>(v))); }
};

/// Degree, -1 for zero.
template <class E>
long degree(const Dense<E>& f) {
  return static_cast<long>(f.size()) - 1;
}

template <class D>
void trim(const D& dom, Dense<typename D::Element>& f) {
  while (!f.empty() && dom.is_zero(f.back())) f.pop_back();
}

template <class D>
Dense<typename D::Element> dense_add(const D& dom, const Dense<typename D::Element>& a,
                                     const Dense<typename D::Element>& b) {
  Dense<typename D::Element> out(std::max(a.size(), b.size()), dom.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = dom.add(out[i], b[i]);
  trim(dom, out);
  return out;
}

template <class D>
Dense<typename D::Element> dense_sub(const D& dom, const Dense<typename D::Element>& a,
                                     const Dense<typename D::Element>& b) {
  Dense<typename D::Element> out(std::max(a.size(), b.size()), dom.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = dom.sub(out[i], b[i]);
  trim(dom, out);
  return out;
}

template <class D>
Dense<typename D::Element> dense_scale(const D& dom, const Dense<typename D::Element>& a,
                                       const typename D::Element& c) {
  Dense<typename D::Element> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(dom.mul(x, c));
  trim(dom, out);
  return out;
}

template <class D>
Dense<typename D::Element> dense_mul(const D& dom, const Dense<typename D::Element>& a,
                                     const Dense<typename D::Element>& b) {
  if (a.empty() || b.empty()) return {};
  Dense<typename D::Element> out(a.size() + b.size() - 1, dom.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (dom.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = dom.add(out[i + j], dom.mul(a[i], b[j]));
  }
  trim(dom, out);
  return out;
}

/// Division with remainder; the leading coefficient of b must be invertible.
template <class D>
std::pair<Dense<typename D::Element>, Dense<typename D::Element>> dense_divrem(const D& dom,
                                                                             Dense<typename D::Element> a,
                                                                             const Dense<typename D::Element>& b) {
  if (b.empty()) throw std::domain_error("dense_divrem: division by zero");
  trim(dom, a);
  if (a.size() < b.size()) return {{}, std::move(a)};
  const auto lc_inv = dom.inv(b.back());
  Dense<typename D::Element> q(a.size() - b.size() + 1, dom.zero());
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (dom.is_zero(a[k])) continue;
    const auto c = dom.mul(a[k], lc_inv);
    const std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = dom.sub(a[shift + j], dom.mul(c, b[j]));
  }
  a.resize(b.size() - 1);
  trim(dom, a);
  trim(dom, q);
  return {std::move(q), std::move(a)};
}

template <class D>
Dense<typename D::Element> dense_rem(const D& dom, const Dense<typename D::Element>& a,
                                     const Dense<typename D::Element>& b) {
  return dense_divrem(dom, a, b).second;
}

template <class D>
Dense<typename D::Element> dense_monic(const D& dom, const Dense<typename D::Element>& a) {
  if (a.empty() || dom.is_one(a.back())) return a;
  return dense_scale(dom, a, dom.inv(a.back()));
}

/// Monic gcd over a field (gcd(0, 0) = 0).
template <class D>
Dense<typename D::Element> dense_gcd(const D& dom, Dense<typename D::Element> a, Dense<typename D::Element> b) {
  trim(dom, a);
  trim(dom, b);
  while (!b.empty()) {
    auto r = dense_rem(dom, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return dense_monic(dom, a);
}

/// (g, s, t) with s*a + t*b = g monic. Fields only.
template <class D>
std::tuple<Dense<typename D::Element>, Dense<typename D::Element>, Dense<typename D::Element>> dense_xgcd(
    const D& dom, Dense<typename D::Element> a, Dense<typename D::Element> b) {
  using P = Dense<typename D::Element>;
  P s0{dom.one()}, s1{}, t0{}, t1{dom.one()};
  trim(dom, a);
  trim(dom, b);
  while (!b.empty()) {
    auto [q, r] = dense_divrem(dom, a, b);
    a = std::move(b);
    b = std::move(r);
    P s2 = dense_sub(dom, s0, dense_mul(dom, q, s1));
    P t2 = dense_sub(dom, t0, dense_mul(dom, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) return {a, s0, t0};
  const auto c = dom.inv(a.back());
  return {dense_scale(dom, a, c), dense_scale(dom, s0, c), dense_scale(dom, t0, c)};
}

template <class D>
Dense<typename D::Element> dense_derivative(const D& dom, const Dense<typename D::Element>& a) {
  Dense<typename D::Element> out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(dom.mul(dom.from_int(static_cast<std::int64_t>(i)), a[i]));
  trim(dom, out);
  return out;
}

/// a^e mod m.
template <class D>
Dense<typename D::Element> dense_powmod(const D& dom, Dense<typename D::Element> a, const Integer& e,
                                        const Dense<typename D::Element>& m) {
  Dense<typename D::Element> result = dense_rem(dom, Dense<typename D::Element>{dom.one()}, m);
  a = dense_rem(dom, a, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = dense_rem(dom, dense_mul(dom, result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) result = dense_rem(dom, dense_mul(dom, result, a), m);
  }
  return result;
}

template <class D>
typename D::Element dense_eval(const D& dom, const Dense<typename D::Element>& a, const typename D::Element& x) {
  auto acc = dom.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = dom.add(dom.mul(acc, x), a[i]);
  return acc;
}

// Integer polynomials.

Integer content(const ZDense& f);
/// Content removed and positive leading coefficient.
ZDense primitive_part(const ZDense& f);
/// Primitive integer multiple of a rational polynomial.
ZDense to_primitive(const QDense& f);
QDense to_rational(const ZDense& f);
QDense monic(const QDense& f);
/// Exact quotient a / b over Z, or nullopt if b does not divide a.
std::optional<ZDense> exact_quotient(const ZDense& a, const ZDense& b);
/// Monic gcd over Q, via a primitive remainder sequence over Z.
QDense gcd(const QDense& a, const QDense& b);
QDense derivative(const QDense& f);
/// Monic squarefree part.
QDense squarefree_part(const QDense& f);
PDense reduce_mod_p(const ZDense& f, std::uint32_t p);
PDense reduce_mod_p(const QDense& f, std::uint32_t p);

/// f(x_var) as a sparse polynomial; the inverse throws std::invalid_argument
/// if g involves any other variable.
QPoly from_dense(const QRing& R, const QDense& f, std::size_t var);
PPoly from_dense(const PRing& R, const PDense& f, std::size_t var);
QDense to_dense(const QPoly& g, std::size_t var);

std::string to_string(const QDense& f, const std::string& var);
std::string to_string(const ZDense& f, const std::string& var);

}  // namespace modpar
