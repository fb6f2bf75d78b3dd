#pragma once

// Coefficient domains. Each exposes the same small vocabulary so the
// polynomial and Groebner layers can be written once:
//   Element, is_field, zero(), one(), is_zero, is_one, add, sub, neg, mul
// Fields additionally provide inv/div; IntegerRing provides gcd/exact_div.

#include <cstdint>
#include <string>

#include "modpar/numth.hpp"

namespace modpar {

/// F_p for a word-size prime p < 2^31.
struct PrimeField {
  using Element = std::uint32_t;
  static constexpr bool is_field = true;

  std::uint32_t p = 2;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime) : p(static_cast<std::uint32_t>(prime)) {}

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  Element add(Element a, Element b) const {
    const std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p);
  }
  Element inv(Element a) const { return mod_inverse(a, p); }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element from_int(std::int64_t v) const {
    const std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<Element>(r < 0 ? r + p : r);
  }
  Element from_integer(const Integer& v) const { return mod_word(v, p); }
  /// Throws ArithmeticError when p divides the denominator.
  Element from_rational(const Rational& q) const {
    const Element den = mod_word(q.get_den(), p);
    if (den == 0) throw ArithmeticError("prime " + std::to_string(p) + " divides a denominator");
    return mul(mod_word(q.get_num(), p), inv(den));
  }
  Element pow(Element base, std::uint64_t e) const {
    Element r = 1;
    while (e != 0) {
      if (e & 1U) r = mul(r, base);
      base = mul(base, base);
      e >>= 1U;
    }
    return r;
  }
  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

struct RationalField {
  using Element = Rational;
  static constexpr bool is_field = true;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const { return 1 / a; }
  Element div(const Element& a, const Element& b) const { return a / b; }
  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Z, used for fraction-free computations over Q.
struct IntegerRing {
  using Element = Integer;
  static constexpr bool is_field = false;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element gcd(const Element& a, const Element& b) const {
    Element g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  Element exact_div(const Element& a, const Element& b) const {
    Element q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

inline std::string coeff_to_string(std::uint32_t c) { return std::to_string(c); }
inline std::string coeff_to_string(const Integer& c) { return c.get_str(); }
inline std::string coeff_to_string(const Rational& c) { return c.get_str(); }

}  // namespace modpar
