#include "modpar/monomial.hpp"

#include <algorithm>
#include <limits>

namespace modpar {

namespace {

constexpr unsigned kMaxExponent = std::numeric_limits<Exponent>::max();

[[noreturn]] void exponent_overflow() { throw std::overflow_error("monomial exponent overflow"); }

// Degree reverse lexicographical comparison on [lo, hi).
int compare_degrevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::initializer_list<unsigned> exps)
    : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const unsigned> exps) {
  if (exps.size() > kMaxVariables) throw std::invalid_argument("too many variables");
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVariables) throw std::out_of_range("variable index out of range");
  if (e > kMaxExponent) exponent_overflow();
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<Exponent>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
    if (e > kMaxExponent) exponent_overflow();
    out.exps_[i] = static_cast<Exponent>(e);
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (b.exps_[i] > a.exps_[i]) throw std::invalid_argument("monomial division is not exact");
    out.exps_[i] = static_cast<Exponent>(a.exps_[i] - b.exps_[i]);
  }
  out.degree_ = a.degree_ - b.degree_;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string order_name(const MonomialOrder& order) {
  switch (order.kind) {
    case OrderKind::dp:
      return "dp";
    case OrderKind::lp:
      return "lp";
    case OrderKind::block:
      return "(dp(" + std::to_string(order.split) + "),dp)";
  }
  return "?";
}

MonomialOrder parse_order_name(const std::string& name) {
  if (name == "dp") return MonomialOrder::degrevlex();
  if (name == "lp") return MonomialOrder::lex();
  throw std::invalid_argument("unknown ordering '" + name + "' (expected dp or lp)");
}

int compare(const MonomialOrder& order, std::size_t n, const Monomial& a, const Monomial& b) {
  switch (order.kind) {
    case OrderKind::dp:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::lp:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case OrderKind::block:
      if (int c = compare_degrevlex(a, b, 0, order.split); c != 0) return c;
      return compare_degrevlex(a, b, order.split, n);
  }
  return 0;
}

}  // namespace modpar
