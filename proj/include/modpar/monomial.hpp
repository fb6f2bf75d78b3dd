#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace modpar {

inline constexpr std::size_t kMaxVariables = 16;

using Exponent = std::uint16_t;

/// Exponent vector with inline storage. Unused slots are zero, so two
/// monomials of the same ring compare equal iff their arrays are equal.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const unsigned> exps);

  static Monomial variable(std::size_t index, unsigned power = 1);

  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;
  const std::array<Exponent, kMaxVariables>& exponents() const { return exps_; }

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { dp, lp, block };

/// Global monomial ordering. `block` is a product of two degree reverse
/// lexicographical orderings on variables [0, split) and [split, n).
struct MonomialOrder {
  OrderKind kind = OrderKind::dp;
  std::size_t split = 0;

  static MonomialOrder degrevlex() { return {OrderKind::dp, 0}; }
  static MonomialOrder lex() { return {OrderKind::lp, 0}; }
  static MonomialOrder elimination(std::size_t split) { return {OrderKind::block, split}; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

std::string order_name(const MonomialOrder& order);
/// Accepts "dp" and "lp"; throws std::invalid_argument otherwise.
MonomialOrder parse_order_name(const std::string& name);

/// -1, 0, +1 for a < b, a == b, a > b on the first n variables.
int compare(const MonomialOrder& order, std::size_t n, const Monomial& a, const Monomial& b);

}  // namespace modpar
