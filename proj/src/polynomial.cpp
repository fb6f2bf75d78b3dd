#include "modpar/polynomial.hpp"

#include <cctype>
#include <set>

namespace modpar {

Ring::Ring(std::vector<std::string> variables, MonomialOrder order)
    : variables_(std::move(variables)), order_(order) {
  if (variables_.empty()) throw std::invalid_argument("ring needs at least one variable");
  if (variables_.size() > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable '" + v + "'");
  }
  if (order_.kind == OrderKind::block && (order_.split == 0 || order_.split >= variables_.size())) {
    throw std::invalid_argument("block ordering split out of range");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

PPoly reduce_mod_p(const QPoly& f, std::uint32_t p) {
  const PrimeField F(p);
  std::vector<Term<std::uint32_t>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    const auto c = F.from_rational(t.coeff);
    if (c != 0) out.push_back({t.mono, c});
  }
  return PPoly(std::move(out));
}

PPoly reduce_mod_p(const ZPoly& f, std::uint32_t p) {
  std::vector<Term<std::uint32_t>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    const auto c = mod_word(t.coeff, p);
    if (c != 0) out.push_back({t.mono, c});
  }
  return PPoly(std::move(out));
}

ZPoly to_primitive(const QPoly& f) {
  if (f.is_zero()) return ZPoly();
  Integer den = 1;
  for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  std::vector<Term<Integer>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.mono, t.coeff.get_num() * (den / t.coeff.get_den())});
  return ZRing(Ring({"_"}, MonomialOrder::degrevlex())).primitive(ZPoly(std::move(out)));
}

QPoly to_rational(const ZPoly& f) {
  std::vector<Term<Rational>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.mono, Rational(t.coeff)});
  return QPoly(std::move(out));
}

QPoly to_monic(const QRing& ring, const ZPoly& f) { return ring.monic(to_rational(f)); }

namespace {

std::string monomial_text(const Ring& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variables()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

// Shared printer; `negative`/`magnitude` abstract over the coefficient type.
template <class E, class IsNeg, class Abs>
std::string poly_text(const Ring& ring, const Polynomial<E>& f, IsNeg negative, Abs magnitude) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool neg = negative(t.coeff);
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const std::string mag = magnitude(t.coeff);
    const std::string mono = monomial_text(ring, t.mono);
    if (mono.empty()) {
      out += mag;
    } else if (mag == "1") {
      out += mono;
    } else {
      out += mag + '*' + mono;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const Ring& ring, const QPoly& f) {
  return poly_text(
      ring, f, [](const Rational& c) { return sgn(c) < 0; },
      [](const Rational& c) { return Rational(abs(c)).get_str(); });
}

std::string to_string(const Ring& ring, const ZPoly& f) {
  return poly_text(
      ring, f, [](const Integer& c) { return sgn(c) < 0; },
      [](const Integer& c) { return Integer(abs(c)).get_str(); });
}

std::string to_string(const Ring& ring, const PPoly& f) {
  return poly_text(
      ring, f, [](std::uint32_t) { return false; }, [](std::uint32_t c) { return std::to_string(c); });
}

std::string to_string(const Ring& ring, const Monomial& m) {
  std::string s = monomial_text(ring, m);
  return s.empty() ? "1" : s;
}

std::string to_string(const Ring& ring, const LinearForm& r) {
  QRing R(ring);
  return to_string(ring, r.to_polynomial(R));
}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class PolyParser {
 public:
  PolyParser(const Ring& ring, std::string_view text, std::size_t line, std::size_t column)
      : ring_(ring), R_(ring), text_(text), line_(line), column_(column) {}

  QPoly parse() {
    skip_space();
    if (at_end()) fail("expected a polynomial");
    std::vector<Term<Rational>> terms;
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      advance();
    }
    while (true) {
      auto t = parse_term();
      if (negate) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected character '") + peek() + "'");
      negate = peek() == '-';
      advance();
    }
    return R_.canonicalize(std::move(terms));
  }

 private:
  Term<Rational> parse_term() {
    Term<Rational> t{Monomial(), Rational(1)};
    bool need_factor = true;
    while (need_factor) {
      skip_space();
      if (at_end()) fail("expected a coefficient or variable");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
        t.coeff *= parse_rational();
      } else if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
        const auto [l, col] = std::pair{line_, column_};
        std::string name = parse_identifier();
        auto idx = ring_.index_of(name);
        if (!idx) throw ParseError("unknown variable '" + name + "'", l, col);
        unsigned power = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          advance();
          skip_space();
          Integer e = parse_integer();
          if (e > 65535) fail("exponent too large");
          power = static_cast<unsigned>(e.get_ui());
        }
        t.mono = t.mono * Monomial::variable(*idx, power);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_space();
      need_factor = !at_end() && peek() == '*';
      if (need_factor) advance();
    }
    return t;
  }

  Rational parse_rational() {
    Integer num = parse_integer();
    skip_space();
    if (!at_end() && peek() == '/') {
      advance();
      skip_space();
      const auto [l, col] = std::pair{line_, column_};
      Integer den = parse_integer();
      if (den == 0) throw ParseError("zero denominator", l, col);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  Integer parse_integer() {
    if (at_end() || std::isdigit(static_cast<unsigned char>(peek())) == 0) fail("expected an integer");
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
      digits += peek();
      advance();
    }
    return Integer(digits);
  }

  std::string parse_identifier() {
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) != 0 || peek() == '_')) {
      name += peek();
      advance();
    }
    return name;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) advance();
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }

  const Ring& ring_;
  QRing R_;
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace

QPoly parse_polynomial(const Ring& ring, std::string_view text, std::size_t line, std::size_t column) {
  return PolyParser(ring, text, line, column).parse();
}

}  // namespace modpar
