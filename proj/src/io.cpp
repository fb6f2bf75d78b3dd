#include "modpar/io.hpp"

#include <cctype>

namespace modpar {

namespace {

class FileScanner {
 public:
  explicit FileScanner(std::string text) : text_(std::move(text)) { blank_comments(); }

  Ideal parse() {
    expect_keyword("ring");
    std::vector<std::string> vars;
    std::vector<std::pair<std::size_t, std::size_t>> where;
    while (true) {
      skip_space();
      where.emplace_back(line_, column_);
      vars.push_back(identifier("variable name"));
      skip_space();
      if (peek() == ',') {
        advance();
        continue;
      }
      break;
    }
    expect(':');
    skip_space();
    const auto [ol, oc] = std::pair{line_, column_};
    const std::string order_text = identifier("ordering name");
    MonomialOrder order;
    try {
      order = parse_order_name(order_text);
    } catch (const std::invalid_argument&) {
      throw ParseError("unknown ordering '" + order_text + "'", ol, oc);
    }
    expect(';');
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (vars[i] == vars[j]) throw ParseError("duplicate variable '" + vars[i] + "'", where[i].first, where[i].second);
      }
    }
    if (vars.size() > kMaxVariables) {
      throw ParseError("at most " + std::to_string(kMaxVariables) + " variables are supported", where.back().first,
                       where.back().second);
    }
    const Ring ring(vars, order);

    expect_keyword("ideal");
    expect(':');
    std::vector<QPoly> gens;
    while (true) {
      skip_space();
      const auto [l, c] = std::pair{line_, column_};
      const std::size_t start = pos_;
      while (!at_end() && peek() != ',' && peek() != ';') advance();
      if (at_end()) fail("expected ';' after the generators");
      QPoly f = parse_polynomial(ring, std::string_view(text_).substr(start, pos_ - start), l, c);
      if (f.is_zero()) throw ParseError("zero generator", l, c);
      gens.push_back(std::move(f));
      const char sep = peek();
      advance();
      if (sep == ';') break;
    }
    skip_space();
    if (!at_end()) fail("unexpected text after the ideal");
    return Ideal(ring, std::move(gens));
  }

 private:
  void blank_comments() {
    bool in_comment = false;
    for (std::size_t i = 0; i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        in_comment = false;
        continue;
      }
      if (!in_comment && (text_[i] == '#' || (text_[i] == '/' && i + 1 < text_.size() && text_[i + 1] == '/'))) {
        in_comment = true;
      }
      if (in_comment) text_[i] = ' ';
    }
  }

  void expect_keyword(const std::string& word) {
    skip_space();
    const auto [l, c] = std::pair{line_, column_};
    const std::size_t save = pos_;
    std::string got;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek())) != 0) {
      got += peek();
      advance();
    }
    if (got != word) {
      pos_ = save;
      throw ParseError("expected '" + word + "'", l, c);
    }
  }

  void expect(char ch) {
    skip_space();
    if (at_end() || peek() != ch) fail(std::string("expected '") + ch + "'");
    advance();
  }

  std::string identifier(const char* what) {
    if (at_end() || (std::isalpha(static_cast<unsigned char>(peek())) == 0 && peek() != '_')) {
      fail(std::string("expected ") + what);
    }
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
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
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

  std::string text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

Ideal parse_ideal_file(std::string_view text) { return FileScanner(std::string(text)).parse(); }

std::string format_ideal_file(const Ideal& I) {
  std::string out = "ring ";
  const auto& vars = I.ring.variables();
  for (std::size_t i = 0; i < vars.size(); ++i) out += (i == 0 ? "" : ", ") + vars[i];
  out += " : " + order_name(I.ring.order()) + ";\nideal:\n";
  for (std::size_t i = 0; i < I.generators.size(); ++i) {
    out += "  " + to_string(I.ring, I.generators[i]) + (i + 1 == I.generators.size() ? ";\n" : ",\n");
  }
  return out;
}

Ideal with_order(const Ideal& I, const MonomialOrder& order) {
  const Ring ring = I.ring.with_order(order);
  const QRing Q(ring);
  std::vector<QPoly> gens;
  for (const auto& g : I.generators) gens.push_back(reorder(Q, g));
  return Ideal(ring, std::move(gens));
}

}  // namespace modpar
