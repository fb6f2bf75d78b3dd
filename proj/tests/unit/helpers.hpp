#pragma once

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "modpar/assprimes.hpp"
#include "support/oracles.hpp"

namespace testing {

using namespace modpar;

inline Ring ring_xy(MonomialOrder order = MonomialOrder::degrevlex()) { return Ring({"x", "y"}, order); }

inline QPoly P(const Ring& ring, const std::string& text) { return parse_polynomial(ring, text); }

inline std::string S(const Ring& ring, const QPoly& f) { return to_string(ring, f); }

inline std::vector<std::string> strings(const QBasis& G) { return basis_strings(G); }

inline std::vector<std::string> strings(const Ring& ring, const std::vector<QPoly>& polys) {
  std::vector<std::string> out;
  for (const auto& f : polys) out.push_back(to_string(ring, f));
  return out;
}

inline QDense qd(std::initializer_list<long> coeffs) {
  QDense f;
  for (long c : coeffs) f.emplace_back(c);
  return f;
}

inline ZDense zd(std::initializer_list<long> coeffs) {
  ZDense f;
  for (long c : coeffs) f.emplace_back(c);
  return f;
}

inline PDense pd(std::initializer_list<std::uint32_t> coeffs) { return PDense(coeffs); }

inline ModStdConfig quick_config(std::uint64_t seed = 0, unsigned cores = 1) {
  ModStdConfig c;
  c.seed = seed;
  c.cores = cores;
  return c;
}

}  // namespace testing

namespace doctest {
template <class T>
struct StringMaker<std::vector<T>> {
  static String convert(const std::vector<T>& v) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != 0) out << ", ";
      out << toString(v[i]).c_str();
    }
    out << "]";
    return out.str().c_str();
  }
};
}  // namespace doctest
