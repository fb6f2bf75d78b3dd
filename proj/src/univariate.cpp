#include "modpar/univariate.hpp"

namespace modpar {

namespace {

const IntegerRing kZ{};
const RationalField kQ{};

/// lc(b)^(deg a - deg b + 1) * a mod b over Z.
ZDense pseudo_rem(ZDense a, const ZDense& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lc = b.back();
  while (a.size() >= b.size()) {
    const Integer c = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lc;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= c * b[j];
    trim(kZ, a);
  }
  return a;
}

}  // namespace

Integer content(const ZDense& f) {
  Integer g = 0;
  for (const auto& c : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZDense primitive_part(const ZDense& f) {
  if (f.empty()) return f;
  Integer c = content(f);
  if (sgn(f.back()) < 0) c = -c;
  ZDense out = f;
  if (c != 1) {
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return out;
}

ZDense to_primitive(const QDense& f) {
  Integer l = 1;
  for (const auto& c : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZDense out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(c.get_num() * (l / c.get_den()));
  return primitive_part(out);
}

QDense to_rational(const ZDense& f) {
  QDense out;
  out.reserve(f.size());
  for (const auto& c : f) out.emplace_back(c);
  return out;
}

QDense monic(const QDense& f) { return dense_monic(kQ, f); }

std::optional<ZDense> exact_quotient(const ZDense& a, const ZDense& b) {
  if (b.empty()) throw std::domain_error("exact_quotient: division by zero");
  if (a.empty()) return ZDense{};
  if (a.size() < b.size()) return std::nullopt;
  ZDense r = a;
  ZDense q(a.size() - b.size() + 1);
  const Integer& lc = b.back();
  for (std::size_t k = r.size(); k-- >= b.size();) {
    if (sgn(r[k]) == 0) continue;
    if (mpz_divisible_p(r[k].get_mpz_t(), lc.get_mpz_t()) == 0) return std::nullopt;
    const std::size_t shift = k - (b.size() - 1);
    Integer c;
    mpz_divexact(c.get_mpz_t(), r[k].get_mpz_t(), lc.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    q[shift] = std::move(c);
  }
  for (std::size_t i = 0; i + 1 < b.size() && i < r.size(); ++i) {
    if (sgn(r[i]) != 0) return std::nullopt;
  }
  trim(kZ, q);
  return q;
}

QDense gcd(const QDense& a, const QDense& b) {
  if (a.empty() && b.empty()) throw std::domain_error("gcd(0, 0) is undefined");
  ZDense x = to_primitive(a);
  ZDense y = to_primitive(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    ZDense r = primitive_part(pseudo_rem(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return monic(to_rational(x));
}

QDense derivative(const QDense& f) { return dense_derivative(kQ, f); }

QDense squarefree_part(const QDense& f) {
  if (f.size() <= 1) return monic(f);
  const QDense g = gcd(f, derivative(f));
  return monic(dense_divrem(kQ, f, g).first);
}

PDense reduce_mod_p(const ZDense& f, std::uint32_t p) {
  PDense out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(mod_word(c, p));
  trim(PrimeField(p), out);
  return out;
}

PDense reduce_mod_p(const QDense& f, std::uint32_t p) {
  const PrimeField F(p);
  PDense out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(F.from_rational(c));
  trim(F, out);
  return out;
}

QPoly from_dense(const QRing& R, const QDense& f, std::size_t var) {
  std::vector<Term<Rational>> terms;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (sgn(f[i]) != 0) terms.push_back({Monomial::variable(var, static_cast<Exponent>(i)), f[i]});
  }
  return R.canonicalize(std::move(terms));
}

PPoly from_dense(const PRing& R, const PDense& f, std::size_t var) {
  std::vector<Term<std::uint32_t>> terms;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != 0) terms.push_back({Monomial::variable(var, static_cast<Exponent>(i)), f[i]});
  }
  return R.canonicalize(std::move(terms));
}

QDense to_dense(const QPoly& g, std::size_t var) {
  QDense out;
  for (const auto& t : g.terms()) {
    const std::size_t e = t.mono[var];
    if (t.mono.degree() != e) throw std::invalid_argument("to_dense: polynomial is not univariate");
    if (out.size() <= e) out.resize(e + 1);
    out[e] = t.coeff;
  }
  trim(kQ, out);
  return out;
}

namespace {

template <class E>
std::string dense_to_string(const Dense<E>& f, const std::string& var) {
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (sgn(f[i]) == 0) continue;
    E c = f[i];
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (sgn(c) < 0) c = -c;
    const bool unit = c == 1;
    if (!unit || i == 0) out += c.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace

std::string to_string(const QDense& f, const std::string& var) { return dense_to_string(f, var); }
std::string to_string(const ZDense& f, const std::string& var) { return dense_to_string(f, var); }

}  // namespace modpar
