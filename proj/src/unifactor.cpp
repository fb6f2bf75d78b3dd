#include "modpar/unifactor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace modpar {

namespace {

const RationalField kQ{};

PDense x_poly() { return PDense{0, 1}; }

void equal_degree_split(const PrimeField& F, const PDense& g, unsigned d, std::mt19937_64& rng,
                        std::vector<PDense>& out) {
  const std::size_t n = static_cast<std::size_t>(degree(g));
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
  e = (e - 1) / 2;
  while (true) {
    PDense a(n);
    for (auto& c : a) c = static_cast<std::uint32_t>(rng() % F.p);
    trim(F, a);
    if (degree(a) < 1) continue;
    PDense b = dense_powmod(F, a, e, g);
    b = dense_sub(F, b, PDense{1});
    PDense h = dense_gcd(F, b, g);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      equal_degree_split(F, h, d, rng, out);
      equal_degree_split(F, dense_divrem(F, g, h).first, d, rng, out);
      return;
    }
  }
}

Integer symmetric(const Integer& a, const Integer& m) {
  Integer r = mod_floor(a, m);
  if (2 * r > m) r -= m;
  return r;
}

ZDense symmetric(const ZDense& f, const Integer& m) {
  ZDense out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(symmetric(c, m));
  trim(IntegerRing{}, out);
  return out;
}

ZDense to_z(const PDense& f) { return ZDense(f.begin(), f.end()); }

/// Quadratic Hensel lifting of f = g*h (mod p), h monic, with s*g + t*h = 1
/// (mod p), up to modulus M = p^k.
std::pair<ZDense, ZDense> lift_pair(const ZDense& f, ZDense g, ZDense h, ZDense s, ZDense t, const Integer& p,
                                    const Integer& M) {
  Integer m = p;
  while (m < M) {
    Integer m2 = m * m;
    if (m2 > M) m2 = M;
    const IntegerModRing R(m2);
    const ZDense fm = dense_scale(R, f, Integer(1));
    const ZDense e = dense_sub(R, fm, dense_mul(R, g, h));
    auto [q, r] = dense_divrem(R, dense_mul(R, s, e), h);
    ZDense g2 = dense_add(R, dense_add(R, g, dense_mul(R, t, e)), dense_mul(R, q, g));
    ZDense h2 = dense_add(R, h, r);
    const ZDense b = dense_sub(R, dense_add(R, dense_mul(R, s, g2), dense_mul(R, t, h2)), ZDense{1});
    auto [c, d] = dense_divrem(R, dense_mul(R, s, b), h2);
    s = dense_sub(R, s, d);
    t = dense_sub(R, dense_sub(R, t, dense_mul(R, t, b)), dense_mul(R, c, g2));
    g = std::move(g2);
    h = std::move(h2);
    m = m2;
  }
  return {std::move(g), std::move(h)};
}

void lift_tree(const ZDense& f, std::span<const PDense> factors, const PrimeField& F, const Integer& M,
               std::vector<ZDense>& out) {
  const IntegerModRing RM(M);
  if (factors.size() == 1) {
    out.push_back(dense_monic(RM, dense_scale(RM, f, Integer(1))));
    return;
  }
  const auto A = factors.first(factors.size() / 2);
  const auto B = factors.subspan(factors.size() / 2);
  PDense g0{F.from_integer(f.back())};
  for (const auto& a : A) g0 = dense_mul(F, g0, a);
  PDense h0{1};
  for (const auto& b : B) h0 = dense_mul(F, h0, b);
  auto [one, s, t] = dense_xgcd(F, g0, h0);
  if (one != PDense{1}) throw std::invalid_argument("hensel_lift: factors are not coprime");
  auto [g, h] = lift_pair(f, to_z(g0), to_z(h0), to_z(s), to_z(t), Integer(F.p), M);
  lift_tree(g, A, F, M, out);
  lift_tree(h, B, F, M, out);
}

std::uint32_t choose_prime(const ZDense& P) {
  for (std::uint32_t p = 17;; p += 2) {
    if (!is_prime(p)) continue;
    if (mod_word(P.back(), p) == 0) continue;
    const PrimeField F(p);
    const PDense Pp = reduce_mod_p(P, p);
    if (degree(dense_gcd(F, Pp, dense_derivative(F, Pp))) == 0) return p;
  }
}

/// Irreducible factors of a primitive squarefree P with deg P >= 1.
std::vector<ZDense> factor_squarefree(const ZDense& P) {
  if (degree(P) == 1) return {P};
  const std::uint32_t p = choose_prime(P);
  const PrimeField F(p);
  const std::vector<PDense> modular = factor_mod_p(dense_monic(F, reduce_mod_p(P, p)), p);
  if (modular.size() == 1) return {P};

  // Landau-Mignotte: every factor has coefficients bounded by B.
  Integer norm2 = 0;
  for (const auto& c : P) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer B = abs(P.back()) * norm;
  mpz_mul_2exp(B.get_mpz_t(), B.get_mpz_t(), static_cast<mp_bitcnt_t>(degree(P)));
  unsigned k = 1;
  Integer M = p;
  while (M <= 2 * B) {
    M *= p;
    ++k;
  }
  const std::vector<ZDense> lifted = hensel_lift(P, modular, p, k);

  std::vector<ZDense> found;
  std::vector<std::size_t> T(lifted.size());
  for (std::size_t i = 0; i < T.size(); ++i) T[i] = i;
  ZDense f = P;
  const IntegerModRing RM(M);
  std::size_t s = 1;
  while (2 * s <= T.size()) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool hit = false;
    while (true) {
      ZDense g{mod_floor(f.back(), M)};
      for (std::size_t i : idx) g = dense_mul(RM, g, lifted[T[i]]);
      g = primitive_part(symmetric(g, M));
      if (auto q = exact_quotient(f, g)) {
        found.push_back(g);
        f = std::move(*q);
        std::vector<std::size_t> rest;
        for (std::size_t i = 0, j = 0; i < T.size(); ++i) {
          if (j < s && idx[j] == i) {
            ++j;
          } else {
            rest.push_back(T[i]);
          }
        }
        T = std::move(rest);
        hit = true;
        break;
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == T.size() - s + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (degree(f) > 0) found.push_back(primitive_part(f));
  return found;
}

}  // namespace

bool factor_less(const ZDense& a, const ZDense& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::vector<std::pair<QDense, unsigned>> squarefree_decomposition(const QDense& F) {
  std::vector<std::pair<QDense, unsigned>> out;
  if (degree(F) < 1) return out;
  const QDense f = monic(F);
  const QDense df = derivative(f);
  const QDense a0 = gcd(f, df);
  QDense b = dense_divrem(kQ, f, a0).first;
  QDense c = dense_divrem(kQ, df, a0).first;
  QDense d = dense_sub(kQ, c, derivative(b));
  for (unsigned i = 1; degree(b) > 0; ++i) {
    const QDense a = gcd(b, d);
    if (degree(a) > 0) out.emplace_back(a, i);
    b = dense_divrem(kQ, b, a).first;
    c = dense_divrem(kQ, d, a).first;
    d = dense_sub(kQ, c, derivative(b));
  }
  return out;
}

std::vector<PDense> factor_mod_p(const PDense& F, std::uint32_t p, std::uint64_t seed) {
  if (p == 2) throw std::invalid_argument("factor_mod_p: p must be odd");
  const PrimeField K(p);
  if (F.empty()) throw std::invalid_argument("factor_mod_p: zero polynomial");
  PDense f = dense_monic(K, F);
  if (degree(f) == 0) return {};
  if (degree(dense_gcd(K, f, dense_derivative(K, f))) != 0) {
    throw std::invalid_argument("factor_mod_p: input is not squarefree mod " + std::to_string(p));
  }
  std::mt19937_64 rng(mix_seed(seed, p));
  std::vector<PDense> out;
  PDense h = x_poly();
  const Integer pz = p;
  for (unsigned i = 1; degree(f) >= 2 * static_cast<long>(i); ++i) {
    h = dense_powmod(K, h, pz, f);
    const PDense g = dense_gcd(K, dense_sub(K, h, x_poly()), f);
    if (degree(g) > 0) {
      equal_degree_split(K, g, i, rng, out);
      f = dense_divrem(K, f, g).first;
      h = dense_rem(K, h, f);
    }
  }
  if (degree(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const PDense& a, const PDense& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

std::vector<ZDense> hensel_lift(const ZDense& F, const std::vector<PDense>& factors, std::uint32_t p, unsigned k) {
  if (factors.empty()) throw std::invalid_argument("hensel_lift: no factors");
  if (k == 0) throw std::invalid_argument("hensel_lift: k must be positive");
  Integer M;
  mpz_ui_pow_ui(M.get_mpz_t(), p, k);
  std::vector<ZDense> out;
  lift_tree(F, factors, PrimeField(p), M, out);
  return out;
}

Factorization factor_rational(const QDense& F) {
  if (F.empty()) throw std::invalid_argument("factor_rational: zero polynomial");
  Factorization out;
  out.unit = F.back();
  for (const auto& [G, mult] : squarefree_decomposition(F)) {
    for (auto& g : factor_squarefree(to_primitive(G))) {
      Rational lc(g.back());
      for (unsigned i = 0; i < mult; ++i) out.unit /= lc;
      out.factors.push_back({std::move(g), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return factor_less(a.poly, b.poly); });
  return out;
}

QDense expand(const Factorization& f) {
  QDense acc{f.unit};
  for (const auto& [poly, mult] : f.factors) {
    const QDense q = to_rational(poly);
    for (unsigned i = 0; i < mult; ++i) acc = dense_mul(kQ, acc, q);
  }
  trim(kQ, acc);
  return acc;
}

}  // namespace modpar
