#include "modpar/zerodim.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <unordered_set>

#include "modpar/engine.hpp"

namespace modpar {

namespace {

std::vector<Integer> denominators(std::span<const QPoly> polys) {
  std::vector<Integer> out;
  for (const auto& f : polys) {
    for (const auto& t : f.terms()) {
      if (t.coeff.get_den() != 1) out.push_back(t.coeff.get_den());
    }
  }
  return out;
}

/// Incremental Gaussian elimination over F_p that remembers how each
/// reduced row was formed from the inserted vectors.
class KrylovEliminator {
 public:
  explicit KrylovEliminator(const PrimeField& F) : F_(F) {}

  /// Inserts vector number `count()`. Returns the dependency (monic, degree
  /// = count) when the vector lies in the span of the previous ones.
  std::optional<PDense> insert(std::vector<std::uint32_t> v) {
    const std::size_t k = rows_.size();
    std::vector<std::uint32_t> combo(k + 1, 0);
    combo[k] = 1;
    for (const auto& row : rows_) {
      const std::uint32_t c = v[row.pivot];
      if (c == 0) continue;
      const std::uint32_t neg = F_.neg(c);
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (row.vec[j] != 0) v[j] = F_.add(v[j], F_.mul(neg, row.vec[j]));
      }
      for (std::size_t j = 0; j < row.combo.size(); ++j) {
        if (row.combo[j] != 0) combo[j] = F_.add(combo[j], F_.mul(neg, row.combo[j]));
      }
    }
    const auto pivot = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (pivot == v.end()) {
      PDense dep(combo.begin(), combo.end());
      trim(F_, dep);
      return dep;
    }
    const auto at = static_cast<std::size_t>(pivot - v.begin());
    const std::uint32_t inv = F_.inv(*pivot);
    for (auto& x : v) x = F_.mul(x, inv);
    for (auto& x : combo) x = F_.mul(x, inv);
    rows_.push_back({std::move(v), std::move(combo), at});
    return std::nullopt;
  }

 private:
  struct Row {
    std::vector<std::uint32_t> vec;
    std::vector<std::uint32_t> combo;
    std::size_t pivot;
  };
  PrimeField F_;
  std::vector<Row> rows_;
};

template <class Record>
std::vector<Record> majority(std::vector<Record> records, auto key) {
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.prime < b.prime; });
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const auto& cls) { return key(records[cls.front()]) == key(records[i]); });
    if (it == classes.end()) {
      classes.push_back({i});
    } else {
      it->push_back(i);
    }
  }
  std::vector<Record> out;
  if (classes.empty()) return out;
  const auto best = std::max_element(classes.begin(), classes.end(),
                                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (std::size_t i : *best) out.push_back(std::move(records[i]));
  return out;
}

std::optional<QDense> lift_aligned(std::span<const PDense* const> polys, const CrtBasis& crt) {
  const std::size_t len = polys.front()->size();
  QDense out(len);
  std::vector<std::uint32_t> residues(polys.size());
  for (std::size_t j = 0; j < len; ++j) {
    for (std::size_t i = 0; i < polys.size(); ++i) residues[i] = (*polys[i])[j];
    auto q = farey_reconstruct(crt.lift(residues), crt.modulus());
    if (!q) return std::nullopt;
    out[j] = std::move(*q);
  }
  return out;
}

}  // namespace

QuotientBasis quotient_basis(const Ring& ring, std::span<const Monomial> lms) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const bool pure = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) { return m[i] == m.degree(); });
    if (!pure) throw PositiveDimensional();
  }
  auto outside = [&](const Monomial& m) {
    return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  QuotientBasis out;
  if (!outside(Monomial())) return out;  // unit ideal
  std::unordered_set<Monomial, MonomialHash> seen{Monomial()};
  std::deque<Monomial> queue{Monomial()};
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    out.monomials.push_back(m);
    for (std::size_t i = 0; i < n; ++i) {
      Monomial next = m * Monomial::variable(i);
      if (outside(next) && seen.insert(next).second) queue.push_back(next);
    }
  }
  std::sort(out.monomials.begin(), out.monomials.end(),
            [&ring](const Monomial& a, const Monomial& b) { return ring.compare(a, b) < 0; });
  return out;
}


MultiplicationMaps::MultiplicationMaps(const ModularGBRecord& Gp)
    : field_(Gp.prime), nvars_(Gp.gb.ring.size()), basis_(quotient_basis(Gp.gb)) {
  const std::size_t d = basis_.dimension();
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  for (std::size_t i = 0; i < d; ++i) index.emplace(basis_.monomials[i], static_cast<std::uint32_t>(i));
  if (d > 0) one_index_ = index.at(Monomial());
  const PRing R(Gp.gb.ring, field_);
  columns_.assign(nvars_, std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>(d));
  for (std::size_t var = 0; var < nvars_; ++var) {
    for (std::size_t b = 0; b < d; ++b) {
      const Monomial m = basis_.monomials[b] * Monomial::variable(var);
      auto& col = columns_[var][b];
      if (auto it = index.find(m); it != index.end()) {
        col.emplace_back(it->second, 1U);
        continue;
      }
      const PPoly nf = normal_form(R, R.term(m, 1U), std::span<const PPoly>(Gp.gb.elements));
      for (const auto& t : nf.terms()) col.emplace_back(index.at(t.mono), t.coeff);
    }
  }
}

std::vector<std::uint32_t> MultiplicationMaps::apply(std::size_t var, std::span<const std::uint32_t> v) const {
  std::vector<std::uint32_t> out(v.size(), 0);
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (v[b] == 0) continue;
    for (const auto& [row, c] : columns_[var][b]) out[row] = field_.add(out[row], field_.mul(c, v[b]));
  }
  return out;
}

PDense MultiplicationMaps::min_poly(std::span<const long> coeffs) const {
  if (coeffs.size() != nvars_) throw std::invalid_argument("min_poly: wrong number of coefficients");
  const std::size_t d = dimension();
  if (d == 0) return PDense{1};
  std::vector<std::uint32_t> scalars;
  for (long c : coeffs) scalars.push_back(field_.from_int(c));
  KrylovEliminator elim(field_);
  std::vector<std::uint32_t> v(d, 0);
  v[one_index_] = 1;
  while (true) {
    if (auto dep = elim.insert(v)) return *dep;
    std::vector<std::uint32_t> next(d, 0);
    for (std::size_t var = 0; var < nvars_; ++var) {
      if (scalars[var] == 0) continue;
      const auto w = apply(var, v);
      for (std::size_t i = 0; i < d; ++i) {
        if (w[i] != 0) next[i] = field_.add(next[i], field_.mul(scalars[var], w[i]));
      }
    }
    v = std::move(next);
  }
}

ModularGBRecord reduce_basis_mod_p(const QBasis& G, std::uint64_t p) {
  const PRing R(G.ring, PrimeField(p));
  return {p, buchberger(R, reduce_mod_p(G.elements, static_cast<std::uint32_t>(p)))};
}

namespace {

std::vector<long> form_coefficients(const LinearForm& r, std::size_t n) {
  if (r.coeffs.size() + 1 != n) throw std::invalid_argument("linear form has wrong arity");
  std::vector<long> full(r.coeffs);
  full.push_back(1);
  return full;
}

}  // namespace

ModularMinPolyRecord min_poly_of_form(const ModularGBRecord& Gp, const LinearForm& r) {
  const MultiplicationMaps maps(Gp);
  return {Gp.prime, maps.min_poly(form_coefficients(r, Gp.gb.ring.size()))};
}

PDense eliminant_mod_p(const ModularGBRecord& Gp, std::size_t var) {
  std::vector<long> unit(Gp.gb.ring.size(), 0);
  unit.at(var) = 1;
  return MultiplicationMaps(Gp).min_poly(unit);
}

UnivariateVectorRecord eliminants_mod_p(const ModularGBRecord& Gp) {
  const MultiplicationMaps maps(Gp);
  const std::size_t n = Gp.gb.ring.size();
  UnivariateVectorRecord out{Gp.prime, {}, {}};
  for (std::size_t var = 0; var < n; ++var) {
    std::vector<long> unit(n, 0);
    unit[var] = 1;
    out.polys.push_back(maps.min_poly(unit));
    out.degrees.push_back(degree(out.polys.back()));
  }
  return out;
}

bool p_test_rad(std::size_t d, const LinearForm& r, const QBasis& G, PrimePool& pool, unsigned max_resamples) {
  for (unsigned attempt = 0; attempt < max_resamples; ++attempt) {
    const std::uint64_t p = gen_primes(1, pool).front();
    std::optional<ModularGBRecord> Gp;
    try {
      Gp = reduce_basis_mod_p(G, p);
    } catch (const ArithmeticError&) {
      continue;
    }
    if (quotient_basis(Gp->gb).dimension() != d) continue;
    const ModularMinPolyRecord F = min_poly_of_form(*Gp, r);
    if (static_cast<std::size_t>(F.degree()) != d) return false;
    // Degree d alone also holds for curvilinear non-radical ideals.
    const PrimeField K(p);
    return degree(dense_gcd(K, F.poly, dense_derivative(K, F.poly))) == 0;
  }
  throw std::runtime_error("p_test_rad: no prime with the expected quotient dimension after " +
                           std::to_string(max_resamples) + " draws");
}

std::vector<UnivariateVectorRecord> delete_unlucky_primes_rad(std::vector<UnivariateVectorRecord> records) {
  if (records.empty()) throw std::invalid_argument("delete_unlucky_primes_rad: no records");
  return majority(std::move(records), [](const UnivariateVectorRecord& r) { return r.degrees; });
}

std::vector<ModularMinPolyRecord> delete_unlucky_primes_rad(std::vector<ModularMinPolyRecord> records, long d) {
  std::vector<ModularMinPolyRecord> out;
  for (auto& r : records) {
    if (r.degree() == d) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.prime < b.prime; });
  return out;
}

std::optional<QDense> lift_univariate(std::span<const ModularMinPolyRecord> records) {
  if (records.empty()) throw std::invalid_argument("lift_univariate: no records");
  std::vector<std::uint64_t> primes;
  std::vector<const PDense*> polys;
  for (const auto& r : records) {
    if (r.degree() != records.front().degree()) throw std::invalid_argument("lift_univariate: degree mismatch");
    primes.push_back(r.prime);
    polys.push_back(&r.poly);
  }
  return lift_aligned(polys, CrtBasis(primes));
}

std::optional<std::vector<QDense>> lift_univariate(std::span<const UnivariateVectorRecord> records) {
  if (records.empty()) throw std::invalid_argument("lift_univariate: no records");
  std::vector<std::uint64_t> primes;
  for (const auto& r : records) {
    if (r.degrees != records.front().degrees) throw std::invalid_argument("lift_univariate: degree mismatch");
    primes.push_back(r.prime);
  }
  const CrtBasis crt(primes);
  std::vector<QDense> out;
  for (std::size_t i = 0; i < records.front().polys.size(); ++i) {
    std::vector<const PDense*> polys;
    for (const auto& r : records) polys.push_back(&r.polys[i]);
    auto f = lift_aligned(polys, crt);
    if (!f) return std::nullopt;
    out.push_back(std::move(*f));
  }
  return out;
}

QPoly evaluate_normal_form(const QRing& R, const QDense& F, const QPoly& r, std::span<const QPoly> G) {
  QPoly acc;
  for (std::size_t i = F.size(); i-- > 0;) {
    acc = R.add(R.mul(acc, r), R.constant(F[i]));
    acc = normal_form(R, acc, G);
  }
  return acc;
}

QBasis zero_radical(const QBasis& G, const ModStdConfig& config, ZeroRadicalReport* report) {
  if (config.batch_size == 0) throw std::invalid_argument("zero_radical: batch_size must be positive");
  ZeroRadicalReport local;
  ZeroRadicalReport& rep = report != nullptr ? *report : local;
  rep = ZeroRadicalReport{};

  const std::size_t n = G.ring.size();
  quotient_basis(G);  // throws on positive dimension
  const Ring dp_ring = G.ring.with_order(MonomialOrder::degrevlex());
  const QRing Q(G.ring);

  PrimePool pool(mix_seed(config.seed, 1), denominators(G.elements));
  auto snapshot = std::make_shared<const QBasis>(G);
  std::vector<UnivariateVectorRecord> cache;

  for (std::size_t round = 0; round < config.max_rounds; ++round) {
    ++rep.rounds;
    TaskBatch<QBasis> batch{gen_primes(config.batch_size, pool), snapshot, config.cores, config.seed};
    rep.primes += batch.primes.size();
    auto result = parallel_map(batch, [](std::uint64_t p, const QBasis& basis) {
      const ModularGBRecord Gp = reduce_basis_mod_p(basis, p);
      if (Gp.gb.lm_set != basis.lm_set) throw BadPrime("leading monomials change mod p");
      return eliminants_mod_p(Gp);
    });
    for (auto& [p, rec] : result.results) cache.push_back(std::move(rec));
    if (cache.empty()) continue;

    const auto kept = delete_unlucky_primes_rad(cache);
    auto lifted = lift_univariate(std::span<const UnivariateVectorRecord>(kept));
    if (!lifted) continue;
    const auto& f = *lifted;

    const bool members = parallel_all_of(n, config.cores, [&](std::size_t i) {
      return normal_form(Q, from_dense(Q, f[i], i), std::span<const QPoly>(G.elements)).is_zero();
    });
    if (!members) continue;

    // One more prime as a cross-check on the degrees.
    bool degrees_ok = true;
    while (true) {
      const std::uint64_t q = gen_primes(1, pool).front();
      try {
        const ModularGBRecord Gq = reduce_basis_mod_p(G, q);
        if (Gq.gb.lm_set != G.lm_set) continue;
        const auto check = eliminants_mod_p(Gq);
        for (std::size_t i = 0; i < n; ++i) degrees_ok = degrees_ok && check.degrees[i] >= degree(f[i]);
        break;
      } catch (const ArithmeticError&) {
        continue;
      }
    }
    if (!degrees_ok) continue;

    std::vector<QPoly> gens = G.elements;
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      const QDense g = squarefree_part(f[i]);
      rep.eliminant_degrees.push_back(degree(f[i]));
      rep.squarefree_degrees.push_back(degree(g));
      if (degree(g) < degree(f[i])) {
        gens.push_back(from_dense(Q, g, i));
        changed = true;
      }
    }
    if (!changed && G.ring.order().kind == OrderKind::dp) return G;
    const QRing Qdp(dp_ring);
    for (auto& g : gens) g = reorder(Qdp, g);
    return mod_std(Ideal(dp_ring, std::move(gens)), config, &rep.final_gb);
  }
  throw MaxRoundsExceeded("zero_radical: no verified eliminants after " + std::to_string(config.max_rounds) +
                              " rounds",
                          std::nullopt);
}

}  // namespace modpar
