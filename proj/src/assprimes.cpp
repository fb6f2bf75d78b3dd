#include "modpar/assprimes.hpp"

#include <algorithm>
#include <memory>

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

/// Moves variable i of f to variable i + offset.
QPoly shift(const QRing& target, const QPoly& f, std::size_t offset) {
  std::vector<Term<Rational>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i + offset < kMaxVariables; ++i) {
      if (t.mono[i] != 0) m.set(i + offset, t.mono[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return target.canonicalize(std::move(terms));
}

/// Inverse of shift for polynomials free of the first `offset` variables.
QPoly unshift(const QRing& target, const QPoly& f, std::size_t offset) {
  std::vector<Term<Rational>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = offset; i < kMaxVariables; ++i) {
      if (t.mono[i] != 0) m.set(i - offset, t.mono[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return target.canonicalize(std::move(terms));
}

/// Ring with one extra variable in front, ordered as an elimination block.
Ring elimination_ring(const Ring& ring) {
  if (ring.size() + 1 > kMaxVariables) throw std::invalid_argument("too many variables for elimination");
  std::string name = "t";
  while (ring.index_of(name)) name += "_";
  std::vector<std::string> vars{name};
  vars.insert(vars.end(), ring.variables().begin(), ring.variables().end());
  return Ring(std::move(vars), MonomialOrder::elimination(1));
}

/// Elements of the elimination basis free of t, as a reduced basis in `ring`.
QBasis eliminate_first(const Ring& ring, const Ring& big, std::vector<QPoly> gens, const ModStdConfig& config) {
  const QBasis G = mod_std(Ideal(big, std::move(gens)), config);
  const QRing R(ring);
  std::vector<QPoly> kept;
  for (const auto& g : G.elements) {
    const bool free = std::all_of(g.terms().begin(), g.terms().end(),
                                  [](const Term<Rational>& t) { return t.mono[0] == 0; });
    if (free) kept.push_back(unshift(R, g, 1));
  }
  if (ring.order().kind == OrderKind::dp) return make_basis(R, std::move(kept));
  return mod_std(Ideal(ring, std::move(kept)), config);
}

bool basis_less(const QBasis& a, const QBasis& b) { return basis_strings(a) < basis_strings(b); }

QBasis dp_basis(const Ideal& I, const ModStdConfig& config) {
  const Ring dp = I.ring.with_order(MonomialOrder::degrevlex());
  const QRing Q(dp);
  std::vector<QPoly> gens;
  for (const auto& g : I.generators) gens.push_back(reorder(Q, g));
  return mod_std(Ideal(dp, std::move(gens)), config);
}

bool in_ideal(const QRing& R, const QDense& F, const QPoly& r, const QBasis& G) {
  return evaluate_normal_form(R, F, r, G.elements).is_zero();
}

QDense factor_poly(const Factor& f) { return monic(to_rational(f.poly)); }

QDense remove_one(const QDense& F, const Factor& f) {
  return dense_divrem(RationalField{}, F, factor_poly(f)).first;
}

class AssPrimesRun {
 public:
  AssPrimesRun(const AssPrimesConfig& config, AssPrimesReport& report) : config_(config), report_(report) {}

  /// Minimal primes of <G>, as dp bases.
  std::vector<QBasis> run(QBasis G, unsigned depth, std::uint64_t seed, AssPrimesResult* top) {
    if (depth > config_.max_depth) throw std::runtime_error("ass_primes: recursion depth limit exceeded");
    const std::size_t n = G.ring.size();
    const QRing Q(G.ring);
    if (G.elements.size() == 1 && G.elements[0].is_constant()) return {};
    std::size_t d = quotient_basis(G).dimension();

    std::mt19937_64 rng(mix_seed(seed, 2));
    LinearForm r = random_linear_form(n, rng);
    PrimePool pool(mix_seed(seed, 3), denominators(G.elements));
    ModStdConfig sub = config_.modstd;
    sub.seed = mix_seed(seed, 4);

    const bool radical_test = p_test_rad(d, r, G, pool);
    report_.p_test_rad.push_back(radical_test);
    if (!radical_test) {
      G = zero_radical(G, sub);
      ++report_.radical_computations;
      d = quotient_basis(G).dimension();
    }

    std::vector<ModularMinPolyRecord> FP;
    std::size_t l = 0;
    for (std::size_t round = 0; round < config_.modstd.max_rounds; ++round) {
      ++report_.rounds;
      auto snapshot = std::make_shared<const QBasis>(G);
      TaskBatch<QBasis> batch{gen_primes(config_.modstd.batch_size, pool), snapshot, config_.modstd.cores, seed};
      auto result = parallel_map(batch, [&r](std::uint64_t p, const QBasis& basis) {
        const ModularGBRecord Gp = reduce_basis_mod_p(basis, p);
        if (Gp.gb.lm_set != basis.lm_set) throw BadPrime("leading monomials change mod p");
        return min_poly_of_form(Gp, r);
      });
      std::vector<ModularMinPolyRecord> fresh;
      for (auto& [p, rec] : result.results) fresh.push_back(std::move(rec));
      for (auto& rec : delete_unlucky_primes_rad(std::move(fresh), static_cast<long>(d))) FP.push_back(std::move(rec));

      if (FP.size() == l) {
        ++report_.stagnations;
        G = zero_radical(G, sub);
        ++report_.radical_computations;
        d = quotient_basis(G).dimension();
        r = random_linear_form(n, rng);
        FP.clear();
        l = 0;
        continue;
      }
      l = FP.size();
      std::sort(FP.begin(), FP.end(), [](const auto& a, const auto& b) { return a.prime < b.prime; });
      auto F = lift_univariate(std::span<const ModularMinPolyRecord>(FP));
      if (!F) continue;
      const Factorization factors = factor_rational(*F);
      const VerifyOutcome outcome = verify_F(G, *F, factors, r, config_.modstd.cores);
      if (outcome.kind == VerifyKind::fail) continue;

      if (top != nullptr) {
        top->linear_form = r;
        top->F = *F;
        top->factors = factors;
      }
      const QPoly rp = r.to_polynomial(Q);
      std::vector<QBasis> out;
      auto component = [&](std::size_t i) {
        std::vector<QPoly> gens = G.elements;
        QPoly h = evaluate_normal_form(Q, factor_poly(factors.factors[i]), rp, G.elements);
        if (!h.is_zero()) gens.push_back(std::move(h));
        return mod_std(Ideal(G.ring, std::move(gens)), sub);
      };
      if (outcome.kind == VerifyKind::full) {
        for (std::size_t i = 0; i < factors.factors.size(); ++i) out.push_back(component(i));
      } else {
        for (std::size_t k = 0; k < outcome.h_factors.size(); ++k) {
          ++report_.recursions;
          auto child = run(component(outcome.h_factors[k]), depth + 1, mix_seed(seed, 16 + k), nullptr);
          for (auto& M : child) out.push_back(std::move(M));
        }
      }
      return out;
    }
    throw MaxRoundsExceeded("ass_primes: no verified minimal polynomial after " +
                                std::to_string(config_.modstd.max_rounds) + " rounds",
                            std::nullopt);
  }

 private:
  const AssPrimesConfig& config_;
  AssPrimesReport& report_;
};

}  // namespace

std::vector<std::string> basis_strings(const QBasis& G) {
  std::vector<std::string> out;
  out.reserve(G.elements.size());
  for (const auto& g : G.elements) out.push_back(to_string(G.ring, g));
  return out;
}

LinearForm random_linear_form(std::size_t nvars, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-99, 99);
  LinearForm r;
  for (std::size_t i = 0; i + 1 < nvars; ++i) r.coeffs.push_back(dist(rng));
  return r;
}

VerifyOutcome verify_F(const QBasis& G, const QDense& F, const Factorization& factors, const LinearForm& r,
                       unsigned cores) {
  const QRing Q(G.ring);
  const QPoly rp = r.to_polynomial(Q);
  const std::size_t s = factors.factors.size();
  // Task 0 is F itself, task i the cofactor F / F_i.
  const auto inside = parallel_for(s + 1, cores, [&](std::size_t i) {
    const QDense P = i == 0 ? F : remove_one(F, factors.factors[i - 1]);
    return in_ideal(Q, P, rp, G);
  });
  VerifyOutcome out;
  if (!inside[0]) return out;
  if (std::none_of(inside.begin() + 1, inside.end(), [](bool b) { return b; })) {
    out.kind = VerifyKind::full;
    return out;
  }
  // Strip one irreducible copy at a time while the quotient still vanishes;
  // this ends at the generator of the kernel.
  out.kind = VerifyKind::partial;
  std::vector<unsigned> mult;
  for (const auto& f : factors.factors) mult.push_back(f.multiplicity);
  QDense H = F;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i = 0; i < s; ++i) {
      if (mult[i] == 0) continue;
      const QDense smaller = remove_one(H, factors.factors[i]);
      if (in_ideal(Q, smaller, rp, G)) {
        H = smaller;
        --mult[i];
        progress = true;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < s; ++i) {
    if (mult[i] > 0) out.h_factors.push_back(i);
  }
  out.H = H;
  return out;
}

AssPrimesResult ass_primes(const Ideal& I, const AssPrimesConfig& config, AssPrimesReport* report) {
  AssPrimesReport local;
  AssPrimesReport& rep = report != nullptr ? *report : local;
  rep = AssPrimesReport{};
  const QBasis G = dp_basis(I, config.modstd);
  quotient_basis(G);  // positive-dimensional input fails here

  AssPrimesResult result;
  AssPrimesRun run(config, rep);
  std::vector<QBasis> primes = run.run(G, 0, config.modstd.seed, &result);
  const QRing Q(I.ring);
  for (auto& M : primes) {
    if (I.ring.order() == M.ring.order()) {
      M.ring = I.ring;
      continue;
    }
    std::vector<QPoly> gens;
    for (const auto& g : M.elements) gens.push_back(reorder(Q, g));
    M = mod_std(Ideal(I.ring, std::move(gens)), config.modstd);
  }
  std::sort(primes.begin(), primes.end(), basis_less);
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  result.primes = std::move(primes);
  return result;
}

std::vector<QPoly> separators(std::span<const QBasis> primes) {
  std::vector<QPoly> out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const QRing Q(primes[i].ring);
    QPoly sigma = Q.one();
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (j == i) continue;
      const auto& Mj = primes[j].elements;
      auto it = std::find_if(Mj.begin(), Mj.end(), [&](const QPoly& m) {
        return !normal_form(Q, m, std::span<const QPoly>(primes[i].elements)).is_zero();
      });
      if (it == Mj.end()) throw std::invalid_argument("separators: prime ideals are not distinct");
      sigma = Q.mul(sigma, *it);
    }
    if (ideal_contains(Q, primes[i], sigma)) throw std::logic_error("separators: sigma lies in its own prime");
    out.push_back(std::move(sigma));
  }
  return out;
}

QBasis saturate(const Ideal& I, const QPoly& f, const ModStdConfig& config) {
  if (f.is_zero()) throw std::invalid_argument("saturate: zero polynomial");
  const Ring big = elimination_ring(I.ring);
  const QRing B(big);
  std::vector<QPoly> gens;
  for (const auto& g : I.generators) gens.push_back(shift(B, g, 1));
  // t*f - 1
  gens.push_back(B.sub(B.mul(B.variable(0), shift(B, f, 1)), B.one()));
  return eliminate_first(I.ring, big, std::move(gens), config);
}

QBasis intersect(const Ideal& I, const Ideal& J, const ModStdConfig& config) {
  if (!(I.ring == J.ring)) throw std::invalid_argument("intersect: rings differ");
  const Ring big = elimination_ring(I.ring);
  const QRing B(big);
  const QPoly t = B.variable(0);
  const QPoly one_minus_t = B.sub(B.one(), t);
  std::vector<QPoly> gens;
  for (const auto& g : I.generators) gens.push_back(B.mul(t, shift(B, g, 1)));
  for (const auto& g : J.generators) gens.push_back(B.mul(one_minus_t, shift(B, g, 1)));
  return eliminate_first(I.ring, big, std::move(gens), config);
}

std::vector<PrimaryComponent> primary_decomposition(const Ideal& I, const AssPrimesConfig& config,
                                                    AssPrimesReport* report) {
  const AssPrimesResult ass = ass_primes(I, config, report);
  const QBasis G = mod_std(I, config.modstd);
  std::vector<PrimaryComponent> out;
  if (ass.primes.size() == 1) {
    out.push_back({G, ass.primes.front()});
  } else {
    const auto sigmas = separators(ass.primes);
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
      out.push_back({saturate(Ideal(G.ring, G.elements), sigmas[i], config.modstd), ass.primes[i]});
    }
  }
  if (out.empty()) return out;
  QBasis meet = out.front().primary;
  for (std::size_t i = 1; i < out.size(); ++i) {
    meet = intersect(Ideal(meet.ring, meet.elements), Ideal(out[i].primary.ring, out[i].primary.elements),
                     config.modstd);
  }
  if (!(meet == G)) throw std::runtime_error("primary_decomposition: components do not intersect to I");
  return out;
}

}  // namespace modpar
