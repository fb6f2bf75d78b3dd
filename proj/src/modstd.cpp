#include "modpar/modstd.hpp"

#include <algorithm>
#include <chrono>
#include <memory>

#include "modpar/engine.hpp"

namespace modpar {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool divides_any_coefficient(std::uint64_t p, std::span<const QPoly> polys) {
  const auto q = static_cast<unsigned long>(p);
  for (const auto& f : polys) {
    for (const auto& t : f.terms()) {
      if (mpz_divisible_ui_p(t.coeff.get_num_mpz_t(), q) != 0) return true;
      if (mpz_divisible_ui_p(t.coeff.get_den_mpz_t(), q) != 0) return true;
    }
  }
  return false;
}

std::vector<Integer> denominators(std::span<const QPoly> polys) {
  std::vector<Integer> out;
  for (const auto& f : polys) {
    for (const auto& t : f.terms()) {
      if (t.coeff.get_den() != 1) out.push_back(t.coeff.get_den());
    }
  }
  return out;
}

}  // namespace

ModularGBRecord compute_modular_gb(const Ideal& I, std::uint64_t p) {
  const PRing R(I.ring, PrimeField(p));
  return {p, buchberger(R, reduce_mod_p(I.generators, static_cast<std::uint32_t>(p)))};
}

std::vector<ModularGBRecord> delete_unlucky_primes_sb(std::vector<ModularGBRecord> records) {
  if (records.empty()) throw std::invalid_argument("delete_unlucky_primes_sb: no records");
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.prime < b.prime; });
  // Classes in order of their smallest prime; the first maximal one wins.
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& cls) {
      return records[cls.front()].gb.lm_set == records[i].gb.lm_set;
    });
    if (it == classes.end()) {
      classes.push_back({i});
    } else {
      it->push_back(i);
    }
  }
  const auto best = std::max_element(classes.begin(), classes.end(),
                                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<ModularGBRecord> out;
  out.reserve(best->size());
  for (std::size_t i : *best) out.push_back(std::move(records[i]));
  return out;
}

std::optional<std::vector<QPoly>> lift_gb(const Ring& ring, std::span<const ModularGBRecord> records) {
  if (records.empty()) throw std::invalid_argument("lift_gb: no records");
  const auto& lms = records.front().gb.lm_set;
  for (const auto& r : records) {
    if (r.gb.lm_set != lms) throw std::invalid_argument("lift_gb: records disagree on leading monomials");
  }
  std::vector<std::uint64_t> primes;
  for (const auto& r : records) primes.push_back(r.prime);
  const CrtBasis crt(primes);
  const QRing Q(ring);

  std::vector<QPoly> out;
  out.reserve(lms.size());
  std::vector<std::uint32_t> residues(records.size());
  for (std::size_t k = 0; k < lms.size(); ++k) {
    std::vector<Monomial> support;
    for (const auto& r : records) {
      for (const auto& t : r.gb.elements[k].terms()) support.push_back(t.mono);
    }
    std::sort(support.begin(), support.end(),
              [&ring](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
    support.erase(std::unique(support.begin(), support.end()), support.end());

    // Terms are sorted descending in each record, so walk them in lockstep.
    std::vector<std::size_t> cursor(records.size(), 0);
    std::vector<Term<Rational>> terms;
    for (const auto& m : support) {
      for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& poly = records[i].gb.elements[k].terms();
        if (cursor[i] < poly.size() && poly[cursor[i]].mono == m) {
          residues[i] = poly[cursor[i]].coeff;
          ++cursor[i];
        } else {
          residues[i] = 0;
        }
      }
      auto q = farey_reconstruct(crt.lift(residues), crt.modulus());
      if (!q) return std::nullopt;
      if (sgn(*q) != 0) terms.push_back({m, std::move(*q)});
    }
    out.push_back(QPoly(std::move(terms)));
  }
  return out;
}

bool p_test_sb(const Ideal& I, std::span<const QPoly> G, PrimePool& pool, std::uint64_t* used_prime) {
  std::uint64_t p = 0;
  do {
    p = gen_primes(1, pool).front();
  } while (divides_any_coefficient(p, I.generators) || divides_any_coefficient(p, G));
  if (used_prime != nullptr) *used_prime = p;

  const auto p32 = static_cast<std::uint32_t>(p);
  const PRing R(I.ring, PrimeField(p));
  std::vector<PPoly> Gp = reduce_mod_p(G, p32);
  std::vector<PPoly> Ip = reduce_mod_p(I.generators, p32);

  for (const auto& f : Ip) {
    if (!normal_form(R, f, Gp).is_zero()) return false;
  }
  const PBasis std_p = buchberger(R, Ip);
  const PBasis Gp_sorted = make_basis(R, Gp);
  if (Gp_sorted.lm_set != std_p.lm_set) return false;
  for (const auto& g : Gp) {
    if (!ideal_contains(R, std_p, g)) return false;
  }
  return true;
}

bool verify_gb(const Ideal& I, const QBasis& G, unsigned cores) {
  const ZRing Z(I.ring);
  const ZBasis GZ = to_primitive(G);
  const bool contains = parallel_all_of(I.generators.size(), cores, [&](std::size_t i) {
    return ideal_contains(Z, GZ, to_primitive(I.generators[i]));
  });
  if (!contains) return false;
  return is_self_gb(Z, std::span<const ZPoly>(GZ.elements), cores);
}

QBasis mod_std(const Ideal& I, const ModStdConfig& config, ModStdReport* report) {
  if (config.batch_size == 0) throw std::invalid_argument("mod_std: batch_size must be positive");
  ModStdReport local;
  ModStdReport& rep = report != nullptr ? *report : local;
  rep = ModStdReport{};

  PrimePool pool(config.seed, denominators(I.generators));
  auto snapshot = std::make_shared<const Ideal>(I);
  const QRing Q(I.ring);

  std::vector<ModularGBRecord> cache;
  std::optional<QBasis> best;
  std::vector<std::uint64_t> primes = gen_primes(config.batch_size, pool);

  for (std::size_t round = 0; round < config.max_rounds; ++round) {
    RoundReport info;
    info.computed = primes;

    auto t0 = Clock::now();
    TaskBatch<Ideal> batch{primes, snapshot, config.cores, config.seed};
    auto result = parallel_map(batch, [](std::uint64_t p, const Ideal& ideal) { return compute_modular_gb(ideal, p); });
    rep.seconds_modular += seconds_since(t0);
    info.discarded = result.discarded.size();
    for (auto& [p, rec] : result.results) cache.push_back(std::move(rec));
    std::sort(cache.begin(), cache.end(), [](const auto& a, const auto& b) { return a.prime < b.prime; });
    info.records = cache.size();

    if (!cache.empty()) {
      t0 = Clock::now();
      const auto kept = delete_unlucky_primes_sb(cache);
      info.kept = kept.size();
      auto lifted = lift_gb(I.ring, kept);
      rep.seconds_lift += seconds_since(t0);
      info.lifted = lifted.has_value();

      if (lifted) {
        QBasis candidate = make_basis(Q, std::move(*lifted));
        best = candidate;
        t0 = Clock::now();
        std::uint64_t test_prime = 0;
        const bool passed = p_test_sb(I, candidate.elements, pool, &test_prime);
        rep.seconds_p_test += seconds_since(t0);
        info.test_prime = test_prime;
        info.p_test = passed;
        if (passed) {
          if (!config.verify) {
            rep.rounds.push_back(std::move(info));
            return candidate;
          }
          t0 = Clock::now();
          const bool ok = verify_gb(I, candidate, config.cores);
          rep.seconds_verify += seconds_since(t0);
          info.verified = ok;
          if (ok) {
            rep.rounds.push_back(std::move(info));
            return candidate;
          }
        }
      }
    }
    rep.rounds.push_back(std::move(info));
    primes = gen_primes(config.batch_size, pool);
  }
  throw MaxRoundsExceeded("mod_std: no verified basis after " + std::to_string(config.max_rounds) + " rounds",
                          std::move(best));
}

}  // namespace modpar
