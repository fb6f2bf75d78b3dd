// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// iff a blocking criterion fails; the speedup check is reported only.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "modpar/assprimes.hpp"
#include "modpar/engine.hpp"
#include "modpar/io.hpp"
#include "modpar/report.hpp"
#include "support/oracles.hpp"

using namespace modpar;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;  // 0: no budget
  bool blocking;
  std::function<Outcome()> run;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Ideal cyclic(std::size_t n) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back(std::string(1, static_cast<char>('a' + i)));
  const Ring ring(vars, MonomialOrder::degrevlex());
  const QRing Q(ring);
  std::vector<QPoly> gens;
  for (std::size_t k = 1; k < n; ++k) {
    QPoly sum;
    for (std::size_t i = 0; i < n; ++i) {
      Monomial m;
      for (std::size_t j = 0; j < k; ++j) m = m * Monomial::variable((i + j) % n);
      sum = Q.add(sum, Q.term(m, 1));
    }
    gens.push_back(sum);
  }
  Monomial all;
  for (std::size_t i = 0; i < n; ++i) all = all * Monomial::variable(i);
  gens.push_back(Q.sub(Q.term(all, 1), Q.one()));
  return Ideal(ring, gens);
}

std::vector<std::string> strs(const QBasis& G) { return basis_strings(G); }

// --- inputs shared by the correctness and determinism criteria ---

std::vector<Ideal> random_ideals() {
  std::mt19937_64 rng(20250101);
  const Ring ring({"x", "y", "z"}, MonomialOrder::degrevlex());
  std::vector<Ideal> out;
  for (int k = 0; k < 25; ++k) {
    const Ideal I = oracle::random_ideal(rng, ring);
    out.push_back(I);
    out.push_back(with_order(I, MonomialOrder::lex()));
  }
  return out;
}

// Monomial ideals in shifted coordinates u_i = x_i - c_i: pure powers plus up
// to two mixed monomials. The radical is <x_1 - c_1, ..., x_n - c_n>.
struct PowerIdeal {
  Ideal ideal;
  std::vector<Rational> point;
};

std::vector<PowerIdeal> power_ideals() {
  std::mt19937_64 rng(77);
  std::vector<PowerIdeal> out;
  for (int k = 0; k < 10; ++k) {
    const std::size_t n = 2 + k % 2;
    std::vector<std::string> vars{"x", "y", "z"};
    vars.resize(n);
    const Ring ring(vars, MonomialOrder::degrevlex());
    const QRing Q(ring);
    std::vector<Rational> point;
    std::vector<QPoly> shifted;
    for (std::size_t i = 0; i < n; ++i) {
      point.emplace_back(static_cast<long>(rng() % 9) - 4);
      shifted.push_back(Q.sub(Q.variable(i), Q.constant(point.back())));
    }
    std::vector<QPoly> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(Q.pow(shifted[i], 1 + rng() % 4));
    const std::size_t mixed = rng() % 3;
    for (std::size_t j = 0; j < mixed; ++j) {
      QPoly m = Q.one();
      for (std::size_t i = 0; i < n; ++i) m = Q.mul(m, Q.pow(shifted[i], rng() % 3));
      if (!m.is_constant()) gens.push_back(m);
    }
    out.push_back({Ideal(ring, gens), point});
  }
  return out;
}

struct PointSet {
  Ideal ideal;
  std::vector<std::vector<std::string>> maximal;  // sorted
};

std::vector<PointSet> point_sets() {
  std::mt19937_64 rng(4242);
  const Ring ring({"x", "y", "z"}, MonomialOrder::degrevlex());
  std::vector<PointSet> out;
  for (int k = 0; k < 10; ++k) {
    const std::size_t count = 1 + rng() % 8;
    std::set<std::vector<Rational>> pts;
    while (pts.size() < count) {
      std::vector<Rational> p;
      for (int i = 0; i < 3; ++i) {
        Rational c(static_cast<long>(rng() % 11) - 5, rng() % 4 == 0 ? 2 : 1);
        c.canonicalize();
        p.push_back(c);
      }
      pts.insert(p);
    }
    const std::vector<std::vector<Rational>> list(pts.begin(), pts.end());
    PointSet ps{Ideal(ring, oracle::point_ideal(ring, list).elements), {}};
    for (const auto& p : list) ps.maximal.push_back(strs(oracle::maximal_ideal(ring, p)));
    std::sort(ps.maximal.begin(), ps.maximal.end());
    out.push_back(std::move(ps));
  }
  return out;
}

ModStdConfig config_with(std::uint64_t seed, unsigned cores) {
  ModStdConfig c;
  c.seed = seed;
  c.cores = cores;
  return c;
}

// --- criteria ---

Outcome crt_farey() {
  std::vector<std::uint64_t> primes;
  Integer N = 1;
  for (std::uint64_t p = (std::uint64_t{1} << 30) - 1; N < Integer("2000000000000"); p -= 2) {
    if (!is_prime(p)) continue;
    primes.push_back(p);
    N *= static_cast<unsigned long>(p);
  }
  const CrtBasis basis(primes);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  int exact = 0;
  for (int k = 0; k < 1000; ++k) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    std::vector<std::uint32_t> residues;
    for (auto p : primes) {
      const auto P = static_cast<std::uint32_t>(p);
      residues.push_back(PrimeField(P).from_rational(q));
    }
    const auto back = farey_reconstruct(basis.lift(residues), basis.modulus());
    if (back && *back == q) ++exact;
  }
  return {exact == 1000, std::to_string(exact) + "/1000 exact, " + std::to_string(primes.size()) + " primes"};
}

Outcome modstd_oracle() {
  int agree = 0;
  int proper = 0;
  const auto ideals = random_ideals();
  for (const auto& I : ideals) {
    const QBasis direct = oracle::direct_gb(I);
    if (mod_std(I, config_with(0, 1)) == direct) ++agree;
    if (!direct.elements.front().is_constant()) ++proper;
  }
  return {agree == static_cast<int>(ideals.size()),
          std::to_string(agree) + "/" + std::to_string(ideals.size()) + " equal (25 ideals x dp, lp; " +
              std::to_string(proper) + " not the unit ideal)"};
}

Outcome trap() {
  const std::size_t batch = ModStdConfig{}.batch_size;
  PrimePool pool(0);
  Integer N = 1;
  for (auto p : gen_primes(batch, pool)) N *= static_cast<unsigned long>(p);
  const Ideal I = oracle::make_ideal({"x", "y"}, MonomialOrder::degrevlex(), {"x + y", "x*y + " + N.get_str()});
  ModStdReport report;
  const QBasis G = mod_std(I, config_with(0, 1), &report);
  const bool first_rejected = report.rounds.front().verified != std::optional<bool>(true);
  const bool ok = G == oracle::direct_gb(I) && report.rounds.size() >= 2 && first_rejected;
  return {ok, std::to_string(report.rounds.size()) + " rounds, first batch rejected: " + (first_rejected ? "yes" : "no")};
}

Outcome cyclic_runs() {
  std::ostringstream detail;
  const Ideal c5 = cyclic(5);
  auto t0 = Clock::now();
  ModStdReport r5;
  const QBasis G5 = mod_std(c5, config_with(0, default_cores()), &r5);
  const double t5 = seconds_since(t0);
  const bool verified5 = r5.rounds.back().verified == std::optional<bool>(true);
  t0 = Clock::now();
  const QBasis D5 = oracle::direct_gb(c5);
  const double td = seconds_since(t0);
  const bool lm5 = G5.lm_set == D5.lm_set;
  detail << "cyclic-5: " << G5.size() << " elements, verified " << verified5 << ", LM sets equal " << lm5 << " ("
         << t5 << " s, direct " << td << " s)";

  const Ideal c6 = cyclic(6);
  ModStdConfig cfg = config_with(0, default_cores());
  cfg.verify = false;
  ModStdReport r6;
  t0 = Clock::now();
  const QBasis G6 = mod_std(c6, cfg, &r6);
  const double t6 = seconds_since(t0);
  const bool ptest6 = r6.rounds.back().p_test == std::optional<bool>(true);
  // spot checks: 10 random s-polynomials reduce to zero over Q
  const QRing Q(c6.ring);
  std::mt19937_64 rng(6);
  int zero = 0;
  for (int k = 0; k < 10; ++k) {
    const std::size_t i = rng() % G6.size();
    std::size_t j = rng() % (G6.size() - 1);
    if (j >= i) ++j;
    const QPoly s = s_poly(Q, G6.elements[i], G6.elements[j]);
    if (normal_form(Q, s, std::span<const QPoly>(G6.elements)).is_zero()) ++zero;
  }
  detail << "; cyclic-6: " << G6.size() << " elements, pTestSB " << ptest6 << ", s-polys " << zero << "/10 (" << t6
         << " s)";
  return {verified5 && lm5 && ptest6 && zero == 10, detail.str()};
}

Outcome radical_examples() {
  const Ring R({"x", "y"}, MonomialOrder::degrevlex());
  auto gb = [&](std::vector<std::string> gens) { return oracle::direct_gb(oracle::make_ideal({"x", "y"}, R.order(), gens)); };
  int ok = 0;
  int total = 0;
  ++total;
  ok += zero_radical(gb({"x^3", "y^2"}), config_with(0, 1)) == gb({"x", "y"});
  ++total;
  ok += zero_radical(gb({"x^2", "y^2-1"}), config_with(0, 1)) == gb({"x", "y^2-1"});
  for (const auto& P : power_ideals()) {
    ++total;
    const QBasis G = oracle::direct_gb(P.ideal);
    const QBasis once = zero_radical(G, config_with(0, 1));
    const QBasis twice = zero_radical(once, config_with(1, 1));
    ok += once == twice && once == oracle::maximal_ideal(P.ideal.ring, P.point);
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " exact"};
}

Outcome ass_primes_runs() {
  int ok = 0;
  int total = 0;
  const Ring R({"x", "y"}, MonomialOrder::degrevlex());

  ++total;
  {
    const auto res = ass_primes(oracle::make_ideal({"x", "y"}, R.order(), {"x^2-1", "y^2-3*y+2"}), AssPrimesConfig{});
    std::vector<std::vector<std::string>> got;
    for (const auto& M : res.primes) got.push_back(strs(M));
    std::vector<std::vector<std::string>> want;
    for (int a : {1, -1}) {
      for (int b : {1, 2}) want.push_back(strs(oracle::maximal_ideal(R, {Rational(a), Rational(b)})));
    }
    std::sort(want.begin(), want.end());
    ok += got == want;
  }

  ++total;
  bool negative_path = false;
  {
    AssPrimesReport report;
    const auto res = ass_primes(oracle::make_ideal({"x", "y"}, R.order(), {"x^2", "y^2-1"}), AssPrimesConfig{}, &report);
    std::vector<std::vector<std::string>> got;
    for (const auto& M : res.primes) got.push_back(strs(M));
    negative_path = !report.p_test_rad.empty() && !report.p_test_rad.front();
    ok += negative_path && got == std::vector<std::vector<std::string>>{{"x", "y + 1"}, {"x", "y - 1"}};
  }

  for (const auto& ps : point_sets()) {
    ++total;
    const auto res = ass_primes(ps.ideal, AssPrimesConfig{});
    std::vector<std::vector<std::string>> got;
    for (const auto& M : res.primes) got.push_back(strs(M));
    ok += got == ps.maximal;
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                           " exact, pTestRad-negative path taken: " + (negative_path ? "yes" : "no")};
}

Outcome primary_run() {
  const Ideal I = oracle::make_ideal({"x", "y"}, MonomialOrder::degrevlex(), {"x^2", "y^2-1"});
  const auto comps = primary_decomposition(I, AssPrimesConfig{});
  bool ok = comps.size() == 2;
  if (!ok) return {false, std::to_string(comps.size()) + " components"};
  QBasis meet = comps[0].primary;
  for (std::size_t i = 1; i < comps.size(); ++i) {
    meet = oracle::intersect_direct(Ideal(I.ring, meet.elements), Ideal(I.ring, comps[i].primary.elements));
  }
  const bool intersection = meet == oracle::direct_gb(I);
  bool radicals = true;
  for (const auto& c : comps) radicals = radicals && zero_radical(c.primary, config_with(0, 1)) == c.associated_prime;
  std::string names;
  for (const auto& c : comps) {
    names += " <";
    for (const auto& s : strs(c.primary)) names += (names.back() == '<' ? "" : ", ") + s;
    names += ">";
  }
  return {intersection && radicals,
          std::string("intersection ") + (intersection ? "equal" : "differs") + ", radicals " +
              (radicals ? "match" : "differ") + ";" + names};
}

Outcome factor_runs() {
  int ok = 0;
  int total = 0;
  auto zd = [](std::initializer_list<long> c) {
    ZDense f;
    for (long x : c) f.emplace_back(x);
    return f;
  };
  auto check = [&](const QDense& F, std::vector<Factor> want, const Rational& unit) {
    std::sort(want.begin(), want.end(), [](const Factor& a, const Factor& b) { return factor_less(a.poly, b.poly); });
    const Factorization got = factor_rational(F);
    ++total;
    ok += got.factors == want && got.unit == unit && expand(got) == F;
  };
  check(to_rational(zd({-1, 0, 0, 0, 1})), {{zd({-1, 1}), 1}, {zd({1, 1}), 1}, {zd({1, 0, 1}), 1}}, 1);
  check(to_rational(zd({1, 5, 6})), {{zd({1, 2}), 1}, {zd({1, 3}), 1}}, 1);
  check(to_rational(zd({-2, 0, 1})), {{zd({-2, 0, 1}), 1}}, 1);

  std::mt19937_64 rng(8);
  const RationalField Q;
  for (int k = 0; k < 50; ++k) {
    std::vector<Factor> want;
    QDense F{Rational(1)};
    const std::size_t count = 1 + rng() % 4;
    while (want.size() < count) {
      const ZDense g = oracle::random_irreducible(rng, 1 + rng() % 8);
      if (std::any_of(want.begin(), want.end(), [&](const Factor& f) { return f.poly == g; })) continue;
      const unsigned mult = 1 + rng() % 2;
      for (unsigned e = 0; e < mult; ++e) F = dense_mul(Q, F, to_rational(g));
      want.push_back({g, mult});
    }
    Rational unit(static_cast<long>(rng() % 19) - 9, 1 + rng() % 5);
    unit.canonicalize();
    if (unit == 0) unit = 1;
    check(dense_scale(Q, F, unit), want, unit);
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " exact"};
}

Outcome determinism() {
  int same = 0;
  int total = 0;
  auto compare = [&](const std::string& command, const Ideal& I) {
    ++total;
    std::set<std::string> dumps;
    for (unsigned cores : {1U, 4U, 8U}) dumps.insert(deterministic_dump(run_command(command, I, config_with(5, cores)).document));
    same += dumps.size() == 1;
  };
  for (const auto& I : random_ideals()) compare("gb", I);
  auto gb = [](std::vector<std::string> gens) { return oracle::make_ideal({"x", "y"}, MonomialOrder::degrevlex(), gens); };
  compare("radical", gb({"x^3", "y^2"}));
  compare("radical", gb({"x^2", "y^2-1"}));
  for (const auto& P : power_ideals()) compare("radical", P.ideal);
  compare("assprimes", gb({"x^2-1", "y^2-3*y+2"}));
  compare("assprimes", gb({"x^2", "y^2-1"}));
  for (const auto& ps : point_sets()) compare("assprimes", ps.ideal);
  return {same == total, std::to_string(same) + "/" + std::to_string(total) + " identical across cores 1, 4, 8"};
}

Outcome speedup() {
  const Ideal c6 = cyclic(6);
  auto per_prime = [&](unsigned cores) {
    ModStdConfig c = config_with(0, cores);
    c.verify = false;
    double best = 0;
    for (int rep = 0; rep < 3; ++rep) {
      ModStdReport report;
      mod_std(c6, c, &report);
      if (rep == 0 || report.seconds_modular < best) best = report.seconds_modular;
    }
    return best;
  };
  const double one = per_prime(1);
  const double eight = per_prime(8);
  const double ratio = eight / one;
  std::ostringstream detail;
  detail << "best of 3, 8 workers / 1 worker = " << ratio << " (" << eight << " s vs " << one << " s) on "
         << std::thread::hardware_concurrency() << " hardware threads, target <= 0.6";
  return {ratio <= 0.6, detail.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "CRT-Farey roundtrip", 5, true, crt_farey},
      {2, "mod_std equals direct Buchberger", 120, true, modstd_oracle},
      {3, "unlucky-prime trap", 30, true, trap},
      {4, "cyclic-5 verified, cyclic-6 probabilistic", 600, true, cyclic_runs},
      {5, "zero_radical", 60, true, radical_examples},
      {6, "ass_primes", 300, true, ass_primes_runs},
      {7, "primary_decomposition", 60, true, primary_run},
      {8, "factor_rational", 60, true, factor_runs},
      {9, "determinism across core counts", 0, true, determinism},
      {10, "parallel speedup (soft)", 0, false, speedup},
  };
  bool blocking_failure = false;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double t = seconds_since(t0);
    const bool in_time = c.budget_seconds == 0 || t < c.budget_seconds;
    const bool pass = out.pass && in_time;
    char timing[96];
    if (c.budget_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.2f s, budget %.0f s", t, c.budget_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.2f s", t);
    }
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << timing << "]"
              << (c.blocking ? "" : " (non-blocking)") << " -- " << out.detail << std::endl;
    if (!pass && c.blocking) blocking_failure = true;
  }
  return blocking_failure ? 1 : 0;
}
