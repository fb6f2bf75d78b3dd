#include <random>

#include "helpers.hpp"

using namespace testing;

namespace {

ModularGBRecord modular(const Ring& R, std::vector<std::string> gens, std::uint32_t p) {
  std::vector<QPoly> polys;
  for (const auto& g : gens) polys.push_back(P(R, g));
  return {p, buchberger(PRing(R, PrimeField(p)), reduce_mod_p(polys, p))};
}

QBasis basis(const Ring& R, std::vector<std::string> gens) {
  std::vector<QPoly> polys;
  for (const auto& g : gens) polys.push_back(P(R, g));
  return groebner_over_q(R, polys);
}

std::vector<std::uint32_t> reduce_all(const QDense& f, std::uint32_t p) { return reduce_mod_p(f, p); }

}  // namespace

TEST_SUITE("zerodim") {
  TEST_CASE("quotient_basis examples") {
    const Ring R = ring_xy();
    const QuotientBasis B = quotient_basis(basis(R, {"x^2", "y^3"}));
    CHECK(B.dimension() == 6);
    std::vector<std::string> names;
    for (const auto& m : B.monomials) names.push_back(to_string(R, m));
    CHECK(names == std::vector<std::string>{"1", "y", "x", "y^2", "x*y", "x*y^2"});
    CHECK(quotient_basis(basis(R, {"x", "y"})).dimension() == 1);
    CHECK_THROWS_AS(quotient_basis(basis(R, {"x^2"})), PositiveDimensional);
    try {
      quotient_basis(basis(R, {"x*y"}));
    } catch (const PositiveDimensional& e) {
      CHECK(std::string(e.what()) == "positive-dimensional ideal");
    }
  }

  TEST_CASE("dimension does not depend on the generators") {
    const Ring R = ring_xy();
    CHECK(quotient_basis(basis(R, {"x^2-1", "y^2-3*y+2"})).dimension() ==
          quotient_basis(basis(R, {"x^2-1", "y^2-3*y+2+x^2-1", "x*y^2-3*x*y+2*x"})).dimension());
  }

  TEST_CASE("min_poly_of_form examples") {
    const Ring X({"x"}, MonomialOrder::degrevlex());
    const LinearForm rx{{}};
    CHECK(min_poly_of_form(modular(X, {"x^2 - 2"}, 7), rx).poly == pd({5, 0, 1}));
    CHECK(min_poly_of_form(modular(X, {"x^2"}, 7), rx).poly == pd({0, 0, 1}));

    const Ring R = ring_xy();
    const auto rec = min_poly_of_form(modular(R, {"x^2-1", "y^2-1"}, 101), LinearForm{{2}});
    // prod over a, b in {+-1} of (T - (2a + b))
    const PrimeField F(101);
    PDense want = pd({1});
    for (int a : {1, -1}) {
      for (int b : {1, -1}) want = dense_mul(F, want, pd({F.from_int(-(2 * a + b)), 1}));
    }
    CHECK(rec.poly == want);
    CHECK(rec.degree() == 4);
  }

  TEST_CASE("min poly annihilates r and matches the elimination oracle") {
    std::mt19937_64 rng(8);
    const Ring R({"x", "y", "z"}, MonomialOrder::degrevlex());
    const QRing Q(R);
    const std::uint32_t p = 1000003;
    for (int k = 0; k < 6; ++k) {
      std::vector<std::vector<Rational>> pts;
      for (int j = 0; j < 3; ++j) {
        pts.push_back({Rational(static_cast<long>(rng() % 7) - 3), Rational(static_cast<long>(rng() % 7) - 3),
                       Rational(static_cast<long>(rng() % 7) - 3)});
      }
      // product with the square of the ideal of (5, 0, 0): not radical
      const QBasis pts_ideal = oracle::point_ideal(R, pts);
      std::vector<QPoly> gens;
      for (const auto& g : pts_ideal.elements) {
        for (const char* h : {"x^2-10*x+25", "x*y-5*y", "x*z-5*z", "y^2", "y*z", "z^2"}) gens.push_back(Q.mul(g, P(R, h)));
      }
      const QBasis G = groebner_over_q(R, gens);
      if (quotient_basis(G).dimension() == 0) continue;
      const LinearForm r{{static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4}};
      const QDense oracle_F = oracle::elim_min_poly_oracle(Ideal(R, G.elements), r);
      const auto rec = min_poly_of_form(reduce_basis_mod_p(G, p), r);
      CHECK(rec.poly == reduce_all(oracle_F, p));
      CHECK(rec.degree() <= static_cast<long>(quotient_basis(G).dimension()));
      CHECK(evaluate_normal_form(Q, oracle_F, r.to_polynomial(Q), G.elements).is_zero());
    }
  }

  TEST_CASE("eliminant examples") {
    const Ring R = ring_xy();
    CHECK(eliminant_mod_p(modular(R, {"x^2-1", "y-x"}, 101), 1) == pd({100, 0, 1}));
    const Ring X({"x"}, MonomialOrder::degrevlex());
    CHECK(eliminant_mod_p(modular(X, {"x"}, 101), 0) == pd({0, 1}));
    const auto v = eliminants_mod_p(modular(R, {"x^2", "x*y", "y^2"}, 101));
    CHECK(v.polys == std::vector<PDense>{pd({0, 0, 1}), pd({0, 0, 1})});
    CHECK(v.degrees == std::vector<long>{2, 2});
  }

  TEST_CASE("p_test_rad examples") {
    const Ring R = ring_xy();
    PrimePool pool(3);
    CHECK(p_test_rad(4, LinearForm{{17}}, basis(R, {"x^2-1", "y^2-1"}), pool));
    // (T - 1)^2 (T + 1)^2 has the right degree but is not squarefree
    CHECK_FALSE(p_test_rad(4, LinearForm{{17}}, basis(R, {"x^2", "y^2-1"}), pool));
    CHECK_FALSE(p_test_rad(4, LinearForm{{0}}, basis(R, {"x^2", "y^2-1"}), pool));
    const Ring X({"x"}, MonomialOrder::degrevlex());
    CHECK(p_test_rad(1, LinearForm{{}}, basis(X, {"x-1"}), pool));
    CHECK_THROWS_AS(p_test_rad(5, LinearForm{{1}}, basis(R, {"x^2-1", "y^2-1"}), pool), std::runtime_error);
  }

  TEST_CASE("delete_unlucky_primes_rad") {
    std::vector<UnivariateVectorRecord> v{{7, {}, {2, 2}}, {11, {}, {2, 1}}, {13, {}, {2, 2}}};
    auto kept = delete_unlucky_primes_rad(v);
    REQUIRE(kept.size() == 2);
    CHECK(kept[0].prime == 7);
    CHECK(kept[1].prime == 13);
    std::vector<UnivariateVectorRecord> same{{7, {}, {1}}, {11, {}, {1}}};
    CHECK(delete_unlucky_primes_rad(same).size() == 2);
    std::vector<UnivariateVectorRecord> tie{{11, {}, {1}}, {7, {}, {2}}};
    kept = delete_unlucky_primes_rad(tie);
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].prime == 7);

    std::vector<ModularMinPolyRecord> m{{7, PDense(5, 1)}, {11, PDense(5, 1)}, {13, PDense(4, 1)}};
    const auto km = delete_unlucky_primes_rad(m, 4);
    REQUIRE(km.size() == 2);
    CHECK(km[1].prime == 11);
  }

  TEST_CASE("lift_univariate") {
    const std::vector<ModularMinPolyRecord> one{{101, pd({3, 1})}};
    CHECK(*lift_univariate(one) == qd({3, 1}));

    const Rational c(22, 7);
    std::vector<ModularMinPolyRecord> recs;
    for (std::uint32_t p : {101U, 103U, 107U}) recs.push_back({p, {PrimeField(p).from_rational(c), 1}});
    CHECK(*lift_univariate(recs) == QDense{c, Rational(1)});

    // N = 101 is below 2 * 22^2
    const std::vector<ModularMinPolyRecord> small{recs.front()};
    const auto got = lift_univariate(small);
    CHECK((!got.has_value() || got->front() != c));

    const std::vector<ModularMinPolyRecord> mismatch{{101, pd({3, 1})}, {103, pd({3, 0, 1})}};
    CHECK_THROWS_AS(lift_univariate(mismatch), std::invalid_argument);
  }

  TEST_CASE("zero_radical examples") {
    const Ring R = ring_xy();
    CHECK(strings(zero_radical(basis(R, {"x^3", "y^2"}), quick_config())) == std::vector<std::string>{"x", "y"});
    CHECK(strings(zero_radical(basis(R, {"x^2", "y^2-1"}), quick_config())) ==
          std::vector<std::string>{"y^2 - 1", "x"});
    CHECK(zero_radical(basis(R, {"x-1", "y"}), quick_config()) == basis(R, {"x-1", "y"}));
    CHECK_THROWS_AS(zero_radical(basis(R, {"x*y"}), quick_config()), PositiveDimensional);
  }

  TEST_CASE("zero_radical properties") {
    std::mt19937_64 rng(19);
    const Ring R({"x", "y", "z"}, MonomialOrder::degrevlex());
    const QRing Q(R);
    const std::uint32_t p = 1000003;
    for (int k = 0; k < 5; ++k) {
      std::vector<QPoly> gens;
      for (std::size_t i = 0; i < 3; ++i) {
        const QDense a = to_rational(oracle::random_irreducible(rng, 1));
        const QDense b = to_rational(oracle::random_irreducible(rng, 1 + rng() % 2));
        QDense f = dense_mul(RationalField(), dense_mul(RationalField(), a, a), b);
        gens.push_back(from_dense(Q, f, i));
      }
      const QBasis G = groebner_over_q(R, gens);
      const QBasis rad = zero_radical(G, quick_config(k));
      for (const auto& g : G.elements) CHECK(ideal_contains(Q, rad, g));
      CHECK(zero_radical(rad, quick_config(k + 1)) == rad);
      const auto elims = eliminants_mod_p(reduce_basis_mod_p(rad, p));
      const PrimeField F(p);
      for (const auto& e : elims.polys) CHECK(degree(dense_gcd(F, e, dense_derivative(F, e))) == 0);
    }
  }
}
