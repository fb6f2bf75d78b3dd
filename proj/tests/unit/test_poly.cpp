#include <random>

#include "helpers.hpp"

using namespace testing;

namespace {

QPoly random_poly(const QRing& Q, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-20, 20);
  std::vector<Term<Rational>> terms;
  const int nterms = 1 + static_cast<int>(rng() % 4);
  for (int k = 0; k < nterms; ++k) {
    Monomial m;
    for (std::size_t i = 0; i < Q.nvars(); ++i) m.set(i, static_cast<unsigned>(rng() % 3));
    terms.push_back({m, Rational(coeff(rng), 1 + static_cast<int>(rng() % 3))});
    terms.back().coeff.canonicalize();
  }
  return Q.canonicalize(std::move(terms));
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("dp compares from the last variable on ties") {
    const Ring R = ring_xy();
    const Monomial xy2{1, 2};
    const Monomial x2y{2, 1};
    CHECK(R.compare(x2y, xy2) > 0);
    CHECK(R.compare(xy2, xy2) == 0);
    // degree first
    CHECK(R.compare(Monomial{0, 3}, Monomial{2, 0}) > 0);
    // three variables: x*z vs y^2, same degree, z exponent decides
    const Ring R3({"x", "y", "z"}, MonomialOrder::degrevlex());
    CHECK(R3.compare(Monomial{0, 2, 0}, Monomial{1, 0, 1}) > 0);
  }

  TEST_CASE("lp ignores degree") {
    const Ring R = ring_xy(MonomialOrder::lex());
    CHECK(R.compare(Monomial{1, 0}, Monomial{0, 9}) > 0);
    CHECK(R.compare(Monomial{1, 2}, Monomial{1, 2}) == 0);
  }

  TEST_CASE("block ordering eliminates the first block") {
    const Ring R({"t", "x", "y"}, MonomialOrder::elimination(1));
    CHECK(R.compare(Monomial{1, 0, 0}, Monomial{0, 5, 5}) > 0);
    CHECK(R.compare(Monomial{0, 2, 1}, Monomial{0, 1, 2}) > 0);
  }

  TEST_CASE("arithmetic examples") {
    const Ring R = ring_xy();
    const QRing Q(R);
    CHECK(Q.add(P(R, "x+1"), P(R, "-x-1")).is_zero());
    CHECK(S(R, Q.mul(P(R, "x+y"), P(R, "x-y"))) == "x^2 - y^2");
    const QPoly f = P(R, "3*x^2+y");
    CHECK(S(R, f.tail()) == "y");
    CHECK(f.leading_coeff() == 3);
    CHECK(S(R, Q.pow(P(R, "x+y"), 2)) == "x^2 + 2*x*y + y^2");
  }

  TEST_CASE("reduce_mod_p examples") {
    const Ring R({"x"}, MonomialOrder::lex());
    const PRing F(R, PrimeField(5));
    CHECK(to_string(R, reduce_mod_p(P(R, "1/2*x + 3"), 5)) == "3*x + 3");
    CHECK(to_string(R, reduce_mod_p(P(R, "x + 5"), 5)) == "x");
    CHECK_THROWS_AS(reduce_mod_p(P(R, "1/5*x"), 5), ArithmeticError);
  }

  TEST_CASE("substituting a linear form") {
    const Ring R1({"x"}, MonomialOrder::degrevlex());
    const QRing Q1(R1);
    const LinearForm r1{{}};
    CHECK(S(R1, evaluate_normal_form(Q1, qd({-1, 0, 1}), r1.to_polynomial(Q1), {})) == "x^2 - 1");

    const Ring R = ring_xy();
    const QRing Q(R);
    const LinearForm r{{2}};
    CHECK(S(R, evaluate_normal_form(Q, qd({0, 1}), r.to_polynomial(Q), {})) == "2*x + y");
    const LinearForm s{{1}};
    CHECK(S(R, evaluate_normal_form(Q, qd({0, 0, 1}), s.to_polynomial(Q), {})) == "x^2 + 2*x*y + y^2");
  }

  TEST_CASE("parse and print roundtrip") {
    const Ring R({"x1", "x2", "x3"}, MonomialOrder::degrevlex());
    for (const char* text : {"3/2*x1^2*x2 - x3 + 1", "-x1", "7", "x3^4 + x1*x2*x3 - 1/3*x2^2"}) {
      const QPoly f = P(R, text);
      CHECK(S(R, f) == text);
      CHECK(P(R, S(R, f)) == f);
    }
    CHECK(S(R, P(R, "x1 + x1 - 2*x1")) == "0");
    CHECK_THROWS_AS(P(R, "2x1"), ParseError);
    CHECK_THROWS_AS(P(R, "x1 +"), ParseError);
    CHECK_THROWS_AS(P(R, "x4"), ParseError);
  }

  TEST_CASE("random canonical roundtrip and ring axioms") {
    const Ring R({"x", "y", "z"}, MonomialOrder::degrevlex());
    const QRing Q(R);
    std::mt19937_64 rng(17);
    for (int k = 0; k < 60; ++k) {
      const QPoly f = random_poly(Q, rng);
      const QPoly g = random_poly(Q, rng);
      const QPoly h = random_poly(Q, rng);
      CHECK(P(R, S(R, f)) == f);
      CHECK(Q.is_canonical(Q.add(f, g)));
      CHECK(Q.is_canonical(Q.mul(f, g)));
      CHECK(Q.add(f, g) == Q.add(g, f));
      CHECK(Q.mul(f, g) == Q.mul(g, f));
      CHECK(Q.mul(Q.mul(f, g), h) == Q.mul(f, Q.mul(g, h)));
      CHECK(Q.mul(f, Q.add(g, h)) == Q.add(Q.mul(f, g), Q.mul(f, h)));
      CHECK(Q.mul(f, g) == oracle::naive_mul(Q, f, g));
    }
  }

  TEST_CASE("reduction mod p is a ring homomorphism") {
    const Ring R({"x", "y", "z"}, MonomialOrder::degrevlex());
    const QRing Q(R);
    const std::uint32_t p = 1000003;
    const PRing F(R, PrimeField(p));
    std::mt19937_64 rng(23);
    for (int k = 0; k < 40; ++k) {
      const QPoly f = random_poly(Q, rng);
      const QPoly g = random_poly(Q, rng);
      CHECK(reduce_mod_p(Q.mul(f, g), p) == F.mul(reduce_mod_p(f, p), reduce_mod_p(g, p)));
      CHECK(reduce_mod_p(Q.add(f, g), p) == F.add(reduce_mod_p(f, p), reduce_mod_p(g, p)));
    }
  }

  TEST_CASE("monomial division and lcm") {
    const Monomial a{2, 1, 0};
    const Monomial b{1, 3, 2};
    CHECK(lcm(a, b) == Monomial{2, 3, 2});
    CHECK((a * b) / b == a);
    CHECK(Monomial{1, 0, 0}.divides(a));
    CHECK_FALSE(a.divides(b));
    CHECK(Monomial{1, 0, 0}.coprime(Monomial{0, 2, 1}));
  }
}
