#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aswc/poly.hpp"
#include "test_util.hpp"

using namespace aswc;
using testutil::binomial;

namespace {
const Ring ZZ = Ring::integers();
const Ring QQ = Ring::rationals();
const Ring F3 = Ring::modp(3);

Poly P(Ring r, const std::string& s) { return parse_poly(r, s); }
}  // namespace

TEST_CASE("arithmetic basics") {
  CHECK(P(ZZ, "x") + P(ZZ, "-x") == Poly::zero(ZZ));
  CHECK(P(ZZ, "x + y") * P(ZZ, "x - y") == P(ZZ, "x^2 - y^2"));
  CHECK(-P(ZZ, "3*x - 2") == P(ZZ, "-3*x + 2"));
  CHECK(poly_pow(P(ZZ, "x + 1"), 0) == P(ZZ, "1"));
  CHECK_THROWS_AS(P(ZZ, "x") + P(QQ, "x"), Error);
}

TEST_CASE("Frobenius collapses binomials in characteristic p") {
  CHECK(poly_pow(P(F3, "x + y"), 3) == P(F3, "x^3 + y^3"));
  // Coefficients of (t+b)^7 over F_3 against the Pascal oracle.
  Poly lhs = poly_pow(P(F3, "t + b"), 7);
  Poly expected(F3);
  for (int k = 0; k <= 7; ++k)
    expected.add_term(Monomial::var("t", k).times(Monomial::var("b", 7 - k)),
                      mpq_class(binomial(7, k)));
  CHECK(lhs == expected);
  CHECK(lhs == P(F3, "t^7 + t^6*b + 2*t^4*b^3 + 2*t^3*b^4 + t*b^6 + b^7"));
}

TEST_CASE("ring axioms on random samples") {
  testutil::RandomPoly rnd(20240811);
  const std::vector<std::string> vars = {"x", "y", "z"};
  for (Ring r : {ZZ, QQ, F3}) {
    for (int i = 0; i < 100; ++i) {
      Poly f = rnd.gen(r, vars, 4, 3, 9);
      Poly g = rnd.gen(r, vars, 4, 3, 9);
      Poly h = rnd.gen(r, vars, 4, 3, 9);
      CHECK((f + g) + h == f + (g + h));
      CHECK(f + g == g + f);
      CHECK(f * g == g * f);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
    }
  }
}

TEST_CASE("Frobenius additivity over F_p") {
  for (long p : {2L, 3L, 5L}) {
    Ring r = Ring::modp(p);
    testutil::RandomPoly rnd(97 + static_cast<unsigned>(p));
    for (int i = 0; i < 40; ++i) {
      Poly f = rnd.gen(r, {"x", "y"}, 4, 3, 9);
      Poly g = rnd.gen(r, {"x", "y"}, 4, 3, 9);
      CHECK(poly_pow(f + g, p) == poly_pow(f, p) + poly_pow(g, p));
    }
  }
}

TEST_CASE("substitution") {
  // T1^p - T1 with T1 -> pi^-m * T1t.
  Poly f = P(F3, "T1^3 - T1");
  Poly bind = P(F3, "pi^-3 * T1t");
  Poly got = substitute(f, {{"T1", bind}});
  CHECK(got == P(F3, "pi^-9*T1t^3 - pi^-3*T1t"));

  CHECK(substitute(f, {}) == f);

  // The worked reduction step: -s^7 + b^7 + (s-b)^2 ... under s -> t + b.
  Poly s = Poly::variable(F3, "s1");
  Poly b = Poly::variable(F3, "b1");
  Poly expr = -poly_pow(s, 7) + poly_pow(b, 7) +
              (poly_pow(s - b, 2) - poly_pow(b, 2)) *
                  (b * poly_pow(s - b, 4) + poly_pow(b, 4) * (s - b));
  Poly got2 = substitute(expr, {{"s1", P(F3, "t1 + b1")}});
  CHECK(got2 == P(F3, "-t1^7 + 2*t1^3*b1^4 + t1*b1^6"));

  CHECK_THROWS_AS(substitute(f, {{"pi", P(F3, "T1 + 1")}}), Error);
}

TEST_CASE("substitute is a ring homomorphism") {
  testutil::RandomPoly rnd(5150);
  for (int i = 0; i < 50; ++i) {
    Poly f = rnd.gen(F3, {"x", "y"}, 3, 3, 5);
    Poly g = rnd.gen(F3, {"x", "y"}, 3, 3, 5);
    std::map<std::string, Poly> sigma = {{"x", rnd.gen(F3, {"u", "v"}, 3, 2, 5)},
                                         {"y", rnd.gen(F3, {"u", "v"}, 3, 2, 5)}};
    CHECK(substitute(f * g, sigma) == substitute(f, sigma) * substitute(g, sigma));
    CHECK(substitute(f + g, sigma) == substitute(f, sigma) + substitute(g, sigma));
  }
}

TEST_CASE("pi valuation") {
  CHECK(pi_valuation(P(F3, "pi^-9 * a1")) == -9);
  CHECK(!pi_valuation(Poly::zero(F3)).has_value());
  CHECK(pi_valuation(P(F3, "a2 + pi^6*c")) == 0);

  testutil::RandomPoly rnd(777);
  for (Ring r : {ZZ, QQ, F3}) {
    for (int i = 0; i < 60; ++i) {
      Poly f = rnd.gen_nonzero(r, {"x", "y"}, 3, 2, 5);
      Poly g = rnd.gen_nonzero(r, {"x", "y"}, 3, 2, 5);
      // Sprinkle pi powers.
      f = f * Poly::pi_power(r, rnd.uniform(-3, 3));
      g = g * Poly::pi_power(r, rnd.uniform(-3, 3));
      CHECK(*pi_valuation(f * g) == *pi_valuation(f) + *pi_valuation(g));
    }
  }
}

TEST_CASE("reduce_mod_pi") {
  // a1 + pi^(m(p-1)) T1t drops the twisted term.
  CHECK(reduce_mod_pi(P(F3, "a1 + pi^6*T1t")) == P(F3, "a1"));
  CHECK(reduce_mod_pi(P(F3, "c + 2*d")) == P(F3, "c + 2*d"));
  CHECK_THROWS_AS(reduce_mod_pi(P(F3, "pi^-1*a")), Error);
  try {
    reduce_mod_pi(P(F3, "pi^-1*a"));
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::NotIntegral);
    CHECK(std::string(e.what()).find("a*pi^-1") != std::string::npos);
  }
}

TEST_CASE("rationalize") {
  CHECK(rationalize(P(QQ, "3/3*x")) == P(ZZ, "x"));
  // (x^3 + y^3 - (x+y)^3)/3 expands integrally to -x^2 y - x y^2.
  Poly q = mpq_class(1, 3) * (P(QQ, "x^3 + y^3") - poly_pow(P(QQ, "x + y"), 3));
  CHECK(rationalize(q) == P(ZZ, "-x^2*y - x*y^2"));
  CHECK_THROWS_AS(rationalize(P(QQ, "1/2*x")), Error);
}

TEST_CASE("render/parse round trip") {
  testutil::RandomPoly rnd(31337);
  for (Ring r : {ZZ, QQ, F3}) {
    for (int i = 0; i < 80; ++i) {
      Poly f = rnd.gen(r, {"a1", "b1", "t1"}, 5, 4, 9, -3, 3);
      CHECK(parse_poly(r, render(f)) == f);
    }
  }
  CHECK(render(Poly::zero(ZZ)) == "0");
  CHECK(parse_poly(ZZ, "0") == Poly::zero(ZZ));
  // The documented canonical form.
  CHECK(render(P(ZZ, "-1*t1^7 + 2*t1^3*b1^4 + 1*t1*b1^6")) ==
        "-1*t1^7 + 2*t1^3*b1^4 + 1*t1*b1^6");
}

TEST_CASE("modp coefficients stay in [0, p)") {
  Poly f = P(F3, "-x + 5*y");
  CHECK(render(f) == "2*y + 2*x");
  for (const auto& [m, c] : f.terms()) {
    CHECK(c >= 0);
    CHECK(c < 3);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(P(ZZ, ""), Error);
  CHECK_THROWS_AS(P(ZZ, "x +"), Error);
  CHECK_THROWS_AS(P(ZZ, "x^-2"), Error);  // negative exponent off pi
  CHECK_THROWS_AS(P(ZZ, "2x"), Error);    // missing '*'
  CHECK(P(ZZ, "pi^-2").terms().begin()->first.pi_exp() == -2);
}

TEST_CASE("pth_power_root") {
  Poly f = P(F3, "2*x^3*y^6 + b1^3");
  Poly w = pth_power_root(f);
  CHECK(w == P(F3, "2*x*y^2 + b1"));
  CHECK(poly_pow(w, 3) == f);
  CHECK_THROWS_AS(pth_power_root(P(F3, "x^2")), Error);
}
