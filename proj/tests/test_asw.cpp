#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aswc/asw.hpp"
#include "test_util.hpp"

using namespace aswc;
using testutil::binomial;

namespace {

Poly P(Ring r, const std::string& s) { return parse_poly(r, s); }

WittVec symbolic(long p, int n, Ring r, const std::string& stem) {
  WittVec w{p, {}};
  for (int i = 1; i <= n; ++i) w.c.push_back(Poly::variable(r, stem + std::to_string(i)));
  return w;
}

}  // namespace

TEST_CASE("tower: single level") {
  Ring f5 = Ring::modp(5);
  ASWTower t = build_tower(WittVec{5, {P(f5, "a1")}});
  CHECK(t.levels.size() == 1);
  CHECK(t.levels[0].var == "x1");
  CHECK(t.levels[0].rhs == P(f5, "a1"));
  CHECK(t.render() == "x1^5 - x1 = 1*a1\n");
}

TEST_CASE("tower: level-2 correction matches the exact binomial form (odd p)") {
  // rhs_2 = a2 + (1/p) sum_k C(p,k) x1^(pk) (-x1)^(p-k), evaluated over ZZ.
  // Only odd p: for p = 2 Witt negation is not componentwise and the honest
  // correction picks up an extra square term.
  for (long p : {3L, 5L}) {
    Ring r = Ring::modp(p);
    ASWTower t = build_tower(WittVec{p, {P(r, "a1"), P(r, "a2")}});
    Poly x1 = Poly::variable(r, "x1");
    Poly corr(r);
    for (int k = 1; k <= p - 1; ++k) {
      mpz_class gamma = binomial(static_cast<int>(p), k) / p;
      corr = corr + mpq_class(gamma) * poly_pow(x1, static_cast<long>(p) * k) *
                        poly_pow(-x1, static_cast<long>(p) - k);
    }
    CHECK(t.levels[1].rhs == P(r, "a2") + corr);
    CHECK(t.levels[0].rhs == P(r, "a1"));
  }
  // p = 2, derived from the universal subtraction: a2 + x1^3 + x1^2.
  Ring f2 = Ring::modp(2);
  ASWTower t2 = build_tower(WittVec{2, {P(f2, "a1"), P(f2, "a2")}});
  CHECK(t2.levels[1].rhs == P(f2, "a2 + x1^3 + x1^2"));
  // Zero second component leaves the pure correction.
  Ring f3 = Ring::modp(3);
  ASWTower t0 = build_tower(WittVec{3, {P(f3, "a1"), Poly::zero(f3)}});
  CHECK(t0.levels[1].rhs == P(f3, "x1^5 - x1^7"));
}

TEST_CASE("tower rejects reserved variables and wrong rings") {
  Ring f3 = Ring::modp(3);
  CHECK_THROWS_AS(build_tower(WittVec{3, {P(f3, "x1")}}), Error);
  CHECK_THROWS_AS(build_tower(WittVec{3, {P(Ring::integers(), "a1")}}), Error);
}

TEST_CASE("shift_cocycle basics") {
  Ring f3 = Ring::modp(3);
  WittVec a{3, {P(f3, "a1"), P(f3, "a2")}};
  WittVec zero{3, {Poly::zero(f3), Poly::zero(f3)}};
  CHECK(shift_cocycle(a, zero) == a);

  // The length-2 display: first a1 + b1^p - b1; second
  //   a2 + b2^p - b2 - (1/p)[sum C(p,k) b1^(pk)(-b1)^(p-k)]
  //                  - (1/p)[sum C(p,k) (b1^p - b1)^k a1^(p-k)].
  for (long p : {3L, 5L}) {
    Ring r = Ring::modp(p);
    WittVec av{p, {P(r, "a1"), P(r, "a2")}};
    WittVec bv{p, {P(r, "b1"), P(r, "b2")}};
    WittVec shifted = shift_cocycle(av, bv);
    Poly a1 = P(r, "a1"), a2 = P(r, "a2"), b1 = P(r, "b1"), b2 = P(r, "b2");
    CHECK(shifted.c[0] == a1 + poly_pow(b1, p) - b1);
    Poly second = a2 + poly_pow(b2, p) - b2;
    for (int k = 1; k <= p - 1; ++k) {
      mpq_class gamma(binomial(static_cast<int>(p), k) / p);
      second = second - gamma * poly_pow(b1, static_cast<long>(p) * k) *
                            poly_pow(-b1, static_cast<long>(p) - k);
      second = second -
               gamma * poly_pow(poly_pow(b1, p) - b1, k) * poly_pow(a1, static_cast<long>(p) - k);
    }
    CHECK(shifted.c[1] == second);
  }
}

TEST_CASE("shift_cocycle: the example's level-1 component") {
  // a = (pi^-pm a1, a2), b = (pi^-m b1, 0) with p = 3, m' = 1 (m = 3, pm = 9).
  Ring f3 = Ring::modp(3);
  WittVec a{3, {P(f3, "pi^-9*a1"), P(f3, "a2")}};
  WittVec b{3, {P(f3, "pi^-3*b1"), Poly::zero(f3)}};
  WittVec s = shift_cocycle(a, b);
  CHECK(s.c[0] == P(f3, "pi^-9*a1 + pi^-9*b1^3 - pi^-3*b1"));
}

TEST_CASE("coboundaries form a group") {
  testutil::RandomPoly rnd(1009);
  for (long p : {2L, 3L}) {
    Ring r = Ring::modp(p);
    WittVec a = symbolic(p, 2, r, "a");
    WittVec b1 = symbolic(p, 2, r, "b");
    WittVec b2 = symbolic(p, 2, r, "c");
    CHECK(shift_cocycle(shift_cocycle(a, b1), witt_neg(b1)) == a);
    CHECK(shift_cocycle(shift_cocycle(a, b1), b2) == shift_cocycle(a, witt_add(b1, b2)));
    for (int i = 0; i < 20; ++i) {
      WittVec av{p, {rnd.gen(r, {"x", "y"}, 3, 2, 4), rnd.gen(r, {"x", "y"}, 3, 2, 4)}};
      WittVec bv{p, {rnd.gen(r, {"x", "y"}, 3, 2, 4), rnd.gen(r, {"x", "y"}, 3, 2, 4)}};
      CHECK(shift_cocycle(shift_cocycle(av, bv), witt_neg(bv)) == av);
    }
  }
}

TEST_CASE("substitution consistency: shifted equations describe the same cover") {
  for (long p : {2L, 3L}) {
    Ring r = Ring::modp(p);
    WittVec a = symbolic(p, 2, r, "a");
    WittVec b = symbolic(p, 2, r, "b");
    ConsistencyRecord rec = substitution_consistency(a, b);
    CHECK(rec.lhs == rec.rhs);
  }
  // n = 1 reduces to Frobenius additivity.
  Ring f3 = Ring::modp(3);
  WittVec a1{3, {P(f3, "a")}};
  WittVec b1{3, {P(f3, "b")}};
  CHECK_NOTHROW(substitution_consistency(a1, b1));
}

TEST_CASE("shifted towers differ by the substitution x -> x + b") {
  // Check build_tower(shift(a,b)) against build_tower(a) at level 1:
  // x1 |-> x1 + b1 turns rhs a1 into a1 + b1^p - b1.
  Ring f3 = Ring::modp(3);
  WittVec a{3, {P(f3, "a1"), P(f3, "a2")}};
  WittVec b{3, {P(f3, "b1"), P(f3, "b2")}};
  ASWTower plain = build_tower(a);
  ASWTower shifted = build_tower(shift_cocycle(a, b));
  Poly lhs1 = substitute(poly_pow(P(f3, "x1 + b1"), 3) - P(f3, "x1 + b1"), {});
  CHECK(lhs1 == poly_pow(P(f3, "x1"), 3) - P(f3, "x1") + poly_pow(P(f3, "b1"), 3) - P(f3, "b1"));
  CHECK(shifted.levels[0].rhs - plain.levels[0].rhs ==
        poly_pow(P(f3, "b1"), 3) - P(f3, "b1"));
}
