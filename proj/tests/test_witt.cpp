#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aswc/witt.hpp"
#include "test_util.hpp"

using namespace aswc;
using testutil::binomial;

namespace {

const Ring ZZ = Ring::integers();

Poly P(Ring r, const std::string& s) { return parse_poly(r, s); }

WittVec symbolic(long p, int n, Ring r, const std::string& stem) {
  WittVec w{p, {}};
  for (int i = 1; i <= n; ++i) w.c.push_back(Poly::variable(r, stem + std::to_string(i)));
  return w;
}

WittVec random_int_vec(long p, int n, testutil::RandomPoly& rnd) {
  WittVec w{p, {}};
  for (int i = 0; i < n; ++i)
    w.c.push_back(Poly::constant(ZZ, mpq_class(rnd.uniform(-50, 50))));
  return w;
}

bool ghost_equal_sum(const WittVec& u, const WittVec& v, const WittVec& s) {
  GhostVec gu = ghost_map(u), gv = ghost_map(v), gs = ghost_map(s);
  for (int i = 0; i < u.n(); ++i)
    if (!(gs.c[i] == gu.c[i] + gv.c[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("ghost map") {
  WittVec w{2, {P(ZZ, "a"), P(ZZ, "b")}};
  GhostVec g = ghost_map(w);
  CHECK(g.c[0] == P(ZZ, "a"));
  CHECK(g.c[1] == P(ZZ, "a^2 + 2*b"));

  WittVec one{5, {P(ZZ, "a")}};
  CHECK(ghost_map(one).c[0] == P(ZZ, "a"));

  WittVec w3{3, {P(ZZ, "1"), P(ZZ, "0")}};
  GhostVec g3 = ghost_map(w3);
  CHECK(g3.c[0] == P(ZZ, "1"));
  CHECK(g3.c[1] == P(ZZ, "1"));

  WittVec modp{3, {P(Ring::modp(3), "a")}};
  CHECK_THROWS_AS(ghost_map(modp), Error);
}

TEST_CASE("universal polynomials: frozen small cases") {
  const auto& u22 = universal_polys(2, 2);
  CHECK(u22.sum[0] == P(ZZ, "x0 + y0"));
  CHECK(u22.sum[1] == P(ZZ, "x1 + y1 - x0*y0"));
  CHECK(u22.neg[0] == P(ZZ, "-x0"));
  CHECK(u22.neg[1] == P(ZZ, "-x1 - x0^2"));

  const auto& u32 = universal_polys(3, 2);
  CHECK(u32.sum[1] == P(ZZ, "x1 + y1 - x0^2*y0 - x0*y0^2"));
}

TEST_CASE("universal polynomials satisfy the ghost equations (integral certificate)") {
  for (long p : {2L, 3L, 5L}) {
    for (int n : {1, 2, 3}) {
      const auto& law = universal_polys(p, n);  // construction rationalizes to ZZ
      WittVec x = symbolic(p, n, ZZ, "u"), y = symbolic(p, n, ZZ, "v");
      // Evaluate the laws symbolically and compare ghost components.
      std::map<std::string, Poly> bind;
      for (int i = 0; i < n; ++i) {
        bind.emplace("x" + std::to_string(i), x.c[i]);
        bind.emplace("y" + std::to_string(i), y.c[i]);
      }
      WittVec s{p, {}}, m{p, {}};
      for (int i = 0; i < n; ++i) {
        s.c.push_back(substitute(law.sum[i], bind));
        m.c.push_back(substitute(law.neg[i], bind));
      }
      CHECK(ghost_equal_sum(x, y, s));
      GhostVec gx = ghost_map(x), gm = ghost_map(m);
      for (int i = 0; i < n; ++i) CHECK(gm.c[i] == -gx.c[i]);
    }
  }
}

TEST_CASE("componentwise negation for odd p") {
  for (long p : {3L, 5L}) {
    for (int n : {1, 2, 3}) {
      const auto& law = universal_polys(p, n);
      for (int i = 0; i < n; ++i)
        CHECK(law.neg[i] == -Poly::variable(ZZ, "x" + std::to_string(i)));
    }
  }
}

TEST_CASE("witt_add basics") {
  WittVec x{3, {P(ZZ, "x")}}, y{3, {P(ZZ, "y")}};
  CHECK(witt_add(x, y).c[0] == P(ZZ, "x + y"));

  Ring f3 = Ring::modp(3);
  WittVec a{3, {P(f3, "a1"), P(f3, "a2")}}, b{3, {P(f3, "b1"), P(f3, "b2")}};
  CHECK(witt_add(a, b).c[1] == P(f3, "a2 + b2 - a1^2*b1 - a1*b1^2"));
}

TEST_CASE("group laws, symbolically and on random integer vectors") {
  for (long p : {2L, 3L, 5L}) {
    for (int n : {1, 2, 3}) {
      WittVec u = symbolic(p, n, ZZ, "u");
      WittVec v = symbolic(p, n, ZZ, "v");
      WittVec w = symbolic(p, n, ZZ, "w");
      CHECK(witt_add(u, v) == witt_add(v, u));
      CHECK(witt_add(witt_add(u, v), w) == witt_add(u, witt_add(v, w)));
      CHECK(witt_add(u, witt_neg(u)) == witt_zero(p, n, ZZ));
      CHECK(witt_sub(witt_add(u, v), v) == u);
    }
  }
  testutil::RandomPoly rnd(424242);
  for (long p : {2L, 3L, 5L}) {
    for (int i = 0; i < 34; ++i) {
      int n = 1 + i % 3;
      WittVec u = random_int_vec(p, n, rnd);
      WittVec v = random_int_vec(p, n, rnd);
      WittVec w = random_int_vec(p, n, rnd);
      CHECK(witt_add(witt_add(u, v), w) == witt_add(u, witt_add(v, w)));
      CHECK(witt_add(u, witt_neg(u)) == witt_zero(p, n, ZZ));
      CHECK(witt_sub(witt_add(u, v), v) == u);
    }
  }
}

TEST_CASE("ghost homomorphism identity") {
  for (long p : {2L, 3L, 5L}) {
    for (int n : {1, 2, 3}) {
      WittVec u = symbolic(p, n, ZZ, "u");
      WittVec v = symbolic(p, n, ZZ, "v");
      CHECK(ghost_equal_sum(u, v, witt_add(u, v)));
    }
  }
}

TEST_CASE("frobenius") {
  Ring f3 = Ring::modp(3);
  WittVec w{3, {P(f3, "x1"), P(f3, "x2")}};
  WittVec fw = frobenius(w);
  CHECK(fw.c[0] == P(f3, "x1^3"));
  CHECK(fw.c[1] == P(f3, "x2^3"));

  CHECK(frobenius(witt_zero(5, 3, ZZ)) == witt_zero(5, 3, ZZ));

  WittVec lw{3, {P(f3, "pi^-1*b"), P(f3, "0")}};
  CHECK(frobenius(lw).c[0] == P(f3, "pi^-3*b^3"));
}

TEST_CASE("f_minus_id: n=1 and constants") {
  Ring f3 = Ring::modp(3);
  WittVec w{3, {P(f3, "x")}};
  CHECK(f_minus_id(w).c[0] == P(f3, "x^3 - x"));
  for (long c = 0; c < 3; ++c) {
    WittVec k{3, {Poly::constant(f3, c)}};
    CHECK(f_minus_id(k).c[0] == Poly::zero(f3));
  }
}

TEST_CASE("f_minus_id matches the length-2 closed form") {
  // Second component must equal
  //   x2^p - x2 - (1/p) sum_k C(p,k) x1^(pk) (-x1)^(p-k)
  // with the (1/p) C(p,k) evaluated exactly over ZZ.
  for (long p : {3L, 5L}) {
    WittVec x = symbolic(p, 2, ZZ, "x");
    // Rename to x1, x2 to match the display below.
    WittVec fm = f_minus_id(x);
    Poly x1 = Poly::variable(ZZ, "x1"), x2 = Poly::variable(ZZ, "x2");
    Poly corr(ZZ);
    for (int k = 1; k <= p - 1; ++k) {
      mpz_class gamma = binomial(static_cast<int>(p), k) / p;  // exact integer
      corr = corr + mpq_class(gamma) * poly_pow(x1, static_cast<long>(p) * k) *
                        poly_pow(-x1, static_cast<long>(p) - k);
    }
    Poly display = poly_pow(x2, p) - x2 - corr;
    CHECK(fm.c[1] == display);
    CHECK(fm.c[0] == poly_pow(x1, p) - x1);
  }
}

TEST_CASE("f_minus_id is additive for Witt addition") {
  // A characteristic-p identity: Frobenius is a ring endomorphism only after
  // reduction mod p, so the symbolic components live over GF(p).
  for (long p : {2L, 3L, 5L}) {
    Ring r = Ring::modp(p);
    for (int n : {1, 2, 3}) {
      WittVec u = symbolic(p, n, r, "u");
      WittVec v = symbolic(p, n, r, "v");
      CHECK(f_minus_id(witt_add(u, v)) == witt_add(f_minus_id(u), f_minus_id(v)));
    }
  }
}

TEST_CASE("render and parse") {
  Ring f3 = Ring::modp(3);
  WittVec w = parse_witt(f3, 3, "(a1, a2)");
  CHECK(w.n() == 2);
  CHECK(render(w) == "(1*a1, 1*a2)");
  CHECK_THROWS_AS(parse_witt(f3, 3, "a1, a2"), Error);
  CHECK_THROWS_AS(parse_witt(Ring::modp(5), 3, "(a1)"), Error);  // p mismatch
}
