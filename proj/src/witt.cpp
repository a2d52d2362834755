#include "aswc/witt.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace aswc {

Ring WittVec::ring() const {
  if (c.empty()) fail(Error::Kind::ShapeMismatch, "Witt vector must have length >= 1");
  return c.front().ring();
}

void WittVec::validate() const {
  if (c.empty()) fail(Error::Kind::ShapeMismatch, "Witt vector must have length >= 1");
  if (!is_prime(p)) fail(Error::Kind::ShapeMismatch, "Witt prime " + std::to_string(p) + " is not prime");
  Ring r = c.front().ring();
  for (const auto& f : c) require_same_ring(r, f.ring(), "WittVec");
  if (r.tag == Ring::Tag::ModP && r.p != p)
    fail(Error::Kind::ShapeMismatch, "Witt prime disagrees with coefficient field modulus");
}

namespace {

void require_same_shape(const WittVec& u, const WittVec& v, const char* where) {
  if (u.p != v.p || u.n() != v.n())
    fail(Error::Kind::ShapeMismatch, std::string(where) + ": Witt vector shapes differ");
  require_same_ring(u.ring(), v.ring(), where);
}

mpq_class p_power(long p, int e) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return mpq_class(z);
}

long int_pow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string xvar(int j) { return "x" + std::to_string(j); }
std::string yvar(int j) { return "y" + std::to_string(j); }

}  // namespace

GhostVec ghost_map(const WittVec& w) {
  w.validate();
  if (w.ring().tag == Ring::Tag::ModP)
    fail(Error::Kind::RingMismatch, "ghost_map is not defined over GF(p) (not injective mod p)");
  GhostVec g;
  for (int i = 0; i < w.n(); ++i) {
    Poly gi(w.ring());
    for (int j = 0; j <= i; ++j)
      gi = gi + p_power(w.p, j) * poly_pow(w.c[j], int_pow(w.p, i - j));
    g.c.push_back(gi);
  }
  return g;
}

// Solve the ghost equations successively over QQ, then certify integrality.
//   sum_i = x_i + y_i + p^{-i} * sum_{j<i} p^j (x_j^{p^{i-j}} + y_j^{p^{i-j}} - S_j^{p^{i-j}})
//   neg_i = -x_i      - p^{-i} * sum_{j<i} p^j (x_j^{p^{i-j}} + N_j^{p^{i-j}})
static WittUniversalPolys compute_universal(long p, int n) {
  const Ring q = Ring::rationals();
  WittUniversalPolys u;
  u.p = p;
  u.n = n;
  std::vector<Poly> S, N;
  for (int i = 0; i < n; ++i) {
    Poly xi = Poly::variable(q, xvar(i));
    Poly yi = Poly::variable(q, yvar(i));
    Poly s = xi + yi;
    Poly m = -xi;
    for (int j = 0; j < i; ++j) {
      int e = int_pow(p, i - j);
      mpq_class scale = p_power(p, j) / p_power(p, i);
      Poly xp = poly_pow(Poly::variable(q, xvar(j)), e);
      Poly yp = poly_pow(Poly::variable(q, yvar(j)), e);
      s = s + scale * (xp + yp - poly_pow(S[j], e));
      m = m - scale * (xp + poly_pow(N[j], e));
    }
    S.push_back(s);
    N.push_back(m);
  }
  for (int i = 0; i < n; ++i) {
    u.sum.push_back(rationalize(S[i]));
    u.neg.push_back(rationalize(N[i]));
  }
  return u;
}

const WittUniversalPolys& universal_polys(long p, int n) {
  if (!is_prime(p)) fail(Error::Kind::ShapeMismatch, std::to_string(p) + " is not prime");
  if (n < 1) fail(Error::Kind::ShapeMismatch, "Witt length must be >= 1");
  static std::mutex mu;
  static std::map<std::pair<long, int>, std::unique_ptr<WittUniversalPolys>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, n}];
  if (!slot) slot = std::make_unique<WittUniversalPolys>(compute_universal(p, n));
  return *slot;
}

namespace {

// Evaluate a universal ZZ polynomial at Witt components.
Poly eval_universal(const Poly& univ, Ring target, const std::vector<Poly>& xs,
                    const std::vector<Poly>& ys) {
  std::map<std::string, Poly> bind;
  for (std::size_t j = 0; j < xs.size(); ++j) bind.emplace(xvar(static_cast<int>(j)), xs[j]);
  for (std::size_t j = 0; j < ys.size(); ++j) bind.emplace(yvar(static_cast<int>(j)), ys[j]);
  return substitute(to_ring(univ, target), bind);
}

}  // namespace

WittVec witt_add(const WittVec& u, const WittVec& v) {
  u.validate();
  v.validate();
  require_same_shape(u, v, "witt_add");
  const auto& law = universal_polys(u.p, u.n());
  WittVec r{u.p, {}};
  for (int i = 0; i < u.n(); ++i) r.c.push_back(eval_universal(law.sum[i], u.ring(), u.c, v.c));
  return r;
}

WittVec witt_neg(const WittVec& u) {
  u.validate();
  const auto& law = universal_polys(u.p, u.n());
  WittVec r{u.p, {}};
  for (int i = 0; i < u.n(); ++i) r.c.push_back(eval_universal(law.neg[i], u.ring(), u.c, {}));
  return r;
}

WittVec witt_sub(const WittVec& u, const WittVec& v) { return witt_add(u, witt_neg(v)); }

WittVec witt_zero(long p, int n, Ring r) {
  WittVec w{p, {}};
  for (int i = 0; i < n; ++i) w.c.push_back(Poly::zero(r));
  return w;
}

WittVec frobenius(const WittVec& w) {
  w.validate();
  WittVec r{w.p, {}};
  for (const auto& f : w.c) r.c.push_back(poly_pow(f, w.p));
  return r;
}

WittVec f_minus_id(const WittVec& w) { return witt_sub(frobenius(w), w); }

std::string render(const WittVec& w) {
  std::string s = "(";
  for (int i = 0; i < w.n(); ++i) {
    if (i) s += ", ";
    s += render(w.c[i]);
  }
  return s + ")";
}

WittVec parse_witt(Ring r, long p, const std::string& text) {
  std::size_t a = text.find('(');
  std::size_t b = text.rfind(')');
  if (a == std::string::npos || b == std::string::npos || b <= a)
    fail(Error::Kind::Parse, "Witt vector must be written as (poly, poly, ...)");
  std::string inner = text.substr(a + 1, b - a - 1);
  WittVec w{p, {}};
  std::size_t start = 0;
  while (true) {
    std::size_t comma = inner.find(',', start);
    std::string piece =
        comma == std::string::npos ? inner.substr(start) : inner.substr(start, comma - start);
    w.c.push_back(parse_poly(r, piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  w.validate();
  return w;
}

}  // namespace aswc
