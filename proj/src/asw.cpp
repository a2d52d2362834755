#include "aswc/asw.hpp"

namespace aswc {

namespace {

std::string tower_var(int i) { return "x" + std::to_string(i); }  // 1-indexed

}  // namespace

std::string ASWTower::render() const {
  std::string s;
  for (const auto& lv : levels) {
    s += lv.var + "^" + std::to_string(p) + " - " + lv.var + " = " + aswc::render(lv.rhs) + "\n";
  }
  return s;
}

ASWTower build_tower(const WittVec& a) {
  a.validate();
  if (a.ring().tag != Ring::Tag::ModP)
    fail(Error::Kind::RingMismatch, "build_tower expects a GF(p) Witt vector");
  const long p = a.p;
  const int n = a.n();
  for (const auto& f : a.c)
    for (int i = 1; i <= n; ++i)
      if (variables(f).count(tower_var(i)))
        fail(Error::Kind::ShapeMismatch,
             "build_tower: input uses reserved tower variable " + tower_var(i));

  // Generic vector (x1..xn); component i of F.x - x is
  //   x_i^p - x_i - corr_i(x1..x_{i-1}), so rhs_i = a_i + corr_i.
  WittVec x{p, {}};
  for (int i = 1; i <= n; ++i) x.c.push_back(Poly::variable(a.ring(), tower_var(i)));
  WittVec fmid = f_minus_id(x);

  ASWTower t{p, n, {}};
  for (int i = 1; i <= n; ++i) {
    Poly head = poly_pow(x.c[i - 1], p) - x.c[i - 1];
    Poly corr = head - fmid.c[i - 1];
    for (int j = i; j <= n; ++j)
      if (variables(corr).count(tower_var(j)))
        fail(Error::Kind::Internal, "tower correction escaped its level");
    t.levels.push_back({tower_var(i), a.c[i - 1] + corr});
  }
  return t;
}

WittVec shift_cocycle(const WittVec& a, const WittVec& b) {
  return witt_add(a, witt_sub(frobenius(b), b));
}

ConsistencyRecord substitution_consistency(const WittVec& a, const WittVec& b) {
  a.validate();
  b.validate();
  if (a.p != b.p || a.n() != b.n())
    fail(Error::Kind::ShapeMismatch, "substitution_consistency: shapes differ");
  // Fresh symbolic vector; z-names keep clear of tower and input variables.
  WittVec x{b.p, {}};
  for (int i = 0; i < b.n(); ++i)
    x.c.push_back(Poly::variable(b.ring(), "z" + std::to_string(i + 1)));
  ConsistencyRecord rec{f_minus_id(witt_add(x, b)),
                        witt_add(f_minus_id(x), witt_sub(frobenius(b), b))};
  if (!(rec.lhs == rec.rhs))
    fail(Error::Kind::IdentityFailure,
         "substitution consistency identity failed: " + render(rec.lhs) + " vs " + render(rec.rhs));
  return rec;
}

}  // namespace aswc
