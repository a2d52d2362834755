#pragma once

#include <string>
#include <vector>

#include "aswc/poly.hpp"

namespace aswc {

// Truncated Witt vector of length n over one coefficient ring. Components are
// 0-indexed internally; rendering is 1-indexed where a display calls for it.
struct WittVec {
  long p = 0;
  std::vector<Poly> c;

  int n() const { return static_cast<int>(c.size()); }
  Ring ring() const;
  void validate() const;
  bool operator==(const WittVec&) const = default;
};

struct GhostVec {
  std::vector<Poly> c;
};

// Universal addition and negation laws for W_n, solved over QQ from the ghost
// equations and certified integral. sum[i] lives in ZZ[x0..x_{n-1}, y0..y_{n-1}],
// neg[i] in ZZ[x0..x_{n-1}].
struct WittUniversalPolys {
  long p = 0;
  int n = 0;
  std::vector<Poly> sum;
  std::vector<Poly> neg;
};

// Cached per (p, n); concurrent lookups compute each entry at most once.
const WittUniversalPolys& universal_polys(long p, int n);

// Ghost components sum_{j<=i} p^j w_j^{p^(i-j)}; rejects GF(p) input.
GhostVec ghost_map(const WittVec& w);

WittVec witt_add(const WittVec& u, const WittVec& v);
WittVec witt_neg(const WittVec& u);
WittVec witt_sub(const WittVec& u, const WittVec& v);
WittVec witt_zero(long p, int n, Ring r);

// Componentwise p-th power.
WittVec frobenius(const WittVec& w);

// witt_sub(frobenius(w), w): the map whose fibres are the p^n-cyclic covers.
WittVec f_minus_id(const WittVec& w);

std::string render(const WittVec& w);
WittVec parse_witt(Ring r, long p, const std::string& text);

}  // namespace aswc
