#pragma once

#include <gmpxx.h>

#include <string>

#include "aswc/errors.hpp"

namespace aswc {

// Coefficient domain tag: exact integers, exact rationals, or the prime field F_p.
// Coefficients are carried as mpq_class throughout; the ring decides the canonical
// representative (Int: denominator 1, ModP: integer in [0, p), Rat: lowest terms).
struct Ring {
  enum class Tag { Int, Rat, ModP };

  Tag tag = Tag::Int;
  long p = 0;  // modulus, only meaningful for ModP

  static Ring integers() { return Ring{Tag::Int, 0}; }
  static Ring rationals() { return Ring{Tag::Rat, 0}; }
  static Ring modp(long p) {
    if (p < 2) fail(Error::Kind::Parse, "modulus must be >= 2");
    return Ring{Tag::ModP, p};
  }

  bool operator==(const Ring&) const = default;

  std::string str() const {
    switch (tag) {
      case Tag::Int: return "ZZ";
      case Tag::Rat: return "QQ";
      case Tag::ModP: return "GF(" + std::to_string(p) + ")";
    }
    return "?";
  }
};

inline void require_same_ring(const Ring& a, const Ring& b, const char* where) {
  if (!(a == b))
    fail(Error::Kind::RingMismatch,
         std::string(where) + ": coefficient rings differ (" + a.str() + " vs " + b.str() + ")");
}

// Canonical representative of c in the given ring. Zero stays zero.
inline mpq_class ring_normalize(const Ring& r, const mpq_class& c) {
  mpq_class q = c;
  q.canonicalize();
  switch (r.tag) {
    case Ring::Tag::Rat:
      return q;
    case Ring::Tag::Int:
      if (q.get_den() != 1)
        fail(Error::Kind::NotIntegral, "non-integer coefficient " + q.get_str() + " in ZZ ring");
      return q;
    case Ring::Tag::ModP: {
      if (q.get_den() != 1)
        fail(Error::Kind::NotIntegral, "non-integer coefficient " + q.get_str() + " in " + r.str());
      mpz_class rem;
      mpz_class mod(r.p);
      mpz_fdiv_r(rem.get_mpz_t(), q.get_num().get_mpz_t(), mod.get_mpz_t());
      return mpq_class(rem);
    }
  }
  return q;
}

// Multiplicative inverse of c in the ring; fails when no inverse exists.
inline mpq_class ring_invert(const Ring& r, const mpq_class& c) {
  if (c == 0) fail(Error::Kind::NotIntegral, "division by zero coefficient");
  switch (r.tag) {
    case Ring::Tag::Rat:
      return ring_normalize(r, 1 / c);
    case Ring::Tag::Int:
      if (c == 1 || c == -1) return c;
      fail(Error::Kind::NotIntegral, "coefficient " + c.get_str() + " is not a unit in ZZ");
    case Ring::Tag::ModP: {
      mpz_class inv;
      mpz_class mod(r.p);
      if (mpz_invert(inv.get_mpz_t(), c.get_num().get_mpz_t(), mod.get_mpz_t()) == 0)
        fail(Error::Kind::NotIntegral, "coefficient " + c.get_str() + " is not a unit mod " +
                                           std::to_string(r.p));
      return mpq_class(inv);
    }
  }
  fail(Error::Kind::Internal, "unreachable");
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace aswc
