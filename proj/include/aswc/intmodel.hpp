#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aswc/asw.hpp"

namespace aswc {

// X^p - pi^((p-1)*n_twist) * X = rhs.  n_twist = 0 is the etale case.
struct CoverEquation {
  std::string var;
  long p = 0;
  long n_twist = 0;
  Poly rhs;

  long twist_exp() const { return (p - 1) * n_twist; }
  std::string render() const;
};

// m = p*m' and mt = m'*(p*(p-1)+1); the exponents that make both levels of
// the example integral. For 1 <= k <= p-1,
//   mt*p - m*(p*k + p - k) = p*m'*(p-1)*(p-1-k) >= 0, zero exactly at k = p-1.
struct RescaleParams {
  long p = 0;
  long m_prime = 0;
  long m = 0;
  long m_tilde = 0;

  static RescaleParams make(long p, long m_prime);
  long level2_pi_exponent(long k) const { return m_tilde * p - m * (p * k + p - k); }
};

struct CoverTower2 {
  CoverEquation level1;
  CoverEquation level2;
  RescaleParams params;
  WittVec provenance;
};

// Diagnostics gathered while normalizing: divergences between the derived
// polynomials and the printed variants, the absorbed non-integral slice of
// the shifted level-2 equation, and minimal-rescale hints.
struct NormalizeNotes {
  std::vector<std::string> display_mismatches;
  std::string variable_adjustment;          // empty when no absorption happened
  std::optional<Poly> absorbed_slice;       // the dropped pi^{-m(p-1)} slice
  std::optional<Poly> absorption_root;      // W with W^p = pi^{m(p-1)} * slice
  long min_rescale_level1 = 0;
  long min_rescale_level2 = 0;
};

struct NormalizeResult {
  CoverTower2 tower;
  NormalizeNotes notes;
};

// a + b^p - pi^((p-1)*n_twist) * b: the coset ambiguity of an M_n equation.
Poly mn_shift(const Poly& a, const Poly& b, long p, long n_twist);

// T^p - T = rhs  ->  Tt^p - pi^(m(p-1)) Tt = pi^(pm) rhs under Tt = pi^m T.
// Also returns the substitution old_var -> pi^(-m) * new_var for downstream use.
std::pair<CoverEquation, std::map<std::string, Poly>> rescale_level(const CoverEquation& eq,
                                                                    long m,
                                                                    const std::string& new_var);

// The worked example: Witt vector (pi^(-pm) a1, a2) over GF(p), optionally
// shifted by the coboundary of (pi^(-m) b1, 0), tower built, level 1 rescaled
// by m and level 2 by mt, both certified integral.  Unshifted level-1/2
// variables are t1/t2; shifted ones s1/s2.
NormalizeResult normalize_example(long p, long m_prime, const std::optional<std::string>& b1,
                                  const std::string& a1 = "a1", const std::string& a2 = "a2");

// Reduction mod pi of an integral twisted equation; the fibre is t^p = result.
Poly special_fibre(const CoverEquation& eq);

}  // namespace aswc
