#pragma once

#include <string>
#include <vector>

#include "aswc/alphap.hpp"
#include "aswc/intmodel.hpp"

#include "json.hpp"

namespace aswc {

struct BruteCheck {
  int component = 0;  // t1-exponent the check ran on
  int bound = 0;
  unsigned long long candidates = 0;
  bool is_pth_power = false;
};

// Full verification record for the rank-p^2 example at (p, m').
struct Prop31Report {
  long p = 0;
  long m_prime = 0;
  std::string b1_name = "b1";
  bool exploratory = false;  // p = 2 runs carry no obstruction claim

  CoverTower2 unshifted;
  CoverTower2 shifted;

  Poly fibre_1_unshifted;    // abar1
  Poly fibre_1_shifted;      // abar1 + bbar1^p
  Poly fibre_2_unshifted;    // -t1^(p(p-1)+1)
  Poly fibre_2_shifted_raw;  // in s1 before the base change
  Poly fibre_2_shifted;      // after s1 -> t1 + b1, a1 -> t1^p

  QuotElem difference;  // canonical in F_p[a1,b1][t1]/(t1^p - a1)
  PthPowerVerdict level1_verdict;
  PthPowerVerdict level2_verdict;
  std::vector<BruteCheck> brute_checks;

  std::string conclusion;  // TORSOR_OBSTRUCTED or NO_OBSTRUCTION_FOUND
  std::vector<std::string> display_mismatches;
  std::string variable_adjustment;

  Prop31Report() : difference(nullptr) {}
};

Prop31Report run_prop31(long p, long m_prime, const std::string& b1 = "b1",
                        bool with_brute_checks = true);

std::string render_text(const Prop31Report& rep);
nlohmann::ordered_json render_json(const Prop31Report& rep);

// Deterministic sweep over a (p, m') grid; cells run concurrently and are
// reported in grid order.
std::vector<Prop31Report> run_prop31_sweep(const std::vector<long>& ps,
                                           const std::vector<long>& m_primes);

}  // namespace aswc
