#include "aswc/prop31.hpp"

#include <algorithm>
#include <future>

namespace aswc {

namespace {

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

Prop31Report run_prop31(long p, long m_prime, const std::string& b1, bool with_brute_checks) {
  Prop31Report rep;
  rep.p = p;
  rep.m_prime = m_prime;
  rep.b1_name = b1;
  rep.exploratory = (p == 2);

  NormalizeResult un = normalize_example(p, m_prime, std::nullopt);
  NormalizeResult sh = normalize_example(p, m_prime, b1);
  rep.unshifted = un.tower;
  rep.shifted = sh.tower;
  rep.variable_adjustment = sh.notes.variable_adjustment;
  for (const auto& note : un.notes.display_mismatches) rep.display_mismatches.push_back(note);
  for (const auto& note : sh.notes.display_mismatches) {
    if (std::find(rep.display_mismatches.begin(), rep.display_mismatches.end(), note) ==
        rep.display_mismatches.end())
      rep.display_mismatches.push_back(note);
  }

  rep.fibre_1_unshifted = special_fibre(un.tower.level1);
  rep.fibre_1_shifted = special_fibre(sh.tower.level1);
  rep.fibre_2_unshifted = special_fibre(un.tower.level2);
  rep.fibre_2_shifted_raw = special_fibre(sh.tower.level2);

  // Express the shifted level-2 fibre over the unshifted base: s1 = t1 + b1
  // and a1 = t1^p.
  const Ring r = Ring::modp(p);
  std::map<std::string, Poly> base_change;
  base_change.emplace("s1", Poly::variable(r, "t1") + Poly::variable(r, b1));
  base_change.emplace("a1", Poly::variable(r, "t1", static_cast<int>(p)));
  rep.fibre_2_shifted = substitute(rep.fibre_2_shifted_raw, base_change);

  // Level 1 comparison lives over the plain base ring.
  FibreRingPtr base_ring = make_fibre_ring(p, {"a1", "a2", b1}, {});
  rep.level1_verdict = same_alpha_torsor(canonicalize(rep.fibre_1_unshifted, base_ring),
                                         canonicalize(rep.fibre_1_shifted, base_ring));

  // Level 2 comparison over B = F_p[a1,b1][t1] / (t1^p - a1).
  FibreRingPtr cover_ring =
      make_fibre_ring(p, {"a1", "a2", b1}, {{"t1", Poly::variable(r, "a1")}});
  QuotElem f2u = canonicalize(rep.fibre_2_unshifted, cover_ring);
  QuotElem f2s = canonicalize(rep.fibre_2_shifted, cover_ring);
  rep.difference = f2s - f2u;
  rep.level2_verdict = same_alpha_torsor(f2u, f2s);

  bool obstructed = rep.level1_verdict.is_pth_power && !rep.level2_verdict.is_pth_power;
  rep.conclusion = obstructed ? "TORSOR_OBSTRUCTED" : "NO_OBSTRUCTION_FOUND";

  if (with_brute_checks && !rep.level2_verdict.is_pth_power) {
    // Confirm the obstruction component-by-component: each nonzero t1^i
    // piece (i >= 1) of the difference must itself fail to be a p-th power.
    for (const auto& [idx, coeff] : rep.difference.coeffs()) {
      if (idx[0] == 0) continue;
      Poly elem = coeff * Poly::variable(r, "t1", idx[0]);
      int bound = 0;
      for (const auto& v : variables(coeff))
        bound = std::max(bound, static_cast<int>(floor_div(deg_in(coeff, v), p)));
      BruteResult br = brute_force_member(canonicalize(elem, cover_ring), bound);
      rep.brute_checks.push_back(
          BruteCheck{idx[0], bound, br.candidates, br.verdict.is_pth_power});
    }
  }
  return rep;
}

std::string render_text(const Prop31Report& rep) {
  std::string s;
  s += "p = " + std::to_string(rep.p) + ", m' = " + std::to_string(rep.m_prime) +
       (rep.exploratory ? "  [exploratory: the obstruction claim needs p > 2]" : "") + "\n";
  s += "equations (unshifted):\n";
  s += "  " + rep.unshifted.level1.render() + "\n";
  s += "  " + rep.unshifted.level2.render() + "\n";
  s += "equations (shifted by the coboundary of (pi^-" + std::to_string(rep.shifted.params.m) +
       "*" + rep.b1_name + ", 0)):\n";
  s += "  " + rep.shifted.level1.render() + "\n";
  s += "  " + rep.shifted.level2.render() + "\n";
  if (!rep.variable_adjustment.empty())
    s += "  variable adjustment: " + rep.variable_adjustment + "\n";
  s += "special fibres:\n";
  s += "  t1^" + std::to_string(rep.p) + " = " + render(rep.fibre_1_unshifted) + "\n";
  s += "  s1^" + std::to_string(rep.p) + " = " + render(rep.fibre_1_shifted) + "\n";
  s += "  t2^" + std::to_string(rep.p) + " = " + render(rep.fibre_2_unshifted) + "\n";
  s += "  s2^" + std::to_string(rep.p) + " = " + render(rep.fibre_2_shifted_raw) + "\n";
  s += "  s2^" + std::to_string(rep.p) + " = " + render(rep.fibre_2_shifted) +
       "   (over the unshifted base, s1 = t1 + " + rep.b1_name + ", a1 = t1^" +
       std::to_string(rep.p) + ")\n";
  s += "difference (level 2, canonical): " + render(rep.difference) + "\n";
  s += "level-1 verdict: " +
       std::string(rep.level1_verdict.is_pth_power ? "same torsor, witness " +
                                                         render(*rep.level1_verdict.witness)
                                                   : "NOT the same torsor: " +
                                                         rep.level1_verdict.obstruction) +
       "\n";
  s += "level-2 verdict: " +
       std::string(rep.level2_verdict.is_pth_power ? "same torsor, witness " +
                                                         render(*rep.level2_verdict.witness)
                                                   : "NOT the same torsor: " +
                                                         rep.level2_verdict.obstruction) +
       "\n";
  for (const auto& bc : rep.brute_checks) {
    s += "brute-force check at t1^" + std::to_string(bc.component) + " (bound " +
         std::to_string(bc.bound) + ", " + std::to_string(bc.candidates) + " assignments): " +
         (bc.is_pth_power ? "p-th power" : "not a p-th power") + "\n";
  }
  s += "conclusion: " + rep.conclusion + "\n";
  if (!rep.display_mismatches.empty()) {
    s += "display mismatches:\n";
    for (const auto& note : rep.display_mismatches) s += "  - " + note + "\n";
  }
  return s;
}

nlohmann::ordered_json render_json(const Prop31Report& rep) {
  using json = nlohmann::ordered_json;
  json j;
  j["p"] = rep.p;
  j["m_prime"] = rep.m_prime;
  j["exploratory"] = rep.exploratory;
  j["equations"] = {
      {"unshifted",
       {{"level1", rep.unshifted.level1.render()}, {"level2", rep.unshifted.level2.render()}}},
      {"shifted",
       {{"level1", rep.shifted.level1.render()},
        {"level2", rep.shifted.level2.render()},
        {"variable_adjustment", rep.variable_adjustment}}},
  };
  j["fibres"] = {
      {"level1_unshifted", render(rep.fibre_1_unshifted)},
      {"level1_shifted", render(rep.fibre_1_shifted)},
      {"level2_unshifted", render(rep.fibre_2_unshifted)},
      {"level2_shifted_raw", render(rep.fibre_2_shifted_raw)},
      {"level2_shifted", render(rep.fibre_2_shifted)},
  };
  j["difference"] = render(rep.difference);
  auto verdict_json = [](const PthPowerVerdict& v) {
    json w;
    w["is_pth_power"] = v.is_pth_power;
    if (v.witness)
      w["witness"] = render(*v.witness);
    else
      w["witness"] = nullptr;
    if (v.obstruction.empty())
      w["obstruction"] = nullptr;
    else
      w["obstruction"] = v.obstruction;
    return w;
  };
  j["verdicts"] = {{"level1", verdict_json(rep.level1_verdict)},
                   {"level2", verdict_json(rep.level2_verdict)}};
  json checks = json::array();
  for (const auto& bc : rep.brute_checks)
    checks.push_back({{"component", bc.component},
                      {"bound", bc.bound},
                      {"candidates", bc.candidates},
                      {"is_pth_power", bc.is_pth_power}});
  j["verdicts"]["level2_brute_checks"] = checks;
  j["conclusion"] = rep.conclusion;
  j["display_mismatches"] = rep.display_mismatches;
  return j;
}

std::vector<Prop31Report> run_prop31_sweep(const std::vector<long>& ps,
                                           const std::vector<long>& m_primes) {
  std::vector<std::future<Prop31Report>> futs;
  for (long p : ps)
    for (long m : m_primes)
      futs.push_back(std::async(std::launch::async, [p, m] { return run_prop31(p, m); }));
  std::vector<Prop31Report> out;
  out.reserve(futs.size());
  for (auto& f : futs) out.push_back(f.get());
  return out;
}

}  // namespace aswc
