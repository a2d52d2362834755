// aswcover: exact Artin-Schreier-Witt cover calculator.
//
// Subcommands mirror the library layers: Witt arithmetic, tower building and
// coboundary shifts, integral-model normalization, alpha_p membership, the
// exhaustive root oracle, and the full rank-p^2 example pipeline.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "aswc/prop31.hpp"

using namespace aswc;

namespace {

Ring ring_from_flag(const std::string& name, long p) {
  if (name == "int") return Ring::integers();
  if (name == "rat") return Ring::rationals();
  if (name == "modp") return Ring::modp(p);
  fail(Error::Kind::Parse, "unknown ring '" + name + "' (expected int, rat, or modp)");
}

FibreRingPtr ring_for_element(long p, const Poly& elem, const std::string& root,
                              const std::string& relation_var) {
  std::vector<std::string> base;
  for (const auto& v : variables(elem))
    if (v != root) base.push_back(v);
  if (!relation_var.empty() &&
      std::find(base.begin(), base.end(), relation_var) == base.end())
    base.push_back(relation_var);
  std::vector<FibreRing::Root> roots;
  if (!root.empty()) {
    if (relation_var.empty())
      fail(Error::Kind::Parse, "--root needs --relation <base variable>");
    roots.push_back({root, Poly::variable(Ring::modp(p), relation_var)});
  }
  return make_fibre_ring(p, base, roots);
}

void print_verdict(const PthPowerVerdict& v) {
  nlohmann::ordered_json j;
  j["is_pth_power"] = v.is_pth_power;
  if (v.witness)
    j["witness"] = render(*v.witness);
  else
    j["witness"] = nullptr;
  if (v.obstruction.empty())
    j["obstruction"] = nullptr;
  else
    j["obstruction"] = v.obstruction;
  std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Artin-Schreier-Witt cover calculator"};
  app.require_subcommand(1);

  // --- witt -----------------------------------------------------------
  auto* witt = app.add_subcommand("witt", "truncated Witt vector arithmetic");
  witt->require_subcommand(1);
  long wp = 3;
  int wn = 1;
  std::string wring = "int";
  std::vector<std::string> wvecs;
  for (const char* op : {"add", "neg", "sub", "frobenius", "fmid"}) {
    auto* sub = witt->add_subcommand(op);
    sub->add_option("--p", wp, "prime")->required();
    sub->add_option("--n", wn, "length")->required();
    sub->add_option("--ring", wring, "coefficient ring: int, rat, modp (default int)");
    sub->add_option("vectors", wvecs, "Witt vectors, e.g. \"(x0, x1)\"")->expected(1, 2);
  }

  // --- asw ------------------------------------------------------------
  auto* asw = app.add_subcommand("asw", "tower equations and coboundary shifts");
  asw->require_subcommand(1);
  long ap = 3;
  int an = 2;
  std::vector<std::string> avecs;
  for (const char* op : {"tower", "shift"}) {
    auto* sub = asw->add_subcommand(op);
    sub->add_option("--p", ap, "prime")->required();
    sub->add_option("--n", an, "length")->required();
    sub->add_option("vectors", avecs, "Witt vectors over GF(p)")->expected(1, 2);
  }

  // --- model ----------------------------------------------------------
  auto* model = app.add_subcommand("model", "integral models of the example cover");
  model->require_subcommand(1);
  long mp = 3, mmp = 1;
  std::string mb1;
  int mlevel = 0;
  for (const char* op : {"normalize", "fibre"}) {
    auto* sub = model->add_subcommand(op);
    sub->add_option("--p", mp, "prime")->required();
    sub->add_option("--mprime", mmp, "m'")->required();
    sub->add_option("--b1", mb1, "apply the coboundary shift by (pi^-m b1, 0)");
    if (std::string(op) == "fibre")
      sub->add_option("--level", mlevel, "level to reduce (1 or 2; default both)");
  }

  // --- alphap ---------------------------------------------------------
  auto* alphap = app.add_subcommand("alphap", "alpha_p torsor decisions on fibres");
  alphap->require_subcommand(1);
  long fp = 3;
  std::string froot = "t1", frel = "a1";
  std::vector<std::string> felems;
  for (const char* op : {"member", "same"}) {
    auto* sub = alphap->add_subcommand(op);
    sub->add_option("--p", fp, "prime")->required();
    sub->add_option("--root", froot, "adjoined root variable (default t1; empty for none)");
    sub->add_option("--relation", frel, "base variable a with root^p = a (default a1)");
    sub->add_option("elements", felems, "fibre elements")
        ->expected(std::string(op) == "same" ? 2 : 1);
  }

  // --- oracle ---------------------------------------------------------
  auto* oracle = app.add_subcommand("oracle", "exhaustive p-th root search");
  auto* pth = oracle->add_subcommand("pthpower");
  long op_p = 3;
  int op_bound = 2;
  std::string op_root, op_rel, op_elem;
  pth->add_option("--p", op_p, "prime")->required();
  pth->add_option("--bound", op_bound, "base-variable degree bound")->required();
  pth->add_option("--root", op_root, "adjoined root variable (optional)");
  pth->add_option("--relation", op_rel, "base variable with root^p = relation");
  pth->add_option("element", op_elem, "element to test")->required();

  // --- example --------------------------------------------------------
  auto* example = app.add_subcommand("example", "the rank-p^2 cover verification");
  auto* prop = example->add_subcommand("prop31");
  long ep = 3, emp = 1;
  std::string eb1 = "b1";
  bool ejson = false, esweep = false;
  prop->add_option("--p", ep, "prime")->required();
  prop->add_option("--mprime", emp, "m'")->required();
  prop->add_option("--b1", eb1, "name of the shift variable (default b1)");
  prop->add_flag("--json", ejson, "emit the JSON report");
  prop->add_flag("--sweep", esweep, "run the full (p, m') grid as well");

  CLI11_PARSE(app, argc, argv);

  try {
    if (witt->parsed()) {
      Ring r = ring_from_flag(wring, wp);
      auto* sub = witt->get_subcommands().front();
      const std::string op = sub->get_name();
      if ((op == "add" || op == "sub") && wvecs.size() != 2)
        fail(Error::Kind::Parse, op + " needs two vectors");
      if ((op == "neg" || op == "frobenius" || op == "fmid") && wvecs.size() != 1)
        fail(Error::Kind::Parse, op + " needs one vector");
      WittVec u = parse_witt(r, wp, wvecs[0]);
      if (u.n() != wn) fail(Error::Kind::Parse, "vector length disagrees with --n");
      WittVec out = u;
      if (op == "add" || op == "sub") {
        WittVec v = parse_witt(r, wp, wvecs[1]);
        out = op == "add" ? witt_add(u, v) : witt_sub(u, v);
      } else if (op == "neg") {
        out = witt_neg(u);
      } else if (op == "frobenius") {
        out = frobenius(u);
      } else {
        out = f_minus_id(u);
      }
      std::cout << render(out) << "\n";
      return 0;
    }

    if (asw->parsed()) {
      Ring r = Ring::modp(ap);
      auto* sub = asw->get_subcommands().front();
      if (sub->get_name() == "tower") {
        if (avecs.size() != 1) fail(Error::Kind::Parse, "tower needs one vector");
        WittVec a = parse_witt(r, ap, avecs[0]);
        if (a.n() != an) fail(Error::Kind::Parse, "vector length disagrees with --n");
        std::cout << build_tower(a).render();
      } else {
        if (avecs.size() != 2) fail(Error::Kind::Parse, "shift needs two vectors");
        WittVec a = parse_witt(r, ap, avecs[0]);
        WittVec b = parse_witt(r, ap, avecs[1]);
        std::cout << render(shift_cocycle(a, b)) << "\n";
      }
      return 0;
    }

    if (model->parsed()) {
      auto* sub = model->get_subcommands().front();
      std::optional<std::string> b1;
      if (!mb1.empty()) b1 = mb1;
      NormalizeResult res = normalize_example(mp, mmp, b1);
      if (sub->get_name() == "normalize") {
        std::cout << res.tower.level1.render() << "\n" << res.tower.level2.render() << "\n";
        if (!res.notes.variable_adjustment.empty())
          std::cout << "variable adjustment: " << res.notes.variable_adjustment << "\n";
        for (const auto& note : res.notes.display_mismatches)
          std::cout << "note: " << note << "\n";
      } else {
        if (mlevel == 0 || mlevel == 1)
          std::cout << res.tower.level1.var << "^" << mp << " = "
                    << render(special_fibre(res.tower.level1)) << "\n";
        if (mlevel == 0 || mlevel == 2)
          std::cout << res.tower.level2.var << "^" << mp << " = "
                    << render(special_fibre(res.tower.level2)) << "\n";
      }
      return 0;
    }

    if (alphap->parsed()) {
      auto* sub = alphap->get_subcommands().front();
      Ring r = Ring::modp(fp);
      Poly first = parse_poly(r, felems[0]);
      if (sub->get_name() == "member") {
        auto ring = ring_for_element(fp, first, froot, frel);
        print_verdict(frobenius_image_member(canonicalize(first, ring)));
      } else {
        Poly second = parse_poly(r, felems[1]);
        auto ring = ring_for_element(fp, first + second, froot, frel);
        print_verdict(
            same_alpha_torsor(canonicalize(first, ring), canonicalize(second, ring)));
      }
      return 0;
    }

    if (oracle->parsed()) {
      Ring r = Ring::modp(op_p);
      Poly elem = parse_poly(r, op_elem);
      auto ring = ring_for_element(op_p, elem, op_root, op_rel);
      BruteResult br = brute_force_member(canonicalize(elem, ring), op_bound);
      std::cout << "candidates: " << br.candidates << "\n";
      print_verdict(br.verdict);
      return 0;
    }

    if (example->parsed()) {
      std::vector<Prop31Report> reports;
      if (esweep) {
        reports = run_prop31_sweep({2, 3, 5, 7}, {1, 2});
      } else {
        reports.push_back(run_prop31(ep, emp, eb1));
      }
      for (const auto& rep : reports) {
        if (ejson)
          std::cout << render_json(rep).dump(2) << "\n";
        else
          std::cout << render_text(rep) << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
