#include "aswc/alphap.hpp"

#include <algorithm>

namespace aswc {

bool FibreRing::is_base_var(const std::string& v) const {
  return std::find(base_vars.begin(), base_vars.end(), v) != base_vars.end();
}

int FibreRing::root_index(const std::string& v) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].name == v) return static_cast<int>(i);
  return -1;
}

void FibreRing::validate() const {
  if (!is_prime(p)) fail(Error::Kind::ShapeMismatch, "fibre ring needs a prime p");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const auto& root = roots[i];
    if (is_base_var(root.name) || root_index(root.name) != static_cast<int>(i))
      fail(Error::Kind::ShapeMismatch, "root name '" + root.name + "' collides");
    require_same_ring(root.relation.ring(), coeff_ring(), "FibreRing");
    for (const auto& v : variables(root.relation)) {
      if (v == kPi) fail(Error::Kind::ShapeMismatch, "fibre relations must be pi-free");
      int idx = root_index(v);
      if (!is_base_var(v) && (idx < 0 || idx >= static_cast<int>(i)))
        fail(Error::Kind::ShapeMismatch,
             "relation for '" + root.name + "' uses unknown variable '" + v + "'");
    }
  }
}

FibreRingPtr make_fibre_ring(long p, std::vector<std::string> base_vars,
                             std::vector<FibreRing::Root> roots) {
  auto ring = std::make_shared<FibreRing>();
  ring->p = p;
  ring->base_vars = std::move(base_vars);
  ring->roots = std::move(roots);
  ring->validate();
  return ring;
}

void QuotElem::add(const std::vector<int>& idx, const Poly& coeff) {
  if (idx.size() != ring_->roots.size())
    fail(Error::Kind::ShapeMismatch, "root multi-index has wrong height");
  for (int e : idx)
    if (e < 0 || e >= ring_->p) fail(Error::Kind::ShapeMismatch, "root exponent out of range");
  auto it = c_.find(idx);
  if (it == c_.end()) {
    if (!coeff.is_zero()) c_.emplace(idx, coeff);
    return;
  }
  Poly s = it->second + coeff;
  if (s.is_zero())
    c_.erase(it);
  else
    it->second = s;
}

Poly QuotElem::component(const std::vector<int>& idx) const {
  auto it = c_.find(idx);
  return it == c_.end() ? Poly::zero(ring_->coeff_ring()) : it->second;
}

Poly QuotElem::to_poly() const {
  Poly f(ring_->coeff_ring());
  for (const auto& [idx, coeff] : c_) {
    Poly term = coeff;
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (idx[j] != 0) term = term * Poly::variable(f.ring(), ring_->roots[j].name, idx[j]);
    f = f + term;
  }
  return f;
}

bool QuotElem::operator==(const QuotElem& o) const {
  return ring_->p == o.ring_->p && c_ == o.c_;
}

namespace {

void require_same_fibre_ring(const QuotElem& a, const QuotElem& b, const char* where) {
  const FibreRing& ra = *a.ring();
  const FibreRing& rb = *b.ring();
  bool same = ra.p == rb.p && ra.base_vars == rb.base_vars && ra.roots.size() == rb.roots.size();
  if (same)
    for (std::size_t i = 0; i < ra.roots.size(); ++i)
      same = same && ra.roots[i].name == rb.roots[i].name &&
             ra.roots[i].relation == rb.roots[i].relation;
  if (!same) fail(Error::Kind::RingMismatch, std::string(where) + ": fibre rings differ");
}

}  // namespace

QuotElem operator+(const QuotElem& a, const QuotElem& b) {
  require_same_fibre_ring(a, b, "quot_add");
  QuotElem r = a;
  for (const auto& [idx, coeff] : b.coeffs()) r.add(idx, coeff);
  return r;
}

QuotElem operator-(const QuotElem& a, const QuotElem& b) {
  require_same_fibre_ring(a, b, "quot_sub");
  QuotElem r = a;
  for (const auto& [idx, coeff] : b.coeffs()) r.add(idx, -coeff);
  return r;
}

std::string render(const QuotElem& v) { return render(v.to_poly()); }

QuotElem canonicalize(const Poly& expr, const FibreRingPtr& ring) {
  ring->validate();
  require_same_ring(expr.ring(), ring->coeff_ring(), "canonicalize");
  for (const auto& v : variables(expr))
    if (!ring->is_base_var(v) && ring->root_index(v) < 0)
      fail(Error::Kind::UnknownVariable, "canonicalize: variable '" + v + "' not in the ring");

  const long p = ring->p;
  const int h = static_cast<int>(ring->roots.size());
  QuotElem out(ring);

  // Work queue of (monomial, coefficient); rewrite the highest root first so
  // relation powers (which may raise lower roots) are handled on requeue.
  std::vector<std::pair<Monomial, mpq_class>> queue(expr.terms().begin(), expr.terms().end());
  while (!queue.empty()) {
    auto [m, c] = queue.back();
    queue.pop_back();
    bool rewritten = false;
    for (int j = h - 1; j >= 0 && !rewritten; --j) {
      int e = m.exp(ring->roots[j].name);
      if (e < p) continue;
      int q = e / static_cast<int>(p), rem = e % static_cast<int>(p);
      Poly rest(expr.ring());
      rest.add_term(m.times(Monomial::var(ring->roots[j].name, rem - e)), c);
      Poly replaced = rest * poly_pow(ring->roots[j].relation, q);
      for (const auto& [mm, cc] : replaced.terms()) queue.emplace_back(mm, cc);
      rewritten = true;
    }
    if (rewritten) continue;
    std::vector<int> idx(h, 0);
    Monomial base;
    for (const auto& [v, e] : m.exps()) {
      int j = ring->root_index(v);
      if (j >= 0)
        idx[j] = e;
      else
        base = base.times(Monomial::var(v, e));
    }
    Poly coeff(expr.ring());
    coeff.add_term(base, c);
    out.add(idx, coeff);
  }
  return out;
}

namespace {

// v as sum_i c_i t^i over the single root t with relation the indeterminate a.
PthPowerVerdict decide_height1(const QuotElem& v, const std::string& a_name) {
  const FibreRing& ring = *v.ring();
  const long p = ring.p;
  PthPowerVerdict verdict;

  for (const auto& [idx, coeff] : v.coeffs()) {
    if (idx[0] >= 1) {
      verdict.is_pth_power = false;
      verdict.obstruction = "nonzero component " + render(coeff) + " at " + ring.roots[0].name +
                            "^" + std::to_string(idx[0]);
      return verdict;
    }
  }

  // t^0 component: split by a-exponent mod p; class i must be a^i times a
  // polynomial with every exponent divisible by p.
  Poly c0 = v.component(std::vector<int>{0});
  QuotElem witness(v.ring());
  std::map<int, Poly> classes;
  for (const auto& [m, c] : c0.terms()) {
    int cls = m.exp(a_name) % static_cast<int>(p);
    Poly piece(c0.ring());
    piece.add_term(m.times(Monomial::var(a_name, -cls)), c);
    auto it = classes.find(cls);
    if (it == classes.end())
      classes.emplace(cls, piece);
    else
      it->second = it->second + piece;
  }
  for (const auto& [cls, w] : classes) {
    for (const auto& [m, c] : w.terms()) {
      for (const auto& [var, e] : m.exps()) {
        if (e % p != 0) {
          verdict.is_pth_power = false;
          verdict.obstruction = "t^0 component, a-class " + std::to_string(cls) + ": exponent of " +
                                var + " in " + render(m) + " not divisible by " + std::to_string(p);
          return verdict;
        }
      }
    }
    witness.add(std::vector<int>{cls}, pth_power_root(w));
  }
  verdict.is_pth_power = true;
  verdict.witness = witness;
  return verdict;
}

PthPowerVerdict decide_height0(const QuotElem& v) {
  const long p = v.ring()->p;
  PthPowerVerdict verdict;
  Poly c0 = v.component(std::vector<int>{});
  for (const auto& [m, c] : c0.terms()) {
    for (const auto& [var, e] : m.exps()) {
      if (e % p != 0) {
        verdict.is_pth_power = false;
        verdict.obstruction =
            "exponent of " + var + " in " + render(m) + " not divisible by " + std::to_string(p);
        return verdict;
      }
    }
  }
  verdict.is_pth_power = true;
  QuotElem witness(v.ring());
  witness.add(std::vector<int>{}, pth_power_root(c0));
  verdict.witness = witness;
  return verdict;
}

}  // namespace

PthPowerVerdict frobenius_image_member(const QuotElem& v) {
  const FibreRing& ring = *v.ring();
  if (ring.roots.empty()) {
    PthPowerVerdict verdict = decide_height0(v);
    if (verdict.is_pth_power) {
      QuotElem check = canonicalize(poly_pow(verdict.witness->to_poly(), ring.p), v.ring());
      if (!(check == v)) fail(Error::Kind::Internal, "witness re-verification failed");
    }
    return verdict;
  }
  if (ring.roots.size() > 1)
    fail(Error::Kind::UnsupportedRing, "membership decision supports height <= 1");
  const Poly& rel = ring.roots[0].relation;
  // Relation must be a single independent base indeterminate.
  std::string a_name;
  if (rel.term_count() == 1) {
    const auto& [m, c] = *rel.terms().begin();
    if (c == 1 && m.exps().size() == 1) {
      const auto& [var, e] = *m.exps().begin();
      if (e == 1 && ring.is_base_var(var)) a_name = var;
    }
  }
  if (a_name.empty())
    fail(Error::Kind::UnsupportedRing,
         "membership decision needs the relation to be an independent indeterminate");
  PthPowerVerdict verdict = decide_height1(v, a_name);
  if (verdict.is_pth_power) {
    QuotElem check = canonicalize(poly_pow(verdict.witness->to_poly(), ring.p), v.ring());
    if (!(check == v)) fail(Error::Kind::Internal, "witness re-verification failed");
  }
  return verdict;
}

PthPowerVerdict same_alpha_torsor(const QuotElem& a, const QuotElem& a_shifted) {
  require_same_fibre_ring(a, a_shifted, "same_alpha_torsor");
  return frobenius_image_member(a_shifted - a);
}

BruteResult brute_force_member(const QuotElem& v, int degree_bound, unsigned long long budget) {
  const FibreRing& ring = *v.ring();
  if (ring.roots.size() > 1)
    fail(Error::Kind::UnsupportedRing, "brute_force_member supports height <= 1");
  const long p = ring.p;
  const Ring cr = ring.coeff_ring();

  // Base variables that occur in v (a root of g^p = v cannot involve others:
  // distinct candidate monomials keep distinct p-th powers, so every monomial
  // of g must map into the support of v).
  std::set<std::string> vs;
  for (const auto& [idx, coeff] : v.coeffs())
    for (const auto& x : variables(coeff)) vs.insert(x);
  std::vector<std::string> base(vs.begin(), vs.end());

  // Candidate monomials within the degree bound.
  std::vector<Monomial> all;
  std::vector<int> degs(base.size(), 0);
  int max_root = ring.roots.empty() ? 1 : static_cast<int>(p);
  while (true) {
    for (int rexp = 0; rexp < max_root; ++rexp) {
      Monomial m;
      for (std::size_t i = 0; i < base.size(); ++i)
        if (degs[i]) m = m.times(Monomial::var(base[i], degs[i]));
      if (!ring.roots.empty() && rexp) m = m.times(Monomial::var(ring.roots[0].name, rexp));
      all.push_back(m);
    }
    std::size_t i = 0;
    for (; i < degs.size(); ++i) {
      if (degs[i] < degree_bound) {
        ++degs[i];
        break;
      }
      degs[i] = 0;
    }
    if (i == degs.size()) break;
  }

  // Enumerate the full bounded assignment space when it fits the budget.
  // Otherwise, if the relation is an independent indeterminate (or there is
  // no root), distinct slots keep distinct single-monomial p-th powers, so a
  // slot whose image misses the support of v can never take part in a root;
  // that provably root-free region is excluded and the rest enumerated.
  auto assignments_of = [&](std::size_t n_slots) -> unsigned long long {
    unsigned long long total = 1;
    for (std::size_t i = 0; i < n_slots; ++i) {
      if (total > budget / static_cast<unsigned long long>(p)) return 0;  // overflows budget
      total *= static_cast<unsigned long long>(p);
    }
    return total;
  };

  bool single_monomial_images = ring.roots.empty();
  if (!single_monomial_images) {
    const Poly& rel = ring.roots[0].relation;
    if (rel.term_count() == 1) {
      const auto& [m, c] = *rel.terms().begin();
      single_monomial_images = c == 1 && m.exps().size() == 1 &&
                               m.exps().begin()->second == 1 &&
                               ring.is_base_var(m.exps().begin()->first);
    }
  }

  QuotElem vc = v;  // already canonical by construction of QuotElem
  std::vector<std::pair<Monomial, QuotElem>> slots;
  for (const auto& m : all) {
    Poly mp(cr);
    mp.add_term(m.pow(static_cast<int>(p)), 1);
    slots.emplace_back(m, canonicalize(mp, v.ring()));
  }

  unsigned long long total = assignments_of(slots.size());
  if (total == 0 && single_monomial_images) {
    std::vector<std::pair<Monomial, QuotElem>> kept;
    for (const auto& slot : slots) {
      bool usable = true;
      for (const auto& [idx, coeff] : slot.second.coeffs()) {
        Poly target = vc.component(idx);
        for (const auto& [mm, cc] : coeff.terms())
          usable = usable && target.coeff(mm) != 0;
      }
      if (usable) kept.push_back(slot);
    }
    slots.swap(kept);
    total = assignments_of(slots.size());
  }
  if (total == 0)
    fail(Error::Kind::SearchSpaceTooLarge,
         "brute_force_member: " + std::to_string(slots.size()) +
             " candidate monomials exceed the budget of " + std::to_string(budget) +
             " assignments");

  BruteResult result;
  result.slot_count = slots.size();
  result.candidates = total;

  std::vector<int> assign(slots.size(), 0);
  while (true) {
    QuotElem g_p(v.ring());
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (assign[i] == 0) continue;
      for (const auto& [idx, coeff] : slots[i].second.coeffs())
        g_p.add(idx, mpq_class(assign[i]) * coeff);
    }
    if (g_p == vc) {
      Poly g(cr);
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (assign[i]) g.add_term(slots[i].first, assign[i]);
      result.verdict.is_pth_power = true;
      QuotElem w = canonicalize(g, v.ring());
      result.verdict.witness = w;
      return result;
    }
    std::size_t i = 0;
    for (; i < slots.size(); ++i) {
      if (assign[i] < p - 1) {
        ++assign[i];
        break;
      }
      assign[i] = 0;
    }
    if (i == slots.size()) break;
  }
  result.verdict.is_pth_power = false;
  result.verdict.obstruction = "no p-th root among " + std::to_string(total) +
                               " candidate assignments over " + std::to_string(slots.size()) +
                               " monomials";
  return result;
}

}  // namespace aswc
