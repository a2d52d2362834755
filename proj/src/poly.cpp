#include "aswc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace aswc {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::var(const std::string& name, int e) {
  Monomial m;
  m.set(name, e);
  return m;
}

Monomial Monomial::pi_power(int e) { return var(kPi, e); }

int Monomial::exp(const std::string& name) const {
  auto it = e_.find(name);
  return it == e_.end() ? 0 : it->second;
}

int Monomial::grade() const {
  int g = 0;
  for (const auto& [v, e] : e_)
    if (v != kPi) g += e;
  return g;
}

void Monomial::set(const std::string& name, int e) {
  if (e == 0)
    e_.erase(name);
  else
    e_[name] = e;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r = *this;
  for (const auto& [v, e] : o.e_) r.set(v, r.exp(v) + e);
  return r;
}

Monomial Monomial::pow(int k) const {
  Monomial r;
  if (k == 0) return r;
  for (const auto& [v, e] : e_) r.set(v, e * k);
  return r;
}

Monomial Monomial::without_pi() const {
  Monomial r = *this;
  r.e_.erase(kPi);
  return r;
}

bool MonoBefore::operator()(const Monomial& a, const Monomial& b) const {
  int ga = a.grade(), gb = b.grade();
  if (ga != gb) return ga > gb;
  // Merge-scan the non-pi variables in reverse-alphabetical order.
  auto ia = a.exps().rbegin(), ea = a.exps().rend();
  auto ib = b.exps().rbegin(), eb = b.exps().rend();
  while (ia != ea || ib != eb) {
    while (ia != ea && ia->first == kPi) ++ia;
    while (ib != eb && ib->first == kPi) ++ib;
    if (ia == ea && ib == eb) break;
    if (ia == ea) return false;  // a ran out: a has 0 exp on b's larger var
    if (ib == eb) return true;
    if (ia->first != ib->first) {
      // The later-alphabet variable is scanned first; whoever holds it has a
      // positive exponent there while the other has zero.
      return ia->first > ib->first;
    }
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return a.pi_exp() < b.pi_exp();
}

// ---------------------------------------------------------------------------
// Poly construction

Poly Poly::constant(Ring r, const mpq_class& c) {
  Poly f(r);
  f.add_term(Monomial(), c);
  return f;
}

Poly Poly::variable(Ring r, const std::string& name, int e) {
  Poly f(r);
  f.add_term(Monomial::var(name, e), 1);
  return f;
}

Poly Poly::pi_power(Ring r, int e) { return variable(r, kPi, e); }

void Poly::add_term(const Monomial& m, const mpq_class& c) {
  for (const auto& [v, e] : m.exps())
    if (e < 0 && v != kPi)
      fail(Error::Kind::NegativeExponent,
           "negative exponent on variable '" + v + "' (only '" + kPi + "' may be Laurent)");
  mpq_class cc = ring_normalize(ring_, c);
  if (cc == 0) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, cc);
    return;
  }
  mpq_class s = ring_normalize(ring_, it->second + cc);
  if (s == 0)
    t_.erase(it);
  else
    it->second = s;
}

mpq_class Poly::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? mpq_class(0) : it->second;
}

// ---------------------------------------------------------------------------
// Arithmetic

Poly operator+(const Poly& f, const Poly& g) {
  require_same_ring(f.ring(), g.ring(), "poly_add");
  Poly r = f;
  for (const auto& [m, c] : g.terms()) r.add_term(m, c);
  return r;
}

Poly operator-(const Poly& f) {
  Poly r(f.ring());
  for (const auto& [m, c] : f.terms()) r.add_term(m, -c);
  return r;
}

Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }

Poly operator*(const Poly& f, const Poly& g) {
  require_same_ring(f.ring(), g.ring(), "poly_mul");
  Poly r(f.ring());
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms()) r.add_term(mf.times(mg), cf * cg);
  return r;
}

Poly operator*(const mpq_class& c, const Poly& f) {
  Poly r(f.ring());
  for (const auto& [m, cf] : f.terms()) r.add_term(m, c * cf);
  return r;
}

Poly poly_pow(const Poly& f, long e) {
  if (e < 0) fail(Error::Kind::NegativeExponent, "poly_pow: negative exponent");
  Poly acc = Poly::constant(f.ring(), 1);
  Poly base = f;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

// A binding usable at negative exponents: unit coefficient times a pi power.
struct UnitPiMonomial {
  mpq_class coeff;
  int pi_exp;
};

std::optional<UnitPiMonomial> as_unit_pi_monomial(const Poly& f) {
  if (f.term_count() != 1) return std::nullopt;
  const auto& [m, c] = *f.terms().begin();
  if (!m.without_pi().is_unit()) return std::nullopt;
  return UnitPiMonomial{c, m.pi_exp()};
}

}  // namespace

Poly substitute(const Poly& f, const std::map<std::string, Poly>& bindings) {
  for (const auto& [v, g] : bindings) {
    require_same_ring(f.ring(), g.ring(), "substitute");
    if (v == kPi && !as_unit_pi_monomial(g))
      fail(Error::Kind::NegativeExponent,
           "substitute: binding for '" + kPi + "' must be a unit constant times a pi power");
  }
  Poly result(f.ring());
  for (const auto& [m, c] : f.terms()) {
    Poly term = Poly::constant(f.ring(), c);
    for (const auto& [v, e] : m.exps()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        term = term * Poly::variable(f.ring(), v, e);
        continue;
      }
      const Poly& g = it->second;
      if (e >= 0) {
        term = term * poly_pow(g, e);
      } else {
        auto unit = as_unit_pi_monomial(g);
        if (!unit)
          fail(Error::Kind::NegativeExponent,
               "substitute: variable '" + v + "' at negative exponent needs an invertible binding");
        mpq_class c_inv = ring_invert(f.ring(), unit->coeff);
        Poly inv(f.ring());
        inv.add_term(Monomial::pi_power(-unit->pi_exp), c_inv);
        term = term * poly_pow(inv, -e);
      }
    }
    result = result + term;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Pi bookkeeping

std::optional<long> pi_valuation(const Poly& f) {
  if (f.is_zero()) return std::nullopt;
  long v = 0;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    long e = m.pi_exp();
    if (first || e < v) v = e;
    first = false;
  }
  return v;
}

Poly reduce_mod_pi(const Poly& f) {
  std::vector<std::string> offenders;
  for (const auto& [m, c] : f.terms())
    if (m.pi_exp() < 0) offenders.push_back(render(c) + "*" + render(m));
  if (!offenders.empty()) {
    std::string msg = "reduce_mod_pi: negative pi-valuation; offending terms:";
    for (const auto& s : offenders) msg += " " + s;
    fail(Error::Kind::NotIntegral, msg);
  }
  Poly r(f.ring());
  for (const auto& [m, c] : f.terms())
    if (m.pi_exp() == 0) r.add_term(m, c);
  return r;
}

Poly rationalize(const Poly& f) {
  if (f.ring().tag == Ring::Tag::Int) return f;
  if (f.ring().tag != Ring::Tag::Rat)
    fail(Error::Kind::RingMismatch, "rationalize expects a QQ polynomial");
  std::vector<std::string> fractional;
  for (const auto& [m, c] : f.terms())
    if (c.get_den() != 1) fractional.push_back(render(c) + "*" + render(m));
  if (!fractional.empty()) {
    std::string msg = "rationalize: fractional coefficients:";
    for (const auto& s : fractional) msg += " " + s;
    fail(Error::Kind::NotIntegral, msg);
  }
  Poly r(Ring::integers());
  for (const auto& [m, c] : f.terms()) r.add_term(m, c);
  return r;
}

Poly to_ring(const Poly& f, Ring target) {
  if (f.ring() == target) return f;
  Poly r(target);
  for (const auto& [m, c] : f.terms()) {
    if (target.tag == Ring::Tag::ModP && c.get_den() != 1) {
      mpq_class num(c.get_num());
      mpq_class inv = ring_invert(target, ring_normalize(target, mpq_class(c.get_den())));
      r.add_term(m, ring_normalize(target, num) * inv);
    } else {
      r.add_term(m, c);
    }
  }
  return r;
}

Poly pth_power_root(const Poly& f) {
  if (f.ring().tag != Ring::Tag::ModP)
    fail(Error::Kind::UnsupportedRing, "pth_power_root needs a GF(p) polynomial");
  long p = f.ring().p;
  Poly r(f.ring());
  for (const auto& [m, c] : f.terms()) {
    Monomial root;
    for (const auto& [v, e] : m.exps()) {
      if (e % p != 0)
        fail(Error::Kind::NotIntegral,
             "pth_power_root: exponent of '" + v + "' not divisible by " + std::to_string(p));
      root = root.times(Monomial::var(v, e / static_cast<int>(p)));
    }
    r.add_term(root, c);  // c^p = c in F_p
  }
  return r;
}

long deg_in(const Poly& f, const std::string& var) {
  long d = 0;
  for (const auto& [m, c] : f.terms()) d = std::max(d, static_cast<long>(m.exp(var)));
  return d;
}

std::set<std::string> variables(const Poly& f) {
  std::set<std::string> vs;
  for (const auto& [m, c] : f.terms())
    for (const auto& [v, e] : m.exps()) vs.insert(v);
  return vs;
}

// ---------------------------------------------------------------------------
// Rendering

std::string render(const mpq_class& c) { return c.get_str(); }

std::string render(const Monomial& m) {
  if (m.is_unit()) return "1";
  // Non-pi factors in reverse-alphabetical order, pi last.
  std::vector<std::pair<std::string, int>> factors;
  for (auto it = m.exps().rbegin(); it != m.exps().rend(); ++it)
    if (it->first != kPi) factors.emplace_back(it->first, it->second);
  if (int pe = m.pi_exp(); pe != 0) factors.emplace_back(kPi, pe);
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "*";
    s += factors[i].first;
    if (factors[i].second != 1) s += "^" + std::to_string(factors[i].second);
  }
  return s;
}

std::string render(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    mpq_class mag = c;
    bool neg = c < 0;
    if (neg) mag = -c;
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    s += mag.get_str();
    if (!m.is_unit()) s += "*" + render(m);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Parsing: poly := term (("+"|"-") term)*; term := factor ("*" factor)*;
// factor := var ["^" int] | number["/"number]. Whitespace is insignificant.

namespace {

struct Parser {
  Ring ring;
  const std::string& s;
  std::size_t i = 0;

  [[noreturn]] void err(const std::string& msg) const {
    fail(Error::Kind::Parse, "parse error at offset " + std::to_string(i) + ": " + msg);
  }

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool peek_var_start() const {
    return i < s.size() &&
           (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_');
  }

  std::string read_name() {
    std::size_t j = i;
    while (j < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
      ++j;
    std::string name = s.substr(i, j - i);
    i = j;
    return name;
  }

  mpz_class read_integer() {
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg = s[i] == '-';
      ++i;
    }
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) err("expected integer");
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    mpz_class z(s.substr(i, j - i));
    i = j;
    return neg ? mpz_class(-z) : z;
  }

  // One factor applied onto an accumulating term.
  void read_factor(Monomial& mono, mpq_class& coeff) {
    skip_ws();
    if (peek_var_start()) {
      std::string name = read_name();
      int e = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        mpz_class z = read_integer();
        if (!z.fits_sint_p()) err("exponent out of range");
        e = static_cast<int>(z.get_si());
      }
      if (e < 0 && name != kPi) err("negative exponent on non-" + kPi + " variable '" + name + "'");
      mono = mono.times(Monomial::var(name, e));
      return;
    }
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      mpz_class num = read_integer();
      skip_ws();
      if (i < s.size() && s[i] == '/') {
        ++i;
        mpz_class den = read_integer();
        if (den == 0) err("zero denominator");
        coeff *= mpq_class(num, den);
      } else {
        coeff *= mpq_class(num);
      }
      return;
    }
    err("expected variable or number");
  }

  Poly run() {
    Poly result(ring);
    skip_ws();
    if (i >= s.size()) err("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      } else if (!first) {
        break;
      }
      Monomial mono;
      mpq_class coeff(sign);
      read_factor(mono, coeff);
      skip_ws();
      while (i < s.size() && s[i] == '*') {
        ++i;
        read_factor(mono, coeff);
        skip_ws();
      }
      result.add_term(mono, coeff);
      first = false;
      skip_ws();
      if (i >= s.size()) break;
      if (s[i] != '+' && s[i] != '-') err("expected '+' or '-'");
    }
    skip_ws();
    if (i != s.size()) err("trailing input");
    return result;
  }
};

}  // namespace

Poly parse_poly(Ring r, const std::string& text) {
  Parser p{r, text};
  return p.run();
}

}  // namespace aswc
