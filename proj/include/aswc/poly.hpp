#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aswc/ring.hpp"

namespace aswc {

// Reserved name of the uniformizer; the only variable allowed negative exponents.
inline const std::string kPi = "pi";

// Power product of variables. Exponents are nonzero in the stored map; every
// variable is >= 0 except "pi", which may be negative (Laurent).
class Monomial {
 public:
  using Map = std::map<std::string, int>;

  Monomial() = default;

  static Monomial var(const std::string& name, int e = 1);
  static Monomial pi_power(int e);

  const Map& exps() const { return e_; }
  int exp(const std::string& name) const;
  int pi_exp() const { return exp(kPi); }
  bool is_unit() const { return e_.empty(); }

  // Total degree over the non-pi variables.
  int grade() const;

  Monomial times(const Monomial& o) const;
  Monomial pow(int k) const;  // k >= 0
  Monomial without_pi() const;

  bool operator==(const Monomial&) const = default;

 private:
  Map e_;
  friend class Poly;
  void set(const std::string& name, int e);
};

// Canonical term order: higher grade first; ties broken by exponents on the
// non-pi variables scanned in reverse-alphabetical order (higher exponent
// first); the pi exponent compares last, lower power first.
struct MonoBefore {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
 public:
  using Terms = std::map<Monomial, mpq_class, MonoBefore>;

  explicit Poly(Ring r = Ring::integers()) : ring_(r) {}

  static Poly zero(Ring r) { return Poly(r); }
  static Poly constant(Ring r, const mpq_class& c);
  static Poly constant(Ring r, long c) { return constant(r, mpq_class(c)); }
  static Poly variable(Ring r, const std::string& name, int e = 1);
  static Poly pi_power(Ring r, int e);

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }

  // Normalizing term insert: reduces the coefficient, erases zero, validates
  // that only pi carries negative exponents.
  void add_term(const Monomial& m, const mpq_class& c);

  mpq_class coeff(const Monomial& m) const;

  bool operator==(const Poly& o) const { return ring_ == o.ring_ && t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  Ring ring_;
  Terms t_;
};

Poly operator+(const Poly& f, const Poly& g);
Poly operator-(const Poly& f, const Poly& g);
Poly operator*(const Poly& f, const Poly& g);
Poly operator-(const Poly& f);
Poly operator*(const mpq_class& c, const Poly& f);
Poly poly_pow(const Poly& f, long e);

// Simultaneous substitution followed by canonicalization. A binding for "pi"
// must be a unit constant times a pi power so Laurent exponents stay defined.
Poly substitute(const Poly& f, const std::map<std::string, Poly>& bindings);

// Minimum pi-exponent over the terms; nullopt encodes +infinity (zero poly).
std::optional<long> pi_valuation(const Poly& f);

// Drops terms with positive pi-exponent and erases pi from the rest; the
// input must have pi_valuation >= 0.
Poly reduce_mod_pi(const Poly& f);

// Retags a QQ polynomial as ZZ when every coefficient is integral.
Poly rationalize(const Poly& f);

// Ring conversions: ZZ -> QQ, ZZ/QQ -> GF(p) (denominators inverted mod p),
// GF(p) -> ZZ (canonical lift), identity otherwise.
Poly to_ring(const Poly& f, Ring target);

// Termwise p-th root over GF(p); every exponent must be divisible by p.
Poly pth_power_root(const Poly& f);

long deg_in(const Poly& f, const std::string& var);
std::set<std::string> variables(const Poly& f);

std::string render(const mpq_class& c);
std::string render(const Monomial& m);  // "1" for the unit monomial
std::string render(const Poly& f);
Poly parse_poly(Ring r, const std::string& text);

}  // namespace aswc
