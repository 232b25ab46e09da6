#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <string_view>

namespace dact {

struct Monomial {
  unsigned x = 0;
  unsigned y = 0;
  auto operator<=>(const Monomial&) const = default;
};

// Sparse polynomial in x, y with rational coefficients. Zero coefficients are never stored.
class BivariatePoly {
 public:
  using Terms = std::map<Monomial, mpq_class>;

  BivariatePoly() = default;
  static BivariatePoly constant(const mpq_class& c);
  static BivariatePoly monomial(unsigned x_exp, unsigned y_exp, const mpq_class& c = 1);
  static BivariatePoly x() { return monomial(1, 0); }
  static BivariatePoly y() { return monomial(0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpq_class coefficient(unsigned x_exp, unsigned y_exp) const;
  void add_term(unsigned x_exp, unsigned y_exp, const mpq_class& c);

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  BivariatePoly scale(const mpq_class& c) const;
  BivariatePoly pow(unsigned k) const;
  // p(x + dx, y + dy)
  BivariatePoly substitute_shift(const mpq_class& dx, const mpq_class& dy) const;

  bool has_integer_coefficients() const;
  bool has_nonnegative_integer_coefficients() const;

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  // e.g. "x^2 + x*y + x + y^2 + y"
  std::string to_string() const;
  // one "(xe,ye,num/den)" per line
  std::string to_machine_string() const;
  static BivariatePoly parse_machine(std::string_view text);

 private:
  Terms terms_;
};

}  // namespace dact
