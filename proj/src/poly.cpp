#include "dact/poly.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

#include "dact/error.hpp"

namespace dact {

BivariatePoly BivariatePoly::constant(const mpq_class& c) { return monomial(0, 0, c); }

BivariatePoly BivariatePoly::monomial(unsigned x_exp, unsigned y_exp, const mpq_class& c) {
  BivariatePoly p;
  p.add_term(x_exp, y_exp, c);
  return p;
}

mpq_class BivariatePoly::coefficient(unsigned x_exp, unsigned y_exp) const {
  auto it = terms_.find({x_exp, y_exp});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void BivariatePoly::add_term(unsigned x_exp, unsigned y_exp, const mpq_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace({x_exp, y_exp}, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.x, m.y, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.x, m.y, -c);
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma.x + mb.x, ma.y + mb.y, ca * cb);
  return r;
}

BivariatePoly BivariatePoly::scale(const mpq_class& c) const {
  BivariatePoly r;
  for (const auto& [m, v] : terms_) r.add_term(m.x, m.y, v * c);
  return r;
}

BivariatePoly BivariatePoly::pow(unsigned k) const {
  BivariatePoly r = constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

namespace {

// (t + d)^n coefficients of t^k, k = 0..n
std::vector<mpq_class> shifted_power(unsigned n, const mpq_class& d) {
  std::vector<mpq_class> out(n + 1);
  mpz_class binom = 1;
  for (unsigned k = 0; k <= n; ++k) {
    mpq_class dp = 1;
    for (unsigned i = 0; i < n - k; ++i) dp *= d;
    out[k] = mpq_class(binom) * dp;
    binom = binom * (n - k) / (k + 1);
  }
  return out;
}

}  // namespace

BivariatePoly BivariatePoly::substitute_shift(const mpq_class& dx, const mpq_class& dy) const {
  BivariatePoly r;
  for (const auto& [m, c] : terms_) {
    auto xs = shifted_power(m.x, dx);
    auto ys = shifted_power(m.y, dy);
    for (unsigned i = 0; i <= m.x; ++i)
      for (unsigned j = 0; j <= m.y; ++j) r.add_term(i, j, c * xs[i] * ys[j]);
  }
  return r;
}

bool BivariatePoly::has_integer_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

bool BivariatePoly::has_nonnegative_integer_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (c.get_den() != 1 || c < 0) return false;
  return true;
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // x exponent descending, then y exponent descending
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool neg = c < 0;
    mpq_class mag = abs(c);
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    std::string mono;
    if (m.x == 1) mono = "x";
    else if (m.x > 1) mono = "x^" + std::to_string(m.x);
    if (m.y > 0) {
      if (!mono.empty()) mono += "*";
      mono += m.y == 1 ? std::string("y") : "y^" + std::to_string(m.y);
    }
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

std::string BivariatePoly::to_machine_string() const {
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    out += "(" + std::to_string(m.x) + "," + std::to_string(m.y) + "," + c.get_num().get_str() + "/" +
           c.get_den().get_str() + ")\n";
  }
  return out;
}

BivariatePoly BivariatePoly::parse_machine(std::string_view text) {
  BivariatePoly p;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    unsigned xe = 0, ye = 0;
    char num[256] = {0};
    char den[256] = {0};
    if (std::sscanf(line.c_str(), " (%u,%u,%255[-0-9]/%255[0-9])", &xe, &ye, num, den) != 4)
      throw ParseError(line_no, "expected (x_exp,y_exp,num/den)");
    mpz_class d{den};
    if (d == 0) throw ParseError(line_no, "zero denominator");
    mpq_class c{mpz_class{num}, d};
    c.canonicalize();
    if (p.coefficient(xe, ye) != 0) throw ParseError(line_no, "duplicate monomial");
    p.add_term(xe, ye, c);
  }
  return p;
}

}  // namespace dact
