#include <gtest/gtest.h>

#include <random>

#include "dact/error.hpp"
#include "dact/poly.hpp"

using namespace dact;

namespace {

BivariatePoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(0, 3), coef(-4, 4), terms(0, 4);
  BivariatePoly p;
  for (int k = terms(rng); k > 0; --k) {
    mpq_class c(coef(rng), 1 + exp(rng));
    c.canonicalize();
    p.add_term(exp(rng), exp(rng), c);
  }
  return p;
}

}  // namespace

TEST(Poly, CanonicalString) {
  auto x = BivariatePoly::x(), y = BivariatePoly::y();
  EXPECT_EQ((x * x + x * y + x + y * y + y).to_string(), "x^2 + x*y + x + y^2 + y");
  EXPECT_EQ((x - BivariatePoly::constant(1)).pow(2).to_string(), "x^2 - 2*x + 1");
  EXPECT_EQ(BivariatePoly().to_string(), "0");
  EXPECT_EQ(BivariatePoly::monomial(0, 1, mpq_class(1, 2)).to_string(), "1/2*y");
  EXPECT_EQ(BivariatePoly::constant(-3).to_string(), "-3");
}

TEST(Poly, NoStoredZeros) {
  auto x = BivariatePoly::x();
  BivariatePoly z = x - x;
  EXPECT_TRUE(z.terms().empty());
  EXPECT_EQ(z, BivariatePoly());
}

TEST(Poly, RingAxioms) {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, BivariatePoly());
  }
}

TEST(Poly, ShiftRoundTrip) {
  std::mt19937 rng(6);
  for (int i = 0; i < 100; ++i) {
    auto p = random_poly(rng);
    EXPECT_EQ(p.substitute_shift(1, 1).substitute_shift(-1, -1), p);
  }
  auto x = BivariatePoly::x(), y = BivariatePoly::y();
  EXPECT_EQ((x * y).substitute_shift(-1, 2), (x - BivariatePoly::constant(1)) * (y + BivariatePoly::constant(2)));
}

TEST(Poly, IntegerPredicates) {
  EXPECT_TRUE(BivariatePoly::monomial(1, 1, 3).has_nonnegative_integer_coefficients());
  EXPECT_FALSE(BivariatePoly::monomial(1, 1, -3).has_nonnegative_integer_coefficients());
  EXPECT_TRUE(BivariatePoly::monomial(1, 1, -3).has_integer_coefficients());
  EXPECT_FALSE(BivariatePoly::monomial(1, 1, mpq_class(1, 2)).has_integer_coefficients());
}

TEST(Poly, MachineFormRoundTrip) {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto p = random_poly(rng);
    EXPECT_EQ(BivariatePoly::parse_machine(p.to_machine_string()), p);
  }
  EXPECT_EQ(BivariatePoly::monomial(2, 0, mpq_class(-3, 4)).to_machine_string(), "(2,0,-3/4)\n");
  EXPECT_THROW(BivariatePoly::parse_machine("(1,1,1/0)\n"), ParseError);
  EXPECT_THROW(BivariatePoly::parse_machine("(1,1,1/1)\n(1,1,2/1)\n"), ParseError);
  EXPECT_THROW(BivariatePoly::parse_machine("1,1,1\n"), ParseError);
}
