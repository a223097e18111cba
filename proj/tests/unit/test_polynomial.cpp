#include <gtest/gtest.h>

#include "brute.hpp"
#include "redpow/polynomial.hpp"

using namespace redpow;

namespace {

Polynomial poly(std::initializer_list<int> coeffs) {
  std::vector<Rational> c;
  for (int v : coeffs)
    c.emplace_back(v);
  return Polynomial(c);
}

} // namespace

TEST(Polynomial, Basics) {
  EXPECT_TRUE(Polynomial().is_zero());
  EXPECT_FALSE(Polynomial().degree().has_value());
  EXPECT_EQ(poly({0, 0, 0}), Polynomial());
  EXPECT_EQ(poly({1, 2, 0}).degree(), 1u);
  EXPECT_EQ(Polynomial::identity() * Polynomial::identity(), Polynomial::monomial(2));
  EXPECT_EQ(poly({-3, 1}).eval(Index{3}), 0);
  EXPECT_EQ(poly({1, 1}).eval(Rational(1, 2)), Rational(3, 2));
}

TEST(Polynomial, ToString) {
  EXPECT_EQ(Polynomial().to_string(), "0");
  EXPECT_EQ(poly({1, 1}).to_string(), "1 + l");
  EXPECT_EQ(poly({0, 1, 1}).to_string(), "l + l^2");
  EXPECT_EQ(Polynomial::monomial(1, Rational(-1, 2)).to_string(), "-1/2*l");
  EXPECT_EQ(poly({-1, 0, 3}).to_string(), "-1 + 3*l^2");
}

TEST(Polynomial, ParseRational) {
  EXPECT_EQ(parse_rational("-7/3"), Rational(-7, 3));
  EXPECT_EQ(parse_rational("4/2"), Rational(2));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Polynomial, RingAxioms) {
  random::Source src(21);
  for (int i = 0; i < 500; ++i) {
    const Polynomial a = random::polynomial(src), b = random::polynomial(src),
                     c = random::polynomial(src);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, Polynomial());
    ASSERT_EQ(a + (-a), Polynomial());
    ASSERT_EQ(a * Polynomial::constant(1), a);
  }
}

TEST(Polynomial, EvaluationMatchesHorner) {
  random::Source src(22);
  for (int i = 0; i < 300; ++i) {
    const Polynomial a = random::polynomial(src), b = random::polynomial(src);
    for (Index n = 0; n < 50; ++n) {
      const Rational va = brute::horner(a, n), vb = brute::horner(b, n);
      ASSERT_EQ(a.eval(n), va);
      ASSERT_EQ(a.eval(Rational(static_cast<unsigned long>(n))), va);
      ASSERT_EQ((a * b).eval(n), va * vb);
      ASSERT_EQ((a - b).eval(n), va - vb);
      ASSERT_EQ(a.sign_at(n), sgn(va));
    }
  }
}

TEST(Polynomial, SignBoundAndRoots) {
  random::Source src(23);
  for (int i = 0; i < 500; ++i) {
    const Polynomial a = random::polynomial(src);
    if (a.is_zero())
      continue;
    const Index bound = a.sign_bound();
    const int lead = sgn(a.leading());
    for (Index n = bound; n < bound + 300; ++n)
      ASSERT_EQ(a.sign_at(n), lead) << a.to_string() << " at " << n;
    std::vector<Index> roots;
    for (Index n = 0; n < bound + 5; ++n)
      if (brute::horner(a, n) == 0)
        roots.push_back(n);
    ASSERT_EQ(a.natural_roots(), roots) << a.to_string();
  }
}

TEST(Polynomial, HugeRootBoundIsRefused) {
  const Polynomial p(std::vector<Rational>{Rational(mpz_class(1) << 60), Rational(1)});
  EXPECT_THROW(p.sign_bound(), std::overflow_error);
}
