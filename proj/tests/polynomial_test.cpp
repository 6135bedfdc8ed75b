#include <gtest/gtest.h>

#include "pdgp/polynomial.hpp"
#include "pdgp/polynomial_json.hpp"
#include "pdgp/random.hpp"

using namespace pdgp;

namespace {

UniPoly z(int e, Coeff c = 1) { return UniPoly::monomial(e, c); }

UniPoly random_poly(Rng& rng) {
  UniPoly p;
  const int terms = rng.between(0, 5);
  for (int i = 0; i < terms; ++i) p.add_term(rng.between(0, 6), rng.between(-9, 9));
  return p;
}

}  // namespace

TEST(Coeff, CheckedArithmetic) {
  EXPECT_EQ((Coeff(3) + Coeff(4)).to_string(), "7");
  EXPECT_EQ((Coeff(-3) * Coeff(4)).to_string(), "-12");
  EXPECT_EQ(pow2(100).to_string(), "1267650600228229401496703205376");
  EXPECT_EQ(Coeff::max().to_string(), "170141183460469231731687303715884105727");
  EXPECT_EQ(Coeff::min().to_string(), "-170141183460469231731687303715884105728");
  EXPECT_THROW(Coeff::max() + Coeff(1), Error);
  EXPECT_THROW(Coeff::min() - Coeff(1), Error);
  EXPECT_THROW(pow2(70) * pow2(70), Error);
  EXPECT_THROW(-Coeff::min(), Error);
  EXPECT_EQ(factorial(20).to_string(), "2432902008176640000");
}

TEST(UniPoly, Examples) {
  EXPECT_EQ(add(z(2, 2), constant(3) + z(2)), constant(3) + z(2, 3));
  EXPECT_EQ(mul(constant(2) + z(2, 2), constant(2)), constant(4) + z(2, 4));
  const UniPoly cancelled = add(z(2), negate(z(2)));
  EXPECT_TRUE(cancelled.is_zero());
  EXPECT_EQ(cancelled.term_count(), 0U);
  EXPECT_EQ(scale(z(3, 5), 0).term_count(), 0U);
}

TEST(UniPoly, Rendering) {
  EXPECT_EQ(to_string(constant(2) + z(2, 10) + z(4, 4)), "2 + 10*z^2 + 4*z^4");
  EXPECT_EQ(to_string(z(2, 8) + z(4, 8)), "8*z^2 + 8*z^4");
  EXPECT_EQ(to_string(constant(-2) + z(2, 2)), "-2 + 2*z^2");
  EXPECT_EQ(to_string(z(1, -2) - z(2), 'w'), "-2*w - w^2");
  EXPECT_EQ(to_string(UniPoly()), "0");
  EXPECT_EQ(to_string(z(1)), "z");
}

TEST(BiPoly, RenderingAndSpecialization) {
  BiPoly p;
  p.add_term({0, 2}, 1);
  p.add_term({1, 0}, 2);
  p.add_term({2, 2}, 1);
  EXPECT_EQ(to_string(p), "z^2 + 2*w + w^2*z^2");
  EXPECT_EQ(eval_w_at_one(p), constant(2) + z(2, 2));
  EXPECT_EQ(z_slice(p, 2), constant(1) + z(2));

  BiPoly no_w;
  no_w.add_term({0, 0}, 3);
  no_w.add_term({0, 4}, -1);
  EXPECT_EQ(eval_w_at_one(no_w), constant(3) - z(4));
  EXPECT_TRUE(eval_w_at_one(BiPoly()).is_zero());
}

TEST(CoefficientSum, Examples) {
  EXPECT_EQ(coefficient_sum(constant(2) + z(2, 10) + z(4, 4)), Coeff(16));
  EXPECT_EQ(coefficient_sum(UniPoly()), Coeff(0));
}

TEST(UniPoly, RingAxiomsOnRandomPolynomials) {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const UniPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    for (const UniPoly& p : {a + b, a * b, a - c})
      for (const auto& [e, coeff] : p.terms()) EXPECT_FALSE(coeff.is_zero());
  }
}

TEST(UniPoly, OverflowIsDetected) {
  const UniPoly huge = z(1, pow2(100));
  EXPECT_THROW(huge * huge, Error);
  EXPECT_THROW(huge.scaled(pow2(30)), Error);
  EXPECT_THROW(z(0, Coeff::max()) + constant(1), Error);
  EXPECT_THROW(coefficient_sum(z(0, Coeff::max()) + z(1, 1)), Error);
}

TEST(PolyJson, Schema) {
  EXPECT_EQ(to_json(constant(2) + z(2, 10) + z(4, 4)).dump(), R"({"var":"z","terms":[[0,"2"],[2,"10"],[4,"4"]]})");
  EXPECT_EQ(to_json(z(1, -2), 'w').dump(), R"({"var":"w","terms":[[1,"-2"]]})");
  BiPoly p;
  p.add_term({1, 0}, 2);
  p.add_term({0, 2}, 1);
  EXPECT_EQ(to_json(p).dump(), R"({"vars":["w","z"],"terms":[[0,2,"1"],[1,0,"2"]]})");
  EXPECT_EQ(to_json(UniPoly()).dump(), R"({"var":"z","terms":[]})");
  EXPECT_EQ(to_json(z(0, pow2(100)))["terms"][0][1], "1267650600228229401496703205376");
}
