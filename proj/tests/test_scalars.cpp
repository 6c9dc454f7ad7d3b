#include <gtest/gtest.h>

#include <random>

#include "waring/cyclotomic.hpp"
#include "waring/eps.hpp"

using namespace waring;

namespace {

Scalar random_scalar(std::mt19937_64& rng, const FieldContext& ctx) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  std::vector<Rational> c(ctx->degree());
  for (auto& x : c) x = Rational(num(rng), den(rng));
  for (auto& x : c) x.canonicalize();
  return Scalar(ctx, c);
}

EpsScalar random_eps(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), len(1, 3), shift(0, 2);
  auto poly = [&] {
    std::vector<Scalar> c(static_cast<std::size_t>(len(rng)));
    for (auto& x : c) x = Scalar(coef(rng));
    if (c.back().is_zero()) c.back() = Scalar(1);
    return EpsPoly(c).shifted(static_cast<std::size_t>(shift(rng)));
  };
  EpsPoly num = poly(), den = poly();
  if (num.is_zero()) num = EpsPoly(Scalar(1));
  if (den.is_zero()) den = EpsPoly(Scalar(2));
  return EpsScalar(num, den);
}

}  // namespace

TEST(Cyclotomic, PolynomialDegreesAreEulerPhi) {
  const int phi[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12};
  for (int n = 1; n <= 13; ++n) EXPECT_EQ(cyclotomic_polynomial(n).degree(), phi[n]) << n;
}

TEST(Cyclotomic, ConductorOneIsRational) {
  auto q = make_context(1);
  EXPECT_EQ(Scalar::zeta(q), Scalar(1));
}

TEST(Cyclotomic, FourthRootSquaresToMinusOne) {
  auto z = Scalar::zeta(make_context(4));
  EXPECT_EQ(z * z, Scalar(-1));
}

TEST(Cyclotomic, CubeRootsSumToZero) {
  auto z = Scalar::zeta(make_context(3));
  EXPECT_TRUE((Scalar(1) + z + z * z).is_zero());
  EXPECT_EQ(z * z.pow(2), Scalar(1));
}

TEST(Cyclotomic, FifthRootsSumToZero) {
  auto ctx = make_context(5);
  Scalar s(0);
  for (int k = 0; k < 5; ++k) s = s + Scalar::zeta_power(ctx, k);
  EXPECT_TRUE(s.is_zero());
}

TEST(Cyclotomic, ZetaHasExactOrder) {
  for (int n = 1; n <= 30; ++n) {
    auto z = Scalar::zeta(make_context(n));
    EXPECT_EQ(z.pow(n), Scalar(1)) << n;
    for (int k = 1; k < n; ++k) EXPECT_NE(z.pow(k), Scalar(1)) << n << " " << k;
  }
}

TEST(Cyclotomic, InverseOfTwo) { EXPECT_EQ(Scalar(2).inverse(), Scalar(Rational(1, 2))); }

TEST(Cyclotomic, ErrorsAreTyped) {
  try {
    (void)Scalar(0).inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
  try {
    (void)(Scalar::zeta(make_context(3)) + Scalar::zeta(make_context(5)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ContextMismatch);
  }
}

TEST(Cyclotomic, RationalsMixWithAnyField) {
  auto z = Scalar::zeta(make_context(7));
  EXPECT_EQ((z + Scalar(Rational(1, 3))) - z, Scalar(Rational(1, 3)));
}

TEST(Cyclotomic, EmbeddingRespectsRootsOfUnity) {
  auto big = make_context(12);
  EXPECT_EQ(Scalar::zeta(make_context(4)).in(big), Scalar::zeta_power(big, 3));
  EXPECT_EQ(Scalar::zeta(make_context(3)).in(big), Scalar::zeta_power(big, 4));
  auto w = Scalar::zeta(make_context(6)) * Scalar(Rational(2, 5)) + Scalar(1);
  auto a = w.in(big), b = w.pow(3).in(big);
  EXPECT_EQ(a.pow(3), b);
}

TEST(Cyclotomic, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (int n : {1, 3, 4, 5, 8, 9, 12}) {
    auto ctx = make_context(n);
    for (int it = 0; it < 40; ++it) {
      Scalar a = random_scalar(rng, ctx), b = random_scalar(rng, ctx), c = random_scalar(rng, ctx);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Scalar(1));
    }
  }
}

TEST(Cyclotomic, CanonicalLiterals) {
  auto ctx = make_context(3);
  EXPECT_EQ(to_string(Scalar(Rational(3, 2))), "3/2");
  EXPECT_EQ(to_string(Scalar::zeta(make_context(4))), "zeta(4)");
  EXPECT_EQ(to_string(Scalar(1) - Scalar(2) * Scalar::zeta(ctx)), "1-2*zeta(3)");
  // zeta_3^2 = -1 - zeta_3 in the power basis
  EXPECT_EQ(to_string(Scalar::zeta_power(ctx, 2)), "-1-zeta(3)");
}

TEST(Eps, ValuationExamples) {
  // eps^2/(3+eps)
  EpsScalar x(EpsPoly::monomial(Scalar(1), 2), EpsPoly(std::vector<Scalar>{Scalar(3), Scalar(1)}));
  auto v = x.valuation();
  EXPECT_EQ(v.order, 2);
  EXPECT_EQ(v.lead, Scalar(Rational(1, 3)));
  v = EpsScalar(5).valuation();
  EXPECT_EQ(v.order, 0);
  EXPECT_EQ(v.lead, Scalar(5));
  v = (EpsScalar(1) / EpsScalar::eps()).valuation();
  EXPECT_EQ(v.order, -1);
  EXPECT_EQ(v.lead, Scalar(1));
}

TEST(Eps, ZeroHasNoValuation) {
  try {
    (void)EpsScalar(0).valuation();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroValuation);
  }
}

TEST(Eps, EvalAtZero) {
  EpsScalar e = EpsScalar::eps();
  EXPECT_EQ(((EpsScalar(1) + e) / (EpsScalar(1) - e)).eval0(), Scalar(1));
  EXPECT_EQ(e.eval0(), Scalar(0));
  try {
    (void)(EpsScalar(1) / e).eval0();
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::PoleAtZero);
  }
}

TEST(Eps, NormalizationIsCanonical) {
  EpsScalar e = EpsScalar::eps();
  EpsScalar a = (e * e - EpsScalar(1)) / (e - EpsScalar(1));
  EXPECT_EQ(a, e + EpsScalar(1));
  EXPECT_TRUE(a.is_polynomial());
  EXPECT_EQ((EpsScalar(2) / (EpsScalar(2) * e)).den(), EpsPoly::monomial(Scalar(1), 1));
}

TEST(Eps, ValuationIsMultiplicative) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    EpsScalar x = random_eps(rng), y = random_eps(rng);
    auto vx = x.valuation(), vy = y.valuation(), vxy = (x * y).valuation();
    EXPECT_EQ(vxy.order, vx.order + vy.order);
    EXPECT_EQ(vxy.lead, vx.lead * vy.lead);
  }
}

TEST(Eps, EvalZeroSucceedsIffNonnegativeValuation) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 200; ++it) {
    EpsScalar x = random_eps(rng);
    bool ok = true;
    try {
      (void)x.eval0();
    } catch (const Error&) {
      ok = false;
    }
    EXPECT_EQ(ok, x.valuation().order >= 0);
  }
}

TEST(Eps, RescalingCommutesWithEvaluation) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 50; ++it) {
    EpsScalar x = random_eps(rng);
    Scalar u(3), t(Rational(1, 7));
    EXPECT_EQ(x.rescaled(u).eval(t), x.eval(u * t));
  }
}
