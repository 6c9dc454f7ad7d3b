#include <gtest/gtest.h>

#include "test_util.hpp"
#include "waring/apolarity.hpp"
#include "waring/fixtures.hpp"

using namespace waring;
using namespace testutil;

namespace {

std::vector<std::size_t> profile(std::initializer_list<std::size_t> v) { return v; }

}  // namespace

TEST(Apolarity, AnnihilatorExamples) {
  Poly x = var(2, 0), y = var(2, 1);
  for (int d = 2; d <= 5; ++d) {
    GradedSubspace a = ann_graded(pow(var(3, 0), d), 1);
    ASSERT_EQ(a.dim(), 2u);
    for (const auto& op : a.basis) EXPECT_TRUE(op.coeff({1, 0, 0}).is_zero());
    EXPECT_EQ(ann_graded(pow(x, d - 1) * y, 1).dim(), 0u);
  }
  GradedSubspace a = ann_graded(x * y, 2);
  ASSERT_EQ(a.dim(), 2u);
  for (const auto& op : a.basis) EXPECT_TRUE(op.coeff({1, 1}).is_zero());
}

TEST(Apolarity, HilbertExamples) {
  Poly x = var(2, 0), y = var(2, 1);
  EXPECT_EQ(hilbert_function(pow(x, 4)).values, profile({1, 1, 1, 1, 1}));
  EXPECT_EQ(hilbert_function(pow(x, 4) * y).values, profile({1, 2, 2, 2, 2, 1}));
  EXPECT_EQ(hilbert_function(eq1(5)).values[2], 6u);
}

TEST(Apolarity, HilbertSymmetry) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    Poly f = random_poly(rng, 1 + trial % 3, 1 + trial % 6);
    auto h = hilbert_function(f).values;
    EXPECT_EQ(h.front(), 1u);
    for (std::size_t p = 0; p < h.size(); ++p) EXPECT_EQ(h[p], h[h.size() - 1 - p]);
  }
}

TEST(Apolarity, HilbertNondecreasingForClassLimits) {
  for (int d = 5; d <= 9; ++d) {
    for (const auto& p : extract_gad(eq1_fd(d)).parts) {
      Poly part = power_of_linform(p.l, d - p.r + 1) * p.g;
      auto h = hilbert_function(part).values;
      for (int i = 1; i <= d / 2; ++i) EXPECT_LE(h[i - 1], h[i]);
    }
  }
}

TEST(Apolarity, Check) {
  Poly x = var(2, 0), y = var(2, 1);
  const int d = 4;
  GradedSubspace dy{2, d, {Poly::monomial({0, d}, Scalar(1))}};
  GradedSubspace dx{2, d, {Poly::monomial({d, 0}, Scalar(1))}};
  EXPECT_TRUE(apolarity_check(pow(x, d), dy));
  EXPECT_FALSE(apolarity_check(pow(x, d), dx));
  GradedSubspace dyy{2, d, {Poly::monomial({2, 2}, Scalar(1)), Poly::monomial({1, 3}, Scalar(1)), Poly::monomial({0, 4}, Scalar(1))}};
  EXPECT_TRUE(apolarity_check(pow(x, d - 1) * y, dyy));
  try {
    (void)apolarity_check(pow(x, d), GradedSubspace{2, d - 1, {}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderOutOfRange);
  }
}

TEST(Apolarity, AnnihilatorAgreesWithTopDegreeCheck) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    Poly f = random_poly(rng, 3, 3);
    EXPECT_TRUE(apolarity_check(f, ann_graded(f, 3)));
    EXPECT_EQ(ann_graded(f, 3).dim(), monomials_of_degree(3, 3).size() - 1);
  }
}

TEST(Compression, Examples) {
  Poly x = var(2, 0), y = var(2, 1);
  for (int d = 2; d <= 6; ++d) {
    auto c = compression(pow(x, d), LinForm::unit(2, 0));
    EXPECT_EQ(c.size, 1u);
    EXPECT_EQ(c.g.terms.size(), 1u);
    EXPECT_EQ(compression(pow(x, d - 1) * y, LinForm::unit(2, 0)).size, 2u);
    EXPECT_EQ(compression(pow(x, d - 2) * y * y, LinForm::unit(2, 0)).size, 3u);
  }
}

TEST(Compression, IndependentOfComplement) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const int d = 4 + trial % 3;
    LinForm l = random_form(rng, n);
    Poly g = random_poly(rng, n, 1 + trial % 2);
    Poly f = power_of_linform(l, d - g.degree()) * g;
    const std::size_t size = compression(f, l).size;
    for (int k = 0; k < 3; ++k) {
      Matrix coords = random_invertible(rng, n);
      for (std::size_t j = 0; j < n; ++j) coords(0, j) = l.coeffs[j];
      if (exact_rank(coords) != n) continue;
      EXPECT_EQ(compression(f, coords).size, size);
    }
  }
}

TEST(Compression, GadSize) {
  Poly x = var(2, 0), y = var(2, 1);
  EXPECT_EQ(gad_size(GAD{2, 5, {{LinForm::unit(2, 0), 2, y}}}), 2u);
  EXPECT_EQ(gad_size(GAD{2, 5, {}}), 0u);
  for (int d = 5; d <= 13; d += 2) EXPECT_LE(gad_size(extract_gad(eq1_fd(d))), 6u);
  (void)x;
}
