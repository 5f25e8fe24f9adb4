#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tripow/bell.hpp"
#include "tripow/expr.hpp"
#include "tripow/presets.hpp"

namespace tripow {
namespace {

Rational Q(long p, long q = 1) { return make_rational(p, q); }

oracle::Poly to_poly(const Series& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

TEST(Presets, SeriesExamples) {
  EXPECT_EQ(preset_series({PresetKind::geometric, Q(1)}, 3), Series({0, 1, 1, 1}));
  EXPECT_EQ(preset_series({PresetKind::expm1, 0}, 3), Series({0, 1, Q(1, 2), Q(1, 6)}));
  EXPECT_EQ(preset_series({PresetKind::binomial_minus_one, Q(2)}, 2), Series({0, 2, 1}));
  EXPECT_EQ(preset_series({PresetKind::log1p, 0}, 4), Series({0, 1, Q(-1, 2), Q(1, 3), Q(-1, 4)}));
  EXPECT_EQ(preset_series({PresetKind::exp_full, 0}, 3), Series({1, 1, Q(1, 2), Q(1, 6)}));
  EXPECT_EQ(preset_series({PresetKind::const_one, 0}, 2), Series({1, 0, 0}));
  EXPECT_EQ(preset_series({PresetKind::identity_t, 0}, 2), Series({0, 1, 0}));
  EXPECT_EQ(preset_series({PresetKind::geometric, Q(-2, 3)}, 3), Series({0, 1, Q(-2, 3), Q(4, 9)}));
}

TEST(Presets, BinomialMatchesGeneralizedBinomial) {
  for (const Rational& a : {Q(1, 2), Q(-3, 4), Q(5), Q(-2)}) {
    const Series f = preset_series({PresetKind::binomial_minus_one, a}, 7);
    EXPECT_EQ(f[0], 0);
    for (unsigned long i = 1; i <= 7; ++i) EXPECT_EQ(f[i], oracle::binom(a, i));
  }
}

TEST(Presets, ParseAndPrint) {
  EXPECT_EQ(parse_preset("expm1"), (PresetId{PresetKind::expm1, 0}));
  EXPECT_EQ(parse_preset("geometric(-1/2)"), (PresetId{PresetKind::geometric, Q(-1, 2)}));
  EXPECT_EQ(to_string(PresetId{PresetKind::binomial_minus_one, Q(3, 2)}), "binomial_minus_one(3/2)");
  for (const char* bad : {"nope", "expm1(2)", "geometric", "geometric(x)", "geometric(1", "binomial_minus_one(0)"}) {
    try {
      (void)parse_preset(bad);
      FAIL() << bad;
    } catch (const error& e) {
      EXPECT_EQ(e.code(), errc::preset) << bad;
    }
  }
  try {
    (void)preset_series({PresetKind::binomial_minus_one, 0}, 3);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::preset);
  }
}

TEST(Presets, ExpressionRoundTrip) {
  const std::vector<PresetId> ids = {
      {PresetKind::identity_t, 0},          {PresetKind::geometric, Q(1)},       {PresetKind::geometric, Q(-3, 2)},
      {PresetKind::geometric, Q(0)},        {PresetKind::binomial_minus_one, Q(1, 2)},
      {PresetKind::binomial_minus_one, Q(-2)}, {PresetKind::expm1, 0},        {PresetKind::log1p, 0},
      {PresetKind::exp_full, 0},            {PresetKind::const_one, 0}};
  for (const auto& id : ids)
    for (std::size_t N : {1u, 4u, 9u}) {
      EXPECT_EQ(elaborate(preset_expression(id), N), preset_series(id, N)) << preset_expression(id);
      EXPECT_EQ(parse_preset(to_string(id)), id);
    }
}

TEST(GeometricFamily, Entries) {
  for (const Rational& alpha : {Q(1), Q(-1, 2), Q(3)})
    for (const Rational& beta : {Q(1), Q(2), Q(-1, 3)}) {
      const TriMatrix A = example_matrix_25(alpha, beta, 6);
      for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(A(n, n), 1);
      EXPECT_EQ(A(1, 2), 2 * beta * (alpha + 1));
    }
  EXPECT_EQ(example_matrix_25(Q(1), Q(1), 3)(1, 3), 18);
}

TEST(GeometricFamily, MatchesC4WithNegatedAlpha) {
  for (const Rational& alpha : {Q(1), Q(2), Q(-1, 2), Q(5, 3), Q(0)})
    for (const Rational& beta : {Q(1), Q(2), Q(-3, 4)})
      for (std::size_t N : {1u, 5u, 8u}) {
        const C4Params p = example_25_as_c4(alpha, beta, N);
        EXPECT_EQ(p.alpha, -alpha);
        EXPECT_EQ(special_power(p, 1), example_matrix_25(alpha, beta, N));
        EXPECT_EQ(build_matrix(restricted_spec(p)), example_matrix_25(alpha, beta, N));
      }
}

TEST(GeometricFamily, Scaling) {
  EXPECT_TRUE(check_scaling_26(Q(1), Q(1), 4, 1).passed());
  const VerifyReport two = check_scaling_26(Q(3, 2), Q(2), 2, 2);
  EXPECT_TRUE(two.passed()) << summary(two);
  const VerifyReport big = check_scaling_26(Q(1), Q(1), 8, 4);
  EXPECT_TRUE(big.passed()) << summary(big);
  EXPECT_EQ(big.checked, 4u * 36u);
  // One multiplication by hand: [A^2]_{1,2} = A11 A12 + A12 A22 = 2 A12.
  const TriMatrix A = example_matrix_25(Q(3, 2), Q(2), 2);
  EXPECT_EQ(mat_mul(A, A)(1, 2), 2 * A(1, 2));
}

TEST(ExponentialMoments, ScalarIdentity) {
  EXPECT_TRUE(check_exp_27(0, 6, 6).passed());
  EXPECT_TRUE(check_exp_27(1, 6, 6).passed());
  EXPECT_TRUE(check_exp_27(3, 8, 8).passed());
  EXPECT_TRUE(check_exp_27(5, 10, 12).passed());
  EXPECT_THROW((void)check_exp_27(1, 8, 7), error);
}

TEST(ResolventMoments, ScalarIdentity) {
  for (long m = 0; m <= 5; ++m) {
    const VerifyReport r = check_resolvent_28(m, 10);
    EXPECT_TRUE(r.passed()) << summary(r);
    EXPECT_EQ(r.checked, 11u);
  }
  // m = 1: z/(1-z)^2 = sum s z^s.
  const Series u = series_recip(Series({1, -1, 0, 0, 0, 0}));
  const Series expected = evaluate(fubini_poly(1), shift_up(u)) * u;
  for (std::size_t i = 0; i <= 5; ++i) EXPECT_EQ(expected[i], Q(static_cast<long>(i)));
}

TEST(BinomialFamily, Entries) {
  EXPECT_EQ(example_matrix_30(Q(1), 6), TriMatrix::identity(6));
  EXPECT_EQ(example_matrix_30(Q(2), 4)(1, 2), 2);
  for (const Rational& alpha : {Q(2), Q(3), Q(1, 2), Q(-2, 3)})
    for (std::size_t N : {1u, 6u, 10u}) {
      const TriMatrix A = example_matrix_30(alpha, N);
      const auto phi = to_poly(preset_series({PresetKind::binomial_minus_one, alpha}, N));
      for (std::size_t k = 1; k <= N; ++k)
        for (std::size_t n = k; n <= N; ++n) EXPECT_EQ(A(k, n), oracle::bell_by_partitions(phi, n, k));
      EXPECT_EQ(special_power(C3Params{preset_series({PresetKind::binomial_minus_one, alpha}, N), Weights::ones(N)}, 1), A);
    }
  EXPECT_THROW((void)example_matrix_30(Q(0), 3), error);
}

TEST(BinomialFamilyPowers, Powers) {
  EXPECT_TRUE(check_power_31(Q(2), 0, 6).passed());
  EXPECT_EQ(power_oracle(example_30_spec(Q(2), 6), 2), example_matrix_30(Q(4), 6));
  EXPECT_EQ(power_oracle(example_30_spec(Q(2), 6), -1), example_matrix_30(Q(1, 2), 6));
  for (const Rational& alpha : {Q(2), Q(3), Q(1, 2)})
    for (long s = -1; s <= 2; ++s) {
      const VerifyReport r = check_power_31(alpha, s, 8);
      EXPECT_TRUE(r.passed()) << summary(r);
    }
}

}  // namespace
}  // namespace tripow
