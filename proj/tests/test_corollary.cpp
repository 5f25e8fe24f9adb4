#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tripow/bell.hpp"
#include "tripow/presets.hpp"
#include "tripow/suites.hpp"
#include "tripow/verify.hpp"

namespace tripow {
namespace {

Rational Q(long p, long q = 1) { return make_rational(p, q); }

TriMatrix dense_power(const TriMatrix& A, long s) {
  TriMatrix base = s < 0 ? mat_inverse(A) : A;
  TriMatrix r = TriMatrix::identity(A.order());
  for (long i = 0; i < (s < 0 ? -s : s); ++i) {
    TriMatrix next(A.order());
    for (std::size_t k = 1; k <= A.order(); ++k)
      for (std::size_t n = k; n <= A.order(); ++n) {
        Rational acc;
        for (std::size_t j = k; j <= n; ++j) acc += r(k, j) * base(j, n);
        next.set(k, n, acc);
      }
    r = next;
  }
  return r;
}

TEST(Corollary, Names) {
  EXPECT_EQ(corollary_name(C3Params{Series::variable(2), Weights::ones(2)}), "c3");
}

TEST(Corollary, C2WithUnitGIsIdentity) {
  const C2Params p{Series::constant(Q(1), 6), Weights::ones(6)};
  for (long s = -3; s <= 3; ++s) EXPECT_EQ(special_power(p, s), TriMatrix::identity(6));
}

TEST(Corollary, C2IsToeplitzPower) {
  SpecGenerator gen(201);
  for (int rep = 0; rep < 10; ++rep) {
    const C2Params p{gen.unit(6), gen.mixed_weights(6)};
    TriMatrix A(6);
    for (std::size_t k = 1; k <= 6; ++k)
      for (std::size_t n = k; n <= 6; ++n) A.set(k, n, p.weights(k) / p.weights(n) * p.g[n - k]);
    EXPECT_EQ(build_matrix(restricted_spec(p)), A);
    for (long s = -3; s <= 3; ++s) EXPECT_EQ(special_power(p, s), dense_power(A, s));
  }
}

TEST(Corollary, C3StirlingTriangle) {
  const std::size_t N = 7;
  const C3Params p{preset_series({PresetKind::expm1, 0}, N), Weights::ones(N)};
  const TriMatrix S1 = special_power(p, 1), Sm1 = special_power(p, -1);
  const oracle::Poly log1p = [&] {
    oracle::Poly c(N + 1);
    for (std::size_t i = 1; i <= N; ++i) c[i] = oracle::Q(i % 2 ? 1 : -1, static_cast<unsigned long>(i));
    return c;
  }();
  for (std::size_t k = 1; k <= N; ++k)
    for (std::size_t n = k; n <= N; ++n) {
      EXPECT_EQ(S1(k, n), Rational(oracle::stirling2_explicit(n, k)));
      EXPECT_EQ(Sm1(k, n), oracle::bell_by_partitions(log1p, n, k));
    }
  EXPECT_EQ(Sm1(2, 3), -3);
}

TEST(Corollary, C4GeometricScaling) {
  const std::size_t N = 7;
  for (const Rational& beta : {Q(1), Q(-2), Q(1, 3)})
    for (const Rational& alpha : {Q(2), Q(-1), Q(1, 2)}) {
      const C4Params p{preset_series({PresetKind::geometric, beta}, N), alpha, Weights::ones(N)};
      const TriMatrix A = special_power(p, 1);
      for (long s = -3; s <= 4; ++s) {
        const TriMatrix P = special_power(p, s);
        for (std::size_t k = 1; k <= N; ++k)
          for (std::size_t n = k; n <= N; ++n)
            EXPECT_EQ(P(k, n), pow(Q(s), static_cast<long>(n - k)) * A(k, n)) << to_string(alpha) << " s=" << s;
      }
    }
}

TEST(Corollary, C4EntryFormula) {
  // phi = t/(1 - beta t): (t/phi)^(alpha-k) = (1 - beta t)^(alpha-k).
  const std::size_t N = 6;
  const Rational beta = Q(3, 2), alpha = Q(-5, 3);
  const C4Params p{preset_series({PresetKind::geometric, beta}, N), alpha, Weights::ones(N)};
  const TriMatrix A = special_power(p, 1);
  for (std::size_t k = 1; k <= N; ++k)
    for (std::size_t n = k; n <= N; ++n) {
      const std::size_t d = n - k;
      const Rational expected = Rational(oracle::fact(n)) / Rational(oracle::fact(k)) *
                                oracle::binom(alpha - Q(static_cast<long>(k)), d) * pow(-beta, static_cast<long>(d));
      EXPECT_EQ(A(k, n), expected);
    }
}

TEST(Corollary, C4NonRationalPower) {
  const Series phi({0, 2, 1, 0, 0});
  const C4Params p{phi, Q(1, 2), Weights::ones(4)};
  for (long s : {-1L, 0L, 2L}) {
    try {
      (void)special_power(p, s);
      FAIL();
    } catch (const error& e) {
      EXPECT_EQ(e.code(), errc::non_rational_power);
    }
  }
  try {
    (void)restricted_spec(p);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::non_rational_power);
  }
  EXPECT_NO_THROW((void)special_power(C4Params{phi, Q(-3), Weights::ones(4)}, 2));
}

TEST(Corollary, C5RequiresMatchingInverse) {
  const Series one = Series::constant(Q(1), 4);
  const C5Params bad{Series({0, 1, 1, 0, 0}), one, Series({1, 1, 0, 0, 0}), Weights::ones(4)};
  try {
    (void)special_power(bad, 1);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::invalid_spec);
  }
}

TEST(Corollary, C5WithTreeFunction) {
  // h = e^t gives omega = the tree function and phi = t e^(-t).
  SpecGenerator gen(202);
  const std::size_t N = 6;
  const Series h = preset_series({PresetKind::exp_full, 0}, N);
  const Series phi = comp_inverse(solve_omega(h));
  EXPECT_EQ(phi[2], -1);
  const C5Params p{phi, gen.unit(N), h, Weights::ones(N)};
  const MatrixSpec spec = restricted_spec(p);
  for (long s = -3; s <= 3; ++s) EXPECT_EQ(special_power(p, s), power_oracle(spec, s));
}

TEST(Corollary, WeightLengthChecked) {
  try {
    (void)special_power(C3Params{Series::variable(4), Weights::ones(3)}, 1);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::invalid_spec);
  }
}

// Properties: each fast path equals the general closed form and the oracle.

class CorollaryConsistency : public ::testing::TestWithParam<std::string> {};

TEST_P(CorollaryConsistency, MatchesGeneralForm) {
  SuiteConfig cfg;
  cfg.order = 6;
  cfg.seed = 7;
  cfg.reps = 6;
  const VerifyReport r = run_suite(GetParam(), cfg);
  EXPECT_TRUE(r.passed()) << summary(r);
  EXPECT_GT(r.checked, 0u);
}

INSTANTIATE_TEST_SUITE_P(All, CorollaryConsistency, ::testing::Values("c1", "c2", "c3", "c4", "c5"));

TEST(CorollaryProperty, FastPathAgainstOracleDirectly) {
  SpecGenerator gen(203);
  const std::size_t N = 5;
  for (int rep = 0; rep < 4; ++rep) {
    const std::vector<CorollaryParams> family = {
        C1Params{gen.phi(N), gen.unit(N), gen.weights(N)},
        C2Params{gen.unit(N), gen.weights(N)},
        C3Params{gen.phi(N), gen.weights(N)},
        C4Params{gen.phi(N), Q(static_cast<long>(gen.raw() % 7) - 3), gen.weights(N)},
        gen.c5(N),
    };
    for (const auto& p : family) {
      const MatrixSpec spec = restricted_spec(p);
      for (long s = -3; s <= 3; ++s) EXPECT_EQ(special_power(p, s), power_oracle(spec, s)) << corollary_name(p);
    }
  }
}

}  // namespace
}  // namespace tripow
