#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "test_support.hpp"

namespace exh {
namespace {

using testing::example1;
using testing::example2;
using testing::make_family;
using testing::oracle_eval;
using testing::square_points;

TEST(Polytope, RejectsEmptyAndRagged) {
  EXPECT_THROW(Polytope(std::vector<Vector>{}), InvalidInput);
  EXPECT_THROW(Polytope({{1.0, 2.0}, {1.0}}), DimensionMismatch);
  EXPECT_THROW(Polytope({Vector{}}), DimensionMismatch);
}

TEST(Polytope, RejectsNonFinite) {
  EXPECT_THROW(Polytope({{1.0, std::numeric_limits<double>::quiet_NaN()}}), InvalidInput);
  EXPECT_THROW(Polytope(std::vector<Vector>{{std::numeric_limits<double>::infinity()}}), InvalidInput);
}

TEST(Polytope, DeduplicatesWithinTolerance) {
  const Polytope p({{0.0, 1.0}, {0.0, 1.0 + 5e-13}, {2.0, 3.0}, {0.0, 1.0}});
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.vertex(0), (Vector{0.0, 1.0}));
  EXPECT_EQ(p.vertex(1), (Vector{2.0, 3.0}));
  // Outside the tolerance both points survive.
  EXPECT_EQ(Polytope(std::vector<Vector>{{0.0}, {1e-11}}).size(), 2u);
}

TEST(Polytope, CanonicalOrderAndSameSet) {
  const Polytope a({{1.0, 0.0}, {-1.0, 2.0}, {-1.0, 1.0}});
  const Polytope b({{-1.0, 1.0}, {1.0, 0.0}, {-1.0, 2.0}});
  EXPECT_EQ(a.canonical_vertices(), (std::vector<Vector>{{-1.0, 1.0}, {-1.0, 2.0}, {1.0, 0.0}}));
  EXPECT_TRUE(same_set(a, b));
  EXPECT_FALSE(a == b);
  EXPECT_FALSE(same_set(a, Polytope({{-1.0, 1.0}, {1.0, 0.0}})));
}

TEST(Family, ValidatesDimensions) {
  EXPECT_THROW(Family(Kind::UpperExhauster, 2, {}), InvalidInput);
  EXPECT_THROW(Family(Kind::UpperExhauster, 0, {Polytope(std::vector<Vector>{{1.0}})}), InvalidInput);
  EXPECT_THROW(Family(Kind::UpperExhauster, 2, {Polytope({{1.0, 2.0, 3.0}})}),
               DimensionMismatch);
  // Coexhauster members carry the extra affine coordinate.
  EXPECT_NO_THROW(Family(Kind::LowerCoexhauster, 2, {Polytope({{1.0, 2.0, 3.0}})}));
  EXPECT_THROW(Family(Kind::LowerCoexhauster, 2, {Polytope({{1.0, 2.0}})}), DimensionMismatch);
}

TEST(Family, KindNamesAndDuals) {
  for (Kind k : testing::kAllKinds) {
    EXPECT_EQ(parse_kind(kind_name(k)), k);
    EXPECT_EQ(dual(dual(k)), k);
    EXPECT_NE(is_upper(k), is_upper(dual(k)));
    EXPECT_EQ(is_coexhauster(k), is_coexhauster(dual(k)));
  }
  EXPECT_FALSE(parse_kind("middle_exhauster").has_value());
}

class CoreIsa : public ::testing::TestWithParam<kernels::Isa> {
 protected:
  void SetUp() override {
    saved_ = kernels::active().isa;
    kernels::set_active(GetParam());
  }
  void TearDown() override { kernels::set_active(saved_); }
  kernels::Isa saved_{};
};

TEST_P(CoreIsa, SupportMaxExamples) {
  const Polytope seg({{-1, 1, 1, 1}, {1, 1, 1, 1}});
  EXPECT_EQ(support_max(seg, Vector{1, 0, 0, 0}), 1.0);
  EXPECT_EQ(support_max(seg, Vector{0, 0, 0, 0}), 0.0);
  EXPECT_EQ(support_max(Polytope(square_points()), Vector{1, 1}), 2.0);
}

TEST_P(CoreIsa, SupportMinExamples) {
  const Polytope seg({{-1, 1, 1, 1}, {1, 1, 1, 1}});
  EXPECT_EQ(support_min(seg, Vector{1, 0, 0, 0}), -1.0);
  EXPECT_EQ(support_min(seg, Vector{0, 0, 0, 0}), 0.0);
  EXPECT_EQ(support_min(Polytope(square_points()), Vector{1, 0}), -1.0);
}

TEST_P(CoreIsa, SupportRejectsWrongLength) {
  EXPECT_THROW(support_max(Polytope(square_points()), Vector{1, 0, 0}), DimensionMismatch);
  EXPECT_THROW(support_min(Polytope(square_points()), Vector{1}), DimensionMismatch);
}

TEST_P(CoreIsa, AffineSupportExamples) {
  const Polytope tri({{1, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {1, 0, 0, 1, 0}});
  EXPECT_EQ(affine_support(tri, Vector{0, 0, 0, 0}, Extreme::Max), 1.0);
  EXPECT_EQ(affine_support(Polytope({{0, 0, 0, 0, 0}}), Vector{3, -2, 7, 1}, Extreme::Min), 0.0);
  const Polytope seg({{1, 1, 0, 0, 0}, {0, 0, 0, 0, 0}});
  EXPECT_EQ(affine_support(seg, Vector{-3, -3, -3, -3}, Extreme::Min), -2.0);
  EXPECT_THROW(affine_support(seg, Vector{1, 2, 3, 4, 5}, Extreme::Max), DimensionMismatch);
}

TEST_P(CoreIsa, EvalExamples) {
  EXPECT_EQ(eval(example1(), Vector{1, 0, 0, 0}), -1.0);
  EXPECT_EQ(oracle_eval(example1(), {1, 0, 0, 0}), -1.0);
  EXPECT_EQ(eval(example2(), Vector{0, 0, 0, 0}), 0.0);
  EXPECT_EQ(oracle_eval(example2(), {0, 0, 0, 0}), 0.0);
  EXPECT_THROW(eval(example1(), Vector{1, 0, 0}), DimensionMismatch);
}

// Example 1 in closed form: h(D) = |D2 + D3 + D4| - |D1|.
TEST_P(CoreIsa, EvalMatchesClosedFormAndOracle) {
  Rng rng(3);
  const Family f = example1();
  for (int s = 0; s < 500; ++s) {
    Vector d(4);
    for (double& x : d) x = rng.uniform(-3.0, 3.0);
    const double closed = std::abs(d[1] + d[2] + d[3]) - std::abs(d[0]);
    EXPECT_NEAR(eval(f, d), closed, 1e-12);
    EXPECT_EQ(eval(f, d), oracle_eval(f, d));
  }
}

TEST_P(CoreIsa, EvalAgreesWithOracleOnRandomFamilies) {
  for (Kind kind : testing::kAllKinds) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Family f = random_family(1 + seed % 5, 1 + seed % 4, 7, kind, seed);
      Rng rng(seed + 1000);
      for (int s = 0; s < 50; ++s) {
        Vector d(f.space_dim());
        for (double& x : d) x = rng.uniform(-2.0, 2.0);
        EXPECT_EQ(eval(f, d), oracle_eval(f, d));
      }
    }
  }
}

TEST_P(CoreIsa, PositiveHomogeneityForExhausters) {
  for (Kind kind : {Kind::UpperExhauster, Kind::LowerExhauster}) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const Family f = random_family(3, 3, 5, kind, seed);
      const auto dirs = DirectionSampler{3, 40, seed, SamplerMode::FullSphere}.directions();
      for (const Vector& d : dirs) {
        const double base = eval(f, d);
        for (double lambda : {2.0, 0.5, 10.0}) {
          Vector scaled = d;
          for (double& x : scaled) x *= lambda;
          EXPECT_NEAR(eval(f, scaled), lambda * base, 1e-12 * (1.0 + lambda));
        }
      }
    }
  }
}

TEST_P(CoreIsa, SupportOrderingAndReflection) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Family f = random_family(4, 1, 9, Kind::UpperExhauster, seed);
    const Polytope& c = f[0];
    for (const Vector& d : DirectionSampler{4, 30, seed, SamplerMode::FullSphere}.directions()) {
      EXPECT_GE(support_max(c, d), support_min(c, d));
      Vector neg = d;
      for (double& x : neg) x = -x;
      EXPECT_EQ(support_max(c, neg), -support_min(c, d));
    }
  }
}

TEST_P(CoreIsa, PermutationInvariance) {
  std::mt19937 shuffle_rng(11);
  for (Kind kind : testing::kAllKinds) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Family f = random_family(3, 4, 6, kind, seed);
      auto sets = testing::raw(f);
      std::shuffle(sets.begin(), sets.end(), shuffle_rng);
      for (auto& c : sets) std::shuffle(c.begin(), c.end(), shuffle_rng);
      const Family g = make_family(kind, 3, sets);
      for (const Vector& d : DirectionSampler{3, 50, seed, SamplerMode::FullSphere}.directions())
        EXPECT_EQ(eval(f, d), eval(g, d));
    }
  }
}

TEST_P(CoreIsa, RepeatedVerticesDoNotChangeEval) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Family f = random_family(3, 3, 5, Kind::LowerExhauster, seed);
    auto sets = testing::raw(f);
    for (auto& c : sets) {
      const auto copy = c;
      c.insert(c.end(), copy.begin(), copy.end());
    }
    const Family g = make_family(Kind::LowerExhauster, 3, sets);
    EXPECT_EQ(f, g);
    for (const Vector& d : DirectionSampler{3, 50, seed, SamplerMode::FullSphere}.directions())
      EXPECT_EQ(eval(f, d), eval(g, d));
  }
}

TEST_P(CoreIsa, ZeroDirectionOfExhausterIsZero) {
  for (Kind kind : {Kind::UpperExhauster, Kind::LowerExhauster}) {
    const Family f = random_family(4, 3, 5, kind, 77);
    EXPECT_EQ(eval(f, Vector(4, 0.0)), 0.0);
  }
}

INSTANTIATE_TEST_SUITE_P(AllKernels, CoreIsa, ::testing::ValuesIn(kernels::available_isas()),
                         [](const auto& info) { return std::string(kernels::isa_name(info.param)); });

}  // namespace
}  // namespace exh
