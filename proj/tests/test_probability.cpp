#include "falpha/probability.hpp"

#include <gtest/gtest.h>

#include <random>

#include "testing_support.hpp"

namespace falpha {
namespace {

using testing::random_channel;
using testing::random_distribution;
using testing::two_block_fixture;

TEST(Distribution, AcceptsExactSimplexPoint) {
  const auto d = Distribution::from_raw({0.5, 0.5});
  EXPECT_EQ(d.size(), 2);
  EXPECT_DOUBLE_EQ(d[0], 0.5);
  EXPECT_DOUBLE_EQ(d[1], 0.5);
}

TEST(Distribution, RenormalizesWithinTolerance) {
  const auto d = Distribution::from_raw({0.5, 0.5 + 1e-12});
  double sum = 0.0;
  for (int i = 0; i < d.size(); ++i) sum += d[i];
  EXPECT_DOUBLE_EQ(sum, 1.0);
  EXPECT_NEAR(d[1], 0.5, 1e-11);
}

TEST(Distribution, RejectsUnnormalizedInput) {
  EXPECT_THROW(Distribution::from_raw({0.5, 0.6}), NotNormalized);
}

TEST(Distribution, RejectsNegativeMass) {
  EXPECT_THROW(Distribution::from_raw({1.2, -0.2}), NegativeMass);
}

TEST(Distribution, RejectsEmptyInput) {
  EXPECT_THROW(Distribution::from_raw({}), BadParams);
}

TEST(Distribution, PreservesExactZeros) {
  const auto d = Distribution::from_raw({0.0, 1.0 - 1e-11, 1e-11});
  EXPECT_EQ(d[0], 0.0);
  EXPECT_GT(d[2], 0.0);
}

TEST(Support, Examples) {
  EXPECT_EQ(support(Distribution::from_raw({0.0, 1.0})).indices,
            (std::vector<int>{1}));
  EXPECT_EQ(support(Distribution::from_raw({0.5, 0.5})).indices,
            (std::vector<int>{0, 1}));
  // Row 0 of the two-block fixture is uniform on its first block.
  EXPECT_EQ(support(two_block_fixture().row(0)).indices,
            (std::vector<int>{0, 1}));
}

TEST(Channel, RejectsRaggedRows) {
  EXPECT_THROW(Channel::from_rows({{0.5, 0.5}, {1.0}}), DimensionMismatch);
}

TEST(Channel, RejectsNonStochasticRow) {
  EXPECT_THROW(Channel::from_rows({{0.5, 0.5}, {0.5, 0.6}}), NotNormalized);
}

TEST(PushForward, IdentityIsNoop) {
  const auto p = Distribution::from_raw({0.2, 0.3, 0.5});
  const auto out = push_forward(Channel::identity(3), p);
  for (int i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(out[i], p[i]);
}

TEST(PushForward, ConstantKernelForgetsInput) {
  const auto channel =
      Channel::from_rows({{0.1, 0.9}, {0.1, 0.9}, {0.1, 0.9}});
  const auto out = push_forward(channel, Distribution::from_raw({0.2, 0.3, 0.5}));
  EXPECT_DOUBLE_EQ(out[0], 0.1);
  EXPECT_DOUBLE_EQ(out[1], 0.9);
}

TEST(PushForward, TwoBlockFixtureHandValues) {
  const auto out = push_forward(two_block_fixture(),
                                Distribution::from_raw({1.0, 0.0, 0.0, 0.0}));
  EXPECT_DOUBLE_EQ(out[0], 0.5);
  EXPECT_DOUBLE_EQ(out[1], 0.5);
  EXPECT_EQ(out[2], 0.0);
  EXPECT_EQ(out[3], 0.0);
}

TEST(PushForward, SizeMismatchThrows) {
  EXPECT_THROW(
      push_forward(Channel::identity(3), Distribution::from_raw({0.5, 0.5})),
      DimensionMismatch);
}

TEST(Compose, IdentityIsNeutralOnBothSides) {
  std::mt19937_64 rng(7);
  const auto channel = random_channel(rng, 3, 4);
  const auto left = compose(Channel::identity(3), channel);
  const auto right = compose(channel, Channel::identity(4));
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 4; ++y) {
      EXPECT_DOUBLE_EQ(left.at(x, y), channel.at(x, y));
      EXPECT_DOUBLE_EQ(right.at(x, y), channel.at(x, y));
    }
  }
}

// Randomized response with e^eps = 2 into the two-block channel, checked
// against an independent triple-loop product.
TEST(Compose, MatchesTripleLoopProduct) {
  std::vector<std::vector<double>> rr(4, std::vector<double>(4, 0.2));
  for (int i = 0; i < 4; ++i) rr[static_cast<size_t>(i)][static_cast<size_t>(i)] = 0.4;
  const auto first = Channel::from_rows(rr);
  const auto second = two_block_fixture();
  const auto composed = compose(first, second);
  for (int w = 0; w < 4; ++w) {
    for (int y = 0; y < 4; ++y) {
      double expected = 0.0;
      for (int x = 0; x < 4; ++x) expected += first.at(w, x) * second.at(x, y);
      EXPECT_NEAR(composed.at(w, y), expected, 1e-15);
    }
  }
}

TEST(Compose, SizeMismatchThrows) {
  EXPECT_THROW(compose(Channel::identity(3), Channel::identity(4)),
               DimensionMismatch);
}

TEST(PushForwardProperty, PreservesNormalization) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dims(1, 6);
  for (int i = 0; i < 10000; ++i) {
    const int in = dims(rng);
    const int out = dims(rng);
    const auto channel = random_channel(rng, in, out);
    const auto result = push_forward(channel, random_distribution(rng, in));
    double sum = 0.0;
    for (int y = 0; y < result.size(); ++y) sum += result[y];
    ASSERT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(ComposeProperty, AgreesWithChainedPushForward) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> dims(1, 5);
  for (int i = 0; i < 500; ++i) {
    const int a = dims(rng), b = dims(rng), c = dims(rng);
    const auto first = random_channel(rng, a, b);
    const auto second = random_channel(rng, b, c);
    const auto input = random_distribution(rng, a);
    const auto direct = push_forward(compose(first, second), input);
    const auto chained = push_forward(second, push_forward(first, input));
    for (int y = 0; y < c; ++y) {
      ASSERT_NEAR(direct[y], chained[y], 1e-12);
    }
  }
}

TEST(SupportProperty, OutputSupportWithinReachableSet) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const auto channel = testing::random_sparse_channel(rng, 4, 5, 0.4);
    const auto input = random_distribution(rng, 4);
    const auto out_support = support(push_forward(channel, input));
    SupportSet reachable;
    for (int y = 0; y < 5; ++y) {
      for (int x : support(input).indices) {
        if (channel.at(x, y) > 0.0) {
          reachable.indices.push_back(y);
          break;
        }
      }
    }
    for (int y : out_support.indices) {
      ASSERT_TRUE(reachable.contains(y));
    }
  }
}

}  // namespace
}  // namespace falpha
