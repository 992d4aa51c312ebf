#include <gtest/gtest.h>

#include <limits>

#include "eventling/region.hpp"
#include "oracle.hpp"

namespace eventling {
namespace {

const Universe kAge(0, 80);

Region R(std::initializer_list<Interval> ivs) { return normalize(ivs, kAge); }

std::vector<Interval> parts(std::initializer_list<Interval> ivs) { return ivs; }

TEST(Normalize, MergesOverlapping) {
  EXPECT_EQ(R({{10, 30}, {20, 40}}).parts(), parts({{10, 40}}));
}

TEST(Normalize, FusesAdjacent) {
  EXPECT_EQ(R({{10, 20}, {20, 30}}).parts(), parts({{10, 30}}));
}

TEST(Normalize, EmptyInputIsEmptyRegion) {
  EXPECT_TRUE(R({}).is_empty());
  EXPECT_EQ(R({}), Region::empty(kAge));
}

TEST(Normalize, ZeroLengthContributesNothing) {
  EXPECT_TRUE(R({{15, 15}}).is_empty());
  EXPECT_EQ(R({{15, 15}, {1, 2}}).parts(), parts({{1, 2}}));
}

TEST(Normalize, ClipsToUniverse) {
  EXPECT_EQ(R({{-5, 10}, {70, 95}}).parts(), parts({{0, 10}, {70, 80}}));
}

TEST(Normalize, Errors) {
  const double inf = std::numeric_limits<double>::infinity();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ConfigError;
  };
  EXPECT_EQ(code_of([&] { R({{0, inf}}); }), ErrorCode::InvalidInterval);
  EXPECT_EQ(code_of([&] { R({{nan, 3}}); }), ErrorCode::InvalidInterval);
  EXPECT_EQ(code_of([&] { R({{5, 3}}); }), ErrorCode::InvalidInterval);
  EXPECT_EQ(code_of([&] { R({{80, 90}}); }), ErrorCode::OutOfUniverse);
  EXPECT_EQ(code_of([&] { R({{-9, 0}}); }), ErrorCode::OutOfUniverse);
  EXPECT_THROW(Universe(3, 3), Error);
}

TEST(Union, Examples) {
  EXPECT_EQ(unite(R({{10, 30}}), R({{20, 40}})).parts(), parts({{10, 40}}));
  const Region r = R({{3, 9}, {40, 50}});
  EXPECT_EQ(unite(r, Region::empty(kAge)), r);
  EXPECT_EQ(unite(R({{0, 10}}), R({{20, 30}})).parts(), parts({{0, 10}, {20, 30}}));
}

TEST(Intersect, Examples) {
  EXPECT_EQ(intersect(R({{10, 30}}), R({{20, 40}})).parts(), parts({{20, 30}}));
  EXPECT_TRUE(intersect(R({{0, 10}}), R({{20, 30}})).is_empty());
  const Region r = R({{3, 9}, {40, 50}});
  EXPECT_EQ(intersect(r, r), r);
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(R({{20, 30}}), kAge).parts(), parts({{0, 20}, {30, 80}}));
  EXPECT_EQ(complement(Region::empty(kAge), kAge), Region::full(kAge));
  const Region r = R({{0, 9}, {40, 50}});
  EXPECT_EQ(complement(complement(r)), r);
}

TEST(SymDiff, Examples) {
  EXPECT_EQ(symdiff(R({{10, 30}}), R({{20, 40}})).parts(), parts({{10, 20}, {30, 40}}));
  const Region r = R({{3, 9}, {40, 50}});
  EXPECT_TRUE(symdiff(r, r).is_empty());
  EXPECT_EQ(symdiff(r, Region::empty(kAge)), r);
}

TEST(Contains, HalfOpenConvention) {
  const Region r = R({{10, 30}});
  EXPECT_TRUE(r.contains(10));
  EXPECT_FALSE(r.contains(30));
  EXPECT_FALSE(Region::empty(kAge).contains(10));
  EXPECT_FALSE(r.contains(-1));
}

TEST(Breakpoints, Examples) {
  const std::vector<Region> one{R({{10, 30}})};
  EXPECT_EQ(breakpoints(one, kAge), (std::vector<double>{0, 10, 30, 80}));
  EXPECT_EQ(breakpoints({}, kAge), (std::vector<double>{0, 80}));
  const std::vector<Region> two{R({{10, 20}}), R({{10, 40}})};
  EXPECT_EQ(breakpoints(two, kAge), (std::vector<double>{0, 10, 20, 40, 80}));
}

TEST(Region, UniverseMismatch) {
  const Region a = Region::interval(1, 2, Universe(0, 10));
  const Region b = Region::interval(1, 2, Universe(0, 20));
  try {
    unite(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UniverseMismatch);
  }
  EXPECT_THROW(complement(a, Universe(0, 20)), Error);
}

TEST(Region, DecimalEndpointsAreExact) {
  const Universe u(0, 1);
  const Region a = Region::interval(0.1, 0.3, u);
  const Region b = Region::interval(0.3, 0.7, u);
  EXPECT_EQ(unite(a, b).parts(), parts({{0.1, 0.7}}));
  EXPECT_DOUBLE_EQ(unite(a, b).measure(), 0.6);
}

// Property tests against the bit-vector model.

class RegionProperties : public ::testing::Test {
 protected:
  testing::Rng rng{20261017};
};

TEST_F(RegionProperties, OperationsAgreeWithBitVectorModel) {
  for (int iter = 0; iter < 300; ++iter) {
    const int n = testing::uniform(rng, 1, 64);
    const Universe u(0, n);
    const auto ra = testing::random_raw(rng, n, 5);
    const auto rb = testing::random_raw(rng, n, 5);
    const Region a = testing::to_region(ra, u);
    const Region b = testing::to_region(rb, u);
    const auto ba = testing::bits_of(ra, n);
    const auto bb = testing::bits_of(rb, n);

    ASSERT_EQ(testing::bits_of(a, n), ba);
    EXPECT_EQ(testing::bits_of(unite(a, b), n), testing::zip(ba, bb, [](bool x, bool y) { return x || y; }));
    EXPECT_EQ(testing::bits_of(intersect(a, b), n), testing::zip(ba, bb, [](bool x, bool y) { return x && y; }));
    EXPECT_EQ(testing::bits_of(symdiff(a, b), n), testing::zip(ba, bb, [](bool x, bool y) { return x != y; }));
    EXPECT_EQ(testing::bits_of(complement(a), n), testing::zip(ba, ba, [](bool x, bool) { return !x; }));
    for (const auto& r : {unite(a, b), intersect(a, b), symdiff(a, b), complement(a)}) {
      EXPECT_TRUE(r.is_canonical()) << r.to_string();
    }
  }
}

TEST_F(RegionProperties, BooleanAlgebraLaws) {
  const Universe u(0, 50);
  for (int iter = 0; iter < 300; ++iter) {
    const Region a = testing::to_region(testing::random_raw(rng, 50, 4), u);
    const Region b = testing::to_region(testing::random_raw(rng, 50, 4), u);
    const Region c = testing::to_region(testing::random_raw(rng, 50, 4), u);
    EXPECT_EQ(unite(a, b), unite(b, a));
    EXPECT_EQ(intersect(a, b), intersect(b, a));
    EXPECT_EQ(unite(unite(a, b), c), unite(a, unite(b, c)));
    EXPECT_EQ(intersect(intersect(a, b), c), intersect(a, intersect(b, c)));
    EXPECT_EQ(intersect(a, unite(b, c)), unite(intersect(a, b), intersect(a, c)));
    EXPECT_EQ(unite(a, intersect(b, c)), intersect(unite(a, b), unite(a, c)));
    EXPECT_EQ(complement(unite(a, b)), intersect(complement(a), complement(b)));
    EXPECT_EQ(complement(intersect(a, b)), unite(complement(a), complement(b)));
    EXPECT_EQ(unite(a, intersect(a, b)), a);
    EXPECT_EQ(intersect(a, unite(a, b)), a);
    EXPECT_EQ(complement(complement(a)), a);
    EXPECT_EQ(symdiff(a, b), difference(unite(a, b), intersect(a, b)));
  }
}

TEST_F(RegionProperties, ContainsConsistentWithOperations) {
  const Universe u(0, 40);
  for (int iter = 0; iter < 200; ++iter) {
    const Region a = testing::to_region(testing::random_raw(rng, 40, 4), u);
    const Region b = testing::to_region(testing::random_raw(rng, 40, 4), u);
    const std::vector<Region> both{a, b};
    const auto bps = breakpoints(both, u);
    std::vector<double> probes(bps.begin(), bps.end() - 1);
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) probes.push_back((bps[i] + bps[i + 1]) / 2);
    for (double w : probes) {
      EXPECT_EQ(unite(a, b).contains(w), a.contains(w) || b.contains(w));
      EXPECT_EQ(intersect(a, b).contains(w), a.contains(w) && b.contains(w));
      EXPECT_EQ(symdiff(a, b).contains(w), a.contains(w) != b.contains(w));
      EXPECT_EQ(complement(a).contains(w), !a.contains(w));
    }
  }
}

}  // namespace
}  // namespace eventling
