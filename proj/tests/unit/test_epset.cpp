#include <gtest/gtest.h>

#include "brute.hpp"
#include "redpow/error.hpp"
#include "redpow/epset.hpp"

using namespace redpow;

namespace {

const EPSet kEven = EPSet::progression(0, 2);
const EPSet kOdd = EPSet::progression(1, 2);

} // namespace

TEST(EPSet, Examples) {
  EXPECT_EQ(intersect(kEven, EPSet::progression(0, 3)), EPSet::progression(0, 6));
  EXPECT_EQ(complement(kEven), kOdd);
  EXPECT_EQ(unite(kEven, kOdd), EPSet::naturals());
  EXPECT_EQ(difference(EPSet::naturals(), EPSet::finite({0, 1, 2})), EPSet(3, 1, {0}, {}));
  EXPECT_FALSE(kEven.is_finite());
  EXPECT_TRUE(is_subset(EPSet::progression(0, 6), kEven));
  EXPECT_EQ(kOdd.enumerate(3), (std::vector<Index>{1, 3, 5}));
}

TEST(EPSet, EmptyRepresentation) {
  const EPSet e = EPSet::empty();
  EXPECT_TRUE(e.is_empty());
  EXPECT_TRUE(e.is_finite());
  EXPECT_EQ(e.threshold(), 0u);
  EXPECT_EQ(e.period(), 1u);
  EXPECT_TRUE(e.residues().empty());
  EXPECT_TRUE(e.head().empty());
  EXPECT_EQ(intersect(kEven, kOdd), e);
  EXPECT_EQ(EPSet::finite(std::vector<Index>{}), e);
}

TEST(EPSet, CanonicalFormIsMinimal) {
  // Same set written with a redundant period and threshold.
  EXPECT_EQ(EPSet(4, 4, {0, 2}, {0, 2}), kEven);
  EXPECT_EQ(EPSet(5, 6, {1, 3, 5}, {1, 3}), kOdd);
  const EPSet s(3, 4, {1}, {0});
  EXPECT_EQ(s.period(), 4u);
  EXPECT_EQ(s.threshold(), 2u);
}

TEST(EPSet, InvalidConstruction) {
  EXPECT_THROW(EPSet(0, 0, {}, {}), std::invalid_argument);
  EXPECT_THROW(EPSet(2, 3, {3}, {}), std::invalid_argument);
  EXPECT_THROW(EPSet(2, 3, {}, {2}), std::invalid_argument);
  EXPECT_THROW(EPSet::progression(0, 0), std::invalid_argument);
}

TEST(EPSet, ToString) {
  EXPECT_EQ(EPSet::naturals().to_string(), "nat");
  EXPECT_EQ(EPSet::empty().to_string(), "{}");
  EXPECT_EQ(kEven.to_string(), "AP(0,2)");
  EXPECT_EQ(EPSet::finite({1, 3, 7}).to_string(), "{1,3,7}");
  EXPECT_EQ(EPSet::at_least(3).to_string(), "nat \\ {0..2}");
}

TEST(EPSet, ConstructorMatchesModel) {
  random::Source src(11);
  for (int i = 0; i < 1000; ++i) {
    const auto m = brute::SetModel::random(src);
    const EPSet s = m.build();
    for (Index n = 0; n < 200; ++n)
      ASSERT_EQ(s.contains(n), m.has(n)) << s << " at " << n;
  }
}

TEST(EPSet, BooleanOperationsMatchBitmaps) {
  random::Source src(12);
  constexpr Index kN = 10'000;
  for (int i = 0; i < 1000; ++i) {
    const auto ma = brute::SetModel::random(src);
    const auto mb = brute::SetModel::random(src);
    const EPSet a = ma.build(), b = mb.build();
    const EPSet both = intersect(a, b), either = unite(a, b), diff = difference(a, b),
                comp = complement(a);
    const Index limit = i < 50 ? kN : 500;
    for (Index n = 0; n < limit; ++n) {
      const bool x = ma.has(n), y = mb.has(n);
      ASSERT_EQ(both.contains(n), x && y);
      ASSERT_EQ(either.contains(n), x || y);
      ASSERT_EQ(diff.contains(n), x && !y);
      ASSERT_EQ(comp.contains(n), !x);
    }
  }
}

TEST(EPSet, BooleanLaws) {
  random::Source src(13);
  for (int i = 0; i < 1000; ++i) {
    const EPSet a = random::any_set(src), b = random::any_set(src), c = random::any_set(src);
    ASSERT_EQ(intersect(a, a), a);
    ASSERT_EQ(intersect(a, complement(a)), EPSet::empty());
    ASSERT_EQ(complement(complement(a)), a);
    ASSERT_EQ(complement(unite(a, b)), intersect(complement(a), complement(b)));
    ASSERT_EQ(intersect(a, unite(b, c)), unite(intersect(a, b), intersect(a, c)));
    ASSERT_EQ(difference(a, b), intersect(a, complement(b)));
    ASSERT_EQ(intersect(a, b), intersect(b, a));
  }
}

TEST(EPSet, CanonicalIdempotence) {
  random::Source src(14);
  for (int i = 0; i < 1000; ++i) {
    const EPSet s = random::any_set(src);
    ASSERT_EQ(EPSet(s.threshold(), s.period(), s.residues(), s.head()), s);
    std::vector<bool> window(s.threshold() + 2 * s.period());
    for (Index n = 0; n < window.size(); ++n)
      window[n] = s.contains(n);
    ASSERT_EQ(EPSet::from_window(s.threshold(), 2 * s.period(), window), s);
  }
}

TEST(EPSet, StructuralEqualityIsSemantic) {
  random::Source src(15);
  for (int i = 0; i < 2000; ++i) {
    const auto ma = brute::SetModel::random(src);
    const auto mb = brute::SetModel::random(src);
    bool same = true;
    for (Index n = 0; n < 1000 && same; ++n)
      same = ma.has(n) == mb.has(n);
    ASSERT_EQ(ma.build() == mb.build(), same);
  }
}

TEST(EPSet, SubsetAndAlmostEqual) {
  random::Source src(16);
  for (int i = 0; i < 1000; ++i) {
    const auto ma = brute::SetModel::random(src);
    const auto mb = brute::SetModel::random(src);
    const EPSet a = ma.build(), b = mb.build();
    bool subset = true, tails_equal = true;
    for (Index n = 0; n < 1000; ++n) {
      subset = subset && (!ma.has(n) || mb.has(n));
      if (n >= 500)
        tails_equal = tails_equal && ma.has(n) == mb.has(n);
    }
    ASSERT_EQ(is_subset(a, b), subset);
    ASSERT_EQ(almost_equal(a, b), tails_equal);
  }
}

TEST(EPSet, EnumerationAndSize) {
  random::Source src(17);
  for (int i = 0; i < 500; ++i) {
    const EPSet s = random::any_set(src);
    const auto scanned = brute::first_members(s, 30, 2000);
    if (s.is_finite()) {
      ASSERT_EQ(s.size(), scanned.size());
      ASSERT_EQ(s.enumerate(scanned.size()), scanned);
      try {
        s.enumerate(scanned.size() + 1);
        FAIL() << "expected InsufficientElements";
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::InsufficientElements);
      }
    } else {
      ASSERT_FALSE(s.size().has_value());
      ASSERT_EQ(s.enumerate(30), scanned);
    }
    for (Index from = 0; from < 40; ++from) {
      std::optional<Index> expect;
      for (Index n : scanned)
        if (n >= from) {
          expect = n;
          break;
        }
      if (expect || s.is_finite())
        ASSERT_EQ(s.next_member(from), expect);
    }
  }
}

TEST(EPSet, TailAndEvenPositions) {
  random::Source src(18);
  for (int i = 0; i < 500; ++i) {
    const EPSet s = random::infinite_set(src);
    const EPSet t = s.tail();
    ASSERT_EQ(t.threshold(), 0u);
    ASSERT_TRUE(almost_equal(s, t));
    const EPSet even = s.even_positions();
    const auto members = s.enumerate(60);
    for (std::size_t k = 0; k < members.size(); ++k)
      ASSERT_EQ(even.contains(members[k]), k % 2 == 0);
    ASSERT_TRUE(is_subset(even, s));
    ASSERT_FALSE(even.is_finite());
    ASSERT_FALSE(difference(s, even).is_finite());
  }
}
