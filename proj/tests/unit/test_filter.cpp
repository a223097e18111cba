#include <gtest/gtest.h>

#include "brute.hpp"
#include "redpow/error.hpp"
#include "redpow/filter.hpp"

using namespace redpow;

namespace {

const EPSet kNat = EPSet::naturals();
const EPSet kEven = EPSet::progression(0, 2);
const EPSet kOdd = EPSet::progression(1, 2);

Filter gen(std::vector<EPSet> g) { return Filter::generated(kNat, std::move(g)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::SyntaxError;
}

} // namespace

TEST(Filter, Frechet) {
  const Filter f = Filter::frechet(kNat);
  EXPECT_TRUE(f.contains(EPSet::at_least(10)));
  EXPECT_FALSE(f.contains(kEven));
  EXPECT_FALSE(f.contains(EPSet::finite({1, 2, 3})));
  EXPECT_EQ(f.describe(), "Fre(nat)");
  EXPECT_EQ(code_of([] { Filter::frechet(EPSet::finite({1})); }), ErrorCode::DegenerateCarrier);
}

TEST(Filter, Generated) {
  EXPECT_EQ(gen({kEven}).core(), kEven);
  EXPECT_EQ(gen({kEven, EPSet::progression(0, 3)}).core(), EPSet::progression(0, 6));
  EXPECT_EQ(code_of([] { gen({kEven, kOdd}); }), ErrorCode::DegenerateFilter);
  EXPECT_EQ(code_of([] { Filter::generated(kEven, {kNat}); }), ErrorCode::GeneratorNotInCarrier);
  EXPECT_TRUE(gen({kEven}).contains(kEven));
  EXPECT_FALSE(gen({kEven}).contains(EPSet::progression(0, 4)));
  EXPECT_TRUE(gen({kEven}).contains(difference(kEven, EPSet::finite({0, 2}))));
  EXPECT_EQ(code_of([] { Filter::frechet(kEven).contains(kNat); }), ErrorCode::NotInCarrier);
  EXPECT_EQ(gen({kEven}).describe(), "Fre(nat) + [AP(0,2)]");
}

TEST(Filter, Subfilter) {
  random::Source src(40);
  for (int i = 0; i < 50; ++i)
    EXPECT_TRUE(is_subfilter(Filter::frechet(kNat), random::filter(src, kNat)));
  EXPECT_TRUE(is_subfilter(gen({kEven}), gen({EPSet::progression(0, 4)})));
  EXPECT_FALSE(is_subfilter(gen({kEven}), gen({kOdd})));
  EXPECT_EQ(code_of([] { is_subfilter(Filter::frechet(kNat), Filter::frechet(kEven)); }),
            ErrorCode::CarrierMismatch);
}

TEST(Filter, Restriction) {
  EXPECT_TRUE(gen({kEven}).admits_restriction(kEven));
  EXPECT_FALSE(Filter::frechet(kNat).admits_restriction(kEven));
  EXPECT_TRUE(gen({EPSet::progression(0, 4)}).admits_restriction(kEven));
  const Filter r = gen({kEven}).restrict(kEven);
  EXPECT_EQ(r.carrier(), kEven);
  EXPECT_TRUE(equivalent(r, Filter::frechet(kEven)));
  EXPECT_EQ(gen({EPSet::progression(0, 4)}).restrict(kEven).core(), EPSet::progression(0, 4));
  EXPECT_EQ(code_of([] { Filter::frechet(kNat).restrict(kEven); }), ErrorCode::RestrictionInvalid);
}

// Membership decided by the core against a pointwise window.
TEST(Filter, MembershipMatchesWindow) {
  random::Source src(41);
  for (int i = 0; i < 300; ++i) {
    const EPSet carrier = random::infinite_set(src);
    const Filter f = random::filter(src, carrier);
    for (int k = 0; k < 10; ++k) {
      const EPSet j = intersect(random::any_set(src), carrier);
      ASSERT_EQ(f.contains(j), brute::member_on_window(j, f.core(), 2000, 4000));
    }
  }
}

TEST(Filter, Axioms) {
  random::Source src(42);
  for (int i = 0; i < 300; ++i) {
    const EPSet carrier = random::infinite_set(src);
    const Filter f = random::filter(src, carrier);
    ASSERT_TRUE(f.contains(carrier));
    ASSERT_FALSE(f.contains(EPSet::empty()));
    for (const auto& g : f.generators())
      ASSERT_TRUE(f.contains(g));
    for (int k = 0; k < 10; ++k) {
      const EPSet a = unite(f.core(), intersect(random::any_set(src), carrier));
      const EPSet b = difference(f.core(), EPSet::finite({0, 1, 2, 3}));
      ASSERT_TRUE(f.contains(a));
      ASSERT_TRUE(f.contains(b));
      ASSERT_TRUE(f.contains(intersect(a, b)));
      const EPSet finite_part = intersect(carrier, EPSet::range(0, 20));
      ASSERT_FALSE(f.contains(finite_part));
    }
  }
}

TEST(Filter, SubfilterIsAPreorderAndRestrictionIsMonotone) {
  random::Source src(43);
  for (int i = 0; i < 300; ++i) {
    const EPSet carrier = random::infinite_set(src);
    const Filter f = random::filter(src, carrier, 2);
    // g refines f by one more generator meeting the core infinitely.
    std::vector<EPSet> more = f.generators();
    more.push_back(random::infinite_subset(src, f.core()));
    const Filter g = Filter::generated(carrier, more);
    ASSERT_TRUE(is_subfilter(f, f));
    ASSERT_TRUE(is_subfilter(f, g));
    ASSERT_EQ(is_subfilter(g, f), equivalent(f, g));
    ASSERT_EQ(equivalent(f, g), f.describe() == g.describe());
    const EPSet lambda = unite(f.core(), intersect(random::any_set(src), carrier));
    ASSERT_TRUE(f.admits_restriction(lambda));
    ASSERT_TRUE(g.admits_restriction(lambda));
    ASSERT_TRUE(is_subfilter(f.restrict(lambda), g.restrict(lambda)));
    // F|Λ = {I ∩ Λ : I ∈ F}.
    for (const auto& gen : f.generators())
      ASSERT_TRUE(f.restrict(lambda).contains(intersect(gen, lambda)));
  }
}
