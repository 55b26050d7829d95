#include <gtest/gtest.h>

#include <random>

#include "corr/cyclic.hpp"

using namespace corr;

namespace {
CyclicWord random_word(const GroupSpec& G, int weight, std::mt19937& rng) {
  std::uniform_int_distribution<long> pick(0, G.N());  // 0 => zero letter
  std::vector<GroupElement> letters;
  for (int i = 0; i <= weight; ++i) {
    long v = pick(rng);
    letters.push_back(v == 0 ? G.zero() : G.element({v - 1}));
  }
  return CyclicWord(std::move(letters));
}

CyclicWord random_word_free(const GroupSpec& G, int weight, std::mt19937& rng) {
  std::uniform_int_distribution<long> exp(-2, 2);
  std::uniform_int_distribution<int> z(0, 3);
  std::vector<GroupElement> letters;
  for (int i = 0; i <= weight; ++i) {
    if (z(rng) == 0) {
      letters.push_back(G.zero());
    } else {
      std::vector<long> e(G.rank());
      for (auto& x : e) x = exp(rng);
      letters.push_back(G.element(std::move(e)));
    }
  }
  return CyclicWord(std::move(letters));
}
}  // namespace

TEST(CyclicWord, CanonicalRotation) {
  GroupSpec G = GroupSpec::mu(6);
  CyclicWord a({G.element({2}), G.zero(), G.element({1})});
  CyclicWord b({G.zero(), G.element({1}), G.element({2})});
  CyclicWord c({G.element({1}), G.element({2}), G.zero()});
  EXPECT_EQ(a, b);
  EXPECT_EQ(b, c);
  EXPECT_TRUE(a.letters[0].zero);  // zero letter sorts first
}

TEST(CyclicWord, WeightAndDepth) {
  GroupSpec G = GroupSpec::mu(6);
  CyclicWord w({G.element({1}), G.zero(), G.zero(), G.element({3})});
  EXPECT_EQ(w.weight(), 3);
  EXPECT_EQ(w.depth(), 1);
  EXPECT_FALSE(w.all_letters_equal());
  CyclicWord z({G.zero(), G.zero()});
  EXPECT_TRUE(z.all_letters_equal());
}

TEST(Coproduct, Weight1IsPrimitive) {
  GroupSpec G = GroupSpec::mu(6);
  CyclicWord w({G.element({1}), G.zero()});
  EXPECT_TRUE(coproduct(w).is_zero());
}

TEST(Coproduct, Weight2Explicit) {
  // delta C(x0,x1,x2) = (x0,x1)^(x0,x2) + (x1,x2)^(x1,x0) + (x2,x0)^(x2,x1)
  GroupSpec G = GroupSpec::mu(6);
  GroupElement x0 = G.element({1}), x1 = G.element({2}), x2 = G.element({4});
  WedgeComb expected;
  expected.add(CyclicWord({x0, x1}), CyclicWord({x0, x2}), 1);
  expected.add(CyclicWord({x1, x2}), CyclicWord({x1, x0}), 1);
  expected.add(CyclicWord({x2, x0}), CyclicWord({x2, x1}), 1);
  EXPECT_EQ(coproduct(CyclicWord({x0, x1, x2})), expected);
}

TEST(Coproduct, WeightHomogeneous) {
  GroupSpec G = GroupSpec::mu(6);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    CyclicWord w = random_word(G, 2 + trial % 4, rng);
    WedgeComb d = coproduct(w);
    for (auto& [k, c] : d.terms)
      EXPECT_EQ(k.first.weight() + k.second.weight(), w.weight());
  }
}

TEST(CoJacobi, RandomWordsMu6) {
  GroupSpec G = GroupSpec::mu(6);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    CyclicWord w = random_word(G, 2 + trial % 5, rng);
    EXPECT_TRUE(cojacobi_defect(w).is_zero()) << "weight " << w.weight();
  }
}

TEST(CoJacobi, RandomWordsFreeAbelian) {
  GroupSpec G = GroupSpec::free_abelian(3);
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    CyclicWord w = random_word_free(G, 2 + trial % 4, rng);
    EXPECT_TRUE(cojacobi_defect(w).is_zero());
  }
}

TEST(LinComb, Arithmetic) {
  GroupSpec G = GroupSpec::mu(2);
  CyclicWord w({G.zero(), G.identity()});
  LinComb a = lincomb(w);
  LinComb b = a;
  b *= rat(3, 2);
  LinComb c = a - b;
  ASSERT_EQ(c.terms.size(), 1u);
  EXPECT_EQ(c.terms.begin()->second, rat(-1, 2));
  c += rat(1, 2) * a;
  EXPECT_TRUE(c.is_zero());
}

TEST(WedgeComb, Antisymmetry) {
  GroupSpec G = GroupSpec::mu(2);
  CyclicWord a({G.zero(), G.identity()});
  CyclicWord b({G.identity(), G.element({1})});
  WedgeComb w;
  w.add(a, b, 1);
  w.add(b, a, 1);
  EXPECT_TRUE(w.is_zero());
  w.add(a, a, 5);
  EXPECT_TRUE(w.is_zero());
}
