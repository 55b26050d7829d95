#include <gtest/gtest.h>

#include <random>

#include "corr/star.hpp"

using namespace corr;

namespace {
// Words equal up to rotation and simultaneous left-multiplication of all
// nonzero letters by a common factor?
bool equal_mod_rotation_scaling(const GroupSpec& G, const CyclicWord& a, const CyclicWord& b) {
  if (a.size() != b.size()) return false;
  // candidate scalings: those matching some nonzero letter of a to one of b
  for (auto& la : a.letters) {
    if (la.zero) continue;
    for (auto& lb : b.letters) {
      if (lb.zero) continue;
      GroupElement s = G.div(lb, la);
      std::vector<GroupElement> scaled;
      for (auto& l : a.letters) scaled.push_back(l.zero ? l : G.mul(s, l));
      if (CyclicWord(std::move(scaled)) == b) return true;
    }
  }
  return false;
}
}  // namespace

TEST(StarWord, BasicExpansion) {
  GroupSpec G = GroupSpec::free_abelian(3);
  auto a = G.parse("a"), b = G.parse("b");
  auto c = G.inverse(G.mul(a, b));
  // segments (c|0, a|0, b|0): word (1, a, ab)
  StarWord s{{{c, 0}, {a, 0}, {b, 0}}};
  CyclicWord w = star_to_word(G, s);
  EXPECT_EQ(w, CyclicWord({G.identity(), a, G.mul(a, b)}));
  EXPECT_EQ(s.weight(), 2);
  EXPECT_EQ(s.depth(), 2);
}

TEST(StarWord, ZeroRuns) {
  GroupSpec G = GroupSpec::mu(6);
  auto g = G.element({2});
  StarWord s{{{G.inverse(g), 1}, {g, 2}}};
  // word: 0, 1, 0, 0, g
  CyclicWord w = star_to_word(G, s);
  EXPECT_EQ(w, CyclicWord({G.zero(), G.identity(), G.zero(), G.zero(), g}));
  EXPECT_EQ(s.weight(), 4);
  EXPECT_EQ(s.depth(), 1);
}

TEST(StarWord, ValidationErrors) {
  GroupSpec G = GroupSpec::mu(6);
  StarWord bad{{{G.element({1}), 0}, {G.element({1}), 0}}};  // product != 1
  EXPECT_THROW(star_to_word(G, bad), std::invalid_argument);
  StarWord zero_seg{{{G.zero(), 0}}};
  EXPECT_THROW(star_to_word(G, zero_seg), std::invalid_argument);
}

TEST(DepthDecompose, RoundTripMu6) {
  GroupSpec G = GroupSpec::mu(6);
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> pick(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    int weight = 1 + trial % 5;
    std::vector<GroupElement> letters;
    bool has_nonzero = false;
    for (int i = 0; i <= weight; ++i) {
      long v = pick(rng);
      letters.push_back(v == 0 ? G.zero() : G.element({v - 1}));
      has_nonzero |= v != 0;
    }
    if (!has_nonzero) letters[0] = G.identity();
    CyclicWord w(std::move(letters));
    for (size_t rot = 0; rot < w.size(); ++rot) {
      StarWord s = depth_decompose(G, w, rot);
      EXPECT_EQ(s.weight(), w.weight());
      EXPECT_EQ(s.depth(), w.depth());
      CyclicWord back = star_to_word(G, s);
      EXPECT_TRUE(equal_mod_rotation_scaling(G, w, back))
          << "rot " << rot;
    }
  }
}

TEST(DepthDecompose, SegmentRatios) {
  // nonzero letters y_i give segments w_i = y_i / y_{i-1}
  GroupSpec G = GroupSpec::free_abelian(2);
  auto a = G.parse("a"), b = G.parse("b");
  CyclicWord w({a, G.zero(), b, G.parse("a*b")});
  // canonical form starts at the zero letter: (0, b, a*b, a)
  StarWord s = depth_decompose(G, w, 0);
  ASSERT_EQ(s.segs.size(), 3u);
  EXPECT_EQ(s.segs[0].second, 1);  // one zero before y_0 = b
  EXPECT_EQ(s.segs[0].first, G.div(b, a));
  EXPECT_EQ(s.segs[1].first, G.div(G.parse("a*b"), b));
  EXPECT_EQ(s.segs[2].first, G.div(a, G.parse("a*b")));
}

TEST(DepthDecompose, AllZeroFails) {
  GroupSpec G = GroupSpec::mu(2);
  EXPECT_THROW(depth_decompose(G, CyclicWord({G.zero(), G.zero()}), 0), std::domain_error);
}
