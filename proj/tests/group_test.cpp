#include <gtest/gtest.h>

#include <complex>

#include "corr/group.hpp"

using namespace corr;

TEST(MuN, Multiplication) {
  GroupSpec G = GroupSpec::mu(6);
  EXPECT_EQ(G.mul(G.element({2}), G.element({5})), G.element({1}));
  EXPECT_EQ(G.mul(G.element({3}), G.element({3})), G.identity());
  EXPECT_EQ(G.inverse(G.element({2})), G.element({4}));
  EXPECT_EQ(G.pow(G.element({5}), 3), G.element({3}));
}

TEST(MuN, ZeroAbsorbs) {
  GroupSpec G = GroupSpec::mu(6);
  EXPECT_EQ(G.mul(G.zero(), G.element({2})), G.zero());
  EXPECT_EQ(G.mul(G.element({2}), G.zero()), G.zero());
  EXPECT_THROW(G.inverse(G.zero()), std::domain_error);
}

TEST(MuN, LthRoots) {
  GroupSpec G = GroupSpec::mu(6);
  // roots y with 2y = 2 mod 6: y in {1, 4}
  auto roots = G.lth_roots(G.element({2}), 2);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0], G.element({1}));
  EXPECT_EQ(roots[1], G.element({4}));
  // brute-force oracle over the whole group
  for (long l : {2L, 3L, 6L}) {
    for (auto& x : G.all_elements()) {
      auto fast = G.lth_roots(x, l);
      std::vector<GroupElement> slow;
      for (auto& y : G.all_elements())
        if (G.pow(y, l) == x) slow.push_back(y);
      std::sort(fast.begin(), fast.end());
      std::sort(slow.begin(), slow.end());
      EXPECT_EQ(fast, slow);
    }
  }
  // indivisible element has no roots; 5 is not divisible by 2 in mu_6
  EXPECT_TRUE(G.lth_roots(G.element({5}), 2).empty());
  // zero letter: l copies of zero
  auto zr = G.lth_roots(G.zero(), 3);
  ASSERT_EQ(zr.size(), 3u);
  for (auto& z : zr) EXPECT_TRUE(z.zero);
}

TEST(MuN, EmbedIsHomomorphism) {
  GroupSpec G = GroupSpec::mu(6);
  for (auto& a : G.all_elements())
    for (auto& b : G.all_elements()) {
      auto lhs = G.embed(G.mul(a, b));
      auto rhs = G.embed(a) * G.embed(b);
      EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
    }
  EXPECT_NEAR(std::abs(G.embed(G.identity()) - std::complex<double>(1.0)), 0.0, 1e-12);
}

TEST(MuN, ParsePrintRoundTrip) {
  GroupSpec G = GroupSpec::mu(6);
  for (auto& g : G.all_elements()) EXPECT_EQ(G.parse(G.print(g)), g);
  EXPECT_EQ(G.parse("0"), G.zero());
  EXPECT_EQ(G.print(G.zero()), "0");
  EXPECT_EQ(G.parse("w^7"), G.element({1}));
  EXPECT_EQ(G.parse("w"), G.element({1}));
  EXPECT_EQ(G.print(G.element({1})), "w");
  EXPECT_EQ(G.print(G.element({0})), "1");
}

TEST(FreeAbelian, Basics) {
  GroupSpec G = GroupSpec::free_abelian(3);
  auto a = G.parse("a");
  auto b = G.parse("b");
  EXPECT_EQ(G.mul(a, b), G.parse("a*b"));
  EXPECT_EQ(G.parse("a^2*b^-1"), G.mul(G.mul(a, a), G.inverse(b)));
  EXPECT_EQ(G.print(G.parse("a^2*b^-1")), "a^2*b^-1");
  EXPECT_EQ(G.print(G.identity()), "1");
  EXPECT_EQ(G.inverse(G.parse("a^2*c^3")), G.parse("a^-2*c^-3"));
  // parse/print round trip over a sample of exponent vectors
  for (long x : {-3L, 0L, 1L, 5L})
    for (long y : {-1L, 0L, 2L}) {
      auto g = G.element({x, y, 0});
      EXPECT_EQ(G.parse(G.print(g)), g);
    }
}

TEST(FreeAbelian, RootsAndEmbed) {
  GroupSpec G = GroupSpec::free_abelian(2);
  auto g = G.parse("a^2*b^4");
  // l = 1 only (torsion-free): but exponent-divisible single root still exists for the root map
  auto roots = G.lth_roots(g, 2);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots[0], G.parse("a*b^2"));
  EXPECT_TRUE(G.lth_roots(G.parse("a"), 2).empty());

  std::map<std::string, std::complex<double>> assign{{"a", {0.5, 0.25}}, {"b", {-1.5, 2.0}}};
  auto lhs = G.embed(G.mul(G.parse("a"), G.parse("b")), assign);
  auto rhs = G.embed(G.parse("a"), assign) * G.embed(G.parse("b"), assign);
  EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
}

TEST(Order, ZeroSortsFirst) {
  GroupSpec G = GroupSpec::mu(4);
  EXPECT_LT(G.zero(), G.identity());
  EXPECT_LT(G.element({0}), G.element({1}));
}
