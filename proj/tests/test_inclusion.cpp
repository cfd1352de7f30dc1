#include <gtest/gtest.h>

#include <algorithm>

#include "gauge/errors.hpp"
#include "gauge/inclusion.hpp"
#include "support.hpp"

using namespace gauge;
using gauge::testing::all_signatures;
using gauge::testing::naive_inclusions;

TEST(Inclusion, SolverMatchesFullScan) {
  auto sigs = all_signatures(4);
  long pairs = 0;
  for (const auto& a : sigs)
    for (const auto& b : sigs) {
      if (a.n() != b.n()) continue;
      std::vector<std::vector<int>> got;
      for (const auto& d : solve_inclusion_matrices(a, b)) got.push_back(d.entries());
      EXPECT_EQ(got, naive_inclusions(a, b)) << to_string(a) << " -> " << to_string(b);
      ++pairs;
    }
  EXPECT_EQ(pairs, 383);
}

TEST(Inclusion, SolverMatchesFullScanForFive) {
  auto sigs = enumerate_signatures(5, true);
  for (const auto& a : sigs)
    for (const auto& b : sigs) {
      std::vector<std::vector<int>> got;
      for (const auto& d : solve_inclusion_matrices(a, b)) got.push_back(d.entries());
      EXPECT_EQ(got, naive_inclusions(a, b)) << to_string(a) << " -> " << to_string(b);
    }
}

TEST(Inclusion, SU4Example) {
  HoweSignature j({1, 1}, {2, 2});
  HoweSignature jp({2, 2}, {1, 1});
  auto sols = solve_inclusion_matrices(j, jp);
  ASSERT_EQ(sols.size(), 3u);
  EXPECT_EQ(to_string(sols[0]), "[[0,2],[2,0]]");
  EXPECT_EQ(to_string(sols[1]), "[[1,1],[1,1]]");
  EXPECT_EQ(to_string(sols[2]), "[[2,0],[0,2]]");
  for (const auto& d : sols) EXPECT_EQ(level(d), 4);
}

TEST(Inclusion, DifferentRanksThrow) {
  EXPECT_THROW(solve_inclusion_matrices(HoweSignature({1}, {2}), HoweSignature({3}, {1})), DomainError);
}

TEST(Inclusion, ConstructorValidates) {
  HoweSignature j({1, 1}, {2, 2});
  HoweSignature jp({2, 2}, {1, 1});
  EXPECT_THROW(InclusionMatrix(j, jp, {1, 0, 0, 1}), ValidationError);
  EXPECT_THROW(InclusionMatrix(j, jp, {1, 1, 1}), ValidationError);
  EXPECT_NO_THROW(InclusionMatrix(j, jp, {1, 1, 1, 1}));
}

TEST(Inclusion, SU8Levels) {
  HoweSignature j({1, 2}, {4, 2});
  HoweSignature jp({4, 2}, {1, 2});
  EXPECT_EQ(level(InclusionMatrix(j, jp, {4, 0, 0, 1})), 6);
  EXPECT_EQ(level(InclusionMatrix(j, jp, {0, 2, 2, 0})), 4);
}

TEST(Inclusion, LevelProfileIdentities) {
  auto sigs = all_signatures(4);
  for (const auto& a : sigs)
    for (const auto& b : sigs) {
      if (a.n() != b.n()) continue;
      for (const auto& d : solve_inclusion_matrices(a, b)) {
        LevelProfile p = level_profile(d);
        int plus = 0, minus = 0;
        for (int v : p.plus) plus += v;
        for (int v : p.minus) minus += v;
        const int r = static_cast<int>(a.rank()), rp = static_cast<int>(b.rank());
        EXPECT_EQ(p.level, plus + minus);
        EXPECT_EQ(p.level, 2 * plus + r - rp);
        EXPECT_EQ(p.level, 2 * minus + rp - r);
        EXPECT_TRUE(std::all_of(p.plus.begin(), p.plus.end(), [](int v) { return v >= 0; }));
        EXPECT_TRUE(std::all_of(p.minus.begin(), p.minus.end(), [](int v) { return v >= 0; }));
      }
    }
}

TEST(Inclusion, ComposeIdentityAndAssociativity) {
  auto sigs = all_signatures(3);
  for (const auto& a : sigs)
    for (const auto& b : sigs) {
      if (a.n() != b.n()) continue;
      for (const auto& d : solve_inclusion_matrices(a, b)) {
        EXPECT_EQ(compose(d, InclusionMatrix::identity(a)), d);
        EXPECT_EQ(compose(InclusionMatrix::identity(b), d), d);
        for (const auto& c : sigs) {
          if (c.n() != a.n()) continue;
          for (const auto& e : solve_inclusion_matrices(b, c))
            for (const auto& f : solve_inclusion_matrices(c, a))
              EXPECT_EQ(compose(f, compose(e, d)), compose(compose(f, e), d));
        }
      }
    }
}

TEST(Inclusion, ComposeMismatchThrows) {
  HoweSignature a({1, 1}, {1, 1});
  HoweSignature b({2}, {1});
  InclusionMatrix d = solve_inclusion_matrices(a, b).front();
  EXPECT_THROW(compose(d, d), DomainError);
}

TEST(Bratteli, ParallelEdgesInOrder) {
  HoweSignature j({1, 1}, {2, 2});
  HoweSignature jp({2, 2}, {1, 1});
  auto art = render_bratteli(InclusionMatrix(j, jp, {0, 2, 2, 0}));
  const std::string expected_edges =
      "  u2 -- l1;\n"
      "  u2 -- l1;\n"
      "  u1 -- l2;\n"
      "  u1 -- l2;\n";
  EXPECT_NE(art.dot.find(expected_edges), std::string::npos) << art.dot;
  EXPECT_NE(art.text.find("2 || 1  (x2)"), std::string::npos) << art.text;
}

TEST(Bratteli, EdgeCountIsEntrySum) {
  for (const auto& a : all_signatures(4))
    for (const auto& d : solve_inclusion_matrices(a, HoweSignature({a.n()}, {1}))) {
      auto dot = render_bratteli(d).dot;
      std::size_t edges = 0;
      for (std::size_t pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1)) ++edges;
      EXPECT_EQ(static_cast<int>(edges), d.total());
    }
}

TEST(Bratteli, Labels) {
  HoweSignature j({1, 1}, {1, 1});
  HoweSignature jp({2}, {1});
  InclusionMatrix d(j, jp, {1, 1});
  auto art = render_bratteli(d, BratteliLabels{{"a", "b"}, {"c"}});
  EXPECT_NE(art.dot.find("label=\"1 a\""), std::string::npos);
  EXPECT_NE(art.dot.find("label=\"1 c\""), std::string::npos);
  EXPECT_THROW(render_bratteli(d, BratteliLabels{{"a"}, {"c"}}), ValidationError);
}
