#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "gperm/statistics.hpp"

using namespace gperm;

TEST_CASE("descents of a standardized word") {
  // std(845912) = 534612 with descents {1,4}
  Perm s = standardize({8, 4, 5, 9, 1, 2});
  CHECK(descent_set(s) == std::vector<int>{1, 4});
  CHECK(descent_comp(s) == Composition{1, 3, 2});
  CHECK(descent_comp(perm_identity(4)) == Composition{4});
  CHECK(descent_comp(Perm{}) == Composition{});
  CHECK(descent_comp(longest_element({5})) == Composition{1, 1, 1, 1, 1});
}

TEST_CASE("descent fibers are balanced by the omega recipe") {
  // for every subset I of [1,n-1] some permutation has descent set I
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> seen;
    for (const Perm& w : enumerate_sn(n)) seen.insert(descent_set(w));
    CHECK(seen.size() == (1u << (n - 1)));
  }
}

TEST_CASE("interior and exterior peak sets") {
  Perm w{1, 4, 2, 6, 7, 3, 5};
  CHECK(interior_peak_set(w) == std::vector<int>{2, 5});
  CHECK(exterior_peak_set(w) == std::vector<int>{2, 5});
  Perm v{3, 1, 2};
  CHECK(interior_peak_set(v).empty());
  CHECK(exterior_peak_set(v) == std::vector<int>{1});
  CHECK(exterior_peak_comp(v) == Composition{1, 2});
  CHECK(interior_peak_comp(v) == Composition{3});

  for (int n = 1; n <= 7; ++n) {
    for (const Perm& u : enumerate_sn(n)) {
      auto ip = interior_peak_set(u);
      auto ep = exterior_peak_set(u);
      auto des = descent_set(u);
      // interior peaks are exterior peaks; peaks are descents with gaps >= 2
      for (int p : ip) CHECK(std::find(ep.begin(), ep.end(), p) != ep.end());
      for (int p : ep) CHECK(std::find(des.begin(), des.end(), p) != des.end());
      for (size_t k = 1; k < ep.size(); ++k) CHECK(ep[k] - ep[k - 1] >= 2);
      CHECK(is_interior_peak_comp(interior_peak_comp(u)));
      CHECK(is_exterior_peak_comp(exterior_peak_comp(u)));
    }
  }
}

TEST_CASE("peak images have Fibonacci sizes") {
  std::vector<size_t> expect_interior{1, 1, 2, 3, 5, 8};
  std::vector<size_t> expect_exterior{1, 2, 3, 5, 8, 13};
  for (int n = 1; n <= 6; ++n) {
    std::set<Composition> interior, exterior;
    for (const Perm& w : enumerate_sn(n)) {
      interior.insert(interior_peak_comp(w));
      exterior.insert(exterior_peak_comp(w));
    }
    CHECK(interior.size() == expect_interior[(size_t)n - 1]);
    CHECK(exterior.size() == expect_exterior[(size_t)n - 1]);
  }
}

TEST_CASE("trees: structure, counts, recursive grafting") {
  CHECK(tree_of({1}) == TreeCode{1, 0, 0});
  CHECK(tree_of({1, 2}) == TreeCode{1, 0, 1, 0, 0});
  CHECK(tree_of({2, 1}) == TreeCode{1, 1, 0, 0, 0});
  CHECK(tree_of({}) == TreeCode{0});
  CHECK(tree_json(tree_of({2, 1, 3})) == "[[null,null],[null,null]]");
  CHECK(stat_value_str(stat_value(StatKind::Tree, {2, 1, 3})) == "((..)(..))");

  std::vector<size_t> catalan{1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n <= 7; ++n) {
    std::set<TreeCode> shapes;
    for (const Perm& w : enumerate_sn(n)) {
      TreeCode t = tree_of(w);
      CHECK(t.size() == 2 * (size_t)n + 1);
      shapes.insert(t);
      // grafting recursion at the position of the smallest letter
      if (n >= 1) {
        size_t m = 0;
        while (w[m] != 1) ++m;
        std::vector<int> left(w.begin(), w.begin() + (long)m);
        std::vector<int> right(w.begin() + (long)m + 1, w.end());
        TreeCode expect{1};
        TreeCode lt = tree_of(standardize(left));
        TreeCode rt = tree_of(standardize(right));
        expect.insert(expect.end(), lt.begin(), lt.end());
        expect.insert(expect.end(), rt.begin(), rt.end());
        CHECK(t == expect);
      }
    }
    CHECK(shapes.size() == catalan[(size_t)n]);
  }
}

TEST_CASE("rainbow decomposition of a coloured word") {
  ColourGroup G = ColourGroup::parse("Z2");
  Colour g{0}, h{1};
  CPerm w{{1, 4, 2, 6, 7, 3, 5}, {g, g, g, h, g, h, h}};
  auto blocks = rainbow_blocks(w);
  REQUIRE(blocks.size() == 4);
  CHECK(blocks[0].letters == std::vector<int>{1, 4, 2});
  CHECK(blocks[0].colour == g);
  CHECK(blocks[1].letters == std::vector<int>{6});
  CHECK(blocks[1].colour == h);
  CHECK(blocks[2].letters == std::vector<int>{7});
  CHECK(blocks[2].colour == g);
  CHECK(blocks[3].letters == std::vector<int>{3, 5});
  CHECK(blocks[3].colour == h);
}

TEST_CASE("coloured descent value of the worked example") {
  ColourGroup G = ColourGroup::parse("Z2");
  Colour g{0}, h{1};
  CPerm w{{1, 4, 2, 6, 7, 3, 5}, {g, g, g, h, g, h, h}};
  GStatValue dv = g_stat_value(StatKind::Descent, G, w);
  CHECK(gcomp_of_gstat(dv) == GComposition{{2, g}, {1, g}, {1, h}, {1, g}, {2, h}});
  CHECK(g_stat_value_str(dv) == "2,1^0;1^1;1^0;2^1");
  CHECK(gstat_of_gcomp(gcomp_of_gstat(dv)) == dv);

  GStatValue pv = g_stat_value(StatKind::InteriorPeak, G, w);
  REQUIRE(pv.size() == 4);
  CHECK(pv[0] == std::pair<StatValue, Colour>{Composition{2, 1}, g});
  CHECK(pv[3] == std::pair<StatValue, Colour>{Composition{2}, h});
}

TEST_CASE("coloured statistics over the trivial group reduce to base ones") {
  ColourGroup triv = ColourGroup::parse("triv");
  for (const Perm& w : enumerate_sn(4)) {
    CPerm a = cp_plain(triv, w);
    for (StatKind k : {StatKind::Descent, StatKind::InteriorPeak, StatKind::Tree}) {
      GStatValue v = g_stat_value(k, triv, a);
      if (w.empty())
        CHECK(v.empty());
      else {
        REQUIRE(v.size() == 1);
        CHECK(v[0].first == stat_value(k, w));
      }
    }
  }
}

TEST_CASE("stat keys separate values exactly") {
  ColourGroup G = ColourGroup::parse("Z2");
  auto all = enumerate_gn(G, 3);
  for (StatKind k : {StatKind::Descent, StatKind::InteriorPeak, StatKind::Tree, StatKind::DescentB}) {
    std::map<std::string, GStatValue> by_key;
    for (const CPerm& a : all) {
      GStatValue v = g_stat_value(k, G, a);
      std::string key = g_stat_key(G, v);
      auto it = by_key.find(key);
      if (it == by_key.end())
        by_key.emplace(key, v);
      else
        CHECK(it->second == v);
    }
    std::set<std::string> strs;
    for (const auto& [key, v] : by_key) strs.insert(g_stat_value_str(v));
    CHECK(strs.size() == by_key.size());
  }
}

TEST_CASE("type B descents from signed windows") {
  ColourGroup G = ColourGroup::parse("Z2");
  Colour plus{0}, minus{1};
  CHECK(des_b_set(G, CPerm{{2, 1}, {plus, plus}}).elems == std::vector<int>{1});
  CHECK(des_b_set(G, CPerm{{1}, {minus}}).elems == std::vector<int>{0});
  CHECK(des_b_set(G, CPerm{{1, 2}, {plus, plus}}).elems.empty());
  CHECK(des_b_set(G, CPerm{{2, 1}, {minus, plus}}).elems == std::vector<int>{0});
  CHECK(des_b_set(G, CPerm{{1, 3, 2}, {plus, minus, plus}}).elems == std::vector<int>{1});
  CHECK_THROWS_AS(des_b_set(ColourGroup::parse("Z3"), CPerm{{1}, {Colour{1}}}), std::invalid_argument);
}

TEST_CASE("type B length by breadth-first search") {
  ColourGroup G = ColourGroup::parse("Z2");
  for (int n = 1; n <= 4; ++n) {
    GnTable T(G, n);
    auto len = lengths_b(T);
    // every element is reached and the longest element has length n^2
    int maxlen = 0, count_max = 0;
    for (uint64_t r = 0; r < T.size(); ++r) {
      CHECK(len[r] >= 0);
      if (len[r] > maxlen) maxlen = len[r], count_max = 0;
      if (len[r] == maxlen) ++count_max;
    }
    CHECK(maxlen == n * n);
    CHECK(count_max == 1);
    CHECK(len[T.rank(cp_identity(G, n))] == 0);

    // coxeter-length descents match the signed window definition
    std::vector<uint64_t> right_gens;
    CPerm s0 = cp_identity(G, n);
    s0.colours[0] = Colour{1};
    right_gens.push_back(T.rank(s0));
    for (int i = 1; i < n; ++i) right_gens.push_back(T.rank(cp_plain(G, simple_transposition(n, i))));
    for (uint64_t r = 0; r < T.size(); ++r) {
      BSet expect;
      for (int i = 0; i < n; ++i)
        if (len[T.mul(r, right_gens[(size_t)i])] < len[r]) expect.elems.push_back(i);
      CHECK(expect == des_b_set(G, T.unrank(r)));
    }
  }
}
