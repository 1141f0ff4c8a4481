#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include <bit>

#include "ncpart/linalg.hpp"
#include "ncpart/trees.hpp"

using namespace ncpart;

TEST_CASE("forest basics") {
  Forest f(6, {Edge(1, 3), Edge(3, 4), Edge(5, 6)});
  CHECK(f.non_crossing());
  CHECK(f.join() == SetPartition::parse("{1,3,4|2|5,6}", 6));
  CHECK_THROWS(Forest(4, {Edge(1, 2), Edge(2, 3), Edge(1, 3)}));
  CHECK(edges_cross(Edge(1, 3), Edge(2, 4)));
  CHECK_FALSE(edges_cross(Edge(1, 2), Edge(3, 4)));
  CHECK(Forest::parse("[(1,3),(3,4),(5,6)]", 6) == f);
  CHECK(Forest::parse(f.str(), 6) == f);
}

TEST_CASE("forest words") {
  // Tree {(1,2),(3,5),(2,5),(3,4)} with the good labeling of the pентagon.
  Forest t(5, {Edge(1, 2), Edge(3, 5), Edge(2, 5), Edge(3, 4)});
  std::vector<Edge> good = {Edge(3, 5), Edge(1, 2), Edge(2, 5), Edge(3, 4)};
  auto fw = forest_to_word(t, good);
  CHECK(fw.word.str() == "(3 5)(1 2)(2 5)(3 4)");
  CHECK(fw.reduced_for_coxeter);
  CHECK(fw.word.product() == coxeter_element(CoxType::A, 4));

  std::vector<Edge> bad = {Edge(1, 2), Edge(3, 4), Edge(3, 5), Edge(2, 5)};
  auto fb = forest_to_word(t, bad);
  CHECK_FALSE(fb.reduced_for_coxeter);
  CHECK(fb.word.product() != coxeter_element(CoxType::A, 4));

  Forest single(2, {Edge(1, 2)});
  auto fs = forest_to_word(single, {Edge(1, 2)});
  CHECK(fs.reduced_for_coxeter);
}

TEST_CASE("good labelings: counterclockwise rule equals the product test") {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& t : all_nc_spanning_trees(n)) {
      std::vector<Edge> order = t.edges();
      std::sort(order.begin(), order.end());
      int good = 0;
      do {
        LabeledTree lt{t, order};
        bool by_product = forest_to_word(t, order).reduced_for_coxeter;
        CHECK(by_product == good_labeling(lt));
        good += by_product;
      } while (std::next_permutation(order.begin(), order.end()));
      CHECK(good >= 1);
      CHECK(static_cast<int>(good_labelings(t).size()) == good);
    }
  }
}

TEST_CASE("good labeling counts for specific trees") {
  // The 3-path has two labelings, of which exactly one multiplies to c.
  Forest path(3, {Edge(1, 2), Edge(2, 3)});
  CHECK(good_labelings(path).size() == 1);
  Forest star(4, {Edge(1, 2), Edge(1, 3), Edge(1, 4)});
  CHECK(good_labelings(star).size() == 1);
  Forest zig(4, {Edge(1, 2), Edge(1, 3), Edge(3, 4)});
  CHECK(good_labelings(zig).size() == 2);
  CHECK_THROWS(good_labelings(Forest(4, {Edge(1, 3), Edge(2, 4), Edge(1, 2)})));
}

TEST_CASE("spanning forests of partitions") {
  auto pi = SetPartition::parse("{1,3,4|2|5,6}", 6);
  Forest f = spanning_forest(pi);
  CHECK(f == Forest(6, {Edge(1, 3), Edge(3, 4), Edge(5, 6)}));
  CHECK(f.join() == pi);
  CHECK(static_cast<int>(f.edges().size()) == pi.rank());
  CHECK(spanning_forest(SetPartition::discrete(5)).edges().empty());

  // The two forests of the worked example both join to the same partition.
  Forest f1(6, {Edge(1, 6), Edge(1, 4), Edge(2, 4), Edge(2, 3)});
  Forest f2(6, {Edge(1, 2), Edge(4, 6), Edge(2, 4), Edge(2, 3)});
  CHECK(f1.join() == f2.join());

  // rank(pi) = #A(pi) for every partition at n <= 6.
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_partitions(n))
      CHECK(static_cast<int>(spanning_forest(p).edges().size()) == p.rank());
}

TEST_CASE("tree counts") {
  CHECK(count_nc_spanning_trees(5) == 55);
  CHECK(count_nc_spanning_trees(6) == 273);
  CHECK(count_spanning_trees(5) == 125);
  for (int n = 2; n <= 6; ++n) {
    CHECK(static_cast<std::int64_t>(all_spanning_trees(n).size()) == count_spanning_trees(n));
    CHECK(static_cast<std::int64_t>(all_nc_spanning_trees(n).size()) == count_nc_spanning_trees(n));
  }
}

TEST_CASE("labeled tree literals") {
  auto lt = LabeledTree::parse("[(1,2)@2,(3,5)@1,(2,5)@3,(3,4)@4]", 5);
  CHECK(lt.labeling[0] == Edge(3, 5));
  CHECK(LabeledTree::parse(lt.str(), 5) == lt);
}

TEST_CASE("edge sets: cycles are exactly the dependent sets, n=5") {
  // All edge subsets of size <= 6 of the 5-gon's complete edge set.
  std::vector<Edge> all;
  for (int i = 1; i < 5; ++i)
    for (int j = i + 1; j <= 5; ++j) all.push_back(Edge(i, j));
  for (int mask = 1; mask < (1 << 10); ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) > 6) continue;
    std::vector<Edge> subset;
    for (int b = 0; b < 10; ++b)
      if ((mask >> b) & 1) subset.push_back(all[b]);
    bool has_cycle = false;
    try {
      Forest f(5, subset);
    } catch (const std::invalid_argument&) {
      has_cycle = true;
    }
    std::vector<ncpart::fp::VecFp> vecs;
    for (const auto& e : subset) vecs.push_back(ncpart::fp::edge_to_vector(e, 5));
    bool dependent =
        ncpart::fp::Subspace(2, 4, vecs).dim() < static_cast<int>(subset.size());
    CHECK(has_cycle == dependent);
  }
}

TEST_CASE("spanning forests of non-crossing partitions are non-crossing") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& pi : all_ncp(n)) CHECK(spanning_forest(pi).non_crossing());
}
