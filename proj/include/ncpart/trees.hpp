#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncpart/ncp.hpp"
#include "ncpart/perm.hpp"

namespace ncpart {

/// Edge {i, j} of the n-gon, stored with i < j.
struct Edge {
  int i = 0, j = 0;
  Edge() = default;
  Edge(int a, int b);
  bool operator==(const Edge& o) const = default;
  auto operator<=>(const Edge& o) const = default;
  std::string str() const;
};

bool edges_cross(const Edge& a, const Edge& b);  // a < b < c < d pattern

/// Set of edges on the vertices of the n-gon; must be acyclic.
class Forest {
 public:
  Forest() = default;
  Forest(int n, std::vector<Edge> edges);  // throws on a cycle

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool non_crossing() const;
  bool spanning() const { return static_cast<int>(edges_.size()) == n_ - 1; }

  /// The partition joined by the edges.
  SetPartition join() const;

  std::string str() const;
  static Forest parse(const std::string& s, int n);

  bool operator==(const Forest& o) const = default;
  auto operator<=>(const Forest& o) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// A spanning tree with a bijective labeling {1..n-1} -> edges.
struct LabeledTree {
  Forest tree;
  std::vector<Edge> labeling;  // labeling[k-1] = edge with label k

  std::string str() const;
  static LabeledTree parse(const std::string& s, int n);

  bool operator==(const LabeledTree& o) const = default;
  auto operator<=>(const LabeledTree& o) const = default;
};

struct ForestWord {
  ReducedWord word;
  /// True when the tree is spanning, non-crossing and the labeling follows
  /// the counterclockwise rule, so the word is a reduced decomposition of
  /// the Coxeter element.
  bool reduced_for_coxeter = false;
};

/// The word mapping edge (i,j) to the transposition (i j), in label order.
ForestWord forest_to_word(const Forest& forest, const std::vector<Edge>& labeling);

/// The counterclockwise label rule of the n-gon: at every vertex v the
/// labels of the incident edges must increase when the neighbours u are
/// visited in the order of increasing (v - u) mod n.
bool good_labeling(const LabeledTree& lt);

/// All labelings of the tree whose words multiply to the Coxeter element.
std::vector<LabeledTree> good_labelings(const Forest& tree);

/// Canonical spanning forest of a partition: the sorted path inside each
/// block.
Forest spanning_forest(const SetPartition& pi);

std::vector<Forest> all_spanning_trees(int n);
std::vector<Forest> all_nc_spanning_trees(int n);

std::int64_t count_nc_spanning_trees(int n);  // binom(3n-3, n-1)/(2n-1)
std::int64_t count_spanning_trees(int n);     // n^(n-2)

}  // namespace ncpart
