#include "ncpart/trees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncpart {

Edge::Edge(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
  if (i < 1 || i == j) throw std::invalid_argument("bad edge");
}

std::string Edge::str() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool edges_cross(const Edge& a, const Edge& b) {
  return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(static_cast<size_t>(n) + 1) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

}  // namespace

Forest::Forest(int n, std::vector<Edge> edges) : n_(n) {
  std::sort(edges.begin(), edges.end());
  Dsu dsu(n);
  for (const auto& e : edges) {
    if (e.j > n) throw std::invalid_argument("edge outside the n-gon");
    if (!dsu.unite(e.i, e.j)) throw std::invalid_argument("edge set contains a cycle");
  }
  edges_ = std::move(edges);
}

bool Forest::non_crossing() const {
  for (size_t a = 0; a < edges_.size(); ++a)
    for (size_t b = a + 1; b < edges_.size(); ++b)
      if (edges_cross(edges_[a], edges_[b])) return false;
  return true;
}

SetPartition Forest::join() const {
  Dsu dsu(n_);
  for (const auto& e : edges_) dsu.unite(e.i, e.j);
  std::map<int, std::vector<int>> comps;
  for (int v = 1; v <= n_; ++v) comps[dsu.find(v)].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, blk] : comps) blocks.push_back(std::move(blk));
  return SetPartition(n_, std::move(blocks));
}

std::string Forest::str() const {
  std::string s = "[";
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (i) s += ",";
    s += edges_[i].str();
  }
  return s + "]";
}

namespace {

std::vector<std::pair<Edge, int>> parse_edge_list(const std::string& s) {
  std::vector<std::pair<Edge, int>> out;
  size_t i = 0;
  auto expect = [&](char c) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size() || s[i] != c) throw std::invalid_argument("bad forest literal: " + s);
    ++i;
  };
  auto num = [&]() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '-')) ++j;
    if (j == i) throw std::invalid_argument("bad forest literal: " + s);
    int v = std::stoi(s.substr(i, j - i));
    i = j;
    return v;
  };
  expect('[');
  for (;;) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == ']') break;
    expect('(');
    int a = num();
    expect(',');
    int b = num();
    expect(')');
    int label = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == '@') {
      ++i;
      label = num();
    }
    out.push_back({Edge(a, b), label});
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == ',') ++i;
  }
  return out;
}

}  // namespace

Forest Forest::parse(const std::string& s, int n) {
  std::vector<Edge> edges;
  for (auto& [e, label] : parse_edge_list(s)) edges.push_back(e);
  return Forest(n, std::move(edges));
}

std::string LabeledTree::str() const {
  std::string s = "[";
  for (size_t k = 0; k < labeling.size(); ++k) {
    if (k) s += ",";
    s += labeling[k].str() + "@" + std::to_string(k + 1);
  }
  return s + "]";
}

LabeledTree LabeledTree::parse(const std::string& s, int n) {
  auto pairs = parse_edge_list(s);
  std::vector<Edge> edges, labeling(pairs.size());
  std::vector<char> seen(pairs.size() + 1, 0);
  for (auto& [e, label] : pairs) {
    edges.push_back(e);
    if (label < 1 || label > static_cast<int>(pairs.size()) || seen[label])
      throw std::invalid_argument("labeling is not a bijection: " + s);
    seen[label] = 1;
    labeling[label - 1] = e;
  }
  LabeledTree lt{Forest(n, std::move(edges)), std::move(labeling)};
  if (!lt.tree.spanning()) throw std::invalid_argument("labeled tree is not spanning: " + s);
  return lt;
}

ForestWord forest_to_word(const Forest& forest, const std::vector<Edge>& labeling) {
  if (labeling.size() != forest.edges().size())
    throw std::invalid_argument("labeling size mismatch");
  ReducedWord word{CoxType::A, forest.n() - 1, {}};
  for (const auto& e : labeling)
    word.letters.push_back(Cycle(CycleKind::Unsigned, {e.i, e.j}));
  ForestWord out{word, false};
  if (forest.spanning() && forest.non_crossing()) {
    SignedPerm prod = word.product();
    out.reduced_for_coxeter = prod == coxeter_element(CoxType::A, forest.n() - 1);
  }
  return out;
}

bool good_labeling(const LabeledTree& lt) {
  const int n = lt.tree.n();
  std::map<Edge, int> label_of;
  for (size_t k = 0; k < lt.labeling.size(); ++k) label_of[lt.labeling[k]] = static_cast<int>(k + 1);
  for (int v = 1; v <= n; ++v) {
    // Neighbours in counterclockwise order around v, starting at v-1.
    std::vector<std::pair<int, int>> inc;  // ((v-u) mod n, label)
    for (const auto& e : lt.tree.edges()) {
      int u = e.i == v ? e.j : e.j == v ? e.i : 0;
      if (!u) continue;
      inc.push_back({(v - u + n) % n, label_of[e]});
    }
    std::sort(inc.begin(), inc.end());
    for (size_t k = 1; k < inc.size(); ++k)
      if (inc[k].second < inc[k - 1].second) return false;
  }
  return true;
}

std::vector<LabeledTree> good_labelings(const Forest& tree) {
  if (!tree.spanning()) throw std::invalid_argument("tree is not spanning");
  if (!tree.non_crossing()) throw std::invalid_argument("tree is crossing");
  std::vector<Edge> order = tree.edges();
  std::sort(order.begin(), order.end());
  std::vector<LabeledTree> out;
  do {
    LabeledTree lt{tree, order};
    if (forest_to_word(tree, order).reduced_for_coxeter) out.push_back(lt);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Forest spanning_forest(const SetPartition& pi) {
  std::vector<Edge> edges;
  for (const auto& b : pi.blocks())
    for (size_t k = 1; k < b.size(); ++k) edges.push_back(Edge(b[k - 1], b[k]));
  return Forest(pi.n(), std::move(edges));
}

namespace {

void enumerate_trees(int n, bool nc_only, std::vector<Forest>& out) {
  std::vector<Edge> all;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) all.push_back(Edge(i, j));
  std::vector<Edge> cur;
  std::function<void(size_t, Dsu&)> rec = [&](size_t from, Dsu& dsu) {
    if (cur.size() == static_cast<size_t>(n - 1)) {
      out.push_back(Forest(n, cur));
      return;
    }
    for (size_t k = from; k < all.size(); ++k) {
      const Edge& e = all[k];
      if (nc_only) {
        bool crossing = false;
        for (const auto& f : cur) crossing |= edges_cross(e, f);
        if (crossing) continue;
      }
      Dsu next = dsu;
      if (!next.unite(e.i, e.j)) continue;
      cur.push_back(e);
      rec(k + 1, next);
      cur.pop_back();
    }
  };
  Dsu dsu(n);
  rec(0, dsu);
}

}  // namespace

std::vector<Forest> all_spanning_trees(int n) {
  std::vector<Forest> out;
  enumerate_trees(n, false, out);
  return out;
}

std::vector<Forest> all_nc_spanning_trees(int n) {
  std::vector<Forest> out;
  enumerate_trees(n, true, out);
  return out;
}

std::int64_t count_nc_spanning_trees(int n) {
  if (n == 1) return 1;
  return binomial(3 * n - 3, n - 1) / (2 * n - 1);
}

std::int64_t count_spanning_trees(int n) {
  if (n <= 2) return 1;
  std::int64_t r = 1;
  for (int i = 0; i < n - 2; ++i) r *= n;
  return r;
}

}  // namespace ncpart
