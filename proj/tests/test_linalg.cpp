#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ncpart/linalg.hpp"

using namespace ncpart;
using namespace ncpart::fp;

namespace {
SignedPerm pe(const std::string& s, CoxType t, int m) { return parse_element(s, t, m); }
}

TEST_CASE("subspace arithmetic") {
  auto e1 = VecFp::unit(2, 3, 1), e2 = VecFp::unit(2, 3, 2), e3 = VecFp::unit(2, 3, 3);
  Subspace u(2, 3, {e1});
  Subspace v(2, 3, {e2});
  CHECK(sum(u, v) == Subspace(2, 3, {e1, e2}));
  CHECK(sum(u, v).dim() == 2);

  // <e1+e2, e3> ∩ <e2+e3, e1> = <e1+e2+e3> over F_2, by brute force.
  Subspace a(2, 3, {e1 + e2, e3});
  Subspace b(2, 3, {e2 + e3, e1});
  Subspace cut = intersect(a, b);
  std::set<VecFp> brute;
  for (const auto& x : all_vectors(a))
    if (b.contains(x)) brute.insert(x);
  auto got = all_vectors(cut);
  CHECK(std::set<VecFp>(got.begin(), got.end()) == brute);
  CHECK(cut == Subspace(2, 3, {e1 + e2 + e3}));
  CHECK(intersect(a, a) == a);
  CHECK(a.contains(e1 + e2));
  CHECK_FALSE(a.contains(e1));
}

TEST_CASE("subspace literals round trip") {
  std::mt19937 rng(3);
  for (int p : {2, 3}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<VecFp> rows;
      std::uniform_int_distribution<int> d(0, p - 1);
      for (int r = 0; r < 3; ++r) {
        std::vector<int> c(4);
        for (int& x : c) x = d(rng);
        rows.emplace_back(p, c);
      }
      Subspace s(p, 4, rows);
      CHECK(Subspace::parse(s.str(), p, 4) == s);
    }
  }
  CHECK(VecFp::parse("01100", 2) == VecFp(2, {0, 1, 1, 0, 0}));
}

TEST_CASE("edge vectors") {
  CHECK(edge_to_vector(Edge(1, 2), 5) == VecFp::parse("1100", 2));
  CHECK(edge_to_vector(Edge(1, 5), 5) == VecFp::parse("1000", 2));
  std::set<VecFp> seen;
  int n = 4;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) seen.insert(edge_to_vector(Edge(i, j), n));
  CHECK(static_cast<int>(seen.size()) == n * (n - 1) / 2);
}

TEST_CASE("embeddings of NC") {
  // (1 2)(3 5) in S_5 at p=2: the span of its two edge vectors.
  auto u = embed_nc(CoxType::A, pe("(1 2)(3 5)", CoxType::A, 5), 2);
  CHECK(u == Subspace(2, 4, {VecFp::parse("1100", 2), VecFp::parse("0010", 2)}));
  CHECK(embed_nc(CoxType::A, SignedPerm::identity(5), 2).dim() == 0);

  // Full NC(B_3) at p=3: 20 distinct subspaces of F_3^3.
  const auto& L = NcLattice::get(CoxType::B, 3);
  std::set<Subspace> images;
  for (int i = 0; i < L.size(); ++i) images.insert(embed_nc(CoxType::B, L.element(i), 3));
  CHECK(images.size() == 20);
}

TEST_CASE("embedding is order/rank preserving and injective") {
  struct Site {
    CoxType t;
    int rank;
    int p;
  };
  for (auto [t, rank, p] : {Site{CoxType::A, 5, 2}, Site{CoxType::B, 4, 3}, Site{CoxType::D, 4, 3}}) {
    const auto& L = NcLattice::get(t, rank);
    std::vector<Subspace> img;
    for (int i = 0; i < L.size(); ++i) {
      img.push_back(embed_nc(t, L.element(i), p));
      CHECK(img.back().dim() == L.rank_of(i));
    }
    for (int i = 0; i < L.size(); ++i)
      for (int j = 0; j < L.size(); ++j) {
        if (i != j) CHECK(img[i] != img[j]);
        if (L.le(i, j)) CHECK(img[j].contains(img[i]));
      }
  }
}

TEST_CASE("embedding respects joins of reduced words") {
  for (auto [t, rank, p] :
       {std::tuple{CoxType::A, 4, 2}, {CoxType::B, 3, 3}, {CoxType::D, 4, 3}}) {
    const auto& L = NcLattice::get(t, rank);
    const auto& g = GroupCtx::get(t, rank);
    for (int i = 0; i < L.size(); ++i) {
      const auto& w = L.element(i);
      for (const auto& word : reduced_words(t, w)) {
        Subspace s = Subspace::zero(p, rank);
        for (const auto& letter : word.letters)
          s = sum(s, embed_nc(t, letter.to_perm(g.points), p));
        CHECK(s == embed_nc(t, w, p));
      }
      if (i > 40) break;  // enough samples per lattice
    }
  }
}

TEST_CASE("partition embedding") {
  auto u = embed_partition(SetPartition::parse("{1,2|3,4}", 4));
  CHECK(u.dim() == 2);
  auto crossing = embed_partition(SetPartition::parse("{1,3|2,4}", 4));
  CHECK(crossing.dim() == 2);

  // Injectivity, exhaustive n <= 5; independence of the forest choice is
  // implied by rank-preservation plus the edge-span characterisation, and
  // sampled directly below.
  for (int n = 2; n <= 5; ++n) {
    std::set<Subspace> images;
    auto parts = all_partitions(n);
    for (const auto& pi : parts) {
      auto s = embed_partition(pi);
      CHECK(s.dim() == pi.rank());
      images.insert(s);
    }
    CHECK(images.size() == parts.size());
  }

  // Forest choice independence: random partitions at n <= 7, all spanning
  // forests give the same subspace.
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    // Random partition via random block assignment.
    std::vector<std::vector<int>> blocks(1 + rng() % 3);
    for (int v = 1; v <= n; ++v) blocks[rng() % blocks.size()].push_back(v);
    std::vector<std::vector<int>> nonempty;
    for (auto& b : blocks)
      if (!b.empty()) nonempty.push_back(b);
    SetPartition pi(n, nonempty);
    Subspace expect = embed_partition(pi);
    // A different forest: per block, a star rooted at the block minimum.
    std::vector<VecFp> vectors;
    for (const auto& b : pi.blocks())
      for (size_t k = 1; k < b.size(); ++k)
        vectors.push_back(edge_to_vector(Edge(b[0], b[k]), n));
    CHECK(Subspace(2, n - 1, vectors) == expect);
  }
}

TEST_CASE("compatible primes") {
  CHECK(is_compatible_prime(CoxType::A, 4, 2));
  CHECK(is_compatible_prime(CoxType::A, 4, 3));
  CHECK_FALSE(is_compatible_prime(CoxType::B, 3, 2));
  CHECK(is_compatible_prime(CoxType::B, 3, 3));
  CHECK_FALSE(is_compatible_prime(CoxType::D, 4, 2));
  CHECK(is_compatible_prime(CoxType::D, 4, 3));
}

TEST_CASE("projection of positive roots is injective for compatible primes") {
  for (auto [t, rank, p] :
       {std::tuple{CoxType::A, 4, 2}, {CoxType::B, 3, 3}, {CoxType::D, 4, 3}}) {
    RootSystem rs(t, rank);
    std::set<VecFp> seen;
    for (const auto& [refl, coords] : rs.positive_roots()) seen.insert(VecFp(p, coords));
    CHECK(seen.size() == rs.positive_roots().size());
  }
}

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(subspace_lattice_size(4, 2) == 67);
  CHECK(subspace_lattice_size(5, 2) == 374);

  // Exhaustive subspace enumeration of F_2^4 for the (4,2) value.
  std::set<Subspace> planes;
  std::vector<VecFp> nonzero;
  for (int mask = 1; mask < 16; ++mask) {
    std::vector<int> c(4);
    for (int b = 0; b < 4; ++b) c[b] = (mask >> b) & 1;
    nonzero.emplace_back(2, c);
  }
  for (size_t a = 0; a < nonzero.size(); ++a)
    for (size_t b = a + 1; b < nonzero.size(); ++b) {
      Subspace s(2, 4, {nonzero[a], nonzero[b]});
      if (s.dim() == 2) planes.insert(s);
    }
  CHECK(planes.size() == 35);
}

TEST_CASE("carter criterion over the embedding, type A") {
  // A word is reduced iff the root vectors are linearly independent.
  for (int n = 3; n <= 5; ++n) {
    const auto& g = GroupCtx::get(CoxType::A, n - 1);
    std::mt19937 rng(23);
    std::uniform_int_distribution<size_t> pick(0, g.reflections.size() - 1);
    for (int trial = 0; trial < 400; ++trial) {
      int len = 1 + static_cast<int>(rng() % (n - 1));
      std::vector<size_t> word(static_cast<size_t>(len));
      for (auto& w : word) w = pick(rng);
      SignedPerm prod = SignedPerm::identity(n);
      std::vector<VecFp> roots;
      RootSystem rs(CoxType::A, n - 1);
      for (size_t ti : word) {
        prod = prod * g.reflections[ti];
        roots.push_back(rs.root_mod(g.reflection_cycles[ti], 2));
      }
      bool reduced = absolute_length(prod) == len;
      bool independent = Subspace(2, n - 1, roots).dim() == len;
      CHECK(reduced == independent);
    }
  }
}
