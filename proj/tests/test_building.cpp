#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "ncpart/building.hpp"

using namespace ncpart;
using namespace ncpart::bldg;

TEST_CASE("f2 spaces") {
  auto u = F2Space::span(3, {0b011, 0b100});
  CHECK(u.dim == 2);
  CHECK(u.contains(0b111));
  CHECK_FALSE(u.contains(0b001));
  auto w = F2Space::span(3, {0b110, 0b001});
  CHECK(u.meet(w) == F2Space::span(3, {0b111}));
  CHECK(u.sum(w) == F2Space::whole(3));
  CHECK(F2Space::from_subspace(u.to_subspace()) == u);
}

TEST_CASE("chamber counts") {
  CHECK(ChamberComplex::get(Tag::Ncp, 4).size() == 16);
  CHECK(ChamberComplex::get(Tag::Building, 4).size() == 21);
  CHECK(ChamberComplex::get(Tag::Ncp, 5).size() == 125);
  CHECK(ChamberComplex::get(Tag::Ncp, 6).size() == 1296);
  // Maximal chains of P_n number n! (n-1)! / 2^(n-1).
  CHECK(ChamberComplex::get(Tag::Pn, 4).size() == 18);
  CHECK(ChamberComplex::get(Tag::Pn, 5).size() == 180);
  // Building flags: prod (2^k - 1).
  CHECK(ChamberComplex::get(Tag::Building, 5).size() == 15 * 7 * 3);
  CHECK(ChamberComplex::get(Tag::Building, 6).size() == 31 * 15 * 7 * 3);
}

TEST_CASE("words and chambers") {
  auto c = parse_chamber("(1 3)(4 5)(1 2)(3 5)", 5);
  CHECK(c.flag.size() == 3);
  auto word = chamber_to_word(c);
  CHECK(word_to_chamber(word) == c);
  auto again = parse_chamber(c.str(), 5);
  CHECK(again == c);
  CHECK_THROWS(parse_chamber("(1 2)(1 2)(1 2)(1 2)", 5));
}

TEST_CASE("adjacency and panels") {
  const auto& cc = ChamberComplex::get(Tag::Building, 5);
  // Every panel of the building is contained in exactly three chambers.
  for (int id = 0; id < cc.size(); ++id)
    for (int k = 1; k <= cc.r; ++k) CHECK(cc.panel_chambers(id, k).size() == 3);
  auto none = adjacent_color(cc.chamber(0), cc.chamber(0));
  CHECK_FALSE(none.has_value());
}

TEST_CASE("ncp chamber graph is the Hurwitz graph") {
  for (int n = 4; n <= 5; ++n) {
    const auto& cc = ChamberComplex::get(Tag::Ncp, n);
    auto stats = hurwitz_stats(CoxType::A, n - 1);
    CHECK(stats.vertices == cc.size());
    // Degree multisets agree under the canonical identification.
    std::multiset<int> lhs, rhs;
    for (int id = 0; id < cc.size(); ++id) lhs.insert(static_cast<int>(cc.neighbours(id).size()));
    // Recompute degrees on the chain side through chamber ids.
    const auto& g = GroupCtx::get(CoxType::A, n - 1);
    auto words = reduced_words(CoxType::A, g.coxeter);
    std::set<int> ids;
    for (const auto& w : words) ids.insert(cc.id_of(word_to_chamber(w)));
    CHECK(static_cast<int>(ids.size()) == cc.size());
    for (int id : ids) rhs.insert(static_cast<int>(cc.neighbours(id).size()));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("the NCP_5 different-distance pair") {
  const auto& ncp = ChamberComplex::get(Tag::Ncp, 5);
  const auto& bld = ChamberComplex::get(Tag::Building, 5);
  auto C = parse_chamber("(1 3)(4 5)(1 2)(3 5)", 5);
  auto D = parse_chamber("(2 4)(1 5)(2 3)(1 4)", 5);
  int cn = ncp.id_of(C), dn = ncp.id_of(D);
  int cb = bld.id_of(C), db = bld.id_of(D);
  REQUIRE(cn >= 0);
  REQUIRE(dn >= 0);
  CHECK(bld.distance(cb, db) == 6);
  CHECK(ncp.distance(cn, dn) == 7);

  auto hull = ncp.convex_hull(cn, dn);
  auto dist_c = ncp.distances_from(cn);
  std::set<int> hull_set(hull.begin(), hull.end());
  int adj_to_d = 0;
  for (auto [nb, color] : ncp.neighbours(dn))
    if (hull_set.count(nb)) {
      ++adj_to_d;
      CHECK(dist_c[nb] == 6);
    }
  CHECK(adj_to_d == 3);

  // No common apartment in NCP nor in PN for this pair.
  CHECK_FALSE(common_apartment(Tag::Ncp, C, D).has_value());
  CHECK_FALSE(common_apartment(Tag::Pn, C, D).has_value());
}

TEST_CASE("kreweras images of an opposite pair share a PN apartment") {
  // The pair with box obstacles only: no common NCP or PN apartment, but
  // the kreweras images have one, forcing equal distances.
  auto C = parse_chamber("(2 3)(4 5)(1 5)(1 3)", 5);
  auto D = parse_chamber("(1 5)(3 4)(1 2)(2 4)", 5);
  // phi lifts to chambers by mapping the reduced word t1..tk of c to the
  // word of phi-images; equivalently map each vertex w to w^-1 c.
  auto lift = [&](const Chamber& ch) {
    Chamber out;
    out.n = ch.n;
    std::vector<F2Space> flag;
    for (int i = static_cast<int>(ch.flag.size()) - 1; i >= 0; --i) {
      auto pi = space_to_partition(ch.flag[i], ch.n);
      auto w = kreweras(CoxType::A, partition_to_perm(pi));
      flag.push_back(F2Space::from_subspace(fp::Subspace(
          2, ch.n - 1, fp::embed_nc(CoxType::A, w, 2).basis())));
    }
    out.flag = flag;
    return out;
  };
  Chamber fc = lift(C), fd = lift(D);
  CHECK_FALSE(common_apartment(Tag::Pn, C, D).has_value());
  CHECK_FALSE(common_apartment(Tag::Ncp, C, D).has_value());
  CHECK(common_apartment(Tag::Pn, fc, fd).has_value());
  CHECK_FALSE(common_apartment(Tag::Ncp, fc, fd).has_value());

  // The shared PN apartment of the images forces d_NC = d_Delta for the
  // original pair.
  const auto& ncp = ChamberComplex::get(Tag::Ncp, 5);
  const auto& bld = ChamberComplex::get(Tag::Building, 5);
  int d_delta = bld.distance(bld.id_of(C), bld.id_of(D));
  CHECK(ncp.distance(ncp.id_of(C), ncp.id_of(D)) == d_delta);
  CHECK(ncp.distance(ncp.id_of(fc), ncp.id_of(fd)) == d_delta);

  // Anti-automorphisms map galleries to galleries: NC distances agree.
  const auto& cc = ChamberComplex::get(Tag::Ncp, 5);
  for (int i = 0; i < cc.size(); i += 7)
    for (int j = 0; j < cc.size(); j += 11)
      CHECK(cc.distance(i, j) ==
            cc.distance(cc.id_of(lift(cc.chamber(i))), cc.id_of(lift(cc.chamber(j)))));
}

TEST_CASE("pn and building distances agree, exhaustive n <= 5") {
  for (int n = 4; n <= 5; ++n) {
    const auto& pn = ChamberComplex::get(Tag::Pn, n);
    const auto& bld = ChamberComplex::get(Tag::Building, n);
    std::vector<int> pn_in_bld(pn.size());
    for (int i = 0; i < pn.size(); ++i) pn_in_bld[i] = bld.id_of(pn.chamber(i));
    for (int i = 0; i < pn.size(); ++i) {
      auto dp = pn.distances_from(i);
      auto db = bld.distances_from(pn_in_bld[i]);
      for (int j = 0; j < pn.size(); ++j) CHECK(dp[j] == db[pn_in_bld[j]]);
    }

    const auto& ncp = ChamberComplex::get(Tag::Ncp, n);
    std::vector<int> ncp_in_pn(ncp.size());
    for (int i = 0; i < ncp.size(); ++i) ncp_in_pn[i] = pn.id_of(ncp.chamber(i));
    for (int i = 0; i < ncp.size(); ++i) {
      auto dn = ncp.distances_from(i);
      auto dp = pn.distances_from(ncp_in_pn[i]);
      for (int j = 0; j < ncp.size(); ++j) {
        CHECK(dn[j] >= dp[ncp_in_pn[j]]);  // subcomplex monotonicity
        if (common_apartment(Tag::Pn, ncp.chamber(i), ncp.chamber(j)))
          CHECK(dn[j] == dp[ncp_in_pn[j]]);
      }
    }
  }
}

TEST_CASE("constructive galleries") {
  for (int n = 4; n <= 5; ++n) {
    const auto& pn = ChamberComplex::get(Tag::Pn, n);
    const auto& bld = ChamberComplex::get(Tag::Building, n);
    for (int i = 0; i < pn.size(); i += 3)
      for (int j = 0; j < pn.size(); j += 5) {
        auto g = constructive_gallery_pn(pn.chamber(i), pn.chamber(j));
        CHECK(g.length() ==
              bld.distance(bld.id_of(pn.chamber(i)), bld.id_of(pn.chamber(j))));
        for (size_t k = 1; k < g.chambers.size(); ++k)
          CHECK(adjacent_color(g.chambers[k - 1], g.chambers[k]).has_value());
      }

    const auto& ncp = ChamberComplex::get(Tag::Ncp, n);
    for (int i = 0; i < ncp.size(); i += 3)
      for (int j = 0; j < ncp.size(); j += 5) {
        auto apt = common_apartment(Tag::Pn, ncp.chamber(i), ncp.chamber(j));
        if (!apt) continue;
        auto g = constructive_gallery_ncp_in_pn_apartment(ncp.chamber(i), ncp.chamber(j), *apt);
        CHECK(g.length() == ncp.distance(i, j));
        CHECK(g.length() ==
              bld.distance(bld.id_of(ncp.chamber(i)), bld.id_of(ncp.chamber(j))));
      }
    // Trivial gallery.
    auto g0 = constructive_gallery_pn(pn.chamber(0), pn.chamber(0));
    CHECK(g0.length() == 0);
  }
}

TEST_CASE("building apartments always exist") {
  const auto& bld = ChamberComplex::get(Tag::Building, 5);
  for (int i = 0; i < bld.size(); i += 7)
    for (int j = 0; j < bld.size(); j += 11) {
      auto apt = common_apartment(Tag::Building, bld.chamber(i), bld.chamber(j));
      REQUIRE(apt.has_value());
      CHECK(apt->contains(bld.chamber(i)));
      CHECK(apt->contains(bld.chamber(j)));
    }
}

TEST_CASE("universal and base chambers") {
  for (int n = 4; n <= 6; ++n) {
    CHECK(static_cast<int>(universal_chambers(n).size()) == n * (1 << (n - 3)));
    std::int64_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(static_cast<std::int64_t>(base_chambers(n).size()) == fact / 2);
  }

  // Characterisation by codimension-1 face counts, exhaustive at n = 5.
  const auto& ncp = ChamberComplex::get(Tag::Ncp, 5);
  for (int id = 0; id < ncp.size(); ++id) {
    auto counts = codim1_face_count(Tag::Ncp, ncp.chamber(id));
    bool all3 = std::all_of(counts.begin(), counts.end(), [](int c) { return c == 3; });
    CHECK(all3 == is_universal(ncp.chamber(id)));
    if (!all3) CHECK(*std::min_element(counts.begin(), counts.end()) == 2);
  }
  const auto& pn = ChamberComplex::get(Tag::Pn, 5);
  for (int id = 0; id < pn.size(); ++id) {
    auto counts = codim1_face_count(Tag::Pn, pn.chamber(id));
    bool all3 = std::all_of(counts.begin(), counts.end(), [](int c) { return c == 3; });
    CHECK(all3 == is_base(pn.chamber(id)));
  }

  // Star-union property, exhaustive at n = 5.
  for (int id = 0; id < ncp.size(); ++id)
    CHECK(star_union_test(Tag::Ncp, ncp.chamber(id)) == is_universal(ncp.chamber(id)));
  for (int id : {0, 17, 44, 91, 140})
    CHECK(star_union_test(Tag::Pn, pn.chamber(id)) == is_base(pn.chamber(id)));

  // The four universal chambers through the edge (2,3) at n = 5.
  auto univ = universal_chambers(5);
  F2Space edge23 = F2Space::span(4, {0b0110});
  int through = 0;
  for (int id : univ) through += ncp.chamber(id).flag[0] == edge23;
  CHECK(through == 4);
}

TEST_CASE("every chamber lies in the apartment of its own word; union of apartments") {
  for (int n = 4; n <= 5; ++n) {
    const auto& ncp = ChamberComplex::get(Tag::Ncp, n);
    for (int id = 0; id < ncp.size(); ++id) {
      auto word = chamber_to_word(ncp.chamber(id));
      std::vector<std::uint8_t> frame;
      std::vector<Edge> edges;
      for (const auto& letter : word.letters) edges.push_back(Edge(letter.entries[0], letter.entries[1]));
      Apartment a;
      a.n = n;
      a.tree = Forest(n, edges);
      for (const auto& e : edges) {
        std::uint8_t v = static_cast<std::uint8_t>(1u << (e.i - 1));
        if (e.j < n) v ^= static_cast<std::uint8_t>(1u << (e.j - 1));
        a.frame.push_back(v);
      }
      CHECK(a.tree->non_crossing());
      CHECK(a.contains(ncp.chamber(id)));
    }
  }
}

TEST_CASE("convex hulls: star containment and sublattice description") {
  const auto& ncp = ChamberComplex::get(Tag::Ncp, 5);
  for (int i = 0; i < ncp.size(); i += 2)
    for (int j = i; j < ncp.size(); j += 7) {
      const auto &C = ncp.chamber(i), &D = ncp.chamber(j);
      std::set<F2Space> common;
      for (const auto& u : C.flag)
        if (std::find(D.flag.begin(), D.flag.end(), u) != D.flag.end()) common.insert(u);
      if (common.empty()) continue;
      for (int e : ncp.convex_hull(i, j))
        for (const auto& u : common)
          CHECK(std::find(ncp.chamber(e).flag.begin(), ncp.chamber(e).flag.end(), u) !=
                ncp.chamber(e).flag.end());
    }

  // conv_Delta(C,D) vertices = sublattice generated by the two flags.
  const auto& bld = ChamberComplex::get(Tag::Building, 5);
  for (int i = 0; i < bld.size(); i += 41)
    for (int j = 0; j < bld.size(); j += 53) {
      const auto &C = bld.chamber(i), &D = bld.chamber(j);
      std::set<F2Space> closure(C.flag.begin(), C.flag.end());
      closure.insert(D.flag.begin(), D.flag.end());
      for (;;) {
        std::set<F2Space> next = closure;
        for (const auto& a : closure)
          for (const auto& b : closure) {
            auto s = a.sum(b);
            auto m = a.meet(b);
            if (s.dim >= 1 && s.dim <= 3) next.insert(s);
            if (m.dim >= 1 && m.dim <= 3) next.insert(m);
          }
        if (next == closure) break;
        closure = next;
      }
      std::set<F2Space> hull_vertices;
      for (int e : bld.convex_hull(i, j))
        for (const auto& u : bld.chamber(e).flag) hull_vertices.insert(u);
      CHECK(hull_vertices == closure);
    }
}

TEST_CASE("opposition and vertex distances") {
  // The apartment of the path tree 1-2-3-4-5; edge partitions of the tree
  // give opposite vertices.
  std::optional<Apartment> apt;
  {
    Apartment a;
    a.n = 5;
    a.tree = Forest(5, {Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5)});
    a.frame = {0b0011, 0b0110, 0b1100, 0b1000};
    apt = a;
  }
  for (int mask = 1; mask < 15; ++mask) {
    std::vector<std::uint8_t> sub;
    for (int b = 0; b < 4; ++b)
      if ((mask >> b) & 1) sub.push_back(apt->frame[b]);
    F2Space v = F2Space::span(4, sub);
    F2Space q = apt->opposite_vertex(v);
    CHECK(v.sum(q) == F2Space::whole(4));
    CHECK(v.meet(q).dim == 0);
    CHECK(q.dim == 4 - v.dim);
  }

  // Maximal vertex distance in an apartment is three.
  int maxd = 0;
  for (int mask = 1; mask < 15; ++mask)
    for (int mask2 = 1; mask2 < 15; ++mask2) {
      if (mask == mask2) continue;
      std::vector<std::uint8_t> sa, sb;
      for (int b = 0; b < 4; ++b) {
        if ((mask >> b) & 1) sa.push_back(apt->frame[b]);
        if ((mask2 >> b) & 1) sb.push_back(apt->frame[b]);
      }
      maxd = std::max(maxd, vertex_distance(F2Space::span(4, sa), F2Space::span(4, sb),
                                            Tag::Building, 5));
    }
  CHECK(maxd == 3);
}

TEST_CASE("link property") {
  auto v5 = link_property_scan(5, Tag::Ncp);
  CHECK(v5.empty());
  CHECK(link_property_scan(5, Tag::Pn).empty());

  auto p4 = link_property_scan(4, Tag::Pn);
  REQUIRE(p4.size() == 1);
  CHECK(p4[0] == F2Space::span(3, {0b111}));

  // For NCP at n = 4 the scan reports the rank-1 vector 111 plus the
  // plane of the unique crossing partition of P_4, whose top-rank link in
  // any apartment is a pair of isolated NCP vertices.
  auto v4 = link_property_scan(4, Tag::Ncp);
  REQUIRE(v4.size() == 2);
  std::vector<F2Space> rank1;
  for (const auto& s : v4)
    if (s.dim == 1) rank1.push_back(s);
  REQUIRE(rank1.size() == 1);
  CHECK(rank1[0] == F2Space::span(3, {0b111}));
  for (const auto& s : v4)
    if (s.dim == 2) CHECK(s == F2Space::span(3, {0b101, 0b010}));
}

TEST_CASE("rank n-2 vertices all lie in Pn") {
  for (int n = 4; n <= 7; ++n) {
    const int m = n - 1;
    // Count subspaces of dimension m-1 that are partition spaces.
    int count = 0, total = 0;
    std::function<void(int, F2Space)> noop = nullptr;
    (void)noop;
    std::set<F2Space> seen;
    std::deque<F2Space> todo{F2Space::zero(m)};
    seen.insert(F2Space::zero(m));
    while (!todo.empty()) {
      F2Space cur = todo.front();
      todo.pop_front();
      for (int v = 1; v < (1 << m); ++v) {
        if (cur.contains(static_cast<std::uint8_t>(v))) continue;
        F2Space u = cur.sum(F2Space::span(m, {static_cast<std::uint8_t>(v)}));
        if (seen.insert(u).second) todo.push_back(u);
      }
    }
    for (const auto& s : seen)
      if (s.dim == m - 1) {
        ++total;
        count += is_partition_space(s);
      }
    CHECK(count == total);
    CHECK(total == (1 << (n - 1)) - 1);
  }
}

TEST_CASE("labeled tree chamber distance equals the inversion number") {
  for (int n = 4; n <= 5; ++n) {
    const auto& pn = ChamberComplex::get(Tag::Pn, n);
    for (const auto& tree : all_spanning_trees(n)) {
      std::vector<Edge> order = tree.edges();
      std::sort(order.begin(), order.end());
      std::vector<std::vector<Edge>> labelings;
      do labelings.push_back(order);
      while (std::next_permutation(order.begin(), order.end()));
      auto chamber_of = [&](const std::vector<Edge>& lab) {
        Chamber c;
        c.n = n;
        std::vector<std::uint8_t> acc;
        for (int i = 0; i < n - 2; ++i) {
          std::uint8_t v = static_cast<std::uint8_t>(1u << (lab[i].i - 1));
          if (lab[i].j < n) v ^= static_cast<std::uint8_t>(1u << (lab[i].j - 1));
          acc.push_back(v);
          c.flag.push_back(F2Space::span(n - 1, acc));
        }
        return c;
      };
      for (size_t a = 0; a < labelings.size(); a += 3)
        for (size_t b = 0; b < labelings.size(); b += 2) {
          // Inversion number of lambda_a^-1 o lambda_b.
          std::map<Edge, int> pos;
          for (int k = 0; k < n - 1; ++k) pos[labelings[a][k]] = k;
          std::vector<int> sigma;
          for (int k = 0; k < n - 1; ++k) sigma.push_back(pos[labelings[b][k]]);
          int inv = 0;
          for (size_t x = 0; x < sigma.size(); ++x)
            for (size_t y = x + 1; y < sigma.size(); ++y) inv += sigma[x] > sigma[y];
          CHECK(pn.distance(pn.id_of(chamber_of(labelings[a])),
                            pn.id_of(chamber_of(labelings[b]))) == inv);
        }
      break;  // one tree per n is plenty here; the full loop runs in checks
    }
  }
}

TEST_CASE("hurwitz radius") {
  auto s4 = hurwitz_stats(CoxType::A, 3);
  CHECK(s4.vertices == 16);
  CHECK(s4.radius == 3);
  auto s5 = hurwitz_stats(CoxType::A, 4);
  CHECK(s5.vertices == 125);
  CHECK(s5.radius == 6);
  auto b3 = hurwitz_stats(CoxType::B, 3);
  CHECK(b3.radius >= 3);  // binom(rank, 2) lower bound
}

TEST_CASE("pn and building distances agree, sampled at n = 6") {
  const auto& pn = ChamberComplex::get(Tag::Pn, 6);
  const auto& bld = ChamberComplex::get(Tag::Building, 6);
  const auto& ncp = ChamberComplex::get(Tag::Ncp, 6);
  for (int i = 0; i < pn.size(); i += 97) {
    auto dp = pn.distances_from(i);
    auto db = bld.distances_from(bld.id_of(pn.chamber(i)));
    for (int j = 0; j < pn.size(); j += 13)
      CHECK(dp[j] == db[bld.id_of(pn.chamber(j))]);
  }
  for (int i = 0; i < ncp.size(); i += 131) {
    auto dn = ncp.distances_from(i);
    auto dp = pn.distances_from(pn.id_of(ncp.chamber(i)));
    auto db = bld.distances_from(bld.id_of(ncp.chamber(i)));
    for (int j = 0; j < ncp.size(); j += 17) {
      int in_pn = pn.id_of(ncp.chamber(j));
      CHECK(dn[j] >= dp[in_pn]);
      CHECK(dp[in_pn] >= db[bld.id_of(ncp.chamber(j))]);
      if (common_apartment(Tag::Pn, ncp.chamber(i), ncp.chamber(j)))
        CHECK(dn[j] == dp[in_pn]);
    }
  }
}

TEST_CASE("labeled tree distances over all trees at n = 4") {
  const int n = 4;
  const auto& pn = ChamberComplex::get(Tag::Pn, n);
  for (const auto& tree : all_spanning_trees(n)) {
    std::vector<Edge> order = tree.edges();
    std::sort(order.begin(), order.end());
    std::vector<std::vector<Edge>> labelings;
    do labelings.push_back(order);
    while (std::next_permutation(order.begin(), order.end()));
    auto chamber_of = [&](const std::vector<Edge>& lab) {
      Chamber c;
      c.n = n;
      std::vector<std::uint8_t> acc;
      for (int i = 0; i < n - 2; ++i) {
        std::uint8_t v = static_cast<std::uint8_t>(1u << (lab[i].i - 1));
        if (lab[i].j < n) v ^= static_cast<std::uint8_t>(1u << (lab[i].j - 1));
        acc.push_back(v);
        c.flag.push_back(F2Space::span(n - 1, acc));
      }
      return c;
    };
    for (size_t a = 0; a < labelings.size(); ++a)
      for (size_t b = 0; b < labelings.size(); ++b) {
        std::map<Edge, int> pos;
        for (int k = 0; k < n - 1; ++k) pos[labelings[a][k]] = k;
        std::vector<int> sigma;
        for (int k = 0; k < n - 1; ++k) sigma.push_back(pos[labelings[b][k]]);
        int inv = 0;
        for (size_t x = 0; x < sigma.size(); ++x)
          for (size_t y = x + 1; y < sigma.size(); ++y) inv += sigma[x] > sigma[y];
        CHECK(pn.distance(pn.id_of(chamber_of(labelings[a])),
                          pn.id_of(chamber_of(labelings[b]))) == inv);
      }
  }
}
