#include "ncpart/checks.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <set>
#include <sstream>

#include "ncpart/autos.hpp"
#include "ncpart/building.hpp"
#include "ncpart/linalg.hpp"
#include "ncpart/metric.hpp"
#include "ncpart/ncp.hpp"
#include "ncpart/perm.hpp"
#include "ncpart/trees.hpp"

namespace ncpart {
namespace checks {

namespace {

using bldg::Chamber;
using bldg::ChamberComplex;
using bldg::F2Space;
using bldg::Tag;

int param_int(const Params& p, const std::string& key, int dflt) {
  auto it = p.find(key);
  return it == p.end() ? dflt : std::stoi(it->second);
}

CoxType param_type(const Params& p, CoxType dflt) {
  auto it = p.find("type");
  return it == p.end() ? dflt : cox_type_from_char(it->second[0]);
}

CheckResult make(const std::string& name, bool pass, std::vector<std::string> details = {}) {
  CheckResult r;
  r.name = name;
  r.status = pass ? Status::Pass : Status::Fail;
  r.details = std::move(details);
  return r;
}

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// --- criterion implementations ---------------------------------------------

CheckResult check_counting_tables(const Params&) {
  std::vector<std::string> bad;
  const std::vector<std::int64_t> ncp_expect = {1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) {
    std::int64_t got = n == 1 ? 1 : NcLattice::get(CoxType::A, n - 1).size();
    if (got != ncp_expect[n - 1])
      bad.push_back("|NCP_" + str(n) + "| = " + str(got) + ", expected " + str(ncp_expect[n - 1]));
  }
  const std::vector<std::int64_t> bell_expect = {1, 2, 5, 15, 52, 203};
  for (int n = 1; n <= 6; ++n) {
    std::int64_t got = all_partitions(n).size();
    if (got != bell_expect[n - 1] || got != bell(n))
      bad.push_back("|P_" + str(n) + "| = " + str(got));
  }
  const std::vector<std::int64_t> lambda_expect = {1, 2, 5, 16, 67, 374};
  for (int n = 1; n <= 6; ++n) {
    std::int64_t got = fp::subspace_lattice_size(n - 1, 2);
    if (got != lambda_expect[n - 1])
      bad.push_back("|Lambda(F_2^" + str(n - 1) + ")| = " + str(got));
  }
  return make("counting-tables", bad.empty(), bad);
}

CheckResult check_bd_counts(const Params&) {
  std::vector<std::string> bad;
  if (NcLattice::get(CoxType::B, 3).size() != 20 || nc_count(CoxType::B, 3) != 20)
    bad.push_back("|NC(B_3)| != 20");
  if (NcLattice::get(CoxType::D, 4).size() != 50 || nc_count(CoxType::D, 4) != 50)
    bad.push_back("|NC(D_4)| != 50");
  return make("bd-counts", bad.empty(), bad);
}

CheckResult check_apartment_counts(const Params&) {
  std::vector<std::string> bad;
  const std::vector<std::int64_t> nc_expect = {3, 12, 55, 273};
  const std::vector<std::int64_t> p_expect = {3, 16, 125, 1296};
  for (int n = 3; n <= 6; ++n) {
    std::int64_t nc_got = all_nc_spanning_trees(n).size();
    std::int64_t p_got = all_spanning_trees(n).size();
    if (nc_got != nc_expect[n - 3] || nc_got != count_nc_spanning_trees(n))
      bad.push_back("NCP apartments at n=" + str(n) + ": " + str(nc_got));
    if (p_got != p_expect[n - 3] || p_got != count_spanning_trees(n))
      bad.push_back("P apartments at n=" + str(n) + ": " + str(p_got));
  }
  return make("apartment-counts", bad.empty(), bad);
}

CheckResult check_narayana(const Params&) {
  std::vector<std::string> bad;
  for (int n = 2; n <= 7; ++n) {
    const auto& L = NcLattice::get(CoxType::A, n - 1);
    std::map<int, std::int64_t> profile;
    for (int i = 0; i < L.size(); ++i) ++profile[L.rank_of(i)];
    for (int k = 0; k < n; ++k)
      if (profile[k] != narayana(n, n - k))
        bad.push_back("NCP_" + str(n) + " rank " + str(k) + ": " + str(profile[k]) +
                      " != N(" + str(n) + "," + str(n - k) + ")");
  }
  return make("narayana-profile", bad.empty(), bad);
}

CheckResult check_dist_pn_building(const Params& p) {
  int max_n = param_int(p, "n", 5);
  std::vector<std::string> bad;
  for (int n = 3; n <= max_n; ++n) {
    const auto& pn = ChamberComplex::get(Tag::Pn, n);
    const auto& bld = ChamberComplex::get(Tag::Building, n);
    std::vector<int> emb(pn.size());
    for (int i = 0; i < pn.size(); ++i) emb[i] = bld.id_of(pn.chamber(i));
    for (int i = 0; i < pn.size() && bad.size() < 5; ++i) {
      auto dp = pn.distances_from(i);
      auto db = bld.distances_from(emb[i]);
      for (int j = 0; j < pn.size(); ++j)
        if (dp[j] != db[emb[j]]) bad.push_back("n=" + str(n) + " pair " + str(i) + "," + str(j));
    }
  }
  return make("dist-pn-building", bad.empty(), bad);
}

CheckResult check_dist_ncp_pn(const Params& p) {
  int max_n = param_int(p, "n", 5);
  std::vector<std::string> bad;
  for (int n = 3; n <= max_n; ++n) {
    const auto& ncp = ChamberComplex::get(Tag::Ncp, n);
    const auto& pn = ChamberComplex::get(Tag::Pn, n);
    std::vector<int> emb(ncp.size());
    for (int i = 0; i < ncp.size(); ++i) emb[i] = pn.id_of(ncp.chamber(i));
    for (int i = 0; i < ncp.size() && bad.size() < 5; ++i) {
      auto dn = ncp.distances_from(i);
      auto dp = pn.distances_from(emb[i]);
      for (int j = i; j < ncp.size(); ++j) {
        if (!bldg::common_apartment(Tag::Pn, ncp.chamber(i), ncp.chamber(j))) continue;
        if (dn[j] != dp[emb[j]]) bad.push_back("n=" + str(n) + " pair " + str(i) + "," + str(j));
      }
    }
  }
  return make("dist-ncp-pn", bad.empty(), bad);
}

CheckResult check_witness_ncp5(const Params&) {
  std::vector<std::string> bad;
  const auto& ncp = ChamberComplex::get(Tag::Ncp, 5);
  const auto& bld = ChamberComplex::get(Tag::Building, 5);
  Chamber C = bldg::parse_chamber("(1 3)(4 5)(1 2)(3 5)", 5);
  Chamber D = bldg::parse_chamber("(2 4)(1 5)(2 3)(1 4)", 5);
  int cb = bld.id_of(C), db = bld.id_of(D);
  int cn = ncp.id_of(C), dn = ncp.id_of(D);
  if (bld.distance(cb, db) != 6) bad.push_back("d_building = " + str(bld.distance(cb, db)));
  if (ncp.distance(cn, dn) != 7) bad.push_back("d_ncp = " + str(ncp.distance(cn, dn)));
  auto hull = ncp.convex_hull(cn, dn);
  std::set<int> hull_set(hull.begin(), hull.end());
  auto dist_c = ncp.distances_from(cn);
  int adj = 0;
  for (auto [nb, color] : ncp.neighbours(dn))
    if (hull_set.count(nb)) {
      ++adj;
      if (dist_c[nb] != 6) bad.push_back("hull neighbour at d_ncp " + str(dist_c[nb]));
    }
  if (adj != 3) bad.push_back("hull has " + str(adj) + " chambers adjacent to D");
  return make("witness-ncp5", bad.empty(), bad);
}

CheckResult check_witness_ncp6(const Params&) {
  std::vector<std::string> bad;
  const auto& ncp = ChamberComplex::get(Tag::Ncp, 6);
  const auto& bld = ChamberComplex::get(Tag::Building, 6);
  Chamber C = bldg::parse_chamber("(1 2)(3 6)(4 5)(2 6)(3 5)", 6);
  Chamber D = bldg::parse_chamber("(2 4)(1 4)(5 6)(2 3)(4 6)", 6);
  int cb = bld.id_of(C), db = bld.id_of(D);
  int cn = ncp.id_of(C), dn = ncp.id_of(D);
  auto d_bld = bld.distances_from(cb);
  auto d_ncp = ncp.distances_from(cn);
  if (d_bld[db] != 7) bad.push_back("d_building = " + str(d_bld[db]));
  if (d_ncp[dn] != 8) bad.push_back("d_ncp = " + str(d_ncp[dn]));

  // Neighbours of D: colors {1,1,2,3,4}; the color-1 neighbour at building
  // distance 7 is G, the other (distance 6) is A.
  std::multiset<int> colors;
  int dG = -1;
  for (auto [nb, color] : ncp.neighbours(dn)) {
    colors.insert(color);
    int dbld = d_bld[bld.id_of(ncp.chamber(nb))];
    int dncc = d_ncp[nb];
    switch (color) {
      case 1:
        if (dbld == 7) {
          dG = nb;
          if (dncc != 8) bad.push_back("d_ncp(C,G) = " + str(dncc));
        } else if (dbld != 6) {
          bad.push_back("color-1 neighbour at d_building " + str(dbld));
        }
        break;
      case 2:
        if (dbld != 8) bad.push_back("d_building(C,F) = " + str(dbld));
        break;
      case 3:
        if (dbld != 7) bad.push_back("d_building(C,B) = " + str(dbld));
        if (dncc != 7) bad.push_back("d_ncp(C,B) = " + str(dncc));
        break;
      case 4:
        if (dbld != 7) bad.push_back("d_building(C,E) = " + str(dbld));
        if (dncc != 7) bad.push_back("d_ncp(C,E) = " + str(dncc));
        break;
      default: bad.push_back("unexpected panel color " + str(color));
    }
  }
  if (colors != std::multiset<int>{1, 1, 2, 3, 4}) bad.push_back("neighbour colors unexpected");
  if (dG < 0) bad.push_back("neighbour G not found");
  return make("witness-ncp6", bad.empty(), bad);
}

CheckResult check_link_property(const Params& p) {
  int n = param_int(p, "n", 5);
  std::vector<std::string> bad;
  if (n >= 5) {
    for (Tag tag : {Tag::Ncp, Tag::Pn}) {
      auto v = bldg::link_property_scan(n, tag);
      if (!v.empty())
        bad.push_back(to_string(tag) + " scan found " + str(v.size()) + " violations");
    }
    return make("link-property", bad.empty(), bad);
  }
  // n = 4: the P_n scan reports exactly <e1+e2+e3>; the NCP scan's rank-1
  // violations are exactly that vertex (plus the unique crossing plane at
  // top rank, an n = 4 degeneracy).
  auto expect = F2Space::span(3, {0b111});
  auto pv = bldg::link_property_scan(4, Tag::Pn);
  if (pv.size() != 1 || !(pv[0] == expect)) bad.push_back("P_4 scan unexpected");
  auto nv = bldg::link_property_scan(4, Tag::Ncp);
  std::vector<F2Space> rank1;
  for (const auto& s : nv)
    if (s.dim == 1) rank1.push_back(s);
  if (rank1.size() != 1 || !(rank1[0] == expect)) bad.push_back("NCP_4 rank-1 scan unexpected");
  for (const auto& s : nv)
    if (s.dim == 2 && !(s == F2Space::span(3, {0b101, 0b010})))
      bad.push_back("NCP_4 extra violation unexpected");
  CheckResult r = make("link-property", bad.empty(), bad);
  for (const auto& s : nv) r.details.push_back("reported: " + s.to_subspace().str());
  return r;
}

CheckResult check_metric(const Params&) {
  std::vector<std::string> bad;
  for (int r = 2; r <= 12; ++r)
    for (int x = 1; x < r; ++x)
      for (int y = x + 1; y <= r; ++y) {
        auto path = metric::opposite_link_path_length(x, y, r);
        if (std::abs(path.total - std::numbers::pi) >= 1e-12)
          bad.push_back("A+B+C at (" + str(x) + "," + str(y) + "," + str(r) + ")");
        if (!path.exact_minus_one)
          bad.push_back("cos sum not exactly -1 at (" + str(x) + "," + str(y) + "," + str(r) + ")");
      }
  double g2 = metric::path_length({1, 3, 1}, 3);
  double g3 = metric::path_length({1, 2, 1, 2, 1}, 3);
  if (std::abs(g2 + g3 - 2 * std::numbers::pi) >= 1e-12) bad.push_back("strand sum != 2 pi");
  return make("metric-identities", bad.empty(), bad);
}

CheckResult check_hurwitz(const Params&) {
  std::vector<std::string> bad;
  auto s4 = bldg::hurwitz_stats(CoxType::A, 3);
  if (s4.radius != 3) bad.push_back("radius H(S_4) = " + str(s4.radius));
  auto s5 = bldg::hurwitz_stats(CoxType::A, 4);
  if (s5.radius != 6) bad.push_back("radius H(S_5) = " + str(s5.radius));
  auto b3 = bldg::hurwitz_stats(CoxType::B, 3);
  if (b3.radius < 3) bad.push_back("radius H(B_3) = " + str(b3.radius) + " < binom(3,2)");
  return make("hurwitz-radius", bad.empty(), bad);
}

CheckResult check_aut_orders(const Params&) {
  std::vector<std::string> bad;
  if (autos::dihedral_group(CoxType::A, 3).size() != 8) bad.push_back("|D(S_4)| != 8");
  if (autos::full_aut_group(CoxType::A, 3).size() != 8) bad.push_back("|Aut(NC(S_4))| != 8");
  if (autos::dihedral_group(CoxType::B, 3).size() != 6) bad.push_back("|D(B_3)| != 6");
  if (autos::full_aut_group(CoxType::B, 3).size() != 6) bad.push_back("|Aut(NC(B_3))| != 6");
  auto dstar4 = autos::dihedral_group_star(4);
  if (dstar4.size() != 12) bad.push_back("|D*(D_4)| != 12");
  auto zeta = autos::exotic_zeta();
  if (std::find(dstar4.begin(), dstar4.end(), zeta) != dstar4.end())
    bad.push_back("zeta lies in D*");
  auto full4 = autos::full_aut_group(CoxType::D, 4);
  if (full4.size() <= 12) bad.push_back("|Aut(NC(D_4))| = " + str(full4.size()));
  if (std::find(full4.begin(), full4.end(), zeta) == full4.end())
    bad.push_back("zeta is not an automorphism");
  if (autos::dihedral_group_star(5).size() != 16) bad.push_back("|D*(D_5)| != 16");
  return make("aut-orders", bad.empty(), bad);
}

CheckResult check_extensions(const Params&) {
  std::vector<std::string> bad;
  struct Site {
    CoxType t;
    int rank, p;
  };
  for (auto [t, rank, p] :
       {Site{CoxType::A, 3, 2}, Site{CoxType::B, 3, 3}, Site{CoxType::D, 4, 3}}) {
    auto maps = t == CoxType::D ? autos::dihedral_group_star(rank) : autos::dihedral_group(t, rank);
    for (const auto& m : maps)
      if (!autos::try_extend_to_lambda(t, rank, m, p))
        bad.push_back("extension failed at " + to_string(t) + str(rank));
    if (!autos::verify_antiauto_extension(t, rank, p))
      bad.push_back("anti-automorphism extension failed at " + to_string(t) + str(rank));
  }
  return make("extension-identities", bad.empty(), bad);
}

CheckResult check_appendix(const Params&) {
  std::vector<std::string> bad;
  for (int n : {3, 4, 5})
    if (!autos::verify_rank2_table(CoxType::B, n)) bad.push_back("Table A.1 at n=" + str(n));
  for (int n : {4, 5})
    if (!autos::verify_rank2_table(CoxType::D, n)) bad.push_back("Table B.1 at n=" + str(n));
  for (auto [t, n] : {std::pair{CoxType::A, 4}, {CoxType::B, 5}, {CoxType::D, 5}})
    if (!autos::verify_form_vanishing(t, n))
      bad.push_back("form vanishing at " + to_string(t) + str(n));
  return make("appendix-fidelity", bad.empty(), bad);
}

CheckResult check_universal_chambers(const Params&) {
  std::vector<std::string> bad;
  for (int n = 4; n <= 6; ++n) {
    std::int64_t univ = bldg::universal_chambers(n).size();
    if (univ != static_cast<std::int64_t>(n) * (1 << (n - 3)))
      bad.push_back("universal count at n=" + str(n) + ": " + str(univ));
    std::int64_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    std::int64_t base = bldg::base_chambers(n).size();
    if (base != fact / 2) bad.push_back("base count at n=" + str(n) + ": " + str(base));
  }
  const auto& ncp = ChamberComplex::get(Tag::Ncp, 5);
  for (int id = 0; id < ncp.size(); ++id) {
    auto counts = bldg::codim1_face_count(Tag::Ncp, ncp.chamber(id));
    bool all3 = std::all_of(counts.begin(), counts.end(), [](int c) { return c == 3; });
    if (all3 != bldg::is_universal(ncp.chamber(id)))
      bad.push_back("codim-1 characterisation fails at chamber " + str(id));
  }
  return make("universal-base-chambers", bad.empty(), bad);
}

CheckResult check_embedding(const Params&) {
  std::vector<std::string> bad;
  struct Site {
    CoxType t;
    int max_rank, p;
  };
  auto run = [&](CoxType t, int rank, int p) {
    const auto& L = NcLattice::get(t, rank);
    std::set<fp::Subspace> images;
    for (int i = 0; i < L.size(); ++i) {
      auto s = fp::embed_nc(t, L.element(i), p);
      if (s.dim() != L.rank_of(i))
        bad.push_back("rank mismatch at " + to_string(t) + str(rank));
      images.insert(std::move(s));
    }
    if (static_cast<int>(images.size()) != L.size())
      bad.push_back("collision at " + to_string(t) + str(rank));
  };
  for (int rank = 1; rank <= 5; ++rank) run(CoxType::A, rank, 2);
  for (int rank = 2; rank <= 4; ++rank) run(CoxType::B, rank, 3);
  for (int rank = 3; rank <= 4; ++rank) run(CoxType::D, rank, 3);
  return make("embedding-injectivity", bad.empty(), bad);
}

// --- report-only scans for the open questions -------------------------------

CheckResult scan_apartments_b3(const Params&) {
  // Apartments of |NC(B_3)|: Boolean sublattices spanned by atom triples,
  // versus those arising from reduced words of maximal elements.
  const auto& L = NcLattice::get(CoxType::B, 3);
  const auto& g = GroupCtx::get(CoxType::B, 3);
  const auto& atoms = L.atoms();
  int apartments = 0;
  std::set<std::set<int>> apartment_sets;
  for (size_t a = 0; a < atoms.size(); ++a)
    for (size_t b = a + 1; b < atoms.size(); ++b)
      for (size_t c = b + 1; c < atoms.size(); ++c) {
        int ab = L.join(atoms[a], atoms[b]);
        int ac = L.join(atoms[a], atoms[c]);
        int bc = L.join(atoms[b], atoms[c]);
        if (L.rank_of(ab) != 2 || L.rank_of(ac) != 2 || L.rank_of(bc) != 2) continue;
        int top = L.join(ab, atoms[c]);
        if (L.rank_of(top) != 3) continue;
        if (L.meet(ab, ac) != static_cast<int>(atoms[a]) ||
            L.meet(ab, bc) != static_cast<int>(atoms[b]) ||
            L.meet(ac, bc) != static_cast<int>(atoms[c]))
          continue;
        ++apartments;
        apartment_sets.insert({atoms[a], atoms[b], atoms[c]});
      }
  // Reduced words of maximal elements of the absolute order.
  std::set<std::set<int>> from_words;
  for (const auto& w : g.all_elements()) {
    if (absolute_length(w) != 3) continue;
    for (const auto& word : reduced_words(CoxType::B, w)) {
      std::set<int> s;
      for (const auto& letter : word.letters) s.insert(L.index(letter.to_perm(3)));
      if (apartment_sets.count(s)) from_words.insert(s);
    }
  }
  CheckResult r;
  r.name = "scan-apartments-b3";
  r.status = Status::ReportOnly;
  r.details = {"apartments of |NC(B_3)|: " + str(apartments),
               "reachable from reduced words of maximal elements: " + str(from_words.size())};
  return r;
}

CheckResult scan_conv_equal_distance(const Params& p) {
  // Open question: does conv_NC = conv_Delta ∩ NCP when d_NC = d_Delta?
  int n = param_int(p, "n", 5);
  const auto& ncp = ChamberComplex::get(Tag::Ncp, n);
  const auto& bld = ChamberComplex::get(Tag::Building, n);
  std::vector<int> emb(ncp.size());
  for (int i = 0; i < ncp.size(); ++i) emb[i] = bld.id_of(ncp.chamber(i));
  long pairs = 0, equal = 0;
  for (int i = 0; i < ncp.size(); ++i) {
    auto dn = ncp.distances_from(i);
    auto db = bld.distances_from(emb[i]);
    for (int j = i + 1; j < ncp.size(); ++j) {
      if (dn[j] != db[emb[j]]) continue;
      ++pairs;
      auto hull_nc = ncp.convex_hull(i, j);
      std::set<int> hull_bld;
      for (int e : bld.convex_hull(emb[i], emb[j])) hull_bld.insert(e);
      std::set<int> lhs;
      for (int e : hull_nc) lhs.insert(emb[e]);
      std::set<int> rhs;
      for (int e : hull_bld)
        if (ncp.id_of(bld.chamber(e)) >= 0) rhs.insert(e);
      if (lhs == rhs) ++equal;
    }
    if (i > 40 && n > 5) break;
  }
  CheckResult r;
  r.name = "scan-conv-equal-distance";
  r.status = Status::ReportOnly;
  r.details = {"equal-distance pairs: " + str(pairs),
               "pairs with conv_NC = conv_Delta ∩ NCP: " + str(equal)};
  return r;
}

CheckResult scan_strand_lengths(const Params&) {
  // The three strands of the NCP_5 witness hull, measured with the
  // spherical edge lengths (conjecture: pairwise sums >= pi).
  const auto& ncp = ChamberComplex::get(Tag::Ncp, 5);
  Chamber C = bldg::parse_chamber("(1 3)(4 5)(1 2)(3 5)", 5);
  Chamber D = bldg::parse_chamber("(2 4)(1 5)(2 3)(1 4)", 5);
  int cn = ncp.id_of(C), dn = ncp.id_of(D);
  auto hull = ncp.convex_hull(cn, dn);
  std::set<int> hull_set(hull.begin(), hull.end());
  auto dist_c = ncp.distances_from(cn);

  std::vector<double> lengths;
  for (auto [nb, color] : ncp.neighbours(dn)) {
    if (!hull_set.count(nb) || dist_c[nb] != 6) continue;
    // Strand through this neighbour: chambers on minimal galleries C..nb.
    auto dist_nb = ncp.distances_from(nb);
    std::set<int> strand{dn};
    for (int e : hull)
      if (dist_c[e] + dist_nb[e] == 6) strand.insert(e);
    // Vertex graph of the strand, weighted by spherical edge lengths.
    std::map<F2Space, int> vid;
    std::vector<F2Space> verts;
    for (int e : strand)
      for (const auto& u : ncp.chamber(e).flag)
        if (!vid.count(u)) {
          vid[u] = static_cast<int>(verts.size());
          verts.push_back(u);
        }
    std::vector<std::vector<std::pair<int, double>>> adj(verts.size());
    for (int e : strand) {
      const auto& flag = ncp.chamber(e).flag;
      for (size_t x = 0; x < flag.size(); ++x)
        for (size_t y = x + 1; y < flag.size(); ++y) {
          double w = metric::edge_length(static_cast<int>(x) + 1, static_cast<int>(y) + 1, 3);
          adj[vid[flag[x]]].push_back({vid[flag[y]], w});
          adj[vid[flag[y]]].push_back({vid[flag[x]], w});
        }
    }
    // Dijkstra from C's rank-1 vertex to D's rank-1 vertex.
    int src = vid.at(C.flag[0]), dst = vid.at(D.flag[0]);
    std::vector<double> dist(verts.size(), 1e18);
    dist[src] = 0;
    std::set<std::pair<double, int>> pq{{0.0, src}};
    while (!pq.empty()) {
      auto [d, v] = *pq.begin();
      pq.erase(pq.begin());
      for (auto [w, len] : adj[v])
        if (d + len < dist[w] - 1e-15) {
          pq.erase({dist[w], w});
          dist[w] = d + len;
          pq.insert({dist[w], w});
        }
    }
    lengths.push_back(dist[dst]);
  }
  std::sort(lengths.begin(), lengths.end());
  CheckResult r;
  r.name = "scan-strand-lengths";
  r.status = Status::ReportOnly;
  for (double l : lengths) r.details.push_back("strand length: " + str(l / std::numbers::pi) + " pi");
  bool all_pairs_ge_pi = true;
  for (size_t i = 0; i < lengths.size(); ++i)
    for (size_t j = i + 1; j < lengths.size(); ++j)
      if (lengths[i] + lengths[j] < std::numbers::pi - 1e-12) all_pairs_ge_pi = false;
  r.details.push_back(std::string("pairwise sums >= pi: ") + (all_pairs_ge_pi ? "yes" : "no"));
  return r;
}

CheckResult scan_zeta_extension(const Params& p) {
  int prime = param_int(p, "p", 3);
  auto zeta = autos::exotic_zeta();
  auto ext = autos::try_extend_to_lambda(CoxType::D, 4, zeta, prime);
  CheckResult r;
  r.name = "scan-zeta-extension";
  r.status = Status::ReportOnly;
  r.details = {std::string("zeta extends to Lambda(F_") + str(prime) +
               "^4) by a conjugation-induced linear map: " + (ext ? "yes" : "no")};
  return r;
}

CheckResult check_all_small(const Params&) {
  auto results = run_acceptance();
  std::vector<std::string> bad;
  for (const auto& r : results)
    if (!r.passed()) bad.push_back(r.name);
  return make("all-small", bad.empty(), bad);
}

}  // namespace

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> reg = {
      {"counting-tables", check_counting_tables},
      {"bd-counts", check_bd_counts},
      {"apartment-counts", check_apartment_counts},
      {"narayana-profile", check_narayana},
      {"dist-pn-building", check_dist_pn_building},
      {"dist-ncp-pn", check_dist_ncp_pn},
      {"witness-ncp5", check_witness_ncp5},
      {"witness-ncp6", check_witness_ncp6},
      {"link-property", check_link_property},
      {"metric-identities", check_metric},
      {"hurwitz-radius", check_hurwitz},
      {"aut-orders", check_aut_orders},
      {"antiauto-extension",
       [](const Params& p) {
         CoxType t = param_type(p, CoxType::A);
         int rank = param_int(p, "n", t == CoxType::A ? 3 : t == CoxType::B ? 3 : 4);
         if (t == CoxType::A && p.count("n")) rank = param_int(p, "n", 4) - 1;
         int prime = param_int(p, "p", t == CoxType::A ? 2 : 3);
         bool ok = autos::verify_antiauto_extension(t, rank, prime);
         return make("antiauto-extension", ok);
       }},
      {"extension-identities", check_extensions},
      {"appendix-fidelity", check_appendix},
      {"universal-base-chambers", check_universal_chambers},
      {"embedding-injectivity", check_embedding},
      {"scan-apartments-b3", scan_apartments_b3},
      {"scan-conv-equal-distance", scan_conv_equal_distance},
      {"scan-strand-lengths", scan_strand_lengths},
      {"scan-zeta-extension", scan_zeta_extension},
      {"all-small", check_all_small},
  };
  return reg;
}

CheckResult run_check(const std::string& name, const Params& params) {
  auto it = registry().find(name);
  if (it == registry().end()) {
    CheckResult r;
    r.name = name;
    r.status = Status::Fail;
    r.details.push_back("unknown check; registered checks:");
    for (const auto& [key, fn] : registry()) r.details.push_back("  " + key);
    return r;
  }
  CheckResult r = it->second(params);
  std::ostringstream ps;
  for (const auto& [k, v] : params) ps << k << "=" << v << " ";
  r.params = ps.str();
  return r;
}

std::vector<CheckResult> run_acceptance() {
  const std::vector<std::pair<std::string, std::string>> criteria = {
      {"counting-tables", "criterion 1"},
      {"bd-counts", "criterion 2"},
      {"apartment-counts", "criterion 3"},
      {"narayana-profile", "criterion 4"},
      {"dist-pn-building", "criterion 5"},
      {"dist-ncp-pn", "criterion 6"},
      {"witness-ncp5", "criterion 7"},
      {"witness-ncp6", "criterion 8"},
      {"link-property", "criterion 9"},
      {"metric-identities", "criterion 10"},
      {"hurwitz-radius", "criterion 11"},
      {"aut-orders", "criterion 12"},
      {"extension-identities", "criterion 13"},
      {"appendix-fidelity", "criterion 14"},
      {"universal-base-chambers", "criterion 15"},
      {"embedding-injectivity", "criterion 16"},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, label] : criteria) {
    Params p;
    if (name == "link-property") {
      // Criterion 9 runs both sizes.
      auto r5 = run_check(name, {{"n", "5"}});
      auto r4 = run_check(name, {{"n", "4"}});
      CheckResult merged;
      merged.name = label + " (" + name + ")";
      merged.status =
          r5.passed() && r4.passed() ? Status::Pass : Status::Fail;
      merged.details = r5.details;
      merged.details.insert(merged.details.end(), r4.details.begin(), r4.details.end());
      out.push_back(std::move(merged));
      continue;
    }
    auto r = run_check(name, p);
    r.name = label + " (" + name + ")";
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace checks
}  // namespace ncpart
