// Command-line surface for the non-crossing partition library: counting
// tables, distances and hulls in the chamber complexes, property-check
// suites, automorphism groups, spherical-metric identities and SVG output.
//
// Size conventions follow the pictorial objects: for type A, --n is the
// number of points of the n-gon (the group is S_n); for types B and D it is
// the rank.  NCPART_MAX_N raises the exhaustive-size guards.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "ncpart/autos.hpp"
#include "ncpart/building.hpp"
#include "ncpart/checks.hpp"
#include "ncpart/draw.hpp"
#include "ncpart/linalg.hpp"
#include "ncpart/metric.hpp"
#include "ncpart/ncp.hpp"
#include "ncpart/perm.hpp"
#include "ncpart/trees.hpp"

using namespace ncpart;
using nlohmann::json;

namespace {

int rank_of_cli(CoxType type, int n) { return type == CoxType::A ? n - 1 : n; }

void emit(const json& j, bool as_json) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::function<void(const json&, int)> walk = [&](const json& v, int indent) {
    std::string pad(indent, ' ');
    if (v.is_object()) {
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (it.value().is_primitive())
          std::cout << pad << it.key() << ": " << it.value().dump() << "\n";
        else {
          std::cout << pad << it.key() << ":\n";
          walk(it.value(), indent + 2);
        }
      }
    } else if (v.is_array()) {
      for (const auto& e : v) {
        if (e.is_primitive())
          std::cout << pad << "- " << e.dump() << "\n";
        else {
          std::cout << pad << "-\n";
          walk(e, indent + 2);
        }
      }
    } else {
      std::cout << pad << v.dump() << "\n";
    }
  };
  walk(j, 0);
}

int run_checks(const std::string& name, const checks::Params& params, bool as_json) {
  std::vector<checks::CheckResult> results;
  if (name == "all") {
    results = checks::run_acceptance();
  } else {
    results.push_back(checks::run_check(name, params));
  }
  bool ok = true;
  json j = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed();
    std::string status = r.status == checks::Status::Pass   ? "pass"
                         : r.status == checks::Status::Fail ? "FAIL"
                                                            : "report";
    if (as_json) {
      j.push_back({{"name", r.name}, {"status", status}, {"details", r.details}});
    } else {
      std::cout << "[" << status << "] " << r.name << "\n";
      for (const auto& d : r.details) std::cout << "    " << d << "\n";
    }
  }
  if (as_json) emit(j, true);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-crossing partitions of types A, B, D: lattices, buildings, metrics"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "structured JSON output");

  std::string type_str = "A";
  int n = 5;

  // --- count ---------------------------------------------------------------
  auto* count = app.add_subcommand("count", "counting tables (closed form vs enumeration)");
  std::string count_kind = "elements";
  count->add_option("kind", count_kind, "elements | apartments | chambers")->required();
  count->add_option("--type", type_str, "A, B or D (elements only)");
  count->add_option("--n", n, "size parameter")->required();
  std::string count_tag = "ncp";
  count->add_option("--tag", count_tag, "chambers: building | pn | ncp");
  count->callback([&] {
    CoxType t = cox_type_from_char(type_str[0]);
    json j;
    if (count_kind == "elements") {
      if (t == CoxType::A) {
        j["ncp"] = {{"closed_form", catalan(n)}};
        j["p"] = {{"closed_form", bell(n)}};
        j["lambda"] = {{"closed_form", fp::subspace_lattice_size(n - 1, 2)}};
        if (n <= size_guard(CoxType::A)) {
          j["ncp"]["enumerated"] = n == 1 ? 1 : NcLattice::get(CoxType::A, n - 1).size();
          j["p"]["enumerated"] = all_partitions(n).size();
        } else {
          j["note"] = "enumeration guard exceeded; closed forms only";
        }
      } else {
        j["nc"] = {{"closed_form", nc_count(t, n)}};
        if (n <= size_guard(t))
          j["nc"]["enumerated"] = NcLattice::get(t, n).size();
        else
          j["note"] = "enumeration guard exceeded; closed forms only";
      }
    } else if (count_kind == "apartments") {
      j["ncp"] = {{"closed_form", count_nc_spanning_trees(n)}};
      j["p"] = {{"closed_form", count_spanning_trees(n)}};
      std::int64_t frames = 1, fact = 1;
      for (int i = 0; i < n - 1; ++i) frames *= (1ll << (n - 1)) - (1ll << i);
      for (int i = 2; i < n; ++i) fact *= i;
      j["building"] = {{"closed_form", frames / fact}};
      if (n <= 7) {
        j["ncp"]["enumerated"] = all_nc_spanning_trees(n).size();
        j["p"]["enumerated"] = all_spanning_trees(n).size();
      }
      if (n <= 6) j["building"]["enumerated"] = bldg::all_frames(n).size();
    } else if (count_kind == "chambers") {
      bldg::Tag tag = count_tag == "building" ? bldg::Tag::Building
                      : count_tag == "pn"     ? bldg::Tag::Pn
                                              : bldg::Tag::Ncp;
      j[count_tag] = {{"enumerated", bldg::ChamberComplex::get(tag, n).size()}};
    } else {
      throw CLI::ValidationError("unknown count kind: " + count_kind);
    }
    emit(j, as_json);
  });

  // --- enumerate -------------------------------------------------------------
  auto* enumerate = app.add_subcommand("enumerate", "list NC elements grouped by rank");
  enumerate->add_option("--type", type_str, "A, B or D");
  enumerate->add_option("--n", n, "size parameter")->required();
  int only_rank = -1;
  enumerate->add_option("--rank", only_rank, "restrict to one rank");
  enumerate->callback([&] {
    CoxType t = cox_type_from_char(type_str[0]);
    auto groups = nc_enumerate(t, rank_of_cli(t, n));
    json j;
    for (size_t r = 0; r < groups.size(); ++r) {
      if (only_rank >= 0 && static_cast<int>(r) != only_rank) continue;
      json row = json::array();
      for (const auto& w : groups[r]) row.push_back(element_str(w, t));
      j["rank " + std::to_string(r)] = row;
    }
    emit(j, as_json);
  });

  // --- dist / hull -----------------------------------------------------------
  for (bool with_hull : {false, true}) {
    auto* cmd = app.add_subcommand(with_hull ? "hull" : "dist",
                                   with_hull ? "convex hull of two chambers"
                                             : "chamber distances in all three complexes");
    auto chambers = std::make_shared<std::vector<std::string>>();
    auto np = std::make_shared<int>(5);
    auto hull_flag = std::make_shared<bool>(with_hull);
    cmd->add_option("--n", *np, "number of points")->required();
    cmd->add_option("chambers", *chambers, "two chamber literals (reduced word or flag)")
        ->expected(2);
    if (!with_hull) cmd->add_flag("--hull", *hull_flag, "also report the NCP hull size");
    cmd->callback([&as_json, chambers, np, hull_flag, with_hull] {
      auto C = bldg::parse_chamber((*chambers)[0], *np);
      auto D = bldg::parse_chamber((*chambers)[1], *np);
      const auto& bld = bldg::ChamberComplex::get(bldg::Tag::Building, *np);
      const auto& pn = bldg::ChamberComplex::get(bldg::Tag::Pn, *np);
      const auto& ncp = bldg::ChamberComplex::get(bldg::Tag::Ncp, *np);
      json j;
      j["d_building"] = bld.distance(bld.id_of(C), bld.id_of(D));
      int cp = pn.id_of(C), dp = pn.id_of(D);
      if (cp >= 0 && dp >= 0) j["d_pn"] = pn.distance(cp, dp);
      int cn = ncp.id_of(C), dn = ncp.id_of(D);
      if (cn >= 0 && dn >= 0) j["d_ncp"] = ncp.distance(cn, dn);
      if (*hull_flag && cn >= 0 && dn >= 0) {
        auto hull = ncp.convex_hull(cn, dn);
        j["hull_size"] = hull.size();
        if (with_hull) {
          json hl = json::array();
          for (int e : hull) hl.push_back(bldg::chamber_to_word(ncp.chamber(e)).str());
          j["chambers"] = hl;
        }
      }
      if (!as_json && !with_hull) {
        std::cout << "d_building=" << j["d_building"];
        if (j.contains("d_pn")) std::cout << " d_pn=" << j["d_pn"];
        if (j.contains("d_ncp")) std::cout << " d_ncp=" << j["d_ncp"];
        if (j.contains("hull_size")) std::cout << " hull=" << j["hull_size"];
        std::cout << "\n";
      } else {
        emit(j, as_json);
      }
    });
  }

  // --- check -------------------------------------------------------------------
  auto* check = app.add_subcommand("check", "run a named invariant check (or 'all')");
  std::string check_name;
  check->add_option("name", check_name, "check name; 'all' runs the acceptance suite")->required();
  int check_n = -1, check_p = -1;
  std::string check_type;
  bool small = false;
  check->add_option("--n", check_n, "size parameter");
  check->add_option("--p", check_p, "prime");
  check->add_option("--type", check_type, "Coxeter type");
  check->add_flag("--small", small, "with 'all': the desk-scale acceptance suite");
  check->callback([&] {
    checks::Params params;
    if (check_n >= 0) params["n"] = std::to_string(check_n);
    if (check_p >= 0) params["p"] = std::to_string(check_p);
    if (!check_type.empty()) params["type"] = check_type;
    std::exit(run_checks(check_name, params, as_json));
  });

  // --- draw ---------------------------------------------------------------------
  auto* drawc = app.add_subcommand("draw", "SVG output of partitions and Hasse diagrams");
  std::string draw_kind = "partition", literal, outfile;
  drawc->add_option("kind", draw_kind, "partition | hasse")->required();
  drawc->add_option("object", literal, "partition literal (for 'partition')");
  drawc->add_option("--type", type_str, "A, B or D");
  drawc->add_option("--n", n, "size parameter");
  drawc->add_option("-o,--out", outfile, "output file (default stdout)");
  drawc->callback([&] {
    CoxType t = cox_type_from_char(type_str[0]);
    std::string svg;
    if (draw_kind == "partition") {
      if (t == CoxType::A)
        svg = draw::partition_svg(SetPartition::parse(literal, n));
      else
        svg = draw::partition_svg(t, SignedPartition::parse(literal, n));
    } else if (draw_kind == "hasse") {
      svg = draw::hasse_svg(t, rank_of_cli(t, n));
    } else {
      throw CLI::ValidationError("unknown draw kind: " + draw_kind);
    }
    if (outfile.empty()) {
      std::cout << svg;
    } else {
      std::ofstream out(outfile);
      out << svg;
      std::cout << "wrote " << outfile << "\n";
    }
  });

  // --- aut -----------------------------------------------------------------------
  auto* aut = app.add_subcommand("aut", "automorphism groups of NC lattices");
  std::string group_kind = "dihedral";
  bool print_maps = false;
  aut->add_option("--type", type_str, "A, B or D");
  aut->add_option("--n", n, "size parameter")->required();
  aut->add_option("--group", group_kind, "dihedral | star | skew | full | zeta");
  aut->add_flag("--print", print_maps, "serialize the maps");
  aut->callback([&] {
    CoxType t = cox_type_from_char(type_str[0]);
    int rank = rank_of_cli(t, n);
    std::vector<autos::LatticeMap> maps;
    if (group_kind == "dihedral")
      maps = autos::dihedral_group(t, rank);
    else if (group_kind == "star")
      maps = autos::dihedral_group_star(rank);
    else if (group_kind == "skew")
      maps = autos::skew_group(t, rank);
    else if (group_kind == "full")
      maps = autos::full_aut_group(t, rank);
    else if (group_kind == "zeta")
      maps = {autos::exotic_zeta()};
    else
      throw CLI::ValidationError("unknown group kind: " + group_kind);
    json j;
    j["group"] = group_kind;
    j["order"] = maps.size();
    auto bp = autos::standard_bipartition(t, rank);
    j["bipartition"] = {{"left", element_str(bp.left, t)}, {"right", element_str(bp.right, t)}};
    if (print_maps) {
      json arr = json::array();
      for (const auto& m : maps)
        arr.push_back({{"reversing", m.reversing()}, {"map", m.str()}});
      j["maps"] = arr;
    }
    emit(j, as_json);
  });

  // --- hurwitz ----------------------------------------------------------------------
  auto* hur = app.add_subcommand("hurwitz", "radius and diameter of the Hurwitz graph");
  hur->add_option("--type", type_str, "A, B or D");
  hur->add_option("--n", n, "size parameter")->required();
  hur->callback([&] {
    CoxType t = cox_type_from_char(type_str[0]);
    auto stats = bldg::hurwitz_stats(t, rank_of_cli(t, n));
    json j;
    j["vertices"] = stats.vertices;
    j["radius"] = stats.radius;
    j["diameter"] = stats.diameter;
    json hist;
    for (auto [ecc, count] : stats.eccentricity_histogram)
      hist[std::to_string(ecc)] = count;
    j["eccentricities"] = hist;
    emit(j, as_json);
  });

  // --- metric -----------------------------------------------------------------------
  auto* met = app.add_subcommand("metric", "spherical edge lengths and the length-pi paths");
  std::string met_kind = "edge";
  int mi = 1, mj = 2, mr = 3, mx = 1, my = 2;
  std::string ranks_csv;
  met->add_option("kind", met_kind, "edge | path | holes")->required();
  met->add_option("--i", mi);
  met->add_option("--j", mj);
  met->add_option("--r", mr);
  met->add_option("--x", mx);
  met->add_option("--y", my);
  met->add_option("--ranks", ranks_csv, "comma-separated rank sequence (path)");
  met->callback([&] {
    json j;
    if (met_kind == "edge") {
      j["cos2"] = {{"num", metric::edge_length_cos2(mi, mj, mr).num},
                   {"den", metric::edge_length_cos2(mi, mj, mr).den}};
      j["length"] = metric::edge_length(mi, mj, mr);
    } else if (met_kind == "path") {
      std::vector<int> ranks;
      std::istringstream is(ranks_csv);
      std::string tok;
      while (std::getline(is, tok, ',')) ranks.push_back(std::stoi(tok));
      j["length"] = metric::path_length(ranks, mr);
    } else if (met_kind == "holes") {
      auto path = metric::opposite_link_path_length(mx, my, mr);
      j["segments"] = {path.a, path.b, path.c};
      j["total"] = path.total;
      j["exact_cos_sum_minus_one"] = path.exact_minus_one;
    } else {
      throw CLI::ValidationError("unknown metric kind: " + met_kind);
    }
    emit(j, as_json);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
