#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncpart/linalg.hpp"
#include "ncpart/ncp.hpp"
#include "ncpart/perm.hpp"
#include "ncpart/trees.hpp"

namespace ncpart {
namespace bldg {

/// Subspace of F_2^m (m <= 7) in reduced echelon form, rows as bit masks.
struct F2Space {
  std::uint8_t m = 0;
  std::uint8_t dim = 0;
  std::array<std::uint8_t, 7> rows{};

  static F2Space zero(int ambient);
  static F2Space whole(int ambient);
  static F2Space span(int ambient, const std::vector<std::uint8_t>& vectors);

  bool contains(std::uint8_t v) const;
  bool contains(const F2Space& o) const;
  F2Space sum(const F2Space& o) const;
  F2Space meet(const F2Space& o) const;
  std::vector<std::uint8_t> vectors() const;  // all 2^dim member vectors

  std::uint64_t key() const;
  fp::Subspace to_subspace() const;
  static F2Space from_subspace(const fp::Subspace& s);

  bool operator==(const F2Space& o) const = default;
  auto operator<=>(const F2Space& o) const = default;
};

enum class Tag { Building, Pn, Ncp };
std::string to_string(Tag t);

/// Vertex predicates of the chamber subcomplexes of Delta = |Lambda(F_2^{n-1})|.
bool is_partition_vector(std::uint8_t v);
bool is_partition_space(const F2Space& u);
bool is_ncp_space(const F2Space& u);
bool in_tag(Tag tag, const F2Space& u);
/// The partition spanned by the partition vectors of a partition subspace.
SetPartition space_to_partition(const F2Space& u, int n);

/// Complete flag C_1 < ... < C_{n-2} of proper subspaces of F_2^{n-1}.
struct Chamber {
  int n = 0;
  std::vector<F2Space> flag;

  bool operator==(const Chamber& o) const = default;
  auto operator<=>(const Chamber& o) const = default;
  std::string str() const;
};

Chamber word_to_chamber(const ReducedWord& word);  // type A reduced word of c
ReducedWord chamber_to_word(const Chamber& c);     // NCP chambers only
Chamber parse_chamber(const std::string& s, int n);

struct Gallery {
  std::vector<Chamber> chambers;
  std::vector<int> colors;  // colors[i] = rank where step i changes
  int length() const { return static_cast<int>(colors.size()); }
};

/// An apartment given by its frame; for PN/NCP apartments the frame is the
/// edge-vector image of a spanning tree.
struct Apartment {
  int n = 0;
  std::vector<std::uint8_t> frame;  // n-1 independent vectors
  std::optional<Forest> tree;

  bool contains(const Chamber& c) const;
  F2Space opposite_vertex(const F2Space& v) const;
};

/// One enumerated chamber complex (building or subcomplex), with its
/// chamber graph.  Cached per (tag, n); guarded sizes.
class ChamberComplex {
 public:
  static const ChamberComplex& get(Tag tag, int n);

  Tag tag;
  int n = 0;
  int r = 0;  // vertices per chamber

  int size() const { return static_cast<int>(chambers_.size()); }
  const Chamber& chamber(int id) const { return chambers_[id]; }
  const std::vector<Chamber>& chambers() const { return chambers_; }
  int id_of(const Chamber& c) const;  // -1 if absent
  const std::vector<std::pair<int, int>>& neighbours(int id) const {
    return adj_[id];  // (chamber id, color)
  }

  std::vector<int> distances_from(int id) const;  // BFS in the chamber graph
  int distance(int a, int b) const;
  std::vector<int> convex_hull(int a, int b) const;
  /// Chambers of this complex containing the given panel (flag minus one rank).
  std::vector<int> panel_chambers(int id, int rank) const;

 private:
  std::vector<Chamber> chambers_;
  std::map<Chamber, int> index_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// none if the two chambers differ in zero or >= 2 ranks.
std::optional<int> adjacent_color(const Chamber& c, const Chamber& d);

/// A common apartment: constructed from the two flags in the building,
/// searched over (non-crossing) spanning trees for PN and NCP.
std::optional<Apartment> common_apartment(Tag tag, const Chamber& c, const Chamber& d);

/// Explicit minimal galleries: inside |P_n|
/// via joins with the vertices of D, and inside |NCP_n| via meets, the
/// latter under the common-PN-apartment hypothesis.
Gallery constructive_gallery_pn(const Chamber& c, const Chamber& d);
Gallery constructive_gallery_ncp_in_pn_apartment(const Chamber& c, const Chamber& d,
                                                 const Apartment& a);

bool is_universal_partition(const SetPartition& pi);
bool is_basic_partition(const SetPartition& pi);
bool is_universal(const Chamber& c);
bool is_base(const Chamber& c);
std::vector<int> universal_chambers(int n);  // ids in the NCP complex
std::vector<int> base_chambers(int n);       // ids in the PN complex

/// True iff every chamber of the tagged complex shares a tagged apartment
/// with c.
bool star_union_test(Tag tag, const Chamber& c);

/// Per-rank count of tagged chambers containing each codimension-1 face.
std::vector<int> codim1_face_count(Tag tag, const Chamber& c);

/// Distance of two tagged vertices in the 1-skeleton.
int vertex_distance(const F2Space& u, const F2Space& v, Tag tag, int n);

/// Vertices p of Delta-apartments outside the tag whose apartment link lies
/// inside the tag; empty for n >= 5.
std::vector<F2Space> link_property_scan(int n, Tag tag);

struct HurwitzStats {
  int vertices = 0;
  int radius = 0;
  int diameter = 0;
  std::map<int, int> eccentricity_histogram;
};
/// BFS statistics of the chamber graph of |NC(W)| (the Hurwitz graph).
HurwitzStats hurwitz_stats(CoxType type, int rank);

/// Frames of F_2^{n-1} (bases up to order), for scans over all apartments.
std::vector<std::vector<std::uint8_t>> all_frames(int n);

}  // namespace bldg
}  // namespace ncpart
