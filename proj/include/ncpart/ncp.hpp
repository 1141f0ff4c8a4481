#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncpart/perm.hpp"

namespace ncpart {

/// Partition of {1..n}; blocks are sorted internally and by minimum, so
/// equality is structural.
class SetPartition {
 public:
  SetPartition() = default;
  SetPartition(int n, std::vector<std::vector<int>> blocks);
  static SetPartition discrete(int n);
  static SetPartition full(int n);

  int n() const { return n_; }
  int rank() const { return n_ - static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_of(int i) const;  // index into blocks()

  bool non_crossing() const;
  /// The offending pair of block indices if crossing.
  std::optional<std::pair<int, int>> crossing_pair() const;
  bool refines(const SetPartition& o) const;  // this <= o

  std::string str() const;
  static SetPartition parse(const std::string& s, int n);

  bool operator==(const SetPartition& o) const = default;
  auto operator<=>(const SetPartition& o) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// Join and meet in the full partition lattice P_n (refinement order).
SetPartition pn_join(const SetPartition& a, const SetPartition& b);
SetPartition pn_meet(const SetPartition& a, const SetPartition& b);
/// Join in NCP_n: the P_n join with crossing blocks merged.
SetPartition ncp_join(const SetPartition& a, const SetPartition& b);

std::vector<SetPartition> all_partitions(int n);
std::vector<SetPartition> all_ncp(int n);

/// B_n- or pure D_n-partition: a partition of {±1..±n} with B = -B allowed
/// for at most one (zero) block.  Entries of a block are sorted in the
/// circular order of the 2n-gon; blocks by their first position.
class SignedPartition {
 public:
  SignedPartition() = default;
  SignedPartition(int n, std::vector<std::vector<int>> blocks);

  int n() const { return n_; }
  int rank() const { return n_ - static_cast<int>(blocks_.size()) / 2; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int zero_block() const { return zero_block_; }  // index or -1

  /// D_n-partition axioms: zero block, if any, has >= 4 elements;
  /// pure means it contains {-n, n}.
  bool is_d_partition() const;
  bool is_pure_d() const;

  /// Image under the canonical identification {±1..±n} -> {1..2n}.
  SetPartition canonical_image() const;
  static SignedPartition from_canonical_image(const SetPartition& p);

  bool non_crossing_b() const;
  bool non_crossing_d() const;  // the pictorial type D notion

  std::string str() const;
  static SignedPartition parse(const std::string& s, int n);

  bool operator==(const SignedPartition& o) const = default;
  auto operator<=>(const SignedPartition& o) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  int zero_block_ = -1;
};

// --- membership and the partition <-> permutation dictionary --------------

/// w <= c by the cycle-structure criterion (consistent orientation plus
/// pairwise non-crossing).  Must agree with the length-based definition.
bool nc_member(CoxType type, const SignedPerm& w);
/// The length-based definition, used as a cross check.
bool nc_member_by_length(CoxType type, const SignedPerm& w);

SetPartition perm_to_partition_a(const SignedPerm& w);
SignedPartition perm_to_partition_bd(CoxType type, const SignedPerm& w);

SignedPerm partition_to_perm(const SetPartition& pi);
SignedPerm partition_to_perm(CoxType type, const SignedPartition& pi);

// --- the NC lattice, enumerated ------------------------------------------

/// NC(W, c) for W = W(type, rank), fully enumerated with its order relation.
/// Guarded: type A up to 8 points, B/D up to rank 6 by default; the
/// NCPART_MAX_N environment variable raises the guard.
class NcLattice {
 public:
  static const NcLattice& get(CoxType type, int rank);

  const GroupCtx& group() const { return *group_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const SignedPerm& element(int i) const { return elements_[i]; }
  const std::vector<SignedPerm>& elements() const { return elements_; }
  int index(const SignedPerm& w) const;  // -1 if absent
  int rank_of(int i) const { return rank_[i]; }
  bool le(int a, int b) const;
  int meet(int a, int b) const;
  int join(int a, int b) const;
  const std::vector<int>& atoms() const { return atoms_; }
  std::vector<int> elements_of_rank(int r) const;
  int bottom() const { return bottom_; }
  int top() const { return top_; }

 private:
  const GroupCtx* group_ = nullptr;
  std::vector<SignedPerm> elements_;
  std::vector<int> rank_;
  std::vector<std::vector<std::uint64_t>> le_;
  std::vector<int> atoms_;
  int bottom_ = 0, top_ = 0;
  std::map<SignedPerm, int> index_;
};

struct CoverSets {
  std::vector<SignedPerm> above;  // elements covering w inside NC
  std::vector<SignedPerm> below;  // elements covered by w
};
CoverSets covers(CoxType type, const SignedPerm& w);

SignedPerm kreweras(CoxType type, const SignedPerm& w);

/// All elements grouped by rank (index = rank).
std::vector<std::vector<SignedPerm>> nc_enumerate(CoxType type, int rank);

// --- lattice operations on partitions --------------------------------------

SetPartition nc_meet(const SetPartition& a, const SetPartition& b);
SignedPartition nc_meet(CoxType type, const SignedPartition& a, const SignedPartition& b);
SignedPartition nc_join(CoxType type, const SignedPartition& a, const SignedPartition& b);

// --- counting ---------------------------------------------------------------

std::int64_t binomial(int n, int k);
std::int64_t catalan(int n);
std::int64_t narayana(int n, int k);
std::int64_t stirling2(int n, int k);
std::int64_t bell(int n);
std::int64_t nc_count(CoxType type, int rank);  // closed forms per type

/// Guard on exhaustive sizes; NCPART_MAX_N overrides (with a warning).
int size_guard(CoxType type);

}  // namespace ncpart
