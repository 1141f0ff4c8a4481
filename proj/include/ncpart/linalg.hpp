#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ncpart/ncp.hpp"
#include "ncpart/perm.hpp"
#include "ncpart/trees.hpp"

namespace ncpart {
namespace fp {

/// Vector over F_p with entries in [0, p).
struct VecFp {
  int p = 2;
  std::vector<int> coords;

  VecFp() = default;
  VecFp(int prime, std::vector<int> c);
  static VecFp zero(int prime, int m);
  static VecFp unit(int prime, int m, int i);  // e_i, 1-based

  int dim() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  VecFp operator+(const VecFp& o) const;
  VecFp operator*(int scalar) const;

  std::string str() const;  // residue string, e.g. "01100"
  static VecFp parse(const std::string& s, int prime);

  bool operator==(const VecFp& o) const = default;
  auto operator<=>(const VecFp& o) const = default;
};

/// Subspace of F_p^m in reduced row echelon form; equality is structural.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int prime, int ambient, std::vector<VecFp> spanning);
  static Subspace zero(int prime, int ambient);
  static Subspace whole(int prime, int ambient);

  int p() const { return p_; }
  int ambient() const { return m_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<VecFp>& basis() const { return rows_; }

  bool contains(const VecFp& v) const;
  bool contains(const Subspace& o) const;

  std::string str() const;  // semicolon-joined canonical rows
  static Subspace parse(const std::string& s, int prime, int ambient);

  bool operator==(const Subspace& o) const = default;
  auto operator<=>(const Subspace& o) const = default;

 private:
  int p_ = 2, m_ = 0;
  std::vector<VecFp> rows_;
};

Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);

/// All vectors of a subspace (p^dim of them, including zero).
std::vector<VecFp> all_vectors(const Subspace& u);

/// Crystallographic coordinates of the positive roots (§ integer models):
/// type A_n in R^n via the e_{n+1} = 0 identification, B_n and D_n in R^n.
class RootSystem {
 public:
  RootSystem(CoxType type, int rank);

  CoxType type() const { return type_; }
  int rank() const { return rank_; }
  /// Integer coordinates of the positive root of a reflection.
  const std::vector<int>& root_of(const Cycle& reflection) const;
  const std::vector<std::pair<Cycle, std::vector<int>>>& positive_roots() const {
    return roots_;
  }
  VecFp root_mod(const Cycle& reflection, int p) const;

 private:
  CoxType type_;
  int rank_;
  std::vector<std::pair<Cycle, std::vector<int>>> roots_;
  std::map<Cycle, int> index_;
};

/// Edge (i,j) of the n-gon as a vector of F_2^{n-1}: e_i + e_j (j < n), e_i
/// (j = n).
VecFp edge_to_vector(const Edge& e, int n);

/// p-moved space of w in NC(W): the span of the p-roots of any reduced word.
Subspace embed_nc(CoxType type, const SignedPerm& w, int p);

/// Image of a partition in Lambda(F_2^{n-1}): span of the edge vectors of
/// any spanning forest.
Subspace embed_partition(const SetPartition& pi);

/// Every rational basis of positive roots must stay a basis mod p.
bool is_compatible_prime(CoxType type, int rank, int p);

std::int64_t gaussian_binomial(int m, int k, int q);
/// Number of elements of the subspace lattice of F_q^m, all dimensions.
std::int64_t subspace_lattice_size(int m, int q);

}  // namespace fp
}  // namespace ncpart
