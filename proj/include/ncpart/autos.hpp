#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncpart/linalg.hpp"
#include "ncpart/ncp.hpp"
#include "ncpart/perm.hpp"

namespace ncpart {
namespace autos {

/// Factorization c = left * right into two involutions.
struct Bipartition {
  SignedPerm left, right;
  bool operator==(const Bipartition& o) const = default;
};

/// The deterministic standard bipartition: two-color the Coxeter diagram,
/// multiply the color classes, and conjugate to c by the minimal solution
/// of w c' w^-1 = c (ordered by absolute length, then sign changes, then
/// the image vector).
Bipartition standard_bipartition(CoxType type, int rank);

/// The h bipartitions c^k l . c^{k-1} l, k = 0..h-1.
std::vector<Bipartition> all_bipartitions_cyclic(CoxType type, int rank);

/// A permutation of the elements of an NC lattice that preserves (or
/// reverses) the order; both directions are verified on construction.
class LatticeMap {
 public:
  LatticeMap(const NcLattice* lattice, std::vector<int> image, bool reversing);

  const NcLattice& lattice() const { return *lattice_; }
  bool reversing() const { return reversing_; }
  int apply(int id) const { return image_[id]; }
  SignedPerm apply(const SignedPerm& w) const;
  const std::vector<int>& image() const { return image_; }

  LatticeMap after(const LatticeMap& o) const;  // this ∘ o
  LatticeMap inverse() const;
  bool is_identity() const;
  int order() const;

  std::string str() const;  // (element -> element) pairs

  bool operator==(const LatticeMap& o) const {
    return image_ == o.image_ && reversing_ == o.reversing_;
  }
  bool operator<(const LatticeMap& o) const {
    return std::tie(reversing_, image_) < std::tie(o.reversing_, o.image_);
  }

 private:
  const NcLattice* lattice_;
  std::vector<int> image_;
  bool reversing_;
};

LatticeMap conjugation_map(CoxType type, int rank, const SignedPerm& g);  // w -> g w g^-1
LatticeMap reflecting_map(CoxType type, int rank, const SignedPerm& g);   // w -> g w^-1 g
LatticeMap kreweras_map(CoxType type, int rank);                          // w -> w^-1 c
LatticeMap balanced_n_map(int rank);                                      // w -> [n] w [n], type D

std::vector<LatticeMap> generate_group(std::vector<LatticeMap> generators);

/// D = <phi_l, phi_r>, the dihedral group of automorphisms.
std::vector<LatticeMap> dihedral_group(CoxType type, int rank);
/// D* = <phi_l, phi_r ∘ phi_n> for type D, of order 4(rank-1).
std::vector<LatticeMap> dihedral_group_star(int rank);
/// D^ = <phi_l, w -> w^-1 c>, skew-automorphisms of order 4d.
std::vector<LatticeMap> skew_group(CoxType type, int rank);

/// All lattice automorphisms, by backtracking over atom images.
std::vector<LatticeMap> full_aut_group(CoxType type, int rank);

/// The involutive automorphism of NC(D_4) outside D*.
LatticeMap exotic_zeta();

/// Linear map of F_p^rank carrying each root line to the root line of the
/// image reflection; verified to satisfy Psi ∘ f = f ∘ phi on all of NC.
struct FpMatrix {
  int p = 2, m = 0;
  std::vector<std::vector<int>> a;  // row-major
  fp::VecFp apply(const fp::VecFp& v) const;
  fp::Subspace apply(const fp::Subspace& u) const;
};
FpMatrix extend_to_lambda(CoxType type, int rank, const LatticeMap& phi, int p);

/// Attempt the same extension for an arbitrary atom map (used for the open
/// question about zeta); returns nullopt when no linear map matches all
/// root lines.
std::optional<FpMatrix> try_extend_to_lambda(CoxType type, int rank, const LatticeMap& phi,
                                             int p);

/// Triangular bilinear forms with integer coefficients.
struct BilinearForm {
  int m = 0;
  std::vector<std::vector<long long>> coeff;
  long long eval(const std::vector<int>& u, const std::vector<int>& v) const;
  bool nondegenerate_mod(int p) const;
};
BilinearForm bilinear_form(CoxType type, int rank);
/// Right complement U^perp = { v : b(u, v) = 0 for all u in U } over F_p.
fp::Subspace complement(const fp::Subspace& u, const BilinearForm& b);

/// sub(t) = { s in T : st in NC }.
std::vector<SignedPerm> subordination(CoxType type, int rank, const SignedPerm& t);
/// beta(alpha_s, alpha_t) = 0 for every t and s in sub(t), over the integers.
bool verify_form_vanishing(CoxType type, int rank);

/// Psi_b(f(w)) = f(w^-1 c) for every w in NC, with the type's form mod p.
bool verify_antiauto_extension(CoxType type, int rank, int p);

/// Appendix tables of rank-2 reduced decompositions: every instantiated row
/// must equal the machine enumeration as a set of words.
struct TableRow {
  SignedPerm element;
  std::vector<std::vector<SignedPerm>> words;
};
std::vector<TableRow> rank2_table(CoxType type, int n);  // B: Table A.1, D: Table B.1
bool verify_rank2_table(CoxType type, int n);

/// Case classifiers of the rank-2 reduced-word classification;
/// returns the 0-based case index or -1 if no case applies.
int classify_rank2_pair(CoxType type, int n, const SignedPerm& s, const SignedPerm& t);
int rank2_case_count(CoxType type);

/// Types of rank 1 and rank 2 elements of NC(B_n) and NC(D_n).
int type_rank1(CoxType type, int n, const SignedPerm& p);
int type_rank2(CoxType type, int n, const SignedPerm& x);

}  // namespace autos
}  // namespace ncpart
