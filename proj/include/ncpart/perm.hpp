#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace ncpart {

enum class CoxType { A, B, D };

std::string to_string(CoxType t);
CoxType cox_type_from_char(char c);

/// Signed permutation w of {±1,...,±m} with w(-i) = -w(i).  Only the images
/// of the positive points are stored.  Plain permutations of {1,...,m} are
/// the sign-free special case and carry the type-A world.
class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> images);
  static SignedPerm identity(int m);

  int points() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const;
  const std::vector<int>& images() const { return img_; }

  SignedPerm operator*(const SignedPerm& o) const;  // (a*b)(x) = a(b(x))
  SignedPerm inverse() const;
  SignedPerm conjugate(const SignedPerm& g) const;  // g * this * g^-1

  bool is_identity() const;
  bool is_unsigned() const;
  int sign_changes() const;  // #{ i>0 : w(i)<0 }

  bool operator==(const SignedPerm& o) const = default;
  auto operator<=>(const SignedPerm& o) const = default;

 private:
  std::vector<int> img_;
};

enum class CycleKind { Unsigned, Paired, Balanced };

/// One cycle of a disjoint cycle decomposition, in canonical form:
///  - Unsigned (i1 ... ik): rotated so the smallest entry is first.
///  - Paired ((i1 ... ik)) = (i1...ik)(-i1...-ik): among the 2k equivalent
///    representatives the one whose first entry is the positive value of
///    smallest absolute value.
///  - Balanced [i1 ... ik] = (i1...ik -i1...-ik): rotated so the positive
///    entry of smallest absolute value is first.
struct Cycle {
  CycleKind kind = CycleKind::Unsigned;
  std::vector<int> entries;

  Cycle() = default;
  Cycle(CycleKind k, std::vector<int> e);

  int length() const { return static_cast<int>(entries.size()); }
  /// Contribution to the absolute length: unsigned/paired k-cycle -> k-1,
  /// balanced m-cycle -> m.
  int reflection_length() const;
  bool is_reflection() const { return reflection_length() == 1; }
  /// The permutation of {±1..±m} (or {1..m} for Unsigned) this cycle denotes.
  SignedPerm to_perm(int m) const;

  std::string str() const;

  bool operator==(const Cycle& o) const = default;
  std::strong_ordering operator<=>(const Cycle& o) const;

 private:
  void canonicalize();
};

std::ostream& operator<<(std::ostream& os, const Cycle& z);

/// Disjoint cycle decomposition; trivial cycles (fixed points) are omitted.
/// Cycles are canonical and sorted, so equal permutations give equal lists.
std::vector<Cycle> disjoint_cycles(const SignedPerm& w, bool as_unsigned);

/// Group element printing/parsing in the ASCII cycle syntax, e.g.
/// "(1 2 3)", "((1 2 -3))[4]", "()" for the identity.
std::string element_str(const SignedPerm& w, CoxType type);
SignedPerm parse_element(const std::string& s, CoxType type, int points);

/// Static data of one Coxeter group W(type, rank): its reflections in
/// canonical order, the standard Coxeter element and the Coxeter number.
/// For type A the group is S_{rank+1}; for B and D it acts on ±{1..rank}.
class GroupCtx {
 public:
  static const GroupCtx& get(CoxType type, int rank);

  CoxType type;
  int rank = 0;
  int points = 0;  // A: rank+1 letters, B/D: rank letters
  std::vector<Cycle> reflection_cycles;
  std::vector<SignedPerm> reflections;
  SignedPerm coxeter;
  int coxeter_number = 0;

  bool contains(const SignedPerm& w) const;
  int reflection_index(const SignedPerm& t) const;  // -1 if not a reflection

  /// All group elements, by breadth-first closure over the reflections.
  const std::vector<SignedPerm>& all_elements() const;

 private:
  GroupCtx() = default;
  mutable std::vector<SignedPerm> elements_;
  mutable std::map<SignedPerm, int> refl_index_;
};

/// Absolute (reflection) length.  Identical cycle formula for all three
/// classical types; the type argument only drives the domain check.
int absolute_length(CoxType type, const SignedPerm& w);
int absolute_length(const SignedPerm& w);

/// v <= w in absolute order: l(w) = l(v) + l(v^-1 w).
bool absolute_le(CoxType type, const SignedPerm& v, const SignedPerm& w);

std::vector<Cycle> reflections(CoxType type, int rank);
SignedPerm coxeter_element(CoxType type, int rank);
int coxeter_number(CoxType type, int rank);

/// A word of reflections; reduced when the letter count equals the
/// absolute length of the product.
struct ReducedWord {
  CoxType type = CoxType::A;
  int rank = 0;
  std::vector<Cycle> letters;

  SignedPerm product() const;
  bool is_reduced() const;
  std::string str() const;

  bool operator==(const ReducedWord& o) const = default;
  auto operator<=>(const ReducedWord& o) const = default;
};

/// All reduced decompositions of w, by recursive prefix extension.
std::vector<ReducedWord> reduced_words(CoxType type, const SignedPerm& w);
std::int64_t count_reduced_words(CoxType type, const SignedPerm& w);

enum class ShiftDir { Left, Right };

/// Hurwitz shift at position i (1-based, i < length): the right shift
/// replaces (t_i, t_{i+1}) by (t_i t_{i+1} t_i, t_i), the left shift by
/// (t_{i+1}, t_{i+1} t_i t_{i+1}).  Product and length are unchanged.
ReducedWord hurwitz_shift(const ReducedWord& word, int i, ShiftDir dir);

}  // namespace ncpart

template <>
struct std::hash<ncpart::SignedPerm> {
  size_t operator()(const ncpart::SignedPerm& w) const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : w.images()) h = h * 1099511628211ull + static_cast<size_t>(v + 64);
    return h;
  }
};
