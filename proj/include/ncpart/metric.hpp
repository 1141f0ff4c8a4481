#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ncpart {
namespace metric {

/// Exact rational with 64-bit parts, reduced, denominator positive.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  bool operator==(const Rational& o) const = default;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  /// The exact square root if both parts are perfect squares.
  bool sqrt_exact(Rational& out) const;
};

/// Spherical length of an edge between vertices of ranks i < j in the
/// Coxeter complex of type A_r on the round (r-1)-sphere:
/// cos l_ij = sqrt(i(s-j) / (j(s-i))), s = r+1.
double edge_length(int i, int j, int r);

/// The radicand of cos^2(l_ij), exactly.
Rational edge_length_cos2(int i, int j, int r);

struct OppositeLinkPath {
  double a = 0, b = 0, c = 0;  // the three segment lengths
  double total = 0;            // a + b + c, equal to pi
  bool exact_minus_one = false;  // cos(A+B+C) == -1 in exact arithmetic
};

/// The length-pi geodesic through two vertices of ranks x < y and the
/// opposite vertices in their links: segments l_{x,u}, l_{x,y}, l_{v,y}
/// with u = s-y+x and v = y-x.
OppositeLinkPath opposite_link_path_length(int x, int y, int r);

/// Sum of edge lengths along a vertex path given by ranks.
double path_length(const std::vector<int>& rank_sequence, int r);

}  // namespace metric
}  // namespace ncpart
