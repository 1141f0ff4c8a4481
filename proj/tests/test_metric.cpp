#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ncpart/metric.hpp"

using namespace ncpart::metric;

namespace {

// Geometric oracle for the edge lengths: realize the barycentric
// subdivision of the boundary of the r-simplex on the unit sphere in the
// sum-zero hyperplane of R^{r+1}; a rank-k vertex is the normalized,
// centred indicator vector of a k-subset, and the edge length is the arc
// angle between nested subsets.
double oracle_edge_length(int i, int j, int r) {
  const int s = r + 1;
  std::vector<double> u(s, 0), v(s, 0);
  for (int k = 0; k < i; ++k) u[k] = 1;
  for (int k = 0; k < j; ++k) v[k] = 1;  // nested subsets {1..i} in {1..j}
  auto centre = [&](std::vector<double>& x) {
    double mean = 0;
    for (double t : x) mean += t;
    mean /= s;
    for (double& t : x) t -= mean;
    double norm = 0;
    for (double t : x) norm += t * t;
    norm = std::sqrt(norm);
    for (double& t : x) t /= norm;
  };
  centre(u);
  centre(v);
  double dot = 0;
  for (int k = 0; k < s; ++k) dot += u[k] * v[k];
  return std::acos(std::clamp(dot, -1.0, 1.0));
}

}  // namespace

TEST_CASE("edge lengths") {
  CHECK(edge_length_cos2(1, 2, 3) == Rational(1, 3));
  CHECK(edge_length_cos2(1, 3, 3) == Rational(1, 9));
  CHECK(std::abs(edge_length(1, 3, 3) - std::acos(1.0 / 3.0)) < 1e-15);
  CHECK_THROWS_AS(edge_length(2, 2, 3), std::out_of_range);
  CHECK_THROWS_AS(edge_length(1, 4, 3), std::out_of_range);

  // Symmetry under (i,j) -> (s-j, s-i).
  for (int r = 2; r <= 9; ++r)
    for (int i = 1; i < r; ++i)
      for (int j = i + 1; j <= r; ++j) {
        int s = r + 1;
        CHECK(edge_length_cos2(i, j, r) == edge_length_cos2(s - j, s - i, r));
      }
}

TEST_CASE("edge lengths match the spherical oracle") {
  for (int r = 2; r <= 5; ++r)
    for (int i = 1; i < r; ++i)
      for (int j = i + 1; j <= r; ++j)
        CHECK(std::abs(edge_length(i, j, r) - oracle_edge_length(i, j, r)) < 1e-10);
}

TEST_CASE("opposite link paths have length pi") {
  for (int r = 2; r <= 12; ++r)
    for (int x = 1; x < r; ++x)
      for (int y = x + 1; y <= r; ++y) {
        auto path = opposite_link_path_length(x, y, r);
        CHECK(std::abs(path.total - std::numbers::pi) < 1e-12);
        CHECK(path.exact_minus_one);
      }
  auto p = opposite_link_path_length(1, 2, 3);
  CHECK(std::abs(p.total - std::numbers::pi) < 1e-12);
  CHECK_THROWS_AS(opposite_link_path_length(2, 2, 3), std::out_of_range);
}

TEST_CASE("strand lengths of the NCP_5 hull") {
  // gamma_2: two rank-1 <-> rank-3 edges; gamma_3: four rank-1 <-> rank-2
  // edges, all at r = 3; their lengths add to 2 pi.
  double g2 = path_length({1, 3, 1}, 3);
  double g3 = path_length({1, 2, 1, 2, 1}, 3);
  CHECK(std::abs(g2 - 2 * std::acos(1.0 / 3.0)) < 1e-15);
  CHECK(std::abs(g2 + g3 - 2 * std::numbers::pi) < 1e-12);
  CHECK(g2 / std::numbers::pi > 0.78);
  CHECK(g2 / std::numbers::pi < 0.79);
  CHECK(path_length({}, 3) == 0.0);
  CHECK(path_length({2}, 3) == 0.0);
}

TEST_CASE("rationals") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  Rational root;
  CHECK(Rational(4, 9).sqrt_exact(root));
  CHECK(root == Rational(2, 3));
  CHECK_FALSE(Rational(2, 9).sqrt_exact(root));
}
