#include "ncpart/metric.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ncpart {
namespace metric {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(std::abs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}

namespace {

bool perfect_sqrt(long long v, long long& root) {
  if (v < 0) return false;
  long long r = std::llround(std::sqrt(static_cast<double>(v)));
  for (long long c = std::max(0ll, r - 2); c <= r + 2; ++c)
    if (c * c == v) {
      root = c;
      return true;
    }
  return false;
}

}  // namespace

bool Rational::sqrt_exact(Rational& out) const {
  long long rn, rd;
  if (!perfect_sqrt(num, rn) || !perfect_sqrt(den, rd)) return false;
  out = Rational(rn, rd);
  return true;
}

Rational edge_length_cos2(int i, int j, int r) {
  if (!(1 <= i && i < j && j <= r)) throw std::out_of_range("edge ranks need 1 <= i < j <= r");
  const long long s = r + 1;
  return Rational(static_cast<long long>(i) * (s - j), static_cast<long long>(j) * (s - i));
}

double edge_length(int i, int j, int r) {
  return std::acos(std::sqrt(edge_length_cos2(i, j, r).value()));
}

OppositeLinkPath opposite_link_path_length(int x, int y, int r) {
  if (!(1 <= x && x < y && y <= r)) throw std::out_of_range("ranks need 1 <= x < y <= r");
  const long long s = r + 1;
  // Radicands of the three segments, as in the length-pi geodesic.
  Rational a(static_cast<long long>(x) * (y - x), (s + x - y) * (s - x));
  Rational b(static_cast<long long>(x) * (s - y), static_cast<long long>(y) * (s - x));
  Rational c(static_cast<long long>(y - x) * (s - y), static_cast<long long>(y) * (s + x - y));

  OppositeLinkPath out;
  out.a = std::acos(std::sqrt(a.value()));
  out.b = std::acos(std::sqrt(b.value()));
  out.c = std::acos(std::sqrt(c.value()));
  out.total = out.a + out.b + out.c;

  // cos(A+B+C) = sqrt(abc) - sqrt(c(1-a)(1-b)) - sqrt(b(1-a)(1-c))
  //            - sqrt(a(1-b)(1-c)); each radicand is a rational square.
  const Rational one(1, 1);
  Rational r1, r2, r3, r4;
  bool ok = (a * b * c).sqrt_exact(r1) && (c * (one - a) * (one - b)).sqrt_exact(r2) &&
            (b * (one - a) * (one - c)).sqrt_exact(r3) &&
            (a * (one - b) * (one - c)).sqrt_exact(r4);
  if (!ok) throw std::logic_error("a radicand failed to be a rational square");
  out.exact_minus_one = (r1 - r2 - r3 - r4) == Rational(-1, 1);
  return out;
}

double path_length(const std::vector<int>& rank_sequence, int r) {
  double total = 0;
  for (size_t k = 1; k < rank_sequence.size(); ++k) {
    int i = rank_sequence[k - 1], j = rank_sequence[k];
    if (i == j) throw std::out_of_range("consecutive ranks must differ");
    total += edge_length(std::min(i, j), std::max(i, j), r);
  }
  return total;
}

}  // namespace metric
}  // namespace ncpart
