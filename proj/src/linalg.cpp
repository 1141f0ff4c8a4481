#include "ncpart/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncpart {
namespace fp {

namespace {

int mod_norm(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int mod_inv(int a, int p) {
  // p is a small prime.
  int r = 1;
  int base = mod_norm(a, p);
  int e = p - 2;
  while (e) {
    if (e & 1) r = static_cast<int>(1ll * r * base % p);
    base = static_cast<int>(1ll * base * base % p);
    e >>= 1;
  }
  return r;
}

// In-place reduced row echelon form; returns the rank.
int rref(std::vector<std::vector<int>>& rows, int p) {
  const int m = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  int r = 0;
  for (int col = 0; col < m && r < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] % p != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    int inv = mod_inv(rows[r][col], p);
    for (int c = 0; c < m; ++c) rows[r][c] = static_cast<int>(1ll * rows[r][c] * inv % p);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      int f = rows[i][col];
      for (int c = 0; c < m; ++c)
        rows[i][c] = mod_norm(rows[i][c] - 1ll * f * rows[r][c], p);
    }
    ++r;
  }
  rows.resize(r);
  return r;
}

}  // namespace

VecFp::VecFp(int prime, std::vector<int> c) : p(prime), coords(std::move(c)) {
  for (int& v : coords) v = mod_norm(v, p);
}

VecFp VecFp::zero(int prime, int m) { return VecFp(prime, std::vector<int>(m, 0)); }

VecFp VecFp::unit(int prime, int m, int i) {
  std::vector<int> c(static_cast<size_t>(m), 0);
  c.at(i - 1) = 1;
  return VecFp(prime, std::move(c));
}

bool VecFp::is_zero() const {
  for (int v : coords)
    if (v) return false;
  return true;
}

VecFp VecFp::operator+(const VecFp& o) const {
  if (p != o.p || dim() != o.dim()) throw std::invalid_argument("vector mismatch");
  std::vector<int> c(coords);
  for (int i = 0; i < dim(); ++i) c[i] = mod_norm(c[i] + o.coords[i], p);
  return VecFp(p, std::move(c));
}

VecFp VecFp::operator*(int scalar) const {
  std::vector<int> c(coords);
  for (int& v : c) v = mod_norm(1ll * v * scalar, p);
  return VecFp(p, std::move(c));
}

std::string VecFp::str() const {
  std::string s;
  for (int v : coords) s += static_cast<char>('0' + v);
  return s;
}

VecFp VecFp::parse(const std::string& s, int prime) {
  std::vector<int> c;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad vector literal: " + s);
    c.push_back(ch - '0');
  }
  return VecFp(prime, std::move(c));
}

Subspace::Subspace(int prime, int ambient, std::vector<VecFp> spanning) : p_(prime), m_(ambient) {
  std::vector<std::vector<int>> rows;
  for (const auto& v : spanning) {
    if (v.p != prime || v.dim() != ambient) throw std::invalid_argument("ambient mismatch");
    rows.push_back(v.coords);
  }
  rref(rows, prime);
  for (auto& r : rows) rows_.emplace_back(prime, std::move(r));
}

Subspace Subspace::zero(int prime, int ambient) { return Subspace(prime, ambient, {}); }

Subspace Subspace::whole(int prime, int ambient) {
  std::vector<VecFp> basis;
  for (int i = 1; i <= ambient; ++i) basis.push_back(VecFp::unit(prime, ambient, i));
  return Subspace(prime, ambient, std::move(basis));
}

bool Subspace::contains(const VecFp& v) const {
  if (v.p != p_ || v.dim() != m_) return false;
  std::vector<int> r = v.coords;
  for (const auto& row : rows_) {
    int lead = 0;
    while (lead < m_ && row.coords[lead] == 0) ++lead;
    if (lead < m_ && r[lead] != 0) {
      int f = r[lead];
      for (int c = 0; c < m_; ++c) r[c] = mod_norm(r[c] - 1ll * f * row.coords[c], p_);
    }
  }
  for (int c : r)
    if (c) return false;
  return true;
}

bool Subspace::contains(const Subspace& o) const {
  for (const auto& v : o.rows_)
    if (!contains(v)) return false;
  return true;
}

std::string Subspace::str() const {
  if (rows_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ";";
    s += rows_[i].str();
  }
  return s;
}

Subspace Subspace::parse(const std::string& s, int prime, int ambient) {
  if (s == "0") return zero(prime, ambient);
  std::vector<VecFp> rows;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ';'))
    if (!tok.empty()) rows.push_back(VecFp::parse(tok, prime));
  return Subspace(prime, ambient, std::move(rows));
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.p() != w.p() || u.ambient() != w.ambient()) throw std::invalid_argument("ambient mismatch");
  std::vector<VecFp> rows = u.basis();
  rows.insert(rows.end(), w.basis().begin(), w.basis().end());
  return Subspace(u.p(), u.ambient(), std::move(rows));
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.p() != w.p() || u.ambient() != w.ambient()) throw std::invalid_argument("ambient mismatch");
  const int m = u.ambient(), p = u.p();
  // Zassenhaus: reduce [U | U; W | 0]; rows with zero left half span U ∩ W
  // on the right.
  std::vector<std::vector<int>> rows;
  for (const auto& v : u.basis()) {
    std::vector<int> r(v.coords);
    r.insert(r.end(), v.coords.begin(), v.coords.end());
    rows.push_back(std::move(r));
  }
  for (const auto& v : w.basis()) {
    std::vector<int> r(v.coords);
    r.resize(2 * static_cast<size_t>(m), 0);
    rows.push_back(std::move(r));
  }
  rref(rows, p);
  std::vector<VecFp> inter;
  for (const auto& r : rows) {
    bool left_zero = std::all_of(r.begin(), r.begin() + m, [](int x) { return x == 0; });
    if (left_zero) inter.emplace_back(p, std::vector<int>(r.begin() + m, r.end()));
  }
  return Subspace(p, m, std::move(inter));
}

std::vector<VecFp> all_vectors(const Subspace& u) {
  std::vector<VecFp> out;
  const int d = u.dim();
  std::vector<int> coeff(static_cast<size_t>(d), 0);
  for (;;) {
    VecFp v = VecFp::zero(u.p(), u.ambient());
    for (int i = 0; i < d; ++i)
      if (coeff[i]) v = v + u.basis()[i] * coeff[i];
    out.push_back(v);
    int i = 0;
    while (i < d && coeff[i] == u.p() - 1) coeff[i++] = 0;
    if (i == d) break;
    ++coeff[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Root systems

RootSystem::RootSystem(CoxType type, int rank) : type_(type), rank_(rank) {
  auto add = [&](const Cycle& z, std::vector<int> coords) {
    index_[z] = static_cast<int>(roots_.size());
    roots_.push_back({z, std::move(coords)});
  };
  auto unit = [&](int i, int sign) {
    std::vector<int> c(static_cast<size_t>(rank), 0);
    c[i - 1] = sign;
    return c;
  };
  auto diff = [&](int i, int j, int sign_j) {
    std::vector<int> c(static_cast<size_t>(rank), 0);
    c[i - 1] = 1;
    if (j <= rank) c[j - 1] = sign_j;
    return c;
  };
  if (type == CoxType::A) {
    const int n1 = rank + 1;
    for (int i = 1; i < n1; ++i)
      for (int j = i + 1; j <= n1; ++j)
        add(Cycle(CycleKind::Unsigned, {i, j}), j <= rank ? diff(i, j, -1) : unit(i, 1));
  } else {
    for (int i = 1; i < rank; ++i)
      for (int j = i + 1; j <= rank; ++j) {
        add(Cycle(CycleKind::Paired, {i, j}), diff(i, j, -1));
        add(Cycle(CycleKind::Paired, {i, -j}), diff(i, j, 1));
      }
    if (type == CoxType::B)
      for (int i = 1; i <= rank; ++i) add(Cycle(CycleKind::Balanced, {i}), unit(i, 1));
  }
}

const std::vector<int>& RootSystem::root_of(const Cycle& reflection) const {
  auto it = index_.find(reflection);
  if (it == index_.end()) throw std::invalid_argument("not a reflection of this root system");
  return roots_[it->second].second;
}

VecFp RootSystem::root_mod(const Cycle& reflection, int p) const {
  return VecFp(p, root_of(reflection));
}

VecFp edge_to_vector(const Edge& e, int n) {
  VecFp v = VecFp::unit(2, n - 1, e.i);
  if (e.j < n) v = v + VecFp::unit(2, n - 1, e.j);
  return v;
}

Subspace embed_nc(CoxType type, const SignedPerm& w, int p) {
  const auto& g = GroupCtx::get(type, type == CoxType::A ? w.points() - 1 : w.points());
  if (!g.contains(w)) throw std::domain_error("element not in the declared group");
  static std::map<std::pair<CoxType, int>, RootSystem> roots_cache;
  auto key = std::make_pair(type, g.rank);
  auto it = roots_cache.find(key);
  if (it == roots_cache.end()) it = roots_cache.emplace(key, RootSystem(type, g.rank)).first;
  const RootSystem& rs = it->second;

  // One reduced word, greedily.
  std::vector<VecFp> vectors;
  SignedPerm rest = w;
  int len = absolute_length(w);
  while (len > 0) {
    bool found = false;
    for (size_t ti = 0; ti < g.reflections.size() && !found; ++ti) {
      SignedPerm next = g.reflections[ti] * rest;
      if (absolute_length(next) == len - 1) {
        vectors.push_back(rs.root_mod(g.reflection_cycles[ti], p));
        rest = next;
        --len;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no reduced word found");
  }
  Subspace s(p, g.rank, std::move(vectors));
  if (s.dim() != absolute_length(w))
    throw std::domain_error("prime " + std::to_string(p) + " is not compatible: rank drop");
  return s;
}

Subspace embed_partition(const SetPartition& pi) {
  Forest forest = spanning_forest(pi);
  std::vector<VecFp> vectors;
  for (const auto& e : forest.edges()) vectors.push_back(edge_to_vector(e, pi.n()));
  return Subspace(2, pi.n() - 1, std::move(vectors));
}

namespace {

// Exact integer determinant by fraction-free (Bareiss) elimination.
long long int_det(std::vector<std::vector<long long>> a) {
  const int n = static_cast<int>(a.size());
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

bool is_compatible_prime(CoxType type, int rank, int p) {
  RootSystem rs(type, rank);
  const auto& roots = rs.positive_roots();
  const int total = static_cast<int>(roots.size());
  std::vector<int> idx(static_cast<size_t>(rank));
  std::function<bool(int, int)> rec = [&](int pos, int from) {
    if (pos == rank) {
      std::vector<std::vector<long long>> m(static_cast<size_t>(rank),
                                            std::vector<long long>(static_cast<size_t>(rank)));
      for (int c = 0; c < rank; ++c)
        for (int r = 0; r < rank; ++r) m[r][c] = roots[idx[c]].second[r];
      long long det = int_det(std::move(m));
      if (det != 0 && det % p == 0) return false;  // a rational basis degenerates mod p
      return true;
    }
    for (int k = from; k < total; ++k) {
      idx[pos] = k;
      if (!rec(pos + 1, k + 1)) return false;
    }
    return true;
  };
  return rec(0, 0);
}

std::int64_t gaussian_binomial(int m, int k, int q) {
  if (k < 0 || k > m) return 0;
  static std::map<std::tuple<int, int, int>, std::int64_t> memo;
  if (k == 0 || k == m) return 1;
  auto key = std::make_tuple(m, k, q);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  // q-Pascal: G(m,k) = G(m-1,k-1) + q^k G(m-1,k).
  std::int64_t qk = 1;
  for (int i = 0; i < k; ++i) qk *= q;
  std::int64_t v = gaussian_binomial(m - 1, k - 1, q) + qk * gaussian_binomial(m - 1, k, q);
  memo[key] = v;
  return v;
}

std::int64_t subspace_lattice_size(int m, int q) {
  std::int64_t total = 0;
  for (int k = 0; k <= m; ++k) total += gaussian_binomial(m, k, q);
  return total;
}

}  // namespace fp
}  // namespace ncpart
