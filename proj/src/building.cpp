#include "ncpart/building.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <functional>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ncpart {
namespace bldg {

std::string to_string(Tag t) {
  switch (t) {
    case Tag::Building: return "building";
    case Tag::Pn: return "pn";
    case Tag::Ncp: return "ncp";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// F2Space

F2Space F2Space::zero(int ambient) {
  F2Space s;
  s.m = static_cast<std::uint8_t>(ambient);
  return s;
}

F2Space F2Space::whole(int ambient) {
  std::vector<std::uint8_t> basis;
  for (int i = 0; i < ambient; ++i) basis.push_back(static_cast<std::uint8_t>(1u << i));
  return span(ambient, basis);
}

F2Space F2Space::span(int ambient, const std::vector<std::uint8_t>& vectors) {
  F2Space s = zero(ambient);
  for (std::uint8_t v : vectors) {
    // Reduce v against the rows.
    for (int i = 0; i < s.dim; ++i) {
      std::uint8_t pivot = s.rows[i] & static_cast<std::uint8_t>(-s.rows[i]);
      if (v & pivot) v ^= s.rows[i];
    }
    if (!v) continue;
    s.rows[s.dim++] = v;
    // Re-establish reduced echelon form: sort by pivot, reduce upwards.
    std::sort(s.rows.begin(), s.rows.begin() + s.dim, [](std::uint8_t a, std::uint8_t b) {
      return (a & static_cast<std::uint8_t>(-a)) < (b & static_cast<std::uint8_t>(-b));
    });
    for (int i = 0; i < s.dim; ++i)
      for (int j = 0; j < s.dim; ++j) {
        if (i == j) continue;
        std::uint8_t pivot = s.rows[j] & static_cast<std::uint8_t>(-s.rows[j]);
        if (s.rows[i] & pivot) s.rows[i] ^= s.rows[j];
      }
  }
  return s;
}

bool F2Space::contains(std::uint8_t v) const {
  for (int i = 0; i < dim; ++i) {
    std::uint8_t pivot = rows[i] & static_cast<std::uint8_t>(-rows[i]);
    if (v & pivot) v ^= rows[i];
  }
  return v == 0;
}

bool F2Space::contains(const F2Space& o) const {
  for (int i = 0; i < o.dim; ++i)
    if (!contains(o.rows[i])) return false;
  return true;
}

F2Space F2Space::sum(const F2Space& o) const {
  std::vector<std::uint8_t> basis(rows.begin(), rows.begin() + dim);
  basis.insert(basis.end(), o.rows.begin(), o.rows.begin() + o.dim);
  return span(m, basis);
}

F2Space F2Space::meet(const F2Space& o) const {
  const F2Space& small = dim <= o.dim ? *this : o;
  const F2Space& big = dim <= o.dim ? o : *this;
  std::vector<std::uint8_t> inter;
  for (std::uint8_t v : small.vectors())
    if (v && big.contains(v)) inter.push_back(v);
  return span(m, inter);
}

std::vector<std::uint8_t> F2Space::vectors() const {
  std::vector<std::uint8_t> out(1, 0);
  out.reserve(static_cast<size_t>(1) << dim);
  for (int i = 0; i < dim; ++i) {
    size_t sz = out.size();
    for (size_t k = 0; k < sz; ++k) out.push_back(out[k] ^ rows[i]);
  }
  return out;
}

std::uint64_t F2Space::key() const {
  std::uint64_t k = dim;
  for (int i = 0; i < dim; ++i) k = (k << 7) | rows[i];
  return k;
}

fp::Subspace F2Space::to_subspace() const {
  std::vector<fp::VecFp> rows_v;
  for (int i = 0; i < dim; ++i) {
    std::vector<int> c(m);
    for (int b = 0; b < m; ++b) c[b] = (rows[i] >> b) & 1;
    rows_v.emplace_back(2, std::move(c));
  }
  return fp::Subspace(2, m, std::move(rows_v));
}

F2Space F2Space::from_subspace(const fp::Subspace& s) {
  if (s.p() != 2 || s.ambient() > 7) throw std::invalid_argument("needs F_2^m with m <= 7");
  std::vector<std::uint8_t> basis;
  for (const auto& row : s.basis()) {
    std::uint8_t v = 0;
    for (int b = 0; b < s.ambient(); ++b)
      if (row.coords[b]) v |= static_cast<std::uint8_t>(1u << b);
    basis.push_back(v);
  }
  return span(s.ambient(), basis);
}

// ---------------------------------------------------------------------------
// Vertex predicates

bool is_partition_vector(std::uint8_t v) {
  int pc = std::popcount(static_cast<unsigned>(v));
  return pc == 1 || pc == 2;
}

namespace {

std::vector<std::uint8_t> partition_vectors_in(const F2Space& u) {
  std::vector<std::uint8_t> out;
  for (std::uint8_t v : u.vectors())
    if (v && is_partition_vector(v)) out.push_back(v);
  return out;
}

Edge vector_to_edge(std::uint8_t v, int n) {
  std::vector<int> bits;
  for (int b = 0; b < n - 1; ++b)
    if ((v >> b) & 1) bits.push_back(b + 1);
  if (bits.size() == 1) return Edge(bits[0], n);
  return Edge(bits[0], bits[1]);
}

}  // namespace

bool is_partition_space(const F2Space& u) {
  static std::unordered_map<std::uint64_t, bool> cache[8];
  auto [it, fresh] = cache[u.m].try_emplace(u.key(), false);
  if (fresh) it->second = F2Space::span(u.m, partition_vectors_in(u)).dim == u.dim;
  return it->second;
}

SetPartition space_to_partition(const F2Space& u, int n) {
  std::vector<Edge> edges;
  for (std::uint8_t v : partition_vectors_in(u)) edges.push_back(vector_to_edge(v, n));
  // The edges may contain cycles; join their partition directly.
  std::vector<std::vector<int>> blocks;
  std::vector<int> parent(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : edges) parent[find(e.i)] = find(e.j);
  std::map<int, std::vector<int>> comps;
  for (int v = 1; v <= n; ++v) comps[find(v)].push_back(v);
  for (auto& [root, blk] : comps) blocks.push_back(std::move(blk));
  return SetPartition(n, std::move(blocks));
}

bool is_ncp_space(const F2Space& u) {
  static std::unordered_map<std::uint64_t, bool> cache[8];
  auto [it, fresh] = cache[u.m].try_emplace(u.key(), false);
  if (fresh)
    it->second = is_partition_space(u) && space_to_partition(u, u.m + 1).non_crossing();
  return it->second;
}

bool in_tag(Tag tag, const F2Space& u) {
  switch (tag) {
    case Tag::Building: return true;
    case Tag::Pn: return is_partition_space(u);
    case Tag::Ncp: return is_ncp_space(u);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Chambers

std::string Chamber::str() const {
  std::string s;
  for (size_t i = 0; i < flag.size(); ++i) {
    if (i) s += " | ";
    s += flag[i].to_subspace().str();
  }
  return s;
}

Chamber word_to_chamber(const ReducedWord& word) {
  if (word.type != CoxType::A) throw std::invalid_argument("chambers need type A words");
  const int n = word.rank + 1;
  if (static_cast<int>(word.letters.size()) != n - 1 ||
      word.product() != coxeter_element(CoxType::A, word.rank))
    throw std::invalid_argument("not a reduced decomposition of the Coxeter element");
  Chamber c;
  c.n = n;
  std::vector<std::uint8_t> acc;
  for (int i = 0; i < n - 2; ++i) {
    const auto& e = word.letters[i].entries;
    std::uint8_t v = static_cast<std::uint8_t>(1u << (e[0] - 1));
    if (e[1] < n) v ^= static_cast<std::uint8_t>(1u << (e[1] - 1));
    acc.push_back(v);
    c.flag.push_back(F2Space::span(n - 1, acc));
  }
  return c;
}

ReducedWord chamber_to_word(const Chamber& c) {
  const int n = c.n;
  ReducedWord word{CoxType::A, n - 1, {}};
  SignedPerm prev = SignedPerm::identity(n);
  for (int i = 0; i <= static_cast<int>(c.flag.size()); ++i) {
    SignedPerm cur = i < static_cast<int>(c.flag.size())
                         ? partition_to_perm(space_to_partition(c.flag[i], n))
                         : coxeter_element(CoxType::A, n - 1);
    SignedPerm t = prev.inverse() * cur;
    auto cyc = disjoint_cycles(t, true);
    if (cyc.size() != 1 || !cyc[0].is_reflection())
      throw std::invalid_argument("chamber is not an NCP chamber");
    word.letters.push_back(cyc[0]);
    prev = cur;
  }
  return word;
}

Chamber parse_chamber(const std::string& s, int n) {
  if (s.find('|') != std::string::npos || s.rfind("flag:", 0) == 0) {
    std::string body = s.rfind("flag:", 0) == 0 ? s.substr(5) : s;
    Chamber c;
    c.n = n;
    std::istringstream is(body);
    std::string part;
    while (std::getline(is, part, '|')) {
      std::string trimmed;
      for (char ch : part)
        if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
      if (trimmed.empty()) continue;
      c.flag.push_back(F2Space::from_subspace(fp::Subspace::parse(trimmed, 2, n - 1)));
    }
    if (static_cast<int>(c.flag.size()) != n - 2)
      throw std::invalid_argument("flag literal has the wrong length");
    for (size_t i = 0; i < c.flag.size(); ++i) {
      if (c.flag[i].dim != static_cast<int>(i) + 1)
        throw std::invalid_argument("flag literal is not a complete flag");
      if (i && !c.flag[i].contains(c.flag[i - 1]))
        throw std::invalid_argument("flag literal is not a complete flag");
    }
    return c;
  }
  // A reduced word of the Coxeter element, as a product of transpositions.
  ReducedWord word{CoxType::A, n - 1, {}};
  size_t i = 0;
  while (i < s.size()) {
    auto open = s.find('(', i);
    if (open == std::string::npos) break;
    auto close = s.find(')', open);
    if (close == std::string::npos) throw std::invalid_argument("bad chamber literal: " + s);
    std::istringstream es(s.substr(open + 1, close - open - 1));
    std::vector<int> entries;
    int v;
    while (es >> v) entries.push_back(v);
    word.letters.push_back(Cycle(CycleKind::Unsigned, entries));
    i = close + 1;
  }
  return word_to_chamber(word);
}

std::optional<int> adjacent_color(const Chamber& c, const Chamber& d) {
  if (c.flag.size() != d.flag.size()) return std::nullopt;
  int color = 0, diffs = 0;
  for (size_t i = 0; i < c.flag.size(); ++i)
    if (!(c.flag[i] == d.flag[i])) {
      ++diffs;
      color = static_cast<int>(i) + 1;
    }
  if (diffs == 1) return color;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// ChamberComplex

namespace {

int complex_guard(Tag tag) {
  int dflt = tag == Tag::Ncp ? 8 : 7;
  if (const char* env = std::getenv("NCPART_MAX_N")) {
    int v = std::atoi(env);
    if (v > dflt) {
      std::cerr << "warning: NCPART_MAX_N=" << v << " raises the chamber complex guard\n";
      return v;
    }
  }
  return dflt;
}

struct FlagKeyHash {
  size_t operator()(const std::vector<std::uint64_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (auto k : v) h = (h ^ k) * 1099511628211ull;
    return h;
  }
};

}  // namespace

const ChamberComplex& ChamberComplex::get(Tag tag, int n) {
  static std::map<std::pair<Tag, int>, ChamberComplex> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(tag, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (n < 3) throw std::invalid_argument("chamber complexes need n >= 3");
  if (n > complex_guard(tag))
    throw std::domain_error("chamber complex size guard exceeded (set NCPART_MAX_N)");

  ChamberComplex cc;
  cc.tag = tag;
  cc.n = n;
  cc.r = n - 2;
  const int m = n - 1;

  // Enumerate complete flags of tagged subspaces.
  std::vector<F2Space> flag;
  std::function<void(const F2Space&)> rec = [&](const F2Space& cur) {
    if (static_cast<int>(flag.size()) == cc.r) {
      Chamber c;
      c.n = n;
      c.flag = flag;
      cc.chambers_.push_back(std::move(c));
      return;
    }
    std::set<F2Space> nexts;
    for (int v = 1; v < (1 << m); ++v) {
      if (cur.contains(static_cast<std::uint8_t>(v))) continue;
      F2Space u = cur.sum(F2Space::span(m, {static_cast<std::uint8_t>(v)}));
      if (!in_tag(tag, u)) continue;
      nexts.insert(u);
    }
    for (const auto& u : nexts) {
      flag.push_back(u);
      rec(u);
      flag.pop_back();
    }
  };
  rec(F2Space::zero(m));
  std::sort(cc.chambers_.begin(), cc.chambers_.end());
  for (int i = 0; i < cc.size(); ++i) cc.index_[cc.chambers_[i]] = i;

  // Chamber graph via panels.
  cc.adj_.resize(cc.chambers_.size());
  std::unordered_map<std::vector<std::uint64_t>, std::vector<int>, FlagKeyHash> panels;
  for (int id = 0; id < cc.size(); ++id) {
    const auto& c = cc.chambers_[id];
    for (int k = 0; k < cc.r; ++k) {
      std::vector<std::uint64_t> pkey;
      pkey.reserve(cc.r);
      for (int i = 0; i < cc.r; ++i) pkey.push_back(i == k ? ~0ull - k : c.flag[i].key());
      panels[pkey].push_back(id);
    }
  }
  for (auto& [pkey, ids] : panels) {
    for (size_t a = 0; a < ids.size(); ++a)
      for (size_t b = a + 1; b < ids.size(); ++b) {
        auto color = adjacent_color(cc.chambers_[ids[a]], cc.chambers_[ids[b]]);
        if (!color) continue;
        cc.adj_[ids[a]].push_back({ids[b], *color});
        cc.adj_[ids[b]].push_back({ids[a], *color});
      }
  }
  for (auto& a : cc.adj_) std::sort(a.begin(), a.end());

  auto [pos, ok] = cache.emplace(key, std::move(cc));
  (void)ok;
  return pos->second;
}

int ChamberComplex::id_of(const Chamber& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> ChamberComplex::distances_from(int id) const {
  std::vector<int> dist(chambers_.size(), -1);
  std::deque<int> q{id};
  dist[id] = 0;
  while (!q.empty()) {
    int cur = q.front();
    q.pop_front();
    for (auto [nb, color] : adj_[cur])
      if (dist[nb] < 0) {
        dist[nb] = dist[cur] + 1;
        q.push_back(nb);
      }
  }
  return dist;
}

int ChamberComplex::distance(int a, int b) const {
  auto d = distances_from(a);
  if (d[b] < 0) throw std::logic_error("chamber graph is disconnected");
  return d[b];
}

std::vector<int> ChamberComplex::convex_hull(int a, int b) const {
  auto da = distances_from(a);
  auto db = distances_from(b);
  std::vector<int> hull;
  for (int i = 0; i < size(); ++i)
    if (da[i] >= 0 && db[i] >= 0 && da[i] + db[i] == da[b]) hull.push_back(i);
  return hull;
}

std::vector<int> ChamberComplex::panel_chambers(int id, int rank) const {
  std::vector<int> out{id};
  for (auto [nb, color] : adj_[id])
    if (color == rank) out.push_back(nb);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Apartments

bool Apartment::contains(const Chamber& c) const {
  for (size_t i = 0; i < c.flag.size(); ++i) {
    int count = 0;
    for (std::uint8_t f : frame)
      if (c.flag[i].contains(f)) ++count;
    if (count != static_cast<int>(i) + 1) return false;
  }
  return true;
}

F2Space Apartment::opposite_vertex(const F2Space& v) const {
  std::vector<std::uint8_t> inside, outside;
  for (std::uint8_t f : frame) (v.contains(f) ? inside : outside).push_back(f);
  if (static_cast<int>(inside.size()) != v.dim)
    throw std::invalid_argument("vertex is not in the apartment");
  return F2Space::span(v.m, outside);
}

std::optional<Apartment> common_apartment(Tag tag, const Chamber& c, const Chamber& d) {
  const int n = c.n;
  const int m = n - 1;
  if (tag == Tag::Building) {
    // Jordan–Hoelder frame adapted to both flags.
    auto at = [&](const Chamber& x, int i) {
      if (i <= 0) return F2Space::zero(m);
      if (i > static_cast<int>(x.flag.size())) return F2Space::whole(m);
      return x.flag[i - 1];
    };
    Apartment a;
    a.n = n;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        F2Space x = at(c, i).meet(at(d, j));
        F2Space low = at(c, i - 1).meet(at(d, j)).sum(at(c, i).meet(at(d, j - 1)));
        if (x.dim == low.dim + 1) {
          for (std::uint8_t v : x.vectors())
            if (v && !low.contains(v)) {
              a.frame.push_back(v);
              break;
            }
        }
      }
    if (static_cast<int>(a.frame.size()) != m) throw std::logic_error("frame construction failed");
    if (!a.contains(c) || !a.contains(d)) throw std::logic_error("frame misses a chamber");
    return a;
  }
  const auto& trees = tag == Tag::Pn ? all_spanning_trees(n) : all_nc_spanning_trees(n);
  for (const auto& t : trees) {
    Apartment a;
    a.n = n;
    a.tree = t;
    for (const auto& e : t.edges()) {
      std::uint8_t v = static_cast<std::uint8_t>(1u << (e.i - 1));
      if (e.j < n) v ^= static_cast<std::uint8_t>(1u << (e.j - 1));
      a.frame.push_back(v);
    }
    if (a.contains(c) && a.contains(d)) return a;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Constructive galleries

namespace {

void verify_in_tag(const Chamber& c, Tag tag) {
  for (const auto& u : c.flag)
    if (!in_tag(tag, u))
      throw std::logic_error("constructed gallery leaves " + to_string(tag));
}

}  // namespace

Gallery constructive_gallery_pn(const Chamber& c, const Chamber& d) {
  verify_in_tag(c, Tag::Pn);
  verify_in_tag(d, Tag::Pn);
  const int r = static_cast<int>(c.flag.size());
  Gallery g;
  g.chambers.push_back(c);
  Chamber cur = c;
  auto d_at = [&](int t) { return d.flag[t - 1]; };
  for (int t = 1; t <= r; ++t) {
    // k = least j >= t with D_t <= cur_j; then walk D_t down to rank t.
    int k = t;
    while (k <= r && !cur.flag[k - 1].contains(d_at(t))) ++k;
    for (int j = k - 1; j >= t; --j) {
      F2Space below = j >= 2 ? cur.flag[j - 2] : F2Space::zero(c.flag[0].m);
      F2Space repl = below.sum(d_at(t));
      cur.flag[j - 1] = repl;
      verify_in_tag(cur, Tag::Pn);
      g.chambers.push_back(cur);
      g.colors.push_back(j);
    }
  }
  if (!(cur == d)) throw std::logic_error("gallery did not reach the target");
  return g;
}

Gallery constructive_gallery_ncp_in_pn_apartment(const Chamber& c, const Chamber& d,
                                                 const Apartment& a) {
  verify_in_tag(c, Tag::Ncp);
  verify_in_tag(d, Tag::Ncp);
  if (!a.contains(c) || !a.contains(d))
    throw std::invalid_argument("chambers are not in the given apartment");
  const int r = static_cast<int>(c.flag.size());
  const int m = c.flag[0].m;
  Gallery g;
  g.chambers.push_back(c);
  Chamber cur = c;
  for (int t = r; t >= 1; --t) {
    // k = greatest j <= t with cur_j <= D_t; then walk D_t up from rank k+1.
    int k = t;
    while (k >= 1 && !d.flag[t - 1].contains(cur.flag[k - 1])) --k;
    for (int j = k + 1; j <= t; ++j) {
      F2Space above = j + 1 <= r ? cur.flag[j] : F2Space::whole(m);
      cur.flag[j - 1] = above.meet(d.flag[t - 1]);
      verify_in_tag(cur, Tag::Ncp);
      g.chambers.push_back(cur);
      g.colors.push_back(j);
    }
  }
  if (!(cur == d)) throw std::logic_error("gallery did not reach the target");
  return g;
}

// ---------------------------------------------------------------------------
// Universal and base chambers

bool is_basic_partition(const SetPartition& pi) {
  int base = 0;
  for (const auto& b : pi.blocks())
    if (b.size() > 1) ++base;
  return base == 1;
}

bool is_universal_partition(const SetPartition& pi) {
  if (!is_basic_partition(pi)) return false;
  const int n = pi.n();
  for (const auto& b : pi.blocks()) {
    if (b.size() <= 1) continue;
    int breaks = 0;
    for (size_t k = 0; k < b.size(); ++k) {
      int cur = b[k], next = b[(k + 1) % b.size()];
      int gap = (next - cur + n) % n;
      if (gap != 1) ++breaks;
    }
    if (breaks > 1) return false;
  }
  return true;
}

bool is_universal(const Chamber& c) {
  for (const auto& u : c.flag)
    if (!is_universal_partition(space_to_partition(u, c.n))) return false;
  return true;
}

bool is_base(const Chamber& c) {
  for (const auto& u : c.flag) {
    if (!is_partition_space(u)) return false;
    if (!is_basic_partition(space_to_partition(u, c.n))) return false;
  }
  return true;
}

std::vector<int> universal_chambers(int n) {
  const auto& cc = ChamberComplex::get(Tag::Ncp, n);
  std::vector<int> out;
  for (int i = 0; i < cc.size(); ++i)
    if (is_universal(cc.chamber(i))) out.push_back(i);
  return out;
}

std::vector<int> base_chambers(int n) {
  const auto& cc = ChamberComplex::get(Tag::Pn, n);
  std::vector<int> out;
  for (int i = 0; i < cc.size(); ++i)
    if (is_base(cc.chamber(i))) out.push_back(i);
  return out;
}

bool star_union_test(Tag tag, const Chamber& c) {
  const auto& cc = ChamberComplex::get(tag, c.n);
  for (int i = 0; i < cc.size(); ++i)
    if (!common_apartment(tag, c, cc.chamber(i))) return false;
  return true;
}

std::vector<int> codim1_face_count(Tag tag, const Chamber& c) {
  const auto& cc = ChamberComplex::get(tag, c.n);
  int id = cc.id_of(c);
  if (id < 0) throw std::invalid_argument("chamber is not in the tagged complex");
  std::vector<int> out;
  for (int k = 1; k <= static_cast<int>(c.flag.size()); ++k)
    out.push_back(static_cast<int>(cc.panel_chambers(id, k).size()));
  return out;
}

// ---------------------------------------------------------------------------
// Vertex distances

namespace {

std::vector<F2Space> all_subspaces(int m) {
  std::set<F2Space> seen{F2Space::zero(m)};
  std::deque<F2Space> todo{F2Space::zero(m)};
  while (!todo.empty()) {
    F2Space cur = todo.front();
    todo.pop_front();
    for (int v = 1; v < (1 << m); ++v) {
      if (cur.contains(static_cast<std::uint8_t>(v))) continue;
      F2Space u = cur.sum(F2Space::span(m, {static_cast<std::uint8_t>(v)}));
      if (seen.insert(u).second) todo.push_back(u);
    }
  }
  return std::vector<F2Space>(seen.begin(), seen.end());
}

}  // namespace

int vertex_distance(const F2Space& u, const F2Space& v, Tag tag, int n) {
  const int m = n - 1;
  std::vector<F2Space> verts;
  for (const auto& s : all_subspaces(m))
    if (s.dim >= 1 && s.dim <= m - 1 && in_tag(tag, s)) verts.push_back(s);
  auto idx = [&](const F2Space& s) {
    auto it = std::lower_bound(verts.begin(), verts.end(), s);
    if (it == verts.end() || !(*it == s)) throw std::invalid_argument("vertex not in the tag");
    return static_cast<int>(it - verts.begin());
  };
  int a = idx(u), b = idx(v);
  std::vector<int> dist(verts.size(), -1);
  std::deque<int> q{a};
  dist[a] = 0;
  while (!q.empty()) {
    int cur = q.front();
    q.pop_front();
    if (cur == b) return dist[cur];
    for (size_t k = 0; k < verts.size(); ++k) {
      if (dist[k] >= 0 || k == static_cast<size_t>(cur)) continue;
      const auto &x = verts[cur], &y = verts[k];
      bool comparable = x.dim < y.dim ? y.contains(x) : x.contains(y);
      if (x.dim == y.dim) comparable = false;
      if (!comparable) continue;
      dist[k] = dist[cur] + 1;
      q.push_back(static_cast<int>(k));
    }
  }
  throw std::logic_error("vertices are not connected");
}

// ---------------------------------------------------------------------------
// Frames and the link property

std::vector<std::vector<std::uint8_t>> all_frames(int n) {
  const int m = n - 1;
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> frame;
  std::function<void(int, const F2Space&)> rec = [&](int from, const F2Space& span_so_far) {
    if (static_cast<int>(frame.size()) == m) {
      out.push_back(frame);
      return;
    }
    for (int v = from; v < (1 << m); ++v) {
      if (span_so_far.contains(static_cast<std::uint8_t>(v))) continue;
      frame.push_back(static_cast<std::uint8_t>(v));
      rec(v + 1, span_so_far.sum(F2Space::span(m, {static_cast<std::uint8_t>(v)})));
      frame.pop_back();
    }
  };
  rec(1, F2Space::zero(m));
  return out;
}

std::vector<F2Space> link_property_scan(int n, Tag tag) {
  const int m = n - 1;
  std::set<F2Space> violations;
  for (const auto& frame : all_frames(n)) {
    const int subsets = 1 << m;
    std::vector<F2Space> span_of(subsets, F2Space::zero(m));
    for (int s = 1; s < subsets; ++s) {
      int low = s & (-s);
      int b = std::countr_zero(static_cast<unsigned>(low));
      span_of[s] = span_of[s ^ low].sum(F2Space::span(m, {frame[b]}));
    }
    std::vector<char> tagged(subsets, 0);
    for (int s = 1; s < subsets - 1; ++s) tagged[s] = in_tag(tag, span_of[s]);
    for (int s = 1; s < subsets - 1; ++s) {
      if (tagged[s]) continue;
      // The link of the vertex s inside this apartment: all comparable
      // proper subsets.
      bool link_inside = true;
      for (int t = 1; t < subsets - 1 && link_inside; ++t) {
        if (t == s) continue;
        bool comparable = (t & s) == t || (t & s) == s;
        if (comparable && !tagged[t]) link_inside = false;
      }
      if (link_inside) violations.insert(span_of[s]);
    }
  }
  return std::vector<F2Space>(violations.begin(), violations.end());
}

// ---------------------------------------------------------------------------
// Hurwitz graph statistics

HurwitzStats hurwitz_stats(CoxType type, int rank) {
  const auto& g = GroupCtx::get(type, rank);
  // Vertices: maximal chains of NC, i.e. sequences of partial products of
  // reduced words of c.
  auto words = reduced_words(type, g.coxeter);
  std::vector<std::vector<SignedPerm>> chains;
  for (const auto& w : words) {
    std::vector<SignedPerm> chain;
    SignedPerm acc = SignedPerm::identity(g.points);
    for (int i = 0; i + 1 < static_cast<int>(w.letters.size()); ++i) {
      acc = acc * w.letters[i].to_perm(g.points);
      chain.push_back(acc);
    }
    chains.push_back(std::move(chain));
  }
  std::sort(chains.begin(), chains.end());
  chains.erase(std::unique(chains.begin(), chains.end()), chains.end());
  const int N = static_cast<int>(chains.size());
  std::vector<std::vector<int>> adj(N);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      int diff = 0;
      for (size_t k = 0; k < chains[i].size(); ++k) diff += !(chains[i][k] == chains[j][k]);
      if (diff == 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  HurwitzStats stats;
  stats.vertices = N;
  int radius = -1, diameter = 0;
  for (int s = 0; s < N; ++s) {
    std::vector<int> dist(N, -1);
    std::deque<int> q{s};
    dist[s] = 0;
    int ecc = 0;
    while (!q.empty()) {
      int cur = q.front();
      q.pop_front();
      ecc = std::max(ecc, dist[cur]);
      for (int nb : adj[cur])
        if (dist[nb] < 0) {
          dist[nb] = dist[cur] + 1;
          q.push_back(nb);
        }
    }
    ++stats.eccentricity_histogram[ecc];
    diameter = std::max(diameter, ecc);
    radius = radius < 0 ? ecc : std::min(radius, ecc);
  }
  stats.radius = radius;
  stats.diameter = diameter;
  return stats;
}

}  // namespace bldg
}  // namespace ncpart
