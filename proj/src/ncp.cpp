#include "ncpart/ncp.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ncpart {

namespace {

// Position of a signed entry on the 2n-gon under the canonical
// identification i -> i (i > 0), i -> n + |i| (i < 0).
int circ_pos(int i, int n) { return i > 0 ? i : n - i; }

bool sets_cross(const std::vector<int>& a, const std::vector<int>& b) {
  // a, b sorted and disjoint; crossing iff the merged sequence alternates
  // between the two at least three times.
  size_t i = 0, j = 0;
  int changes = -1;
  int last = -1;  // 0 = a, 1 = b
  while (i < a.size() || j < b.size()) {
    int cur;
    if (j >= b.size() || (i < a.size() && a[i] < b[j])) {
      cur = 0;
      ++i;
    } else {
      cur = 1;
      ++j;
    }
    if (cur != last) {
      ++changes;
      last = cur;
    }
  }
  return changes >= 3;
}

bool circ_increasing(const std::vector<int>& v) {
  if (v.size() <= 2) return true;
  int descents = 0;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] > v[(i + 1) % v.size()]) ++descents;
  return descents <= 1;
}

// Consistent orientation of a paired/balanced cycle in W(B_m), tested on
// the canonical image in S_{2m}.
bool b_oriented(const Cycle& z, int m) {
  std::vector<int> pos;
  for (int e : z.entries) pos.push_back(circ_pos(e, m));
  if (z.kind == CycleKind::Balanced)
    for (int e : z.entries) pos.push_back(circ_pos(-e, m));
  return circ_increasing(pos);
}

// Consistent orientation in W(D_n) of a paired cycle whose support contains
// n, given the entry list rotated so that +n is last.
bool d_oriented_with_n(const std::vector<int>& entries, int n) {
  const int k = static_cast<int>(entries.size()) - 1;
  if (k <= 0) return true;
  std::vector<int> e(entries.begin(), entries.end() - 1);
  for (int x : e)
    if (std::abs(x) >= n) return false;
  auto run = [&](bool positive_first) {
    int l = 0;
    if (positive_first) {
      while (l < k && e[l] > 0 && (l == 0 || e[l] > e[l - 1])) ++l;
      if (l == 0) return false;
      for (int i = l; i < k; ++i) {
        if (e[i] >= 0) return false;
        if (i > l && e[i] >= e[i - 1]) return false;
      }
      if (l < k && e[k - 1] <= -e[0]) return false;
    } else {
      while (l < k && e[l] < 0 && (l == 0 || e[l] < e[l - 1])) ++l;
      if (l == 0) return false;
      for (int i = l; i < k; ++i) {
        if (e[i] <= 0) return false;
        if (i > l && e[i] <= e[i - 1]) return false;
      }
      if (l < k && e[k - 1] >= -e[0]) return false;
    }
    return true;
  };
  return e[0] > 0 ? run(true) : run(false);
}

std::vector<int> rotate_to_n_last(const Cycle& z, int n) {
  std::vector<int> e = z.entries;
  bool has_pos_n = std::find(e.begin(), e.end(), n) != e.end();
  if (!has_pos_n)
    for (int& x : e) x = -x;
  auto it = std::find(e.begin(), e.end(), n);
  std::rotate(e.begin(), it + 1, e.end());
  return e;  // ... ends with n after moving n to the back
}

}  // namespace

// ---------------------------------------------------------------------------
// SetPartition

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end());
    for (int v : b) {
      if (v < 1 || v > n || seen[v]) throw std::invalid_argument("blocks do not partition {1..n}");
      seen[v] = 1;
    }
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) blocks.push_back({v});
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  blocks_ = std::move(blocks);
}

SetPartition SetPartition::discrete(int n) { return SetPartition(n, {}); }

SetPartition SetPartition::full(int n) {
  std::vector<int> all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  return SetPartition(n, {all});
}

int SetPartition::block_of(int i) const {
  for (size_t k = 0; k < blocks_.size(); ++k)
    if (std::binary_search(blocks_[k].begin(), blocks_[k].end(), i)) return static_cast<int>(k);
  throw std::out_of_range("element outside ground set");
}

std::optional<std::pair<int, int>> SetPartition::crossing_pair() const {
  for (size_t i = 0; i < blocks_.size(); ++i)
    for (size_t j = i + 1; j < blocks_.size(); ++j)
      if (sets_cross(blocks_[i], blocks_[j])) return std::make_pair((int)i, (int)j);
  return std::nullopt;
}

bool SetPartition::non_crossing() const { return !crossing_pair().has_value(); }

bool SetPartition::refines(const SetPartition& o) const {
  if (n_ != o.n_) return false;
  for (const auto& b : blocks_) {
    int target = o.block_of(b[0]);
    for (int v : b)
      if (o.block_of(v) != target) return false;
  }
  return true;
}

std::string SetPartition::str() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << '|';
    for (size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) os << ',';
      os << blocks_[i][j];
    }
  }
  os << '}';
  return os.str();
}

namespace {

std::vector<std::vector<int>> parse_blocks(const std::string& s) {
  std::string body = s;
  auto l = body.find('{');
  auto r = body.rfind('}');
  if (l != std::string::npos && r != std::string::npos && l < r) body = body.substr(l + 1, r - l - 1);
  std::vector<std::vector<int>> blocks;
  std::istringstream bs(body);
  std::string blk;
  while (std::getline(bs, blk, '|')) {
    std::vector<int> entries;
    std::string tok;
    std::istringstream es(blk);
    while (std::getline(es, tok, ',')) {
      std::istringstream ts(tok);
      int v;
      while (ts >> v) entries.push_back(v);
    }
    if (!entries.empty()) blocks.push_back(std::move(entries));
  }
  return blocks;
}

}  // namespace

SetPartition SetPartition::parse(const std::string& s, int n) {
  return SetPartition(n, parse_blocks(s));
}

SetPartition pn_join(const SetPartition& a, const SetPartition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("ground set mismatch");
  const int n = a.n();
  std::vector<int> parent(static_cast<size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (const auto* p : {&a, &b})
    for (const auto& blk : p->blocks())
      for (size_t i = 1; i < blk.size(); ++i) unite(blk[0], blk[i]);
  std::map<int, std::vector<int>> comps;
  for (int v = 1; v <= n; ++v) comps[find(v)].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, blk] : comps) blocks.push_back(std::move(blk));
  return SetPartition(n, std::move(blocks));
}

SetPartition pn_meet(const SetPartition& a, const SetPartition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("ground set mismatch");
  const int n = a.n();
  std::map<std::pair<int, int>, std::vector<int>> cells;
  for (int v = 1; v <= n; ++v) cells[{a.block_of(v), b.block_of(v)}].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (auto& [key, blk] : cells) blocks.push_back(std::move(blk));
  return SetPartition(n, std::move(blocks));
}

SetPartition ncp_join(const SetPartition& a, const SetPartition& b) {
  SetPartition j = pn_join(a, b);
  for (;;) {
    auto cp = j.crossing_pair();
    if (!cp) return j;
    std::vector<std::vector<int>> blocks = j.blocks();
    std::vector<int> merged = blocks[cp->first];
    merged.insert(merged.end(), blocks[cp->second].begin(), blocks[cp->second].end());
    blocks.erase(blocks.begin() + cp->second);
    blocks[cp->first] = merged;
    j = SetPartition(j.n(), std::move(blocks));
  }
}

std::vector<SetPartition> all_partitions(int n) {
  std::vector<SetPartition> out;
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      out.emplace_back(n, blocks);
      return;
    }
    const size_t existing = blocks.size();
    for (size_t bi = 0; bi < existing; ++bi) {
      blocks[bi].push_back(v);
      rec(v + 1);
      blocks[bi].pop_back();
    }
    blocks.push_back({v});
    rec(v + 1);
    blocks.pop_back();
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetPartition> all_ncp(int n) {
  std::vector<SetPartition> out;
  for (auto& p : all_partitions(n))
    if (p.non_crossing()) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------------------
// SignedPartition

SignedPartition::SignedPartition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
  std::vector<char> seen(static_cast<size_t>(2 * n) + 1, 0);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end(),
              [n](int x, int y) { return circ_pos(x, n) < circ_pos(y, n); });
    for (int v : b) {
      int a = std::abs(v);
      if (a < 1 || a > n) throw std::invalid_argument("entry outside ±{1..n}");
      int p = circ_pos(v, n);
      if (seen[p]) throw std::invalid_argument("repeated entry in signed partition");
      seen[p] = 1;
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (!seen[circ_pos(v, n)]) blocks.push_back({v});
    if (!seen[circ_pos(-v, n)]) blocks.push_back({-v});
  }
  std::sort(blocks.begin(), blocks.end(), [n](const auto& a, const auto& b) {
    return circ_pos(a[0], n) < circ_pos(b[0], n);
  });
  blocks_ = std::move(blocks);

  int zero_count = 0;
  std::set<std::set<int>> block_sets;
  for (const auto& b : blocks_) block_sets.insert(std::set<int>(b.begin(), b.end()));
  for (size_t i = 0; i < blocks_.size(); ++i) {
    std::set<int> as(blocks_[i].begin(), blocks_[i].end());
    std::set<int> neg;
    for (int v : as) neg.insert(-v);
    if (as == neg) {
      zero_block_ = static_cast<int>(i);
      ++zero_count;
    } else if (!block_sets.count(neg)) {
      throw std::invalid_argument("blocks are not closed under negation");
    }
  }
  if (zero_count > 1) throw std::invalid_argument("more than one zero block");
}

bool SignedPartition::is_d_partition() const {
  return zero_block_ < 0 || blocks_[zero_block_].size() >= 4;
}

bool SignedPartition::is_pure_d() const {
  if (!is_d_partition()) return false;
  if (zero_block_ < 0) return true;
  const auto& z = blocks_[zero_block_];
  return std::find(z.begin(), z.end(), n_) != z.end();
}

SetPartition SignedPartition::canonical_image() const {
  std::vector<std::vector<int>> blocks;
  for (const auto& b : blocks_) {
    std::vector<int> img;
    for (int v : b) img.push_back(circ_pos(v, n_));
    blocks.push_back(std::move(img));
  }
  return SetPartition(2 * n_, std::move(blocks));
}

SignedPartition SignedPartition::from_canonical_image(const SetPartition& p) {
  const int n = p.n() / 2;
  if (p.n() != 2 * n) throw std::invalid_argument("ground set is not of even size");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : p.blocks()) {
    std::vector<int> back;
    for (int v : b) back.push_back(v <= n ? v : -(v - n));
    blocks.push_back(std::move(back));
  }
  return SignedPartition(n, std::move(blocks));
}

bool SignedPartition::non_crossing_b() const { return canonical_image().non_crossing(); }

bool SignedPartition::non_crossing_d() const {
  if (!is_pure_d()) return false;
  const int m = n_ - 1;  // blocks live in the B_{n-1} world
  // Drawn blocks: the zero block without ±n, both members of block pairs
  // not containing ±n, and the synthesized zero block of a pair with n.
  std::vector<std::vector<int>> drawn;
  for (size_t i = 0; i < blocks_.size(); ++i) {
    const auto& b = blocks_[i];
    bool has_n = false;
    for (int v : b) has_n |= std::abs(v) == n_;
    if (static_cast<int>(i) == zero_block_) {
      std::vector<int> z;
      for (int v : b)
        if (std::abs(v) != n_) z.push_back(v);
      if (!z.empty()) drawn.push_back(std::move(z));
    } else if (has_n) {
      if (std::find(b.begin(), b.end(), n_) == b.end()) continue;  // keep B with +n only
      std::vector<int> z;
      for (int v : b)
        if (std::abs(v) != n_) {
          z.push_back(v);
          z.push_back(-v);
        }
      if (!z.empty()) drawn.push_back(std::move(z));
    } else {
      if (b.size() >= 2) drawn.push_back(b);
    }
  }
  std::vector<std::vector<int>> images;
  for (auto& d : drawn) {
    std::vector<int> img;
    for (int v : d) img.push_back(circ_pos(v, m));
    std::sort(img.begin(), img.end());
    images.push_back(std::move(img));
  }
  for (size_t i = 0; i < images.size(); ++i)
    for (size_t j = i + 1; j < images.size(); ++j) {
      std::vector<int> a, b;
      std::set_difference(images[i].begin(), images[i].end(), images[j].begin(), images[j].end(),
                          std::back_inserter(a));
      std::set_difference(images[j].begin(), images[j].end(), images[i].begin(), images[i].end(),
                          std::back_inserter(b));
      if (sets_cross(a, b)) return false;
    }
  return true;
}

std::string SignedPartition::str() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << '|';
    for (size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) os << ',';
      os << blocks_[i][j];
    }
  }
  os << '}';
  return os.str();
}

SignedPartition SignedPartition::parse(const std::string& s, int n) {
  return SignedPartition(n, parse_blocks(s));
}

// ---------------------------------------------------------------------------
// Membership

namespace {

bool nc_member_a_points(const SignedPerm& w) {
  auto cycles = disjoint_cycles(w, true);
  for (const auto& z : cycles) {
    if (!std::is_sorted(z.entries.begin(), z.entries.end())) return false;
  }
  for (size_t i = 0; i < cycles.size(); ++i)
    for (size_t j = i + 1; j < cycles.size(); ++j) {
      std::vector<int> a = cycles[i].entries, b = cycles[j].entries;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (sets_cross(a, b)) return false;
    }
  return true;
}

SignedPerm canonical_image_perm(const SignedPerm& w) {
  const int n = w.points();
  std::vector<int> img(static_cast<size_t>(2 * n));
  for (int i = 1; i <= n; ++i) {
    img[circ_pos(i, n) - 1] = circ_pos(w(i), n);
    img[circ_pos(-i, n) - 1] = circ_pos(w(-i), n);
  }
  return SignedPerm(std::move(img));
}

bool nc_member_d(const SignedPerm& w) {
  const int n = w.points();
  auto cycles = disjoint_cycles(w, false);
  std::vector<const Cycle*> balanced;
  for (const auto& z : cycles)
    if (z.kind == CycleKind::Balanced) balanced.push_back(&z);
  if (balanced.size() != 0 && balanced.size() != 2) return false;
  if (balanced.size() == 2) {
    const Cycle* last = nullptr;
    const Cycle* other = nullptr;
    for (auto* b : balanced) {
      if (b->length() == 1 && std::abs(b->entries[0]) == n)
        last = b;
      else
        other = b;
    }
    if (!last || !other) return false;
    for (int e : other->entries)
      if (std::abs(e) >= n) return false;
    if (!b_oriented(*other, n - 1)) return false;
  }
  for (const auto& z : cycles) {
    if (z.kind != CycleKind::Paired) continue;
    bool has_n = false;
    for (int e : z.entries) has_n |= std::abs(e) == n;
    if (has_n) {
      if (!d_oriented_with_n(rotate_to_n_last(z, n), n)) return false;
    } else {
      if (!b_oriented(z, n - 1)) return false;
    }
  }
  return perm_to_partition_bd(CoxType::D, w).non_crossing_d();
}

}  // namespace

bool nc_member(CoxType type, const SignedPerm& w) {
  switch (type) {
    case CoxType::A:
      if (!w.is_unsigned()) throw std::domain_error("type A element must be unsigned");
      return nc_member_a_points(w);
    case CoxType::B:
      return nc_member_a_points(canonical_image_perm(w));
    case CoxType::D:
      if (w.sign_changes() % 2 != 0) throw std::domain_error("element not in W(D_n)");
      return nc_member_d(w);
  }
  return false;
}

bool nc_member_by_length(CoxType type, const SignedPerm& w) {
  const auto& g = GroupCtx::get(type, type == CoxType::A ? w.points() - 1 : w.points());
  if (!g.contains(w)) throw std::domain_error("element not in the declared group");
  return absolute_length(w) + absolute_length(w.inverse() * g.coxeter) == g.rank;
}

// ---------------------------------------------------------------------------
// Partition <-> permutation

SetPartition perm_to_partition_a(const SignedPerm& w) {
  const int n = w.points();
  std::vector<std::vector<int>> blocks;
  std::vector<char> done(static_cast<size_t>(n) + 1, 0);
  for (int s = 1; s <= n; ++s) {
    if (done[s]) continue;
    std::vector<int> orbit;
    int x = s;
    do {
      orbit.push_back(x);
      done[x] = 1;
      x = w(x);
    } while (x != s);
    blocks.push_back(std::move(orbit));
  }
  return SetPartition(n, std::move(blocks));
}

SignedPartition perm_to_partition_bd(CoxType type, const SignedPerm& w) {
  const int n = w.points();
  std::vector<std::vector<int>> blocks;
  std::vector<char> done(static_cast<size_t>(2 * n) + 1, 0);
  for (int p = 1; p <= 2 * n; ++p) {
    if (done[p]) continue;
    int start = p <= n ? p : -(p - n);
    std::vector<int> orbit;
    int x = start;
    do {
      orbit.push_back(x);
      done[circ_pos(x, n)] = 1;
      x = w(x);
    } while (x != start);
    blocks.push_back(std::move(orbit));
  }
  if (type == CoxType::D) {
    // Merge the orbit pair of a balanced product b·[n] into one zero block.
    auto is_sym = [&](const std::vector<int>& b) {
      std::set<int> s(b.begin(), b.end());
      for (int v : b)
        if (!s.count(-v)) return false;
      return true;
    };
    std::vector<size_t> sym;
    for (size_t i = 0; i < blocks.size(); ++i)
      if (blocks[i].size() >= 2 && is_sym(blocks[i])) sym.push_back(i);
    if (sym.size() == 2) {
      blocks[sym[0]].insert(blocks[sym[0]].end(), blocks[sym[1]].begin(), blocks[sym[1]].end());
      blocks.erase(blocks.begin() + sym[1]);
    }
  }
  return SignedPartition(n, std::move(blocks));
}

SignedPerm partition_to_perm(const SetPartition& pi) {
  auto cp = pi.crossing_pair();
  if (cp) {
    throw std::invalid_argument("crossing partition: blocks " + std::to_string(cp->first + 1) +
                                " and " + std::to_string(cp->second + 1) + " of " + pi.str());
  }
  SignedPerm w = SignedPerm::identity(pi.n());
  for (const auto& b : pi.blocks()) {
    if (b.size() < 2) continue;
    w = w * Cycle(CycleKind::Unsigned, b).to_perm(pi.n());
  }
  return w;
}

namespace {

SignedPerm partition_to_perm_b(const SignedPartition& pi) {
  if (!pi.non_crossing_b()) throw std::invalid_argument("crossing B-partition: " + pi.str());
  const int n = pi.n();
  SignedPerm w = SignedPerm::identity(n);
  std::set<std::vector<int>> used;
  for (size_t bi = 0; bi < pi.blocks().size(); ++bi) {
    const auto& b = pi.blocks()[bi];
    if (static_cast<int>(bi) == pi.zero_block()) {
      // Zero block of size 2k: the balanced cycle on its first k entries
      // in the circular order.
      std::vector<int> half(b.begin(), b.begin() + b.size() / 2);
      w = w * Cycle(CycleKind::Balanced, half).to_perm(n);
      continue;
    }
    if (b.size() < 2) continue;
    std::vector<int> sorted_b = b, neg;
    std::sort(sorted_b.begin(), sorted_b.end());
    for (int v : b) neg.push_back(-v);
    std::sort(neg.begin(), neg.end());
    if (used.count(sorted_b)) continue;  // the block pair was already handled
    used.insert(neg);
    w = w * Cycle(CycleKind::Paired, b).to_perm(n);
  }
  return w;
}

SignedPerm partition_to_perm_d(const SignedPartition& pi) {
  if (!pi.non_crossing_d()) throw std::invalid_argument("crossing D-partition: " + pi.str());
  const int n = pi.n();
  const int m = n - 1;
  SignedPerm w = SignedPerm::identity(n);
  std::set<std::vector<int>> used;
  for (size_t bi = 0; bi < pi.blocks().size(); ++bi) {
    const auto& b = pi.blocks()[bi];
    if (static_cast<int>(bi) == pi.zero_block()) {
      std::vector<int> z;
      for (int v : b)
        if (std::abs(v) != n) z.push_back(v);
      std::sort(z.begin(), z.end(), [m](int x, int y) { return circ_pos(x, m) < circ_pos(y, m); });
      std::vector<int> half(z.begin(), z.begin() + z.size() / 2);
      w = w * Cycle(CycleKind::Balanced, half).to_perm(n);
      w = w * Cycle(CycleKind::Balanced, std::vector<int>{n}).to_perm(n);
      continue;
    }
    if (b.size() < 2) continue;
    bool has_n = std::find(b.begin(), b.end(), n) != b.end();
    bool has_neg_n = std::find(b.begin(), b.end(), -n) != b.end();
    if (has_neg_n) continue;  // handled via the +n member of the pair
    if (has_n) {
      std::vector<int> rest;
      for (int v : b)
        if (v != n) rest.push_back(v);
      std::sort(rest.begin(), rest.end(),
                [m](int x, int y) { return circ_pos(x, m) < circ_pos(y, m); });
      // The anchor of n in the circular order is the unique rotation making
      // the cycle consistently oriented.
      bool found = false;
      for (size_t r = 0; r < rest.size() && !found; ++r) {
        std::vector<int> cand(rest.begin() + r, rest.end());
        cand.insert(cand.end(), rest.begin(), rest.begin() + r);
        cand.push_back(n);
        if (d_oriented_with_n(cand, n)) {
          w = w * Cycle(CycleKind::Paired, cand).to_perm(n);
          found = true;
        }
      }
      if (!found) throw std::invalid_argument("no consistent orientation for block of " + pi.str());
    } else {
      std::vector<int> sorted_b = b, neg;
      std::sort(sorted_b.begin(), sorted_b.end());
      for (int v : b) neg.push_back(-v);
      std::sort(neg.begin(), neg.end());
      if (used.count(sorted_b)) continue;
      used.insert(neg);
      std::vector<int> e = b;
      std::sort(e.begin(), e.end(), [m](int x, int y) { return circ_pos(x, m) < circ_pos(y, m); });
      w = w * Cycle(CycleKind::Paired, e).to_perm(n);
    }
  }
  return w;
}

}  // namespace

SignedPerm partition_to_perm(CoxType type, const SignedPartition& pi) {
  if (type == CoxType::B) return partition_to_perm_b(pi);
  if (type == CoxType::D) return partition_to_perm_d(pi);
  throw std::invalid_argument("use the SetPartition overload for type A");
}

// ---------------------------------------------------------------------------
// NcLattice

int size_guard(CoxType type) {
  int dflt = type == CoxType::A ? 8 : 6;
  if (const char* env = std::getenv("NCPART_MAX_N")) {
    int v = std::atoi(env);
    if (v > dflt) {
      std::cerr << "warning: NCPART_MAX_N=" << v << " raises the size guard for type "
                << to_string(type) << " beyond the default " << dflt << "\n";
      return v;
    }
  }
  return dflt;
}

const NcLattice& NcLattice::get(CoxType type, int rank) {
  static std::map<std::pair<CoxType, int>, NcLattice> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(type, rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const auto& g = GroupCtx::get(type, rank);
  int n_param = type == CoxType::A ? g.points : rank;
  if (n_param > size_guard(type))
    throw std::domain_error("NC lattice size guard exceeded (set NCPART_MAX_N to override)");

  NcLattice L;
  L.group_ = &g;
  std::set<SignedPerm> seen;
  std::queue<SignedPerm> todo;
  SignedPerm id = SignedPerm::identity(g.points);
  seen.insert(id);
  todo.push(id);
  while (!todo.empty()) {
    SignedPerm w = todo.front();
    todo.pop();
    int lw = absolute_length(w);
    for (const auto& t : g.reflections) {
      SignedPerm u = w * t;
      if (absolute_length(u) != lw + 1) continue;
      if (absolute_length(u) + absolute_length(u.inverse() * g.coxeter) != g.rank) continue;
      if (seen.insert(u).second) todo.push(u);
    }
  }
  L.elements_.assign(seen.begin(), seen.end());
  std::stable_sort(L.elements_.begin(), L.elements_.end(),
                   [](const SignedPerm& a, const SignedPerm& b) {
                     int la = absolute_length(a), lb = absolute_length(b);
                     if (la != lb) return la < lb;
                     return a < b;
                   });
  const int N = static_cast<int>(L.elements_.size());
  L.rank_.resize(N);
  for (int i = 0; i < N; ++i) {
    L.rank_[i] = absolute_length(L.elements_[i]);
    L.index_[L.elements_[i]] = i;
    if (L.rank_[i] == 1) L.atoms_.push_back(i);
  }
  const int words = (N + 63) / 64;
  L.le_.assign(N, std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (L.rank_[i] > L.rank_[j]) continue;
      if (absolute_length(L.elements_[i].inverse() * L.elements_[j]) ==
          L.rank_[j] - L.rank_[i])
        L.le_[i][j / 64] |= 1ull << (j % 64);
    }
  L.bottom_ = 0;
  L.top_ = N - 1;
  auto [pos, ok] = cache.emplace(key, std::move(L));
  (void)ok;
  return pos->second;
}

int NcLattice::index(const SignedPerm& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

bool NcLattice::le(int a, int b) const { return (le_[a][b / 64] >> (b % 64)) & 1; }

int NcLattice::meet(int a, int b) const {
  int best = bottom_;
  for (int z = 0; z < size(); ++z)
    if (le(z, a) && le(z, b) && rank_[z] > rank_[best]) best = z;
  // The lattice property guarantees a unique maximal lower bound.
  for (int z = 0; z < size(); ++z)
    if (le(z, a) && le(z, b) && !le(z, best))
      throw std::logic_error("meet is not unique; not a lattice?");
  return best;
}

int NcLattice::join(int a, int b) const {
  int best = top_;
  for (int z = 0; z < size(); ++z)
    if (le(a, z) && le(b, z) && rank_[z] < rank_[best]) best = z;
  for (int z = 0; z < size(); ++z)
    if (le(a, z) && le(b, z) && !le(best, z))
      throw std::logic_error("join is not unique; not a lattice?");
  return best;
}

std::vector<int> NcLattice::elements_of_rank(int r) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (rank_[i] == r) out.push_back(i);
  return out;
}

CoverSets covers(CoxType type, const SignedPerm& w) {
  const auto& g = GroupCtx::get(type, type == CoxType::A ? w.points() - 1 : w.points());
  if (!g.contains(w)) throw std::domain_error("element not in the declared group");
  CoverSets out;
  std::set<SignedPerm> above, below;
  int lw = absolute_length(w);
  for (const auto& t : g.reflections) {
    SignedPerm u = w * t;
    int lu = absolute_length(u);
    if (lu == lw - 1)
      below.insert(u);
    else if (lu == lw + 1 && nc_member_by_length(type, u))
      above.insert(u);
  }
  out.above.assign(above.begin(), above.end());
  out.below.assign(below.begin(), below.end());
  return out;
}

SignedPerm kreweras(CoxType type, const SignedPerm& w) {
  const auto& g = GroupCtx::get(type, type == CoxType::A ? w.points() - 1 : w.points());
  return w.inverse() * g.coxeter;
}

std::vector<std::vector<SignedPerm>> nc_enumerate(CoxType type, int rank) {
  const auto& L = NcLattice::get(type, rank);
  std::vector<std::vector<SignedPerm>> out(static_cast<size_t>(rank) + 1);
  for (int i = 0; i < L.size(); ++i) out[L.rank_of(i)].push_back(L.element(i));
  return out;
}

// ---------------------------------------------------------------------------
// Lattice operations on partitions

SetPartition nc_meet(const SetPartition& a, const SetPartition& b) { return pn_meet(a, b); }

SignedPartition nc_meet(CoxType type, const SignedPartition& a, const SignedPartition& b) {
  if (type == CoxType::B)
    return SignedPartition::from_canonical_image(pn_meet(a.canonical_image(), b.canonical_image()));
  const auto& L = NcLattice::get(CoxType::D, a.n());
  int ia = L.index(partition_to_perm(CoxType::D, a));
  int ib = L.index(partition_to_perm(CoxType::D, b));
  if (ia < 0 || ib < 0) throw std::invalid_argument("partition not in NC(D_n)");
  return perm_to_partition_bd(CoxType::D, L.element(L.meet(ia, ib)));
}

SignedPartition nc_join(CoxType type, const SignedPartition& a, const SignedPartition& b) {
  if (type == CoxType::B)
    return SignedPartition::from_canonical_image(ncp_join(a.canonical_image(), b.canonical_image()));
  const auto& L = NcLattice::get(CoxType::D, a.n());
  int ia = L.index(partition_to_perm(CoxType::D, a));
  int ib = L.index(partition_to_perm(CoxType::D, b));
  if (ia < 0 || ib < 0) throw std::invalid_argument("partition not in NC(D_n)");
  return perm_to_partition_bd(CoxType::D, L.element(L.join(ia, ib)));
}

// ---------------------------------------------------------------------------
// Counting

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t catalan(int n) { return binomial(2 * n, n) / (n + 1); }

std::int64_t narayana(int n, int k) { return binomial(n, k) * binomial(n, k - 1) / n; }

std::int64_t stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0 || k > n) return 0;
  static std::map<std::pair<int, int>, std::int64_t> memo;
  auto it = memo.find({n, k});
  if (it != memo.end()) return it->second;
  std::int64_t v = k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
  memo[{n, k}] = v;
  return v;
}

std::int64_t bell(int n) {
  std::int64_t s = 0;
  for (int k = 0; k <= n; ++k) s += stirling2(n, k);
  return s;
}

std::int64_t nc_count(CoxType type, int rank) {
  switch (type) {
    case CoxType::A: return catalan(rank + 1);
    case CoxType::B: return binomial(2 * rank, rank);
    case CoxType::D: return (3 * rank - 2) * binomial(2 * rank - 2, rank - 1) / rank;
  }
  return 0;
}

}  // namespace ncpart
