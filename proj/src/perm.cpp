#include "ncpart/perm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <mutex>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ncpart {

std::string to_string(CoxType t) {
  switch (t) {
    case CoxType::A: return "A";
    case CoxType::B: return "B";
    case CoxType::D: return "D";
  }
  return "?";
}

CoxType cox_type_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return CoxType::A;
    case 'B': return CoxType::B;
    case 'D': return CoxType::D;
  }
  throw std::invalid_argument("unknown Coxeter type, expected A, B or D");
}

SignedPerm::SignedPerm(std::vector<int> images) : img_(std::move(images)) {
  const int m = points();
  std::vector<char> seen(static_cast<size_t>(m) + 1, 0);
  for (int v : img_) {
    int a = std::abs(v);
    if (a < 1 || a > m || seen[a]) throw std::invalid_argument("not a signed permutation");
    seen[a] = 1;
  }
}

SignedPerm SignedPerm::identity(int m) {
  std::vector<int> img(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) img[i - 1] = i;
  return SignedPerm(std::move(img));
}

int SignedPerm::operator()(int i) const {
  if (i > 0) return img_[i - 1];
  return -img_[-i - 1];
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  if (points() != o.points()) throw std::invalid_argument("point count mismatch");
  SignedPerm r;
  r.img_.resize(img_.size());
  for (int i = 1; i <= points(); ++i) r.img_[i - 1] = (*this)(o(i));
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r;
  r.img_.resize(img_.size());
  for (int i = 1; i <= points(); ++i) {
    int v = img_[i - 1];
    if (v > 0)
      r.img_[v - 1] = i;
    else
      r.img_[-v - 1] = -i;
  }
  return r;
}

SignedPerm SignedPerm::conjugate(const SignedPerm& g) const { return g * (*this) * g.inverse(); }

bool SignedPerm::is_identity() const {
  for (int i = 1; i <= points(); ++i)
    if (img_[i - 1] != i) return false;
  return true;
}

bool SignedPerm::is_unsigned() const {
  for (int v : img_)
    if (v < 0) return false;
  return true;
}

int SignedPerm::sign_changes() const {
  int k = 0;
  for (int v : img_)
    if (v < 0) ++k;
  return k;
}

// ---------------------------------------------------------------------------
// Cycles

namespace {

// Order entries by absolute value, positive before negative.
bool entry_less(int a, int b) {
  if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
  return a > b;
}

}  // namespace

Cycle::Cycle(CycleKind k, std::vector<int> e) : kind(k), entries(std::move(e)) {
  if (entries.empty()) throw std::invalid_argument("empty cycle");
  canonicalize();
}

void Cycle::canonicalize() {
  const int k = length();
  if (kind == CycleKind::Unsigned) {
    auto it = std::min_element(entries.begin(), entries.end());
    std::rotate(entries.begin(), it, entries.end());
    return;
  }
  if (kind == CycleKind::Paired) {
    // Representatives: k rotations of the entries and k rotations of the
    // negated entries.  Exactly one starts with +min|.|.
    int best = entries[0];
    for (int v : entries)
      if (std::abs(v) < std::abs(best)) best = v;
    if (best < 0)
      for (int& v : entries) v = -v;
    auto it = std::find(entries.begin(), entries.end(), std::abs(best));
    std::rotate(entries.begin(), it, entries.end());
    return;
  }
  // Balanced: representatives are the 2k ways of splitting the underlying
  // 2k-cycle (e, -e); rotate so the positive entry of smallest |.| leads.
  std::vector<int> two(entries);
  for (int v : entries) two.push_back(-v);
  int pos = 0;
  for (int i = 0; i < 2 * k; ++i)
    if (two[i] > 0 && (two[pos] < 0 || std::abs(two[i]) < std::abs(two[pos]))) pos = i;
  std::rotate(two.begin(), two.begin() + pos, two.end());
  entries.assign(two.begin(), two.begin() + k);
}

int Cycle::reflection_length() const {
  return kind == CycleKind::Balanced ? length() : length() - 1;
}

SignedPerm Cycle::to_perm(int m) const {
  std::vector<int> img(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) img[i - 1] = i;
  auto apply = [&](int from, int to) {
    if (from > 0)
      img[from - 1] = to;
    else
      img[-from - 1] = -to;
  };
  const int k = length();
  for (int i = 0; i < k; ++i) {
    int from = entries[i];
    if (std::abs(from) > m) throw std::invalid_argument("cycle entry outside 1..m");
    int to;
    if (i + 1 < k)
      to = entries[i + 1];
    else
      to = kind == CycleKind::Balanced ? -entries[0] : entries[0];
    apply(from, to);
    if (kind != CycleKind::Unsigned) apply(-from, -to);
  }
  return SignedPerm(std::move(img));
}

std::strong_ordering Cycle::operator<=>(const Cycle& o) const {
  int a = std::abs(entries[0]);
  int b = std::abs(o.entries[0]);
  if (a != b) return a <=> b;
  if (kind != o.kind) return static_cast<int>(kind) <=> static_cast<int>(o.kind);
  if (length() != o.length()) return length() <=> o.length();
  for (int i = 0; i < length(); ++i)
    if (entries[i] != o.entries[i]) {
      if (entry_less(entries[i], o.entries[i])) return std::strong_ordering::less;
      return std::strong_ordering::greater;
    }
  return std::strong_ordering::equal;
}

std::string Cycle::str() const {
  std::ostringstream os;
  const char* open = kind == CycleKind::Unsigned ? "(" : kind == CycleKind::Paired ? "((" : "[";
  const char* close = kind == CycleKind::Unsigned ? ")" : kind == CycleKind::Paired ? "))" : "]";
  os << open;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ' ';
    os << entries[i];
  }
  os << close;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cycle& z) { return os << z.str(); }

std::vector<Cycle> disjoint_cycles(const SignedPerm& w, bool as_unsigned) {
  const int m = w.points();
  std::vector<Cycle> out;
  std::vector<char> done(static_cast<size_t>(m) + 1, 0);
  for (int s = 1; s <= m; ++s) {
    if (done[s]) continue;
    // Trace the orbit of +s.
    std::vector<int> orbit;
    int x = s;
    do {
      orbit.push_back(x);
      done[std::abs(x)] = 1;
      x = w(x);
    } while (x != s && x != -s);
    if (x == -s) {
      // Balanced: the orbit is closed only after passing through -s.
      if (orbit.size() >= 1) out.emplace_back(CycleKind::Balanced, orbit);
    } else {
      if (orbit.size() >= 2)
        out.emplace_back(as_unsigned ? CycleKind::Unsigned : CycleKind::Paired, orbit);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string element_str(const SignedPerm& w, CoxType type) {
  auto cycles = disjoint_cycles(w, type == CoxType::A);
  if (cycles.empty()) return "()";
  std::string s;
  for (const auto& z : cycles) s += z.str();
  return s;
}

SignedPerm parse_element(const std::string& s, CoxType type, int points) {
  SignedPerm w = SignedPerm::identity(points);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto parse_entries = [&](const std::string& close) {
    std::vector<int> entries;
    for (;;) {
      skip_ws();
      if (i >= s.size()) throw std::invalid_argument("unterminated cycle in '" + s + "'");
      if (s.compare(i, close.size(), close) == 0) {
        i += close.size();
        return entries;
      }
      size_t j = i;
      if (s[j] == '-') ++j;
      size_t k = j;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      if (k == j) throw std::invalid_argument("expected integer in cycle: '" + s + "'");
      entries.push_back(std::stoi(s.substr(i, k - i)));
      i = k;
      skip_ws();
      if (i < s.size() && s[i] == ',') ++i;  // tolerated separator
    }
  };
  skip_ws();
  bool any = false;
  while (i < s.size()) {
    skip_ws();
    if (i >= s.size()) break;
    if (s.compare(i, 2, "id") == 0) {
      i += 2;
      any = true;
      continue;
    }
    Cycle z;
    if (s.compare(i, 2, "((") == 0) {
      i += 2;
      z = Cycle(CycleKind::Paired, parse_entries("))"));
    } else if (s[i] == '(') {
      ++i;
      skip_ws();
      if (i < s.size() && s[i] == ')') {  // "()" identity
        ++i;
        any = true;
        continue;
      }
      auto e = parse_entries(")");
      z = Cycle(type == CoxType::A ? CycleKind::Unsigned : CycleKind::Paired, std::move(e));
    } else if (s[i] == '[') {
      ++i;
      z = Cycle(CycleKind::Balanced, parse_entries("]"));
    } else {
      throw std::invalid_argument("unexpected character in element: '" + s + "'");
    }
    if (type == CoxType::A && z.kind != CycleKind::Unsigned)
      throw std::invalid_argument("signed cycle in a type A element");
    w = w * z.to_perm(points);
    any = true;
  }
  if (!any) throw std::invalid_argument("empty element literal");
  return w;
}

// ---------------------------------------------------------------------------
// Group contexts

namespace {

int points_of(CoxType type, int rank) { return type == CoxType::A ? rank + 1 : rank; }

}  // namespace

const GroupCtx& GroupCtx::get(CoxType type, int rank) {
  static std::map<std::pair<CoxType, int>, GroupCtx> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(type, rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (type == CoxType::D && rank < 2) throw std::invalid_argument("type D needs rank >= 2");

  GroupCtx g;
  g.type = type;
  g.rank = rank;
  g.points = points_of(type, rank);
  g.reflection_cycles = ncpart::reflections(type, rank);
  for (const auto& z : g.reflection_cycles) g.reflections.push_back(z.to_perm(g.points));
  g.coxeter = ncpart::coxeter_element(type, rank);
  g.coxeter_number = ncpart::coxeter_number(type, rank);
  for (size_t i = 0; i < g.reflections.size(); ++i) g.refl_index_[g.reflections[i]] = (int)i;
  auto [pos, ok] = cache.emplace(key, std::move(g));
  (void)ok;
  return pos->second;
}

bool GroupCtx::contains(const SignedPerm& w) const {
  if (w.points() != points) return false;
  switch (type) {
    case CoxType::A: return w.is_unsigned();
    case CoxType::B: return true;
    case CoxType::D: return w.sign_changes() % 2 == 0;
  }
  return false;
}

int GroupCtx::reflection_index(const SignedPerm& t) const {
  auto it = refl_index_.find(t);
  return it == refl_index_.end() ? -1 : it->second;
}

const std::vector<SignedPerm>& GroupCtx::all_elements() const {
  if (!elements_.empty()) return elements_;
  std::set<SignedPerm> seen;
  std::queue<SignedPerm> todo;
  SignedPerm id = SignedPerm::identity(points);
  seen.insert(id);
  todo.push(id);
  while (!todo.empty()) {
    SignedPerm w = todo.front();
    todo.pop();
    for (const auto& t : reflections) {
      SignedPerm u = w * t;
      if (seen.insert(u).second) todo.push(u);
    }
  }
  elements_.assign(seen.begin(), seen.end());
  return elements_;
}

// ---------------------------------------------------------------------------
// Lengths and the absolute order

int absolute_length(const SignedPerm& w) {
  int len = 0;
  for (const auto& z : disjoint_cycles(w, false)) len += z.reflection_length();
  return len;
}

int absolute_length(CoxType type, const SignedPerm& w) {
  const auto& g = GroupCtx::get(type, type == CoxType::A ? w.points() - 1 : w.points());
  if (!g.contains(w)) throw std::domain_error("element not in the declared group");
  return absolute_length(w);
}

bool absolute_le(CoxType type, const SignedPerm& v, const SignedPerm& w) {
  const auto& g = GroupCtx::get(type, type == CoxType::A ? w.points() - 1 : w.points());
  if (!g.contains(v) || !g.contains(w)) throw std::domain_error("element not in the declared group");
  return absolute_length(w) == absolute_length(v) + absolute_length(v.inverse() * w);
}

std::vector<Cycle> reflections(CoxType type, int rank) {
  std::vector<Cycle> out;
  if (type == CoxType::A) {
    int n = rank + 1;
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) out.emplace_back(CycleKind::Unsigned, std::vector<int>{i, j});
  } else {
    int n = rank;
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        out.emplace_back(CycleKind::Paired, std::vector<int>{i, j});
        out.emplace_back(CycleKind::Paired, std::vector<int>{i, -j});
      }
    if (type == CoxType::B)
      for (int i = 1; i <= n; ++i) out.emplace_back(CycleKind::Balanced, std::vector<int>{i});
  }
  std::sort(out.begin(), out.end());
  return out;
}

SignedPerm coxeter_element(CoxType type, int rank) {
  if (type == CoxType::A) {
    std::vector<int> e(static_cast<size_t>(rank) + 1);
    for (int i = 0; i <= rank; ++i) e[i] = i + 1;
    return Cycle(CycleKind::Unsigned, e).to_perm(rank + 1);
  }
  if (type == CoxType::B) {
    std::vector<int> e(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) e[i] = i + 1;
    return Cycle(CycleKind::Balanced, e).to_perm(rank);
  }
  std::vector<int> e(static_cast<size_t>(rank) - 1);
  for (int i = 0; i + 1 < rank; ++i) e[i] = i + 1;
  SignedPerm b = Cycle(CycleKind::Balanced, e).to_perm(rank);
  SignedPerm last = Cycle(CycleKind::Balanced, std::vector<int>{rank}).to_perm(rank);
  return b * last;
}

int coxeter_number(CoxType type, int rank) {
  switch (type) {
    case CoxType::A: return rank + 1;
    case CoxType::B: return 2 * rank;
    case CoxType::D: return 2 * (rank - 1);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Reduced words

SignedPerm ReducedWord::product() const {
  const auto& g = GroupCtx::get(type, rank);
  SignedPerm w = SignedPerm::identity(g.points);
  for (const auto& z : letters) w = w * z.to_perm(g.points);
  return w;
}

bool ReducedWord::is_reduced() const {
  return absolute_length(product()) == static_cast<int>(letters.size());
}

std::string ReducedWord::str() const {
  if (letters.empty()) return "()";
  std::string s;
  for (const auto& z : letters) s += z.str();
  return s;
}

namespace {

void reduced_words_rec(const GroupCtx& g, const SignedPerm& w, int len,
                       std::map<SignedPerm, std::vector<std::vector<int>>>& memo) {
  if (memo.count(w)) return;
  std::vector<std::vector<int>> words;
  if (len == 0) {
    words.push_back({});
    memo[w] = std::move(words);
    return;
  }
  for (size_t ti = 0; ti < g.reflections.size(); ++ti) {
    SignedPerm rest = g.reflections[ti] * w;  // t^-1 w
    if (absolute_length(rest) != len - 1) continue;
    reduced_words_rec(g, rest, len - 1, memo);
    for (const auto& tail : memo[rest]) {
      std::vector<int> word;
      word.reserve(tail.size() + 1);
      word.push_back(static_cast<int>(ti));
      word.insert(word.end(), tail.begin(), tail.end());
      words.push_back(std::move(word));
    }
  }
  memo[w] = std::move(words);
}

}  // namespace

std::vector<ReducedWord> reduced_words(CoxType type, const SignedPerm& w) {
  const auto& g = GroupCtx::get(type, type == CoxType::A ? w.points() - 1 : w.points());
  if (!g.contains(w)) throw std::domain_error("element not in the declared group");
  std::map<SignedPerm, std::vector<std::vector<int>>> memo;
  reduced_words_rec(g, w, absolute_length(w), memo);
  std::vector<ReducedWord> out;
  for (const auto& word : memo[w]) {
    ReducedWord rw{type, g.rank, {}};
    for (int ti : word) rw.letters.push_back(g.reflection_cycles[ti]);
    out.push_back(std::move(rw));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t count_reduced_words(CoxType type, const SignedPerm& w) {
  const auto& g = GroupCtx::get(type, type == CoxType::A ? w.points() - 1 : w.points());
  if (!g.contains(w)) throw std::domain_error("element not in the declared group");
  std::map<SignedPerm, std::int64_t> memo;
  std::function<std::int64_t(const SignedPerm&, int)> rec = [&](const SignedPerm& u,
                                                                int len) -> std::int64_t {
    if (len == 0) return 1;
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    std::int64_t total = 0;
    for (const auto& t : g.reflections) {
      SignedPerm rest = t * u;
      if (absolute_length(rest) == len - 1) total += rec(rest, len - 1);
    }
    memo[u] = total;
    return total;
  };
  return rec(w, absolute_length(w));
}

ReducedWord hurwitz_shift(const ReducedWord& word, int i, ShiftDir dir) {
  const int k = static_cast<int>(word.letters.size());
  if (i < 1 || i >= k) throw std::out_of_range("shift index out of range");
  const auto& g = GroupCtx::get(word.type, word.rank);
  SignedPerm a = word.letters[i - 1].to_perm(g.points);
  SignedPerm b = word.letters[i].to_perm(g.points);
  ReducedWord out = word;
  auto as_cycle = [&](const SignedPerm& t) {
    auto cyc = disjoint_cycles(t, word.type == CoxType::A);
    if (cyc.size() != 1 || !cyc[0].is_reflection())
      throw std::logic_error("shift did not produce a reflection");
    return cyc[0];
  };
  if (dir == ShiftDir::Right) {
    out.letters[i - 1] = as_cycle(a * b * a);
    out.letters[i] = as_cycle(a);
  } else {
    out.letters[i - 1] = as_cycle(b);
    out.letters[i] = as_cycle(b * a * b);
  }
  return out;
}

}  // namespace ncpart
