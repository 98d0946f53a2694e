#include "rgg/structure.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rgg/errors.hpp"

namespace rgg {

std::string CanonicalStructure::key() const {
  std::string s;
  s.push_back(static_cast<char>(n & 0xff));
  s.push_back(static_cast<char>((n >> 8) & 0xff));
  for (const auto& comp : components) {
    s.push_back(static_cast<char>(comp.size() & 0xff));
    for (int l : comp) s.push_back(static_cast<char>(l));
  }
  return s;
}

void CanonicalStructure::write_json(std::ostream& os) const {
  os << "{\"n\":" << n << ",\"components\":[";
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (c) os << ',';
    os << '[';
    for (std::size_t i = 0; i < components[c].size(); ++i) {
      if (i) os << ',';
      os << components[c][i];
    }
    os << ']';
  }
  os << "]}";
}

CliqueCover maximal_cliques(const OrderedGraph& og) {
  validate(og);
  CliqueCover cover;
  cover.n = og.n;
  // leftmost(i) = i - L_i is nondecreasing, so [leftmost(b) : b] is a clique
  // for every b; it is maximal exactly when leftmost(b+1) > leftmost(b).
  auto leftmost = [&](int i) { return i == 1 ? 1 : i - og.L(i); };
  for (int b = 1; b <= og.n; ++b) {
    if (b == og.n || leftmost(b + 1) > leftmost(b))
      cover.intervals.emplace_back(leftmost(b), b);
  }
  return cover;
}

namespace {

void check_cover(const CliqueCover& cover) {
  const auto& iv = cover.intervals;
  int k = cover.k();
  if (k == 0) throw InvalidCoverError("cover has no intervals");
  if (iv.front().first != 1) throw InvalidCoverError("a_1 != 1");
  if (iv.back().second != cover.n) throw InvalidCoverError("b_k != n");
  for (int t = 0; t < k; ++t) {
    if (iv[static_cast<std::size_t>(t)].first > iv[static_cast<std::size_t>(t)].second)
      throw InvalidCoverError("interval with a > b");
    if (iv[static_cast<std::size_t>(t)].second > cover.n)
      throw InvalidCoverError("b exceeds n");
    if (t + 1 < k) {
      const auto& cur = iv[static_cast<std::size_t>(t)];
      const auto& nxt = iv[static_cast<std::size_t>(t + 1)];
      if (nxt.first <= cur.first) throw InvalidCoverError("a values not strictly increasing");
      if (nxt.second <= cur.second) throw InvalidCoverError("b values not strictly increasing");
      if (nxt.first > cur.second + 1)
        throw InvalidCoverError("a_{t+1} > b_t + 1 (uncovered vertex)");
    }
  }
}

} // namespace

OrderedGraph og_from_cliques(const CliqueCover& cover) {
  check_cover(cover);
  OrderedGraph og;
  og.n = cover.n;
  og.left.assign(static_cast<std::size_t>(cover.n - 1), 0);
  // The first interval covering i has the smallest a, which is i's leftmost
  // neighbor (intervals are sorted by a).
  std::size_t t = 0;
  for (int i = 2; i <= cover.n; ++i) {
    while (cover.intervals[t].second < i) ++t;
    og.left[static_cast<std::size_t>(i - 2)] = i - cover.intervals[t].first;
  }
  return og;
}

OrderedGraph reverse(const OrderedGraph& og) {
  if (og.n == 1) return og;
  CliqueCover cover = maximal_cliques(og);
  CliqueCover rev;
  rev.n = og.n;
  rev.intervals.reserve(cover.intervals.size());
  for (auto it = cover.intervals.rbegin(); it != cover.intervals.rend(); ++it)
    rev.intervals.emplace_back(og.n - it->second + 1, og.n - it->first + 1);
  return og_from_cliques(rev);
}

std::vector<std::pair<int, int>> connected_components(const OrderedGraph& og) {
  validate(og);
  std::vector<std::pair<int, int>> spans;
  int start = 1;
  for (int i = 2; i <= og.n; ++i) {
    if (og.L(i) == 0) {
      spans.emplace_back(start, i - 1);
      start = i;
    }
  }
  spans.emplace_back(start, og.n);
  return spans;
}

CanonicalStructure canonicalize(const OrderedGraph& og) {
  CanonicalStructure s;
  s.n = og.n;
  for (const auto& [lo, hi] : connected_components(og)) {
    OrderedGraph comp;
    comp.n = hi - lo + 1;
    comp.left.reserve(static_cast<std::size_t>(comp.n - 1));
    for (int i = lo + 1; i <= hi; ++i) comp.left.push_back(og.L(i));
    OrderedGraph rev = reverse(comp);
    s.components.push_back(std::min(comp.left, rev.left));
  }
  std::sort(s.components.begin(), s.components.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return s;
}

namespace {

std::vector<std::vector<bool>> adjacency(const LabeledGraph& g) {
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(g.n),
                                     std::vector<bool>(static_cast<std::size_t>(g.n), false));
  for (const auto& [i, j] : g.edges) {
    adj[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = true;
    adj[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = true;
  }
  return adj;
}

} // namespace

std::vector<std::vector<int>> all_isomorphisms(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (g1.n != g2.n) return {};
  if (g1.n > 10) throw SizeLimitError("isomorphism search limited to n <= 10");
  std::vector<std::vector<int>> result;
  if (g1.edges.size() != g2.edges.size()) return result;
  auto a1 = adjacency(g1);
  auto a2 = adjacency(g2);
  std::vector<int> perm(static_cast<std::size_t>(g1.n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < g1.n && ok; ++i)
      for (int j = i + 1; j < g1.n && ok; ++j)
        if (a1[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
            a2[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
              [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])])
          ok = false;
    if (ok) {
      std::vector<int> p(perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i) p[i] = perm[i] + 1;
      result.push_back(std::move(p));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

bool isomorphic_bruteforce(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (g1.n != g2.n) return false;
  if (g1.n > 10) throw SizeLimitError("isomorphic_bruteforce limited to n <= 10");
  if (g1.edges.size() != g2.edges.size()) return false;
  auto a1 = adjacency(g1);
  auto a2 = adjacency(g2);
  std::vector<int> perm(static_cast<std::size_t>(g1.n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < g1.n && ok; ++i)
      for (int j = i + 1; j < g1.n && ok; ++j)
        if (a1[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
            a2[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
              [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])])
          ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

void write_cover(std::ostream& os, const CliqueCover& cover) {
  os << cover.k() << '\n';
  for (const auto& [a, b] : cover.intervals) os << a << ' ' << b << '\n';
}

CliqueCover read_cover(std::istream& is) {
  int k = 0;
  if (!(is >> k) || k < 1) throw ParseError("cover file: bad interval count");
  CliqueCover cover;
  cover.intervals.reserve(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) {
    int a = 0, b = 0;
    if (!(is >> a >> b)) throw ParseError("cover file: truncated interval list");
    cover.intervals.emplace_back(a, b);
  }
  cover.n = cover.intervals.back().second;
  check_cover(cover);
  return cover;
}

} // namespace rgg
