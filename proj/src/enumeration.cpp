#include "rgg/enumeration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "rgg/errors.hpp"
#include "rgg/structure.hpp"

namespace rgg {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: n must be >= 0");
  return binomial(2 * n, n) / (n + 1);
}

OrderedGraphEnumerator::OrderedGraphEnumerator(int n, bool connected_only)
    : n_(n), connected_only_(connected_only) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (n > 16) throw SizeLimitError("exhaustive enumeration limited to n <= 16");
  left_.assign(static_cast<std::size_t>(n - 1), connected_only ? 1 : 0);
}

bool OrderedGraphEnumerator::next(OrderedGraph& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else {
    // Lexicographic increment: bump the rightmost position below its cap,
    // reset everything after it to the minimum value.
    const int min_val = connected_only_ ? 1 : 0;
    int pos = n_ - 2; // index into left_, position pos holds L_{pos+2}
    for (; pos >= 0; --pos) {
      int i = pos + 2;
      int cap = std::min(i - 1, (pos > 0 ? left_[static_cast<std::size_t>(pos - 1)] : 0) + 1);
      if (left_[static_cast<std::size_t>(pos)] < cap) break;
    }
    if (pos < 0) {
      done_ = true;
      return false;
    }
    ++left_[static_cast<std::size_t>(pos)];
    for (std::size_t j = static_cast<std::size_t>(pos) + 1; j < left_.size(); ++j)
      left_[j] = min_val;
  }
  out.n = n_;
  out.left = left_;
  return true;
}

BigInt count_with_k_cliques(int n, int k, bool connected_only) {
  if (connected_only) {
    if (n == 1 && k == 1) return 1;
    if (n < 1 || k < 1 || k > n - 1)
      throw std::invalid_argument("count_with_k_cliques: connected needs 1 <= k <= n-1");
    return binomial(n - 1, k) * binomial(n - 1, k - 1) / (n - 1);
  }
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("count_with_k_cliques: needs 1 <= k <= n");
  return binomial(n, k) * binomial(n, k - 1) / n;
}

namespace {

void check_pq_args(int m, int n, int k, bool connected) {
  if (k < 1) throw std::invalid_argument("p/q count: k must be >= 1");
  if (k == 1) {
    if (m < 1 || m > n) throw std::invalid_argument("p/q count: need 1 <= m <= n");
    return;
  }
  int hi = connected ? n - 1 : n;
  if (m < k || m > hi) throw std::invalid_argument("p/q count: m out of range for k");
}

BigInt p_rec(int m, int n, int k, std::map<std::tuple<int, int, int>, BigInt>& memo) {
  if (k == 1) return m == 1 && n >= 1 ? 1 : 0;
  if (m < k || m > n) return 0;
  auto it = memo.find({m, n, k});
  if (it != memo.end()) return it->second;
  BigInt sum = 0;
  for (int u = k - 1; u <= m - 1; ++u)
    for (int v = m - 1; v <= n - 1; ++v) sum += p_rec(u, v, k - 1, memo);
  memo[{m, n, k}] = sum;
  return sum;
}

BigInt q_rec(int m, int n, int k, std::map<std::tuple<int, int, int>, BigInt>& memo) {
  if (k == 1) return m == 1 && n >= 1 ? 1 : 0;
  if (m < k || m > n - 1) return 0;
  auto it = memo.find({m, n, k});
  if (it != memo.end()) return it->second;
  BigInt sum = 0;
  // Connected recurrence: the previous clique must overlap, so v starts at m.
  for (int u = k - 1; u <= m - 1; ++u)
    for (int v = m; v <= n - 1; ++v) sum += q_rec(u, v, k - 1, memo);
  memo[{m, n, k}] = sum;
  return sum;
}

} // namespace

BigInt p_count(int m, int n, int k, CountMethod method) {
  check_pq_args(m, n, k, false);
  if (k == 1) return m == 1 ? 1 : 0;
  if (method == CountMethod::Formula)
    return binomial(n, k - 1) * binomial(m - 2, k - 2) -
           binomial(n - 1, k - 2) * binomial(m - 1, k - 1);
  std::map<std::tuple<int, int, int>, BigInt> memo;
  return p_rec(m, n, k, memo);
}

BigInt q_count(int m, int n, int k, CountMethod method) {
  check_pq_args(m, n, k, true);
  if (k == 1) return m == 1 ? 1 : 0;
  if (method == CountMethod::Formula)
    return binomial(n - 1, k - 1) * binomial(m - 2, k - 2) -
           binomial(n - 2, k - 2) * binomial(m - 1, k - 1);
  std::map<std::tuple<int, int, int>, BigInt> memo;
  return q_rec(m, n, k, memo);
}

namespace {

struct DiffEdge {
  int from, to;     // constraint y_to - y_from <= base + delta_coeff * delta
  double base;
  double delta_coeff;
};

// Bellman-Ford feasibility of the difference-constraint system at a given
// slack delta; fills dist with a satisfying assignment when feasible.
bool feasible_at(const std::vector<DiffEdge>& edges, int num_vars, double delta,
                 std::vector<double>& dist) {
  const int nodes = num_vars + 1; // node 0 is the virtual origin (y_0 = 0)
  dist.assign(static_cast<std::size_t>(nodes), 0.0);
  for (int pass = 0; pass < nodes; ++pass) {
    bool changed = false;
    for (const auto& e : edges) {
      double w = e.base + e.delta_coeff * delta;
      if (dist[static_cast<std::size_t>(e.from)] + w < dist[static_cast<std::size_t>(e.to)]) {
        dist[static_cast<std::size_t>(e.to)] = dist[static_cast<std::size_t>(e.from)] + w;
        changed = true;
      }
    }
    if (!changed) return true;
  }
  return false; // negative cycle: infeasible
}

} // namespace

RealizabilityWitness realizable(const OrderedGraph& og, double r) {
  validate(og);
  if (!(r > 0.0) || r > 1.0) throw std::invalid_argument("realizable: r must be in (0, 1]");
  const int n = og.n;

  std::vector<DiffEdge> edges;
  for (int i = 1; i <= n; ++i) {
    edges.push_back({0, i, 1.0, 0.0});  // y_i <= 1
    edges.push_back({i, 0, 0.0, 0.0});  // y_i >= 0
    if (i >= 2) edges.push_back({i, i - 1, 0.0, 0.0}); // y_{i-1} <= y_i
  }
  for (int i = 2; i <= n; ++i) {
    int l = og.L(i);
    if (l >= 1) edges.push_back({i - l, i, r, 0.0});          // y_i - y_{i-L_i} <= r
    if (i - l - 1 >= 1) edges.push_back({i, i - l - 1, -r, -1.0}); // y_i - y_{i-L_i-1} >= r+delta
  }

  const double kTol = 1e-12;
  std::vector<double> dist;
  RealizabilityWitness w;
  if (!feasible_at(edges, n, kTol * 2, dist)) {
    // Optimum slack is at most ~kTol: report infeasible.
    w.feasible = false;
    return w;
  }
  // Binary search the largest feasible slack (concave piecewise-linear in delta).
  double lo = kTol * 2, hi = 1.0;
  if (feasible_at(edges, n, hi, dist)) {
    lo = hi;
  } else {
    for (int it = 0; it < 60; ++it) {
      double mid = 0.5 * (lo + hi);
      if (feasible_at(edges, n, mid, dist)) lo = mid; else hi = mid;
    }
  }
  feasible_at(edges, n, lo, dist);

  std::vector<double> y(dist.begin() + 1, dist.end());
  // Shift so the minimum is 0 (distances are <= 0 relative to the origin).
  double shift = *std::min_element(y.begin(), y.end());
  for (auto& v : y) v -= shift;

  double slack = 2.0;
  for (int i = 2; i <= n; ++i) {
    int l = og.L(i);
    if (i - l - 1 >= 1)
      slack = std::min(slack, y[static_cast<std::size_t>(i - 1)] -
                                  y[static_cast<std::size_t>(i - l - 2)] - r);
  }
  w.feasible = true;
  w.locations = std::move(y);
  w.slack = slack == 2.0 ? lo : slack;
  return w;
}

StructureCountResult exact_structure_count(int n, double r) {
  if (n > 12) throw SizeLimitError("exact_structure_count limited to n <= 12");
  StructureCountResult result{0, 0};
  std::set<std::string> structures;
  for_each_ordered_graph(n, false, [&](const OrderedGraph& og) {
    if (realizable(og, r).feasible) {
      result.realizable_ordered_graphs += 1;
      structures.insert(canonicalize(og).key());
    }
  });
  result.distinct_structures = static_cast<long>(structures.size());
  return result;
}

} // namespace rgg
