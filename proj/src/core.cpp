#include "rgg/core.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "rgg/rng.hpp"

namespace rgg {

double RegimeSpec::range_at(int n) const {
  switch (kind) {
    case RegimeKind::LinearReciprocal:
      return coefficient / n;
    case RegimeKind::CriticalLog:
      return coefficient * std::log(static_cast<double>(n)) / n;
    case RegimeKind::ConstantRange:
      return coefficient;
  }
  return 0.0;
}

void validate(const OrderedGraph& og) {
  if (og.n < 1) throw std::invalid_argument("ordered graph needs n >= 1");
  if (og.left.size() != static_cast<std::size_t>(og.n - 1))
    throw std::invalid_argument("L-vector length must be n-1");
  for (int i = 2; i <= og.n; ++i) {
    int l = og.L(i);
    if (l < 0 || l > i - 1)
      throw std::invalid_argument("L_i out of range [0, i-1]");
    if (i > 2 && l > og.L(i - 1) + 1)
      throw std::invalid_argument("L_{i+1} exceeds L_i + 1");
  }
}

PointSample sample_points(int n, double r, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_points: n must be >= 1");
  if (!(r > 0.0) || r > 1.0)
    throw std::invalid_argument("sample_points: r must be in (0, 1]");

  SplitMix64 rng(seed);
  std::vector<std::pair<double, int>> pts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = {rng.uniform01(), i + 1};
  // Stable sort keeps duplicate locations ordered by original label.
  std::stable_sort(pts.begin(), pts.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  PointSample s;
  s.n = n;
  s.r = r;
  s.locations.reserve(static_cast<std::size_t>(n));
  s.original_order.reserve(static_cast<std::size_t>(n));
  for (const auto& [x, label] : pts) {
    s.locations.push_back(x);
    s.original_order.push_back(label);
  }
  return s;
}

LabeledGraph build_labeled_graph(const PointSample& sample) {
  LabeledGraph g;
  g.n = sample.n;
  // Sweep over sorted locations; pairs within r form contiguous runs.
  for (int i = 0; i < sample.n; ++i) {
    for (int j = i + 1; j < sample.n; ++j) {
      if (sample.locations[static_cast<std::size_t>(j)] -
              sample.locations[static_cast<std::size_t>(i)] > sample.r)
        break;
      int u = sample.original_order[static_cast<std::size_t>(i)];
      int v = sample.original_order[static_cast<std::size_t>(j)];
      if (u > v) std::swap(u, v);
      g.edges.emplace_back(u, v);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

OrderedGraph build_ordered_graph(const PointSample& sample) {
  OrderedGraph og;
  og.n = sample.n;
  og.left.resize(sample.n > 0 ? static_cast<std::size_t>(sample.n - 1) : 0);
  int lo = 0; // leftmost index within range of point i (two-pointer sweep)
  for (int i = 1; i < sample.n; ++i) {
    while (sample.locations[static_cast<std::size_t>(i)] -
               sample.locations[static_cast<std::size_t>(lo)] > sample.r)
      ++lo;
    og.left[static_cast<std::size_t>(i - 1)] = i - lo;
  }
  return og;
}

namespace {

// A 1D sample yields a connected graph iff every adjacent sorted gap is <= r,
// i.e. L_i >= 1 for all i.
bool sample_connected(int n, double r, SplitMix64& rng, std::vector<double>& buf) {
  buf.resize(static_cast<std::size_t>(n));
  for (auto& x : buf) x = rng.uniform01();
  std::sort(buf.begin(), buf.end());
  for (int i = 1; i < n; ++i)
    if (buf[static_cast<std::size_t>(i)] - buf[static_cast<std::size_t>(i - 1)] > r)
      return false;
  return true;
}

} // namespace

ConnectivityEstimate connectivity_probability(int n, double r, long long trials,
                                              std::uint64_t seed, int threads) {
  if (n < 1) throw std::invalid_argument("connectivity_probability: n must be >= 1");
  if (trials < 1) throw std::invalid_argument("connectivity_probability: trials must be >= 1");
  if (threads < 1) threads = 1;

  // Fixed shard count: the result does not depend on the worker count.
  const int shards = static_cast<int>(std::min<long long>(64, trials));
  std::vector<long long> shard_hits(static_cast<std::size_t>(shards), 0);
  std::atomic<int> next_shard{0};

  auto work = [&] {
    std::vector<double> buf;
    for (;;) {
      int k = next_shard.fetch_add(1);
      if (k >= shards) break;
      long long lo = trials * k / shards;
      long long hi = trials * (k + 1) / shards;
      SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(k)));
      long long hits = 0;
      for (long long t = lo; t < hi; ++t)
        if (sample_connected(n, r, rng, buf)) ++hits;
      shard_hits[static_cast<std::size_t>(k)] = hits;
    }
  };

  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  long long hits = std::accumulate(shard_hits.begin(), shard_hits.end(), 0LL);
  ConnectivityEstimate est;
  est.trials = trials;
  est.probability = static_cast<double>(hits) / static_cast<double>(trials);
  est.std_error =
      std::sqrt(est.probability * (1.0 - est.probability) / static_cast<double>(trials));
  return est;
}

double critical_range(int n) {
  if (n < 2) throw std::invalid_argument("critical_range: n must be >= 2");
  return std::log(static_cast<double>(n)) / n;
}

std::vector<std::pair<int, int>> edges_of(const OrderedGraph& og) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 2; i <= og.n; ++i)
    for (int j = i - og.L(i); j < i; ++j) edges.emplace_back(j, i);
  std::sort(edges.begin(), edges.end());
  return edges;
}

void write_points_csv(std::ostream& os, const PointSample& sample) {
  os << "index,location\n";
  for (int i = 0; i < sample.n; ++i) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", sample.locations[static_cast<std::size_t>(i)]);
    os << (i + 1) << ',' << buf << '\n';
  }
}

void write_edge_list(std::ostream& os, const LabeledGraph& g) {
  for (const auto& [i, j] : g.edges) os << i << ' ' << j << '\n';
}

} // namespace rgg
