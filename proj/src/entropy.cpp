#include "rgg/entropy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rgg/errors.hpp"
#include "rgg/rng.hpp"
#include "rgg/structure.hpp"

namespace rgg {

namespace {

constexpr double kLn2 = 0.6931471805599453;

double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

double entropy_bits(const std::vector<double>& probs) {
  double h = 0.0;
  for (double p : probs) h -= xlog2x(p);
  return h;
}

template <typename F>
double integrate01(F&& f, double tol = 1e-12) {
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      std::forward<F>(f), 0.0, 1.0, 15, tol);
}

double log_binom(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double binom_pmf(int n, int a, double r) {
  if (a < 0 || a > n) return 0.0;
  return std::exp(log_binom(n, a) + a * std::log(r) + (n - a) * std::log1p(-r));
}

void check_half_range(double r) {
  if (!(r > 0.0) || r >= 0.5)
    throw UnsupportedRangeError("closed-form distributions require r in (0, 1/2)");
}

// Joint probability Pr(L_i = a, L_{i+1} = b) for a <= i-2; independent of i.
double joint_entry(int n, double r, int a, int b) {
  if (b == 0) // C(n,a) r^a (1-2r)^{n-a}
    return std::exp(log_binom(n, a) + a * std::log(r) + (n - a) * std::log1p(-2.0 * r));
  double lpref = std::lgamma(n + 1.0) - std::lgamma(a - b + 2.0) - std::lgamma(static_cast<double>(b)) -
                 std::lgamma(n - a + 0.0) + (a + 1.0) * std::log(r);
  double pref = std::exp(lpref);
  return pref * integrate01([=](double t) {
    return std::pow(t, a - b + 1) * std::pow(1.0 - t, b - 1) *
           std::pow(1.0 - r - r * t, n - a - 1);
  });
}

} // namespace

double Pmf::at(int value) const {
  for (std::size_t i = 0; i < support.size(); ++i)
    if (support[i] == value) return prob[i];
  return 0.0;
}

double Pmf::total() const { return std::accumulate(prob.begin(), prob.end(), 0.0); }

Pmf pmf_L(int n, double r, int i) {
  check_half_range(r);
  if (i < 2 || i > n) throw std::invalid_argument("pmf_L: need 2 <= i <= n");
  Pmf pmf;
  double bulk = 0.0;
  for (int a = 0; a <= i - 2; ++a) {
    double p = binom_pmf(n, a, r);
    pmf.support.push_back(a);
    pmf.prob.push_back(p);
    bulk += p;
  }
  pmf.support.push_back(i - 1);
  pmf.prob.push_back(std::max(0.0, 1.0 - bulk));
  return pmf;
}

JointPmf joint_pmf_L(int n, double r, int i) {
  check_half_range(r);
  if (i < 2 || i > n - 1) throw std::invalid_argument("joint_pmf_L: need 2 <= i <= n-1");
  JointPmf joint;
  joint.a_max = i - 2;
  joint.table.resize(static_cast<std::size_t>(i - 1));
  for (int a = 0; a <= i - 2; ++a) {
    auto& row = joint.table[static_cast<std::size_t>(a)];
    row.resize(static_cast<std::size_t>(a) + 2);
    for (int b = 0; b <= a + 1; ++b) row[static_cast<std::size_t>(b)] = joint_entry(n, r, a, b);
  }
  return joint;
}

Pmf delta_pmf(int n, double r, int a) {
  check_half_range(r);
  if (a < 0 || a > n - 3) throw std::invalid_argument("delta_pmf: need 0 <= a <= n-3");
  Pmf pmf;
  const double ratio = r / (1.0 - r);
  for (int k = 0; k <= a; ++k) {
    double pref = (n - a) * ratio * std::exp(log_binom(a, k));
    double val = pref * integrate01([=](double t) {
      return std::pow(t, k) * std::pow(1.0 - t, a - k) *
             std::pow(1.0 - ratio * t, n - a - 1);
    });
    pmf.support.push_back(k);
    pmf.prob.push_back(val);
  }
  pmf.support.push_back(a + 1);
  pmf.prob.push_back(std::pow(1.0 - ratio, n - a));
  return pmf;
}

double kummer_M(int alpha, int beta, double z) {
  if (alpha < 1 || beta <= alpha) throw std::invalid_argument("kummer_M: need beta > alpha >= 1");
  double lpref = std::lgamma(static_cast<double>(beta)) - std::lgamma(static_cast<double>(alpha)) -
                 std::lgamma(static_cast<double>(beta - alpha));
  return integrate01([=](double t) {
    double lt = (alpha - 1) * (t > 0.0 ? std::log(t) : 0.0);
    if (alpha > 1 && t <= 0.0) return 0.0;
    double l1t = (beta - alpha - 1) * (t < 1.0 ? std::log1p(-t) : 0.0);
    if (beta - alpha > 1 && t >= 1.0) return 0.0;
    return std::exp(lpref + lt + l1t + z * t);
  });
}

namespace {

// Inner pmf value of the asymptotic left-difference law:
// p_k = x * C(a,k) * int_0^1 t^k (1-t)^{a-k} e^{-x t} dt, for k = 0..a.
double h_upper_term(double x, int a, int k) {
  double lc = std::log(x) + log_binom(a, k);
  return integrate01([=](double t) {
    if ((k > 0 && t <= 0.0) || (a - k > 0 && t >= 1.0)) return 0.0;
    double lt = k > 0 ? k * std::log(t) : 0.0;
    double l1t = a - k > 0 ? (a - k) * std::log1p(-t) : 0.0;
    return std::exp(lc + lt + l1t - x * t);
  });
}

} // namespace

double h_upper(double x) {
  if (x < 0.0) throw std::invalid_argument("h_upper: x must be >= 0");
  if (x == 0.0) return 0.0;
  double result = x * std::exp(-x) / kLn2;
  // Poisson-weighted outer sum, truncated when the tail mass drops below 1e-12.
  double log_w = -x; // log Poisson(a=0)
  double cum = 0.0;
  for (int a = 0;; ++a) {
    double w = std::exp(log_w);
    double inner = 0.0;
    for (int k = 0; k <= a; ++k) inner += xlog2x(h_upper_term(x, a, k));
    result -= w * inner;
    cum += w;
    log_w += std::log(x) - std::log(a + 1.0);
    if (1.0 - cum < 1e-12 && a >= static_cast<int>(x)) break;
    if (a > 4000) break;
  }
  return result;
}

double h_lower(double x) {
  if (x < 0.0) throw std::invalid_argument("h_lower: x must be >= 0");
  if (x == 0.0) return 0.0;
  double e = -std::expm1(-x); // 1 - e^{-x}
  return e / kLn2 - e * e * std::log2(e);
}

double chain_upper_bound(int n, double r) {
  check_half_range(r);
  if (n < 3) throw std::invalid_argument("chain_upper_bound: need n >= 3");

  // The joint entries for a <= i-2 do not depend on i: cache one table for
  // the largest i and reuse. Rows for a = i-1 (node i linked to node 1) are
  // completed from the marginals.
  JointPmf joint = joint_pmf_L(n, r, n - 1);

  auto marginal = [&](int a) { return binom_pmf(n, a, r); };
  auto tail = [&](int i) { // Pr(L_i = i-1)
    double bulk = 0.0;
    for (int a = 0; a <= i - 2; ++a) bulk += marginal(a);
    return std::max(0.0, 1.0 - bulk);
  };

  double p_edge = -std::expm1(n * std::log1p(-r)); // Pr(L_2 = 1) = 1-(1-r)^n
  double total = entropy_bits({1.0 - p_edge, p_edge});

  for (int i = 2; i <= n - 1; ++i) {
    double h = 0.0;
    for (int a = 0; a <= i - 2; ++a) {
      double pa = marginal(a);
      if (pa <= 0.0) continue;
      std::vector<double> row(static_cast<std::size_t>(a) + 2);
      for (int b = 0; b <= a + 1; ++b) row[static_cast<std::size_t>(b)] = joint.at(a, b) / pa;
      h += pa * entropy_bits(row);
    }
    // a = i-1: Pr(L_i=i-1, L_{i+1}=b) = Pr(L_{i+1}=b) - sum_{a<=i-2} joint,
    // and b = i occurs only together with L_i = i-1.
    double pa = tail(i);
    if (pa > 0.0) {
      std::vector<double> row(static_cast<std::size_t>(i) + 1, 0.0);
      for (int b = 0; b <= i - 1; ++b) {
        double m = marginal(b);
        double sub = 0.0;
        for (int a = std::max(0, b - 1); a <= i - 2; ++a) sub += joint.at(a, b);
        row[static_cast<std::size_t>(b)] = std::max(0.0, m - sub) / pa;
      }
      row[static_cast<std::size_t>(i)] = tail(i + 1) / pa;
      h += pa * entropy_bits(row);
    }
    total += h;
  }
  return total;
}

double asymptotic_upper(int n, const RegimeSpec& regime) {
  switch (regime.kind) {
    case RegimeKind::LinearReciprocal:
      return h_upper(regime.coefficient);
    case RegimeKind::CriticalLog:
      return 2.0;
    case RegimeKind::ConstantRange:
      return 2.0 * (1.0 - regime.coefficient);
  }
  return 0.0;
}

double theorem1_bound(int n) {
  if (n < 1) throw std::invalid_argument("theorem1_bound: n must be >= 1");
  const double pi = 3.14159265358979323846;
  return 2.0 * n - 1.5 * std::log2(static_cast<double>(n)) - 0.5 * std::log2(pi);
}

double gap_tail(double u, double x, int n, int i) {
  if (i >= n) throw std::invalid_argument("gap_tail: need i < n");
  if (u < 0.0 || u > 1.0 - x) throw std::invalid_argument("gap_tail: need 0 <= u <= 1-x");
  return std::pow(1.0 - u / (1.0 - x), n - i);
}

double location_density(double x, int n, double r, int i, int a) {
  check_half_range(r);
  if (a > i - 2 || a < 0) throw std::invalid_argument("location_density: need 0 <= a <= i-2");
  if (!(x > r) || !(x < 1.0)) throw std::invalid_argument("location_density: need x in (r, 1)");
  double lval = std::lgamma(n - a + 1.0) - std::lgamma(i - a + 0.0) - std::lgamma(n - i + 1.0) +
                (i - a - 1) * std::log(x - r) + (n - i) * std::log1p(-x) -
                (n - a) * std::log1p(-r);
  return std::exp(lval);
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::string& s) const { return std::hash<std::string>{}(s); }
};

using CountMap = std::unordered_map<std::string, long long, KeyHash>;

struct ShardResult {
  CountMap counts;
  long long accepted = 0;
};

std::string ordered_key(const OrderedGraph& og) {
  std::string key(og.left.size(), '\0');
  for (std::size_t i = 0; i < og.left.size(); ++i) key[i] = static_cast<char>(og.left[i]);
  return key;
}

double estimate_bits(const std::vector<long long>& counts, long long total, Estimator est) {
  double h = std::log2(static_cast<double>(total));
  double acc = 0.0;
  for (long long c : counts)
    if (c > 0) acc += static_cast<double>(c) * std::log2(static_cast<double>(c));
  h -= acc / static_cast<double>(total);
  if (est == Estimator::MillerMadow) {
    long long k = std::count_if(counts.begin(), counts.end(), [](long long c) { return c > 0; });
    h += static_cast<double>(k - 1) / (2.0 * static_cast<double>(total) * kLn2);
  }
  return h;
}

} // namespace

EntropyEstimate mc_entropy(int n, double r, EntropyTarget target, bool connected_conditioned,
                           long long samples, std::uint64_t seed, Estimator estimator,
                           int threads) {
  if (n < 1) throw std::invalid_argument("mc_entropy: n must be >= 1");
  if (!(r > 0.0) || r > 1.0) throw std::invalid_argument("mc_entropy: r must be in (0, 1]");
  if (samples < 1) throw std::invalid_argument("mc_entropy: samples must be >= 1");
  if (threads < 1) threads = 1;

  const int shards = static_cast<int>(std::min<long long>(64, samples));
  std::vector<ShardResult> shard_results(static_cast<std::size_t>(shards));
  std::atomic<int> next_shard{0};

  auto work = [&] {
    std::vector<double> buf(static_cast<std::size_t>(n));
    for (;;) {
      int s = next_shard.fetch_add(1);
      if (s >= shards) break;
      long long lo = samples * s / shards;
      long long hi = samples * (s + 1) / shards;
      SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(s)));
      ShardResult res;
      OrderedGraph og;
      og.n = n;
      og.left.resize(static_cast<std::size_t>(n - 1));
      for (long long t = lo; t < hi; ++t) {
        for (auto& x : buf) x = rng.uniform01();
        std::sort(buf.begin(), buf.end());
        int left_ptr = 0;
        bool connected = true;
        for (int i = 1; i < n; ++i) {
          while (buf[static_cast<std::size_t>(i)] - buf[static_cast<std::size_t>(left_ptr)] > r)
            ++left_ptr;
          int l = i - left_ptr;
          og.left[static_cast<std::size_t>(i - 1)] = l;
          if (l == 0) connected = false;
        }
        if (connected_conditioned && !connected) continue;
        ++res.accepted;
        ++res.counts[target == EntropyTarget::OrderedGraph ? ordered_key(og)
                                                           : canonicalize(og).key()];
      }
      shard_results[static_cast<std::size_t>(s)] = std::move(res);
    }
  };

  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  CountMap merged;
  long long accepted = 0;
  for (auto& res : shard_results) {
    accepted += res.accepted;
    for (auto& [key, c] : res.counts) merged[key] += c;
  }
  if (accepted == 0)
    throw InsufficientDataError("mc_entropy: no samples accepted under connectedness condition");

  std::vector<long long> counts;
  counts.reserve(merged.size());
  for (auto& [key, c] : merged) counts.push_back(c);
  std::sort(counts.begin(), counts.end()); // deterministic order for bootstrap

  EntropyEstimate est;
  est.samples = samples;
  est.estimator = estimator;
  est.target = target;
  est.connected_conditioned = connected_conditioned;
  est.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(samples);
  est.distinct_keys = static_cast<long long>(counts.size());
  est.bits = estimate_bits(counts, accepted, estimator);

  // Bootstrap standard error: 50 multinomial resamples of the key counts.
  const int kResamples = 50;
  SplitMix64 boot_rng(mix_seed(seed, 0xB007B007ULL));
  std::vector<double> boot(kResamples);
  std::vector<long long> resampled(counts.size());
  for (int b = 0; b < kResamples; ++b) {
    long long remaining = accepted;
    double mass = 1.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      double p = static_cast<double>(counts[i]) / static_cast<double>(accepted);
      long long draw = 0;
      if (i + 1 == counts.size()) {
        draw = remaining;
      } else if (remaining > 0 && mass > 0.0) {
        std::binomial_distribution<long long> bin(remaining, std::min(1.0, p / mass));
        draw = bin(boot_rng);
      }
      resampled[i] = draw;
      remaining -= draw;
      mass -= p;
    }
    boot[static_cast<std::size_t>(b)] = estimate_bits(resampled, accepted, estimator);
  }
  double mean = std::accumulate(boot.begin(), boot.end(), 0.0) / kResamples;
  double var = 0.0;
  for (double v : boot) var += (v - mean) * (v - mean);
  est.std_error = std::sqrt(var / (kResamples - 1));
  return est;
}

BoundCurve bound_curve(const std::vector<double>& x_grid) {
  BoundCurve curve;
  curve.x = x_grid;
  curve.upper.reserve(x_grid.size());
  curve.lower.reserve(x_grid.size());
  for (double x : x_grid) {
    if (x < 0.0) throw std::invalid_argument("bound_curve: grid values must be >= 0");
    curve.upper.push_back(h_upper(x));
    curve.lower.push_back(h_lower(x));
  }
  return curve;
}

} // namespace rgg
