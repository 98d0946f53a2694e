#include "rgg/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "rgg/codec.hpp"
#include "rgg/core.hpp"
#include "rgg/entropy.hpp"
#include "rgg/enumeration.hpp"
#include "rgg/rng.hpp"
#include "rgg/structure.hpp"

namespace rgg::selftest {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& msg) {
    if (!cond) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << msg;
    }
  }
};

// Complete isomorphism invariant for small graphs: the minimum, over all
// vertex permutations, of the upper-triangular adjacency bitmask.
std::uint64_t min_perm_adjacency_key(const OrderedGraph& og) {
  const int n = og.n;
  auto edges = edges_of(og);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  auto pair_bit = [n](int i, int j) { // i < j, 0-based
    return static_cast<std::uint64_t>(1) << (i * n + j);
  };
  std::uint64_t best = ~0ULL;
  do {
    std::uint64_t mask = 0;
    for (const auto& [u, v] : edges) {
      int pu = perm[static_cast<std::size_t>(u - 1)];
      int pv = perm[static_cast<std::size_t>(v - 1)];
      if (pu > pv) std::swap(pu, pv);
      mask |= pair_bit(pu, pv);
    }
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

CriterionResult criterion1() {
  Check c;
  for (int n = 1; n <= 14; ++n) {
    long long count = 0;
    for_each_ordered_graph(n, false, [&](const OrderedGraph&) { ++count; });
    c.expect(BigInt(count) == catalan(n),
             "total count mismatch at n=" + std::to_string(n));
    if (n >= 2) {
      long long cc = 0;
      for_each_ordered_graph(n, true, [&](const OrderedGraph&) { ++cc; });
      c.expect(BigInt(cc) == catalan(n - 1),
               "connected count mismatch at n=" + std::to_string(n));
    }
  }
  return {1, "catalan enumeration n=1..14", c.ok, c.detail.str()};
}

CriterionResult criterion2() {
  Check c;
  for (int n = 1; n <= 12; ++n) {
    std::map<int, long long> by_k;
    for_each_ordered_graph(n, false, [&](const OrderedGraph& og) {
      ++by_k[maximal_cliques(og).k()];
    });
    for (int k = 1; k <= n; ++k) {
      long long seen = by_k.count(k) ? by_k[k] : 0;
      c.expect(BigInt(seen) == count_with_k_cliques(n, k, false),
               "narayana mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return {2, "narayana decomposition n<=12", c.ok, c.detail.str()};
}

CriterionResult criterion3() {
  Check c;
  for (int n = 1; n <= 10; ++n) {
    // Enumeration tallies of the last maximal clique [m:n] per k.
    std::map<std::pair<int, int>, long long> p_seen, q_seen;
    for_each_ordered_graph(n, false, [&](const OrderedGraph& og) {
      auto cover = maximal_cliques(og);
      ++p_seen[{cover.intervals.back().first, cover.k()}];
    });
    for_each_ordered_graph(n, true, [&](const OrderedGraph& og) {
      auto cover = maximal_cliques(og);
      ++q_seen[{cover.intervals.back().first, cover.k()}];
    });
    for (int k = 1; k <= n; ++k) {
      int lo = k == 1 ? 1 : k;
      int hi = k == 1 ? 1 : n;
      for (int m = lo; m <= hi; ++m) {
        BigInt f = p_count(m, n, k, CountMethod::Formula);
        BigInt rec = p_count(m, n, k, CountMethod::Recurrence);
        long long seen = p_seen.count({m, k}) ? p_seen[{m, k}] : 0;
        c.expect(f == rec && f == BigInt(seen),
                 "p mismatch at (m,n,k)=(" + std::to_string(m) + "," + std::to_string(n) +
                     "," + std::to_string(k) + ")");
      }
      int qhi = k == 1 ? 1 : n - 1;
      for (int m = lo; m <= qhi; ++m) {
        BigInt f = q_count(m, n, k, CountMethod::Formula);
        BigInt rec = q_count(m, n, k, CountMethod::Recurrence);
        long long seen = q_seen.count({m, k}) ? q_seen[{m, k}] : 0;
        c.expect(f == rec && f == BigInt(seen),
                 "q mismatch at (m,n,k)=(" + std::to_string(m) + "," + std::to_string(n) +
                     "," + std::to_string(k) + ")");
      }
    }
  }
  return {3, "p/q cross-validation n<=10", c.ok, c.detail.str()};
}

CriterionResult criterion4() {
  Check c;
  for (int n = 1; n <= 12; ++n) {
    for_each_ordered_graph(n, false, [&](const OrderedGraph& og) {
      if (!c.ok) return;
      StructureCode code = encode(og);
      c.expect(decode(code) == og, "codec round trip failed at n=" + std::to_string(n));
      auto bytes = serialize(code);
      c.expect(bytes.size() == 9 + 2 * static_cast<std::size_t>((n + 7) / 8),
               "payload size mismatch at n=" + std::to_string(n));
    });
  }
  // Golden pair.
  CliqueCover fig4;
  fig4.n = 10;
  fig4.intervals = {{1, 4}, {2, 5}, {4, 6}, {5, 7}, {8, 10}};
  StructureCode code = encode(og_from_cliques(fig4));
  std::string text = to_text(code);
  c.expect(text == "1101100100\n0001111001\n", "golden code pair mismatch: " + text);
  return {4, "codec round trip and golden pair", c.ok, c.detail.str()};
}

CriterionResult criterion5() {
  Check c;
  // Canonical classes coincide with brute-force isomorphism classes, n <= 7.
  for (int n = 1; n <= 7 && c.ok; ++n) {
    std::map<std::string, std::uint64_t> canon_to_brute;
    std::map<std::uint64_t, std::string> brute_to_canon;
    for_each_ordered_graph(n, false, [&](const OrderedGraph& og) {
      std::string ck = canonicalize(og).key();
      std::uint64_t bk = min_perm_adjacency_key(og);
      auto it = canon_to_brute.find(ck);
      if (it == canon_to_brute.end()) {
        canon_to_brute[ck] = bk;
      } else if (it->second != bk) {
        c.expect(false, "canonical class splits isomorphism class at n=" + std::to_string(n));
      }
      auto jt = brute_to_canon.find(bk);
      if (jt == brute_to_canon.end()) {
        brute_to_canon[bk] = ck;
      } else if (jt->second != ck) {
        c.expect(false, "isomorphism class splits canonical class at n=" + std::to_string(n));
      }
    });
    c.expect(canon_to_brute.size() == brute_to_canon.size(),
             "class count mismatch at n=" + std::to_string(n));
  }
  // Identity/backward-identity property for connected pairs, n <= 8.
  for (int n = 2; n <= 8 && c.ok; ++n) {
    std::vector<OrderedGraph> graphs;
    for_each_ordered_graph(n, true, [&](const OrderedGraph& og) { graphs.push_back(og); });
    std::map<std::uint64_t, std::vector<std::size_t>> by_class;
    for (std::size_t g = 0; g < graphs.size(); ++g)
      by_class[min_perm_adjacency_key(graphs[g])].push_back(g);
    auto labeled = [&](const OrderedGraph& og) {
      LabeledGraph lg;
      lg.n = og.n;
      lg.edges = edges_of(og);
      return lg;
    };
    std::vector<int> identity(static_cast<std::size_t>(n)), backward(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 1);
    for (int i = 0; i < n; ++i) backward[static_cast<std::size_t>(i)] = n - i;
    for (const auto& [key, members] : by_class) {
      c.expect(members.size() <= 2, "connected class larger than 2 at n=" + std::to_string(n));
      for (std::size_t gi : members) {
        for (std::size_t gj : members) {
          auto isos = all_isomorphisms(labeled(graphs[gi]), labeled(graphs[gj]));
          c.expect(!isos.empty(), "isomorphism missing within class at n=" + std::to_string(n));
          // Isomorphic connected ordered graphs are identical up to
          // left-right reversal, with the corresponding witness present.
          bool same = graphs[gi] == graphs[gj];
          bool rev = reverse(graphs[gi]) == graphs[gj];
          c.expect(same || rev, "class members not reversal-related at n=" + std::to_string(n));
          auto has = [&](const std::vector<int>& p) {
            return std::find(isos.begin(), isos.end(), p) != isos.end();
          };
          if (same)
            c.expect(has(identity), "identity witness missing at n=" + std::to_string(n));
          if (rev)
            c.expect(has(backward), "backward witness missing at n=" + std::to_string(n));
        }
      }
    }
  }
  return {5, "canonicalization matches isomorphism oracle", c.ok, c.detail.str()};
}

CriterionResult criterion6() {
  Check c;
  const int n = 20, i = 10;
  const double r = 0.1;
  const long long samples = 1000000;
  // Empirical distribution of L_i.
  std::vector<long long> counts(static_cast<std::size_t>(i), 0);
  SplitMix64 rng(mix_seed(20260823ULL, 6));
  std::vector<double> buf(static_cast<std::size_t>(n));
  for (long long t = 0; t < samples; ++t) {
    for (auto& x : buf) x = rng.uniform01();
    std::sort(buf.begin(), buf.end());
    int lo = 0;
    for (int v = 1; v < i; ++v)
      while (buf[static_cast<std::size_t>(v)] - buf[static_cast<std::size_t>(lo)] > r) ++lo;
    ++counts[static_cast<std::size_t>(i - 1 - lo)];
  }
  Pmf pmf = pmf_L(n, r, i);
  double tv = 0.0;
  for (int a = 0; a <= i - 1; ++a)
    tv += std::abs(static_cast<double>(counts[static_cast<std::size_t>(a)]) / samples -
                   pmf.prob[static_cast<std::size_t>(a)]);
  tv *= 0.5;
  c.expect(tv < 0.01, "TV distance " + std::to_string(tv) + " >= 0.01");

  // Marginal consistency of the joint pmf.
  JointPmf joint = joint_pmf_L(n, r, i);
  for (int a = 0; a <= joint.a_max; ++a) {
    double sum = 0.0;
    for (int b = 0; b <= a + 1; ++b) sum += joint.at(a, b);
    c.expect(std::abs(sum - pmf.prob[static_cast<std::size_t>(a)]) < 1e-8,
             "marginal mismatch at a=" + std::to_string(a));
  }

  // Closed-form spot value Pr(L_i=1, L_{i+1}=0) at n=5, r=0.2.
  JointPmf spot = joint_pmf_L(5, 0.2, 3);
  c.expect(std::abs(spot.at(1, 0) - 0.1296) < 1e-10,
           "spot value " + std::to_string(spot.at(1, 0)) + " != 0.1296");
  return {6, "distribution checks (n=20, r=0.1, i=10)", c.ok, c.detail.str()};
}

CriterionResult criterion7(int threads) {
  Check c;
  const int n = 5;
  const double r = 1.0 / 3.0;
  const long long samples = 10000000;
  const std::uint64_t seed = 424242;
  auto hS = mc_entropy(n, r, EntropyTarget::Structure, false, samples, seed,
                       Estimator::PlugIn, threads);
  auto hG = mc_entropy(n, r, EntropyTarget::OrderedGraph, false, samples, seed + 1,
                       Estimator::PlugIn, threads);
  auto hSc = mc_entropy(n, r, EntropyTarget::Structure, true, samples, seed + 2,
                        Estimator::PlugIn, threads);
  auto hGc = mc_entropy(n, r, EntropyTarget::OrderedGraph, true, samples, seed + 3,
                        Estimator::PlugIn, threads);
  auto within = [](double lhs, double rhs, double se) { return lhs <= rhs + 3.0 * se; };
  auto se2 = [](const EntropyEstimate& a, const EntropyEstimate& b) {
    return std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error);
  };
  c.expect(within(hS.bits, hG.bits, se2(hS, hG)), "H(S) > H(G)");
  c.expect(within(hSc.bits, hGc.bits, se2(hSc, hGc)), "H(Sc) > H(Gc)");
  c.expect(within(hGc.bits - 1.0, hSc.bits, se2(hGc, hSc)), "H(Gc)-1 > H(Sc)");
  c.expect(hS.bits <= theorem1_bound(5), "H(S) exceeds universal bound");
  c.expect(hS.bits <= std::log2(42.0), "H(S) exceeds log2 c_5");
  return {7, "entropy sandwich (n=5, r=1/3, 1e7 samples)", c.ok, c.detail.str()};
}

CriterionResult criterion8() {
  Check c;
  c.expect(h_lower(0.0) == 0.0, "h_L(0) != 0");
  c.expect(h_upper(0.0) == 0.0, "h_U(0) != 0");
  c.expect(std::abs(h_lower(50.0) - 1.0 / std::log(2.0)) < 1e-6, "h_L(50) != 1/ln 2");
  const double grid[] = {0.5, 1, 2, 5, 10, 20};
  double prev = -1.0;
  for (double x : grid) {
    double v = h_upper(x);
    c.expect(v > prev, "h_U not strictly increasing at x=" + std::to_string(x));
    prev = v;
  }
  c.expect(h_upper(30.0) > 1.8, "h_U(30) <= 1.8");
  for (double x = 0.0; x <= 50.0; x += 1.0) {
    c.expect(h_upper(x) >= h_lower(x) - 1e-9, "h_U < h_L at x=" + std::to_string(x));
    c.expect(h_upper(x) <= 2.0 + 1e-9, "h_U > 2 at x=" + std::to_string(x));
  }
  return {8, "bound functions shape and plateaus", c.ok, c.detail.str()};
}

CriterionResult criterion9(int threads) {
  Check c;
  double finite = chain_upper_bound(50, 2.0 / 50.0) / 50.0;
  double asym = h_upper(2.0);
  c.expect(std::abs(finite - asym) < 0.1,
           "chain bound per node " + std::to_string(finite) + " vs h_U(2) " + std::to_string(asym));
  for (auto [n, r] : {std::pair<int, double>{8, 0.1}, {10, 0.2}}) {
    auto est = mc_entropy(n, r, EntropyTarget::OrderedGraph, false, 1000000, 777,
                          Estimator::PlugIn, threads);
    double bound = chain_upper_bound(n, r);
    c.expect(bound >= est.bits - 3.0 * est.std_error,
             "chain bound below MC estimate at n=" + std::to_string(n));
  }
  return {9, "finite-n bound coherence", c.ok, c.detail.str()};
}

CriterionResult criterion10(int threads) {
  Check c;
  const int n = 10000;
  const long long trials = 10000;
  double ln_n = std::log(static_cast<double>(n));
  double r_hi = (ln_n + std::log(ln_n)) / n;
  double r_lo = (ln_n - std::log(ln_n)) / n;
  auto hi = connectivity_probability(n, r_hi, trials, 9001, threads);
  auto lo = connectivity_probability(n, r_lo, trials, 9002, threads);
  c.expect(hi.probability - lo.probability >= 0.2,
           "gap " + std::to_string(hi.probability - lo.probability) + " < 0.2");
  return {10, "connectivity zero-one trend (n=1e4)", c.ok, c.detail.str()};
}

} // namespace

std::vector<CriterionResult> run_all(std::ostream& out, int threads) {
  std::vector<CriterionResult> results;
  results.push_back(criterion1());
  results.push_back(criterion2());
  results.push_back(criterion3());
  results.push_back(criterion4());
  results.push_back(criterion5());
  results.push_back(criterion6());
  results.push_back(criterion7(threads));
  results.push_back(criterion8());
  results.push_back(criterion9(threads));
  results.push_back(criterion10(threads));
  for (const auto& r : results) {
    out << "criterion " << r.id << " [" << r.name << "]: " << (r.passed ? "PASS" : "FAIL");
    if (!r.passed && !r.detail.empty()) out << " (" << r.detail << ")";
    out << "\n";
  }
  return results;
}

} // namespace rgg::selftest
