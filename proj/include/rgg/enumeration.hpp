#ifndef RGG_ENUMERATION_HPP
#define RGG_ENUMERATION_HPP

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rgg/core.hpp"

namespace rgg {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int k);

// C(2n, n) / (n+1), exact.
BigInt catalan(int n);

// Streams all L-vectors with 0 <= L_{i+1} <= L_i + 1 and L_i <= i-1, in
// lexicographic order; with connected_only, additionally L_i >= 1.
// Usage: Enumerator e(n, connected); while (e.next(og)) { ... }
class OrderedGraphEnumerator {
public:
  OrderedGraphEnumerator(int n, bool connected_only);
  bool next(OrderedGraph& out);

private:
  int n_;
  bool connected_only_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> left_;
};

template <typename F>
void for_each_ordered_graph(int n, bool connected_only, F&& fn) {
  OrderedGraphEnumerator e(n, connected_only);
  OrderedGraph og;
  while (e.next(og)) fn(og);
}

// Narayana count (1/n) C(n,k) C(n,k-1); connected variant
// (1/(n-1)) C(n-1,k) C(n-1,k-1) (with k = n = 1 giving 1).
BigInt count_with_k_cliques(int n, int k, bool connected_only);

enum class CountMethod { Formula, Recurrence };

// Number of interval-clique graphs on n vertices with k maximal cliques whose
// last clique is fixed to [m:n].
BigInt p_count(int m, int n, int k, CountMethod method);
// Connected analogue.
BigInt q_count(int m, int n, int k, CountMethod method);

struct RealizabilityWitness {
  bool feasible = false;
  std::optional<std::vector<double>> locations; // sorted, in [0,1]
  std::optional<double> slack;                  // min strict-inequality margin
};

// Decides whether the ordered graph arises from some point configuration at
// range r: sorted locations y with y_i - y_{i-L_i} <= r and
// y_i - y_{i-L_i-1} > r. Solved as a difference-constraint system maximizing
// the minimum strict slack; feasible iff the optimum exceeds 1e-12.
RealizabilityWitness realizable(const OrderedGraph& og, double r);

struct StructureCountResult {
  BigInt realizable_ordered_graphs;
  BigInt distinct_structures;
};

// Exhaustive over the n <= 12 family: filter by realizability, canonicalize,
// count distinct structures.
StructureCountResult exact_structure_count(int n, double r);

} // namespace rgg

#endif
