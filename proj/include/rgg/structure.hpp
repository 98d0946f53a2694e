#ifndef RGG_STRUCTURE_HPP
#define RGG_STRUCTURE_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rgg/core.hpp"

namespace rgg {

// Ordered list of maximal-clique intervals [a_t : b_t]. Satisfies
//   1 = a_1 < ... < a_k <= n,  1 <= b_1 < ... < b_k = n,  a_{t+1} <= b_t + 1.
struct CliqueCover {
  int n = 0;
  std::vector<std::pair<int, int>> intervals;

  int k() const { return static_cast<int>(intervals.size()); }
  bool operator==(const CliqueCover&) const = default;
};

// Canonical representative of an isomorphism class: connected components,
// each in its canonical orientation (lexicographic minimum of the component's
// L-vector and its reversal's), sorted by (size, L-vector) ascending.
struct CanonicalStructure {
  int n = 0;
  std::vector<std::vector<int>> components; // per-component L-vectors

  bool operator==(const CanonicalStructure&) const = default;
  bool operator<(const CanonicalStructure& o) const {
    return n != o.n ? n < o.n : components < o.components;
  }
  // Stable string key for hashing/counting.
  std::string key() const;
  // JSON form {"n":..., "components":[[...],[...]]}.
  void write_json(std::ostream& os) const;
};

// The unique interval cover whose intervals are exactly the maximal cliques.
CliqueCover maximal_cliques(const OrderedGraph& og);

// Inverse of maximal_cliques. Throws InvalidCoverError naming the first
// violated interval-cover condition.
OrderedGraph og_from_cliques(const CliqueCover& cover);

// Relabel i -> n-i+1. Involution.
OrderedGraph reverse(const OrderedGraph& og);

// Maximal vertex spans [first, last] split at indices i with L_i = 0.
std::vector<std::pair<int, int>> connected_components(const OrderedGraph& og);

CanonicalStructure canonicalize(const OrderedGraph& og);

// Factorial permutation search; test oracle only, guarded at n <= 10.
// Throws SizeLimitError beyond the guard.
bool isomorphic_bruteforce(const LabeledGraph& g1, const LabeledGraph& g2);

// All adjacency-preserving permutations between two equal-size labeled
// graphs, each as a vector perm with perm[i-1] = pi(i). Same size guard.
std::vector<std::vector<int>> all_isomorphisms(const LabeledGraph& g1, const LabeledGraph& g2);

// Clique-cover text format: `k` on line one, then `a b` per interval.
void write_cover(std::ostream& os, const CliqueCover& cover);
// n is inferred from the last interval (b_k = n by the cover conditions).
CliqueCover read_cover(std::istream& is);

} // namespace rgg

#endif
