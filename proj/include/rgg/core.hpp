#ifndef RGG_CORE_HPP
#define RGG_CORE_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace rgg {

// n point locations in [0,1], stored sorted ascending, plus the connection
// range r. original_order maps sorted index (0-based) to the original
// 1-based label, for labeled-graph reconstruction.
struct PointSample {
  int n = 0;
  double r = 0.0;
  std::vector<double> locations;
  std::vector<int> original_order;
};

// Undirected graph on vertices {1,..,n}; edges stored as (i,j) with i<j,
// sorted lexicographically.
struct LabeledGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  bool operator==(const LabeledGraph&) const = default;
};

// Leftward-neighbor-count representation: left[i-2] = L_i for i = 2..n.
// Edges are implied: (j,i) is an edge iff i - L_i <= j < i.
struct OrderedGraph {
  int n = 0;
  std::vector<int> left;

  int L(int i) const { return left[static_cast<std::size_t>(i) - 2]; }
  bool operator==(const OrderedGraph&) const = default;
  bool operator<(const OrderedGraph& o) const {
    return n != o.n ? n < o.n : left < o.left;
  }
};

enum class RegimeKind {
  LinearReciprocal, // r_n = c/n
  CriticalLog,      // r_n = c ln(n)/n
  ConstantRange,    // r_n = r
};

struct RegimeSpec {
  RegimeKind kind = RegimeKind::LinearReciprocal;
  double coefficient = 1.0; // c, or r for ConstantRange

  double range_at(int n) const;
};

struct ConnectivityEstimate {
  double probability = 0.0;
  double std_error = 0.0;
  long long trials = 0;
};

// Throws std::invalid_argument if the L-vector violates 0 <= L_i <= i-1 or
// L_{i+1} <= L_i + 1.
void validate(const OrderedGraph& og);

PointSample sample_points(int n, double r, std::uint64_t seed);
LabeledGraph build_labeled_graph(const PointSample& sample);
OrderedGraph build_ordered_graph(const PointSample& sample);

// Fraction of sampled graphs that are connected (all L_i >= 1), with the
// binomial standard error sqrt(p(1-p)/trials).
ConnectivityEstimate connectivity_probability(int n, double r, long long trials,
                                              std::uint64_t seed, int threads = 1);

// ln(n)/n, the connectivity threshold scaling. Requires n >= 2.
double critical_range(int n);

// Full edge set implied by the L-vector, (i,j) with i<j, sorted.
std::vector<std::pair<int, int>> edges_of(const OrderedGraph& og);

// CSV with header `index,location`, one row per sorted point.
void write_points_csv(std::ostream& os, const PointSample& sample);
// Edge-list text format, `i j` per line, 1-based.
void write_edge_list(std::ostream& os, const LabeledGraph& g);

} // namespace rgg

#endif
