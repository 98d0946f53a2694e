#ifndef RGG_ENTROPY_HPP
#define RGG_ENTROPY_HPP

#include <cstdint>
#include <vector>

#include "rgg/core.hpp"

namespace rgg {

struct Pmf {
  std::vector<int> support;
  std::vector<double> prob;

  double at(int value) const;
  double total() const;
};

// Joint law of (L_i, L_{i+1}) over a = 0..a_max (a_max = i-2), b = 0..a+1.
struct JointPmf {
  int a_max = 0;
  std::vector<std::vector<double>> table; // table[a][b]

  double at(int a, int b) const { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
};

enum class EntropyTarget { Structure, OrderedGraph };
enum class Estimator { PlugIn, MillerMadow };

struct EntropyEstimate {
  double bits = 0.0;
  double std_error = 0.0;
  long long samples = 0;
  Estimator estimator = Estimator::PlugIn;
  EntropyTarget target = EntropyTarget::Structure;
  bool connected_conditioned = false;
  double acceptance_rate = 1.0;
  long long distinct_keys = 0;
};

struct BoundCurve {
  std::vector<double> x;
  std::vector<double> upper;
  std::vector<double> lower;
};

// Law of L_i: binomial C(n,a) r^a (1-r)^{n-a} for a <= i-2, with the left
// margin mass folded into a = i-1. Requires r in (0, 1/2).
Pmf pmf_L(int n, double r, int i);

// Joint law of (L_i, L_{i+1}) for a <= i-2; b >= 1 entries by quadrature of
// the single-integral form, b = 0 in closed form. Requires r in (0, 1/2).
JointPmf joint_pmf_L(int n, double r, int i);

// Law of Delta = L+1-L' given L = a (difference of leftmost-neighbor
// indices), over k = 0..a+1. Requires 0 <= a <= n-3, r in (0, 1/2).
Pmf delta_pmf(int n, double r, int a);

// Kummer's confluent hypergeometric M(alpha, beta, z) for positive integer
// parameters beta > alpha >= 1 and z <= 0, via its Euler integral form.
double kummer_M(int alpha, int beta, double z);

// Asymptotic per-node upper/lower entropy bound functions of x = n*r_n.
double h_upper(double x);
double h_lower(double x);

// Finite-n chain-rule upper bound H(L_2) + sum_i H(L_{i+1} | L_i), in bits.
// Requires n >= 3, r in (0, 1/2).
double chain_upper_bound(int n, double r);

// Asymptotic per-node upper bound for a range-scaling regime.
double asymptotic_upper(int n, const RegimeSpec& regime);

// Universal structural entropy bound 2n - (3/2) log2 n - (1/2) log2 pi.
double theorem1_bound(int n);

// Conditional tail Pr(gap > u | i-th point at x): (1 - u/(1-x))^{n-i}.
double gap_tail(double u, double x, int n, int i);

// Conditional density of the i-th sorted location given L_i = a < i-1.
double location_density(double x, int n, double r, int i, int a);

// Monte Carlo entropy of the sampled ordered graph or structure.
// Plug-in estimator by default; Miller-Madow adds (K-1)/(2N ln 2).
// Standard error by bootstrap (50 multinomial resamples).
EntropyEstimate mc_entropy(int n, double r, EntropyTarget target, bool connected_conditioned,
                           long long samples, std::uint64_t seed,
                           Estimator estimator = Estimator::PlugIn, int threads = 1);

BoundCurve bound_curve(const std::vector<double>& x_grid);

} // namespace rgg

#endif
