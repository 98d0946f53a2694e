#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "rgg/enumeration.hpp"
#include "rgg/errors.hpp"
#include "rgg/structure.hpp"

using namespace rgg;

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(1) == 1);
  CHECK(catalan(5) == 42);
  CHECK(catalan(14) == 2674440);

  // Segner's recurrence c_{n+1} = sum_i c_i c_{n-i}.
  for (int n = 0; n < 20; ++n) {
    BigInt s = 0;
    for (int i = 0; i <= n; ++i) s += catalan(i) * catalan(n - i);
    CHECK(catalan(n + 1) == s);
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("enumeration of small families") {
  std::set<std::vector<int>> seen;
  for_each_ordered_graph(3, false, [&](const OrderedGraph& og) { seen.insert(og.left); });
  std::set<std::vector<int>> want{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}};
  CHECK(seen == want);

  seen.clear();
  for_each_ordered_graph(3, true, [&](const OrderedGraph& og) { seen.insert(og.left); });
  CHECK(seen == std::set<std::vector<int>>{{1, 1}, {1, 2}});

  int count1 = 0;
  for_each_ordered_graph(1, false, [&](const OrderedGraph& og) {
    ++count1;
    CHECK(og.left.empty());
  });
  CHECK(count1 == 1);
}

TEST_CASE("enumeration counts match Catalan numbers") {
  for (int n = 1; n <= 11; ++n) {
    long long all = 0, conn = 0;
    for_each_ordered_graph(n, false, [&](const OrderedGraph&) { ++all; });
    for_each_ordered_graph(n, true, [&](const OrderedGraph&) { ++conn; });
    CHECK(BigInt(all) == catalan(n));
    CHECK(BigInt(conn) == catalan(n - 1));
  }
}

TEST_CASE("count_with_k_cliques") {
  CHECK(count_with_k_cliques(4, 2, false) == 6);
  for (int n = 1; n <= 10; ++n) CHECK(count_with_k_cliques(n, 1, false) == 1);
  for (int n = 1; n <= 14; ++n) {
    BigInt total = 0;
    for (int k = 1; k <= n; ++k) total += count_with_k_cliques(n, k, false);
    CHECK(total == catalan(n));
  }
  // Narayana symmetry N(n,k) = N(n,n+1-k).
  for (int k = 1; k <= 9; ++k)
    CHECK(count_with_k_cliques(9, k, false) == count_with_k_cliques(9, 10 - k, false));
  CHECK_THROWS_AS(count_with_k_cliques(4, 0, false), std::invalid_argument);
  CHECK_THROWS_AS(count_with_k_cliques(4, 5, false), std::invalid_argument);
}

TEST_CASE("count_with_k_cliques matches enumeration by cover size") {
  for (int n = 1; n <= 9; ++n) {
    std::vector<long long> by_k(static_cast<std::size_t>(n) + 1, 0);
    for_each_ordered_graph(n, false, [&](const OrderedGraph& og) {
      ++by_k[static_cast<std::size_t>(maximal_cliques(og).k())];
    });
    for (int k = 1; k <= n; ++k)
      CHECK(count_with_k_cliques(n, k, false) == BigInt(by_k[static_cast<std::size_t>(k)]));
  }
}

TEST_CASE("connected counts sum to the shifted Catalan number") {
  for (int n = 2; n <= 12; ++n) {
    BigInt total = 0;
    for (int k = 1; k <= n - 1; ++k) total += count_with_k_cliques(n, k, true);
    CHECK(total == catalan(n - 1));
  }
}

TEST_CASE("p counts") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(p_count(1, n, 1, CountMethod::Formula) == 1);
    for (int m = 2; m <= n; ++m) CHECK(p_count(m, n, 1, CountMethod::Formula) == 0);
  }
  CHECK(p_count(2, 4, 2, CountMethod::Formula) == 3);
  for (int n = 2; n <= 9; ++n)
    for (int m = 2; m <= n; ++m)
      CHECK(p_count(m, n, 2, CountMethod::Formula) == n - m + 1);

  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= n; ++k) {
      BigInt s = 0;
      if (k == 1) {
        s = p_count(1, n, 1, CountMethod::Formula);
      } else {
        for (int m = k; m <= n; ++m) s += p_count(m, n, k, CountMethod::Formula);
      }
      CHECK(s == count_with_k_cliques(n, k, false));
    }

  CHECK_THROWS_AS(p_count(0, 4, 1, CountMethod::Formula), std::invalid_argument);
  CHECK_THROWS_AS(p_count(5, 4, 2, CountMethod::Formula), std::invalid_argument);
}

TEST_CASE("q counts") {
  CHECK(q_count(2, 4, 2, CountMethod::Formula) == 2);
  for (int n = 2; n <= 12; ++n) {
    // k = 1 (a single clique spanning everything) contributes one graph.
    BigInt total = 1;
    for (int k = 2; k <= n; ++k)
      for (int m = k; m <= n - 1; ++m) total += q_count(m, n, k, CountMethod::Formula);
    CHECK(total == catalan(n - 1));
  }
}

TEST_CASE("p and q agree between formula and recurrence") {
  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= n; ++k) {
      if (k == 1) {
        CHECK(p_count(1, n, 1, CountMethod::Formula) ==
              p_count(1, n, 1, CountMethod::Recurrence));
        continue;
      }
      for (int m = k; m <= n; ++m) {
        CHECK(p_count(m, n, k, CountMethod::Formula) ==
              p_count(m, n, k, CountMethod::Recurrence));
        if (m <= n - 1)
          CHECK(q_count(m, n, k, CountMethod::Formula) ==
                q_count(m, n, k, CountMethod::Recurrence));
      }
    }
}

TEST_CASE("realizable") {
  // Two empty gaps of length > 0.6 cannot fit in the unit interval.
  CHECK_FALSE(realizable(OrderedGraph{3, {0, 0}}, 0.6).feasible);

  for (int n : {2, 5, 8}) {
    std::vector<int> l;
    for (int i = 2; i <= n; ++i) l.push_back(i - 1);
    CHECK(realizable(OrderedGraph{n, l}, 0.05).feasible);
  }

  auto w = realizable(OrderedGraph{3, {1, 1}}, 0.4);
  REQUIRE(w.feasible);
  REQUIRE(w.locations.has_value());
  const auto& y = *w.locations;
  REQUIRE(y.size() == 3);
  CHECK(y[1] - y[0] <= 0.4 + 1e-12);
  CHECK(y[2] - y[1] <= 0.4 + 1e-12);
  CHECK(y[2] - y[0] > 0.4); // 1 and 3 are non-adjacent
  CHECK(*w.slack > 0.0);
}

TEST_CASE("realizable witnesses satisfy all constraints over the n=5 family") {
  for (double r : {0.15, 0.3, 0.45}) {
    for_each_ordered_graph(5, false, [&](const OrderedGraph& og) {
      auto w = realizable(og, r);
      if (!w.feasible) return;
      const auto& y = *w.locations;
      for (int i = 2; i <= 5; ++i) {
        int li = og.L(i);
        if (li >= 1)
          CHECK(y[static_cast<std::size_t>(i - 1)] - y[static_cast<std::size_t>(i - 1 - li)] <=
                r + 1e-9);
        if (i - li - 1 >= 1)
          CHECK(y[static_cast<std::size_t>(i - 1)] - y[static_cast<std::size_t>(i - 2 - li)] >
                r);
      }
      for (std::size_t j = 0; j < y.size(); ++j) {
        CHECK(y[j] >= 0.0);
        CHECK(y[j] <= 1.0);
        if (j) CHECK(y[j] >= y[j - 1]);
      }
    });
  }
}

TEST_CASE("exact_structure_count") {
  auto two = exact_structure_count(2, 0.5);
  CHECK(two.realizable_ordered_graphs == 2);
  CHECK(two.distinct_structures == 2);

  auto five = exact_structure_count(5, 1.0 / 3.0);
  CHECK(five.realizable_ordered_graphs <= catalan(5));
  CHECK(five.distinct_structures <= five.realizable_ordered_graphs);

  // With r = 0.9, three gaps longer than 0.9 are impossible: the empty graph
  // on 4 nodes is excluded.
  CHECK_FALSE(realizable(OrderedGraph{4, {0, 0, 0}}, 0.9).feasible);
  auto four = exact_structure_count(4, 0.9);
  CHECK(four.realizable_ordered_graphs < catalan(4));

  CHECK_THROWS_AS(exact_structure_count(13, 0.3), SizeLimitError);
}
