#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "rgg/enumeration.hpp"
#include "rgg/errors.hpp"
#include "rgg/structure.hpp"

using namespace rgg;

namespace {

// Ten-node, five-clique reference graph used throughout: cover
// {[1:4],[2:5],[4:6],[5:7],[8:10]}, L = (1,2,3,3,2,2,0,1,2).
const CliqueCover kRefCover{10, {{1, 4}, {2, 5}, {4, 6}, {5, 7}, {8, 10}}};
const OrderedGraph kRefGraph{10, {1, 2, 3, 3, 2, 2, 0, 1, 2}};

std::vector<std::pair<int, int>> union_find_spans(const OrderedGraph& og) {
  std::vector<int> parent(static_cast<std::size_t>(og.n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  for (auto [i, j] : edges_of(og)) parent[static_cast<std::size_t>(find(j))] = find(i);
  std::vector<std::pair<int, int>> spans;
  for (int v = 1; v <= og.n; ++v) {
    if (find(v) == find(spans.empty() ? 1 : spans.back().first) && !spans.empty())
      spans.back().second = v;
    else
      spans.emplace_back(v, v);
  }
  return spans;
}

} // namespace

TEST_CASE("maximal_cliques on the reference graph") {
  CHECK(maximal_cliques(kRefGraph) == kRefCover);
}

TEST_CASE("maximal_cliques extremes") {
  OrderedGraph complete{5, {1, 2, 3, 4}};
  CHECK(maximal_cliques(complete) == CliqueCover{5, {{1, 5}}});

  OrderedGraph empty{4, {0, 0, 0}};
  CHECK(maximal_cliques(empty) == CliqueCover{4, {{1, 1}, {2, 2}, {3, 3}, {4, 4}}});
}

TEST_CASE("og_from_cliques reconstructs L") {
  CHECK(og_from_cliques(kRefCover) == kRefGraph);
  CHECK(og_from_cliques(CliqueCover{4, {{1, 4}}}) == OrderedGraph{4, {1, 2, 3}});
  CHECK(og_from_cliques(CliqueCover{3, {{1, 1}, {2, 3}}}) == OrderedGraph{3, {0, 1}});
}

TEST_CASE("og_from_cliques rejects invalid covers") {
  CHECK_THROWS_AS(og_from_cliques(CliqueCover{3, {{2, 3}}}), InvalidCoverError); // a_1 != 1
  CHECK_THROWS_AS(og_from_cliques(CliqueCover{4, {{1, 2}, {4, 4}}}),
                  InvalidCoverError); // gap: a_2 > b_1 + 1
  CHECK_THROWS_AS(og_from_cliques(CliqueCover{4, {{1, 3}, {1, 4}}}),
                  InvalidCoverError); // a not strictly increasing
  CHECK_THROWS_AS(og_from_cliques(CliqueCover{4, {{1, 3}, {2, 3}}}),
                  InvalidCoverError); // b not strictly increasing / b_k != n
}

TEST_CASE("cover round trip over the full family") {
  for (int n = 1; n <= 10; ++n)
    for_each_ordered_graph(n, false, [&](const OrderedGraph& og) {
      auto cover = maximal_cliques(og);
      // Eq-5 shape checks.
      CHECK(cover.intervals.front().first == 1);
      CHECK(cover.intervals.back().second == n);
      for (std::size_t t = 1; t < cover.intervals.size(); ++t) {
        CHECK(cover.intervals[t].first > cover.intervals[t - 1].first);
        CHECK(cover.intervals[t].second > cover.intervals[t - 1].second);
        CHECK(cover.intervals[t].first <= cover.intervals[t - 1].second + 1);
      }
      CHECK(og_from_cliques(cover) == og);
    });
}

TEST_CASE("reverse maps the reference cover") {
  auto rev = reverse(kRefGraph);
  CliqueCover want{10, {{1, 3}, {4, 6}, {5, 7}, {6, 9}, {7, 10}}};
  CHECK(maximal_cliques(rev) == want);
}

TEST_CASE("reverse is an involution and fixes symmetric graphs") {
  OrderedGraph complete{6, {1, 2, 3, 4, 5}};
  CHECK(reverse(complete) == complete);
  for (int n = 1; n <= 8; ++n)
    for_each_ordered_graph(n, false,
                           [&](const OrderedGraph& og) { CHECK(reverse(reverse(og)) == og); });
}

TEST_CASE("connected_components") {
  CHECK(connected_components(kRefGraph) ==
        std::vector<std::pair<int, int>>{{1, 7}, {8, 10}});
  OrderedGraph complete{5, {1, 2, 3, 4}};
  CHECK(connected_components(complete) == std::vector<std::pair<int, int>>{{1, 5}});
}

TEST_CASE("connected_components matches union-find") {
  for (int n = 1; n <= 7; ++n)
    for_each_ordered_graph(n, false, [&](const OrderedGraph& og) {
      CHECK(connected_components(og) == union_find_spans(og));
    });
}

TEST_CASE("canonicalize identifies isomorphic outcomes") {
  // The five-point example and its relabeled twin share a structure.
  OrderedGraph fig1{5, {1, 2, 1, 1}};
  OrderedGraph rev = reverse(fig1);
  CHECK(canonicalize(fig1) == canonicalize(rev));

  for (int n = 1; n <= 8; ++n)
    for_each_ordered_graph(n, false, [&](const OrderedGraph& og) {
      CHECK(canonicalize(og) == canonicalize(reverse(og)));
    });
}

TEST_CASE("canonical classes equal brute-force isomorphism classes") {
  for (int n = 2; n <= 6; ++n) {
    std::map<std::string, std::vector<OrderedGraph>> classes;
    for_each_ordered_graph(n, false, [&](const OrderedGraph& og) {
      classes[canonicalize(og).key()].push_back(og);
    });
    std::vector<LabeledGraph> reps;
    for (const auto& [key, members] : classes) {
      LabeledGraph rep{n, edges_of(members.front())};
      // Within a class everything is isomorphic to the representative.
      for (const auto& og : members)
        CHECK(isomorphic_bruteforce(rep, LabeledGraph{n, edges_of(og)}));
      // Across classes nothing is.
      for (const auto& other : reps) CHECK_FALSE(isomorphic_bruteforce(rep, other));
      reps.push_back(rep);
    }
  }
}

TEST_CASE("isomorphic_bruteforce worked example") {
  LabeledGraph a{5, {{1, 2}, {1, 3}, {1, 5}, {2, 3}, {4, 5}}};
  LabeledGraph b{5, {{1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 5}}};
  CHECK(isomorphic_bruteforce(a, b));
  CHECK(isomorphic_bruteforce(a, a));

  LabeledGraph path3{3, {{1, 2}, {2, 3}}};
  LabeledGraph tri3{3, {{1, 2}, {1, 3}, {2, 3}}};
  CHECK_FALSE(isomorphic_bruteforce(path3, tri3));

  LabeledGraph big{11, {}};
  CHECK_THROWS_AS(isomorphic_bruteforce(big, big), SizeLimitError);
}

TEST_CASE("all_isomorphisms finds the worked permutation") {
  LabeledGraph a{5, {{1, 2}, {1, 3}, {1, 5}, {2, 3}, {4, 5}}};
  LabeledGraph b{5, {{1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 5}}};
  auto perms = all_isomorphisms(a, b);
  std::vector<int> pi{2, 3, 5, 1, 4};
  CHECK(std::find(perms.begin(), perms.end(), pi) != perms.end());
}

TEST_CASE("CanonicalStructure serialization") {
  auto cs = canonicalize(kRefGraph);
  std::ostringstream js;
  cs.write_json(js);
  CHECK(js.str().find("\"n\":10") != std::string::npos);
  CHECK(js.str().find("\"components\":[[") != std::string::npos);
  CHECK(cs.key() == canonicalize(kRefGraph).key());
}

TEST_CASE("cover text round trip and parse errors") {
  std::ostringstream os;
  write_cover(os, kRefCover);
  CHECK(os.str() == "5\n1 4\n2 5\n4 6\n5 7\n8 10\n");
  std::istringstream is(os.str());
  CHECK(read_cover(is) == kRefCover);

  std::istringstream bad1("2\n1 3\n");
  CHECK_THROWS_AS(read_cover(bad1), ParseError);
  std::istringstream bad2("x\n");
  CHECK_THROWS_AS(read_cover(bad2), ParseError);
  std::istringstream bad3("1\n2 3\n");
  CHECK_THROWS_AS(read_cover(bad3), InvalidCoverError);
}
