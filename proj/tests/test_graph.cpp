#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "specfac/canonical.hpp"
#include "specfac/enumerate.hpp"
#include "specfac/errors.hpp"
#include "specfac/graph.hpp"
#include "specfac/graph6.hpp"
#include "specfac/random_graphs.hpp"
#include "specfac/trees.hpp"

using namespace specfac;

namespace {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return make_graph(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return make_graph(n, e);
}

}  // namespace

TEST_CASE("basic_construction") {
  const Graph g = make_graph(4, {{0, 1}, {2, 1}, {1, 3}});
  CHECK(g.n == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.degree(1) == 3);
  CHECK(g.degree(0) == 1);
  CHECK_THROWS_AS(make_graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("complete_and_join") {
  const Graph k5 = complete(5);
  CHECK(k5.edge_count() == 10);
  const Graph j = join(complete(2), empty_graph(3));
  CHECK(j.n == 5);
  CHECK(j.edge_count() == 1 + 6);
  CHECK(j.has_edge(0, 1));
  CHECK(!j.has_edge(2, 3));
  CHECK(j.has_edge(0, 4));
  const Graph u = disjoint_union(complete(3), complete(2));
  CHECK(u.n == 5);
  CHECK(u.edge_count() == 4);
  CHECK(!u.has_edge(2, 3));
  CHECK(u.has_edge(3, 4));
}

TEST_CASE("family_layout") {
  const Graph g = construct_family(2, 3, 4);  // K_2 v (K_3 u 4K_1), n = 9
  CHECK(g.n == 9);
  // hubs 0,1; clique 2,3,4; independent 5..8
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(0, 8));
  CHECK(g.has_edge(2, 3));
  CHECK(!g.has_edge(5, 6));
  CHECK(!g.has_edge(2, 5));
  CHECK(g.degree(0) == 8);
  CHECK(g.degree(2) == 4);
  CHECK(g.degree(5) == 2);
  CHECK(g.edge_count() == 1 + 3 + 2 * 7);

  const auto part = family_partition(2, 3, 4);
  REQUIRE(part.size() == 3);
  CHECK(part[0] == std::vector<int>{5, 6, 7, 8});
  CHECK(part[1] == std::vector<int>{2, 3, 4});
  CHECK(part[2] == std::vector<int>{0, 1});
  // star shape: no clique block
  const auto star = family_partition(3, 0, 5);
  REQUIRE(star.size() == 2);
  CHECK(star[0].size() == 5);
  CHECK(star[1].size() == 3);
}

TEST_CASE("isolated_count_after_removal") {
  const Graph g = construct_family(1, 2, 2);  // n = 5
  CHECK(isolated_count(g, {0}) == 2);
  CHECK(isolated_count(g, {}) == 0);
  CHECK(isolated_count(g, {0, 1}) == 3);  // the second clique vertex loses both neighbors
  CHECK(isolated_count(path(3), {1}) == 2);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(path(6)));
  CHECK(is_connected(complete(1)));
  CHECK(!is_connected(empty_graph(2)));
  CHECK(!is_connected(disjoint_union(complete(3), complete(3))));
  CHECK(is_connected(join(empty_graph(2), empty_graph(3))));
}

TEST_CASE("induced_and_relabel") {
  const Graph g = cycle(5);
  const Graph h = induced_subgraph(g, {0, 1, 2});
  CHECK(h.n == 3);
  CHECK(h.edge_count() == 2);
  std::vector<int> perm = {4, 3, 2, 1, 0};
  const Graph r = relabel(g, perm);
  CHECK(r.edge_count() == 5);
  CHECK(r.has_edge(4, 3));  // image of edge 0-1
  const auto el = edge_list(g);
  CHECK(el.size() == 5);
  CHECK(std::is_sorted(el.begin(), el.end()));
  CHECK(graphs_equal(g, make_graph(5, el)));
  CHECK(!graphs_equal(g, path(5)));
}

TEST_CASE("graph6_roundtrip_small") {
  CHECK(graph6_encode(complete(2)) == "A_");
  CHECK(graph6_decode("A_").edge_count() == 1);
  CHECK(graph6_decode("A?").edge_count() == 0);
  for (const Graph& g : {path(1), path(7), cycle(8), complete(9),
                         construct_family(2, 3, 4), empty_graph(12)}) {
    const Graph back = graph6_decode(graph6_encode(g));
    CHECK(graphs_equal(g, back));
  }
}

TEST_CASE("graph6_roundtrip_random") {
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(t % 40);
    std::vector<Edge> edges;
    std::uniform_int_distribution<int> coin(0, 3);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) == 0) edges.push_back({u, v});
    const Graph g = make_graph(n, edges);
    CHECK(graphs_equal(g, graph6_decode(graph6_encode(g))));
  }
}

TEST_CASE("graph6_malformed") {
  CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
  CHECK_THROWS_AS(graph6_decode("A"), std::invalid_argument);    // truncated
  CHECK_THROWS_AS(graph6_decode("A_X"), std::invalid_argument);  // trailing junk
  CHECK_THROWS_AS(graph6_decode("\x01\x02"), std::invalid_argument);
  CHECK_THROWS_AS(graph6_decode("A!"), std::invalid_argument);
}

TEST_CASE("canonical_label_invariance") {
  std::mt19937_64 rng(777);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(t % 9);
    const Graph g = random_connected_gnp(n, 0.45, rng);
    const std::string label = canonical_label(g);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_label(relabel(g, perm)) == label);
  }
}

TEST_CASE("canonical_distinguishes") {
  CHECK(canonical_label(path(4)) != canonical_label(cycle(4)));
  CHECK(are_isomorphic(cycle(4), relabel(cycle(4), {2, 0, 3, 1})));
  CHECK(!are_isomorphic(path(5), cycle(5)));
  // same degree sequence, non-isomorphic: C6 vs 2*C3
  CHECK(!are_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))));
  CHECK_THROWS_AS(canonical_label(complete(17)), cap_error);
}

TEST_CASE("connected_enumeration_counts") {
  const long expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(static_cast<long>(enumerate_connected(n).size()) == expected[n]);
  }
  long trees_on_4 = 0;
  for_each_connected(4, [&](const Graph& g) {
    if (g.edge_count() == 3) ++trees_on_4;
  });
  CHECK(trees_on_4 == 2);  // P4 and K_{1,3}
  CHECK_THROWS_AS(enumerate_connected(10), cap_error);
  CHECK_THROWS_AS(enumerate_connected(0), cap_error);
}

TEST_CASE("enumerated_graphs_are_connected_and_distinct") {
  const auto graphs = enumerate_connected(6);
  std::set<std::string> labels;
  for (const Graph& g : graphs) {
    CHECK(g.n == 6);
    CHECK(is_connected(g));
    labels.insert(canonical_label(g));
  }
  CHECK(labels.size() == graphs.size());
}

TEST_CASE("tree_utilities") {
  CHECK(is_tree(path(7)));
  CHECK(!is_tree(cycle(4)));
  CHECK(!is_tree(disjoint_union(path(2), path(2))));
  CHECK(tree_certificate(path(4)) == tree_certificate(relabel(path(4), {3, 1, 0, 2})));
  CHECK(tree_certificate(path(4)) != tree_certificate(make_graph(4, {{0, 1}, {0, 2}, {0, 3}})));
  CHECK_THROWS_AS(tree_certificate(cycle(3)), std::invalid_argument);
}

TEST_CASE("tree_enumeration_counts") {
  const long expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741};
  for (int n = 1; n <= 15; ++n)
    CHECK(static_cast<long>(enumerate_trees(n).size()) == expected[n]);
}

TEST_CASE("expanded_tree_family") {
  // expanding K_2: subdivide the edge, add a pendant at both ends -> P5
  const Graph p5 = expand_to_T3(complete(2));
  CHECK(p5.n == 5);
  CHECK(is_T3_member(p5));
  CHECK(tree_certificate(p5) == tree_certificate(path(5)));

  const auto members = t3_members_up_to(15);
  REQUIRE(members.size() == 3);
  CHECK(members[0].n == 5);
  CHECK(members[1].n == 10);
  CHECK(members[2].n == 15);
  for (const Graph& m : members) CHECK(is_T3_member(m));

  // the 10-vertex member: three legs of length 3 from one branch vertex
  const Graph& spider = members[1];
  int deg3 = 0, deg2 = 0, deg1 = 0;
  for (int v = 0; v < spider.n; ++v) {
    if (spider.degree(v) == 3) ++deg3;
    if (spider.degree(v) == 2) ++deg2;
    if (spider.degree(v) == 1) ++deg1;
  }
  CHECK(deg3 == 1);
  CHECK(deg2 == 6);
  CHECK(deg1 == 3);

  CHECK(is_T3_member(path(5)));
  CHECK(!is_T3_member(path(10)));
  CHECK(!is_T3_member(path(15)));
  CHECK(!is_T3_member(cycle(5)));
  CHECK(!is_T3_member(make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})));
}

TEST_CASE("random_trees_uniform_shape") {
  std::mt19937_64 rng(4242);
  int paths = 0, stars = 0;
  for (int t = 0; t < 3000; ++t) {
    const Graph g = random_tree(4, rng);
    CHECK(is_tree(g));
    int maxdeg = 0;
    for (int v = 0; v < 4; ++v) maxdeg = std::max(maxdeg, g.degree(v));
    if (maxdeg == 3) ++stars;
    else ++paths;
  }
  // 16 labeled trees on 4 vertices: 12 paths, 4 stars
  CHECK(paths > 2000);
  CHECK(stars > 600);
  CHECK(paths + stars == 3000);
}

TEST_CASE("random_connected_sampler") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_connected_gnp(9, 0.35, rng);
    CHECK(g.n == 9);
    CHECK(is_connected(g));
  }
  CHECK_THROWS_AS(random_connected_gnp(0, 0.5, rng), std::invalid_argument);
  CHECK_THROWS_AS(random_connected_gnp(5, 1.5, rng), std::invalid_argument);
  // p = 0 on n >= 2 can never be connected
  CHECK_THROWS_AS(random_connected_gnp(3, 0.0, rng, 50), std::runtime_error);
}
