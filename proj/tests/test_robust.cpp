#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "qturan/oracle.hpp"
#include "qturan/robust.hpp"

using namespace qturan;

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(pattern_from_name("k1,1,1,1")) == 4);  // K4
  CHECK(chromatic_number(pattern_from_name("c5")) == 3);
  CHECK(chromatic_number(pattern_from_name("c6")) == 2);
  CHECK(chromatic_number(PatternGraph(4, {})) == 1);
  CHECK(chromatic_number(PatternGraph(0, {})) == 0);
  CHECK(chromatic_number(pattern_from_name("k3,3")) == 2);
  CHECK(chromatic_number(pattern_from_name("k3,3,3")) == 3);
  // Petersen graph
  const PatternGraph petersen(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
                                   {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
                                   {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6}});
  CHECK(chromatic_number(petersen) == 3);
  CHECK_THROWS_AS(chromatic_number(pattern_from_name("k9,9"), 16), Error);  // cap
}

TEST_CASE("selection images") {
  const PatternGraph c3 = pattern_from_name("c3");
  CHECK(is_selection_image(c3, {{1, 2}, {2, 3}, {1, 3}}));
  CHECK(is_selection_image(c3, {{1, 2}, {2, 3}}));
  CHECK_FALSE(is_selection_image(c3, {{1, 2}}));  // vertex 3 uncovered

  const PatternGraph k4 = pattern_from_name("k1,1,1,1");
  CHECK(is_selection_image(k4, {{1, 2}, {3, 4}}));  // perfect matching
  CHECK_FALSE(is_selection_image(k4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}}));  // |E|>|V|

  const PatternGraph star3 = pattern_from_name("star3");
  CHECK(is_selection_image(star3, {{1, 2}, {1, 3}, {1, 4}}));

  CHECK_THROWS_AS(is_selection_image(c3, {{1, 4}}), Error);  // not a pattern edge
}

TEST_CASE("certificate agrees with the matching construction") {
  Rng rng(301);
  for (int it = 0; it < 300; ++it) {
    const auto f = test_helpers::random_pattern(5, 0.6, rng);
    if (f.size() > 10) continue;
    // random subset of the edges
    EdgeList d;
    for (auto e : f.edges())
      if (rng.next_unit() < 0.6) d.push_back(e);
    const auto selection = selection_for(f, d);
    CHECK(is_selection_image(f, d) == selection.has_value());
    if (selection) {
      // the selection is a genuine 1-selection with image exactly d
      const auto deg = f.degrees();
      std::set<std::pair<int, int>> image;
      for (int v = 1; v <= f.n(); ++v) {
        const auto pick = (*selection)[v - 1];
        if (deg[v] == 0) {
          CHECK(pick == std::pair<int, int>{0, 0});
          continue;
        }
        CHECK((pick.first == v || pick.second == v));
        image.insert(std::minmax(pick.first, pick.second));
      }
      CHECK(image == std::set<std::pair<int, int>>(d.begin(), d.end()));
    }
  }
}

TEST_CASE("removal-set enumeration") {
  const auto c3_sets = enumerate_removal_sets(pattern_from_name("c3"));
  CHECK(c3_sets.size() == 4);  // the full edge set and each 2-edge subset
  const auto k2_sets = enumerate_removal_sets(pattern_from_name("p2"));
  CHECK(k2_sets.size() == 1);
  const auto p3_sets = enumerate_removal_sets(pattern_from_name("p3"));
  CHECK(p3_sets.size() == 1);  // single edges miss an endpoint

  for (const auto& d : c3_sets) CHECK(is_selection_image(pattern_from_name("c3"), d));
  CHECK(std::set<EdgeList>(c3_sets.begin(), c3_sets.end()).size() == c3_sets.size());

  CHECK_THROWS_AS(enumerate_removal_sets(pattern_from_name("k4,4"), 10), Error);  // cap

  // against brute force over selection functions
  Rng rng(303);
  for (int it = 0; it < 60; ++it) {
    const auto f = test_helpers::random_pattern(5, 0.5, rng);
    const auto adj = f.adjacency();
    std::vector<int> selectors;
    for (int v = 1; v <= f.n(); ++v)
      if (!adj[v].empty()) selectors.push_back(v);
    std::set<EdgeList> images;
    std::vector<std::pair<int, int>> current;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == selectors.size()) {
        EdgeList d = current;
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end()), d.end());
        images.insert(d);
        return;
      }
      const int v = selectors[i];
      for (int w : adj[v]) {
        current.push_back(std::minmax(v, w));
        self(self, i + 1);
        current.pop_back();
      }
    };
    if (selectors.empty()) {
      images.insert({});
    } else {
      rec(rec, 0);
    }
    const auto enumerated = enumerate_removal_sets(f);
    CHECK(images == std::set<EdgeList>(enumerated.begin(), enumerated.end()));
  }
}

TEST_CASE("robust chromatic numbers") {
  CHECK(robust_chromatic(pattern_from_name("c3")) == 1);
  CHECK(robust_chromatic(pattern_from_name("p2")) == 1);
  CHECK(robust_chromatic(pattern_from_name("c5")) == 1);
  CHECK(robust_chromatic(pattern_from_name("k2,2,2")) == 2);
  CHECK(robust_chromatic(pattern_from_name("k3,3,3")) == 3);
  CHECK(robust_chromatic(PatternGraph(3, {})) == 1);
  CHECK(robust_chromatic(PatternGraph(0, {})) == 0);

  // complete tripartite table: 1 for the triangle, 2 iff the smallest part
  // has at most 2 vertices, 3 otherwise
  for (int r = 1; r <= 3; ++r)
    for (int s = r; s <= 3; ++s)
      for (int t = s; t <= 3; ++t) {
        const auto f = pattern_from_name("k" + std::to_string(r) + "," + std::to_string(s) + "," +
                                         std::to_string(t));
        const int expected = (r == 1 && s == 1 && t == 1) ? 1 : (r <= 2 ? 2 : 3);
        CHECK(robust_chromatic(f) == expected);
      }
}

TEST_CASE("robust chromatic number: three routes agree") {
  Rng rng(307);
  for (int it = 0; it < 120; ++it) {
    const int n = 2 + static_cast<int>(rng.next_below(5));  // up to 6 vertices
    const auto f = test_helpers::random_pattern(n, 0.55, rng);
    const int fast = robust_chromatic(f);
    CHECK(fast == oracle::robust_chromatic_removal_sets(f));
    CHECK(fast == oracle::robust_chromatic_selection_functions(f));
    CHECK(fast <= chromatic_number(f));
    if (!f.edges().empty()) CHECK(fast >= 1);
    // isomorphism invariance
    const auto perm = test_helpers::random_permutation(n, rng);
    CHECK(fast == robust_chromatic(test_helpers::relabel(f, perm)));
  }
}

TEST_CASE("random multipartite graphs") {
  const auto complete = random_multipartite(3, 3, 1.0, 5);
  CHECK(complete == pattern_from_name("k3,3,3"));
  CHECK(robust_chromatic(complete) == 3);
  CHECK(random_multipartite(4, 2, 0.0, 5).size() == 0);
  CHECK(random_multipartite(3, 2, 0.5, 99) == random_multipartite(3, 2, 0.5, 99));
  CHECK(random_multipartite(5, 2, 0.5, 1) != random_multipartite(5, 2, 0.5, 2));
  CHECK_THROWS_AS(random_multipartite(0, 2, 0.5, 1), Error);
  CHECK_THROWS_AS(random_multipartite(2, 2, 1.5, 1), Error);
}

TEST_CASE("chi1 experiment") {
  const auto bip = chi1_experiment(6, 2, 1.0, 10, 7);
  CHECK(bip.frequency == 1.0);
  for (const auto& log : bip.log) {
    CHECK(log.chi == 2);
    CHECK(log.chi1 == 2);
    CHECK(log.edges == 36);
  }

  const auto tri = chi1_experiment(3, 3, 1.0, 5, 7);
  CHECK(tri.frequency == 1.0);

  // reproducible from the seed, independent of the worker count
  const auto a = chi1_experiment(4, 3, 0.7, 12, 42, 1);
  const auto b = chi1_experiment(4, 3, 0.7, 12, 42, 4);
  CHECK(a.frequency == b.frequency);
  for (int t = 0; t < 12; ++t) {
    CHECK(a.log[t].seed == b.log[t].seed);
    CHECK(a.log[t].edges == b.log[t].edges);
    CHECK(a.log[t].chi1 == b.log[t].chi1);
  }
  const auto c = chi1_experiment(4, 3, 0.7, 12, 43, 1);
  CHECK(c.log[0].seed != a.log[0].seed);
}
