#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "qturan/constructions.hpp"
#include "qturan/extremal.hpp"

using namespace qturan;

namespace {
const PatternGraph kC3 = pattern_from_name("c3");
}

TEST_CASE("universal tree") {
  CHECK(universal_tree(2, 5).size() == 20);
  CHECK(universal_tree(3, 3).size() == 12);
  CHECK(universal_tree(1, 6).size() == 0);
  for (int q = 1; q <= 6; ++q)
    for (int n = 2; n <= 8; ++n)
      CHECK(static_cast<long long>(universal_tree(q, n).size()) == (1LL * q * q / 2) * pairs(n));

  // low-weight-sum edges, plus balanced-sum edges oriented small-to-small
  for (const QEdge& e : universal_tree(4, 5).edges()) {
    CHECK(e.a + e.b <= 5);
    if (e.a + e.b == 5) CHECK(e.a < e.b);
  }
}

TEST_CASE("blow-up") {
  CHECK(blowup(pattern_from_name("p2"), 3).size() == 9);
  const auto c4_blow = blowup(pattern_from_name("c4"), 2);
  CHECK(c4_blow.size() == 16);
  CHECK(verify_free(c4_blow, kC3, 3).free);
  CHECK(support_graph(c4_blow) == pattern_from_name("c4"));
  CHECK(blowup(PatternGraph(4, {}), 2).size() == 0);
}

TEST_CASE("low complement") {
  CHECK(low_complement(2, 5).size() == 3 * pairs(5));
  CHECK(low_complement(3, 5).size() == 5 * pairs(5));
  CHECK(low_complement(4, 5).size() == 12 * pairs(5));
  CHECK(low_complement(2, 6) == QGraph(6, 2, [] {
          std::vector<QEdge> e;
          for (int u = 1; u <= 6; ++u)
            for (int v = u + 1; v <= 6; ++v) {
              e.push_back({u, v, 1, 1});
              e.push_back({u, v, 1, 2});
              e.push_back({u, v, 2, 1});
            }
          return e;
        }()));
}

TEST_CASE("chi1 lower-bound construction") {
  const PatternGraph k333 = pattern_from_name("k3,3,3");
  CHECK(chi1_lower(k333, 2, 10).size() == 3 * pairs(10) + 25);  // low complement + T(10,2) top layer
  const auto h9 = chi1_lower(k333, 2, 9);
  CHECK(h9.size() == 3 * pairs(9) + 20);
  CHECK(verify_free(h9, k333, 3).free);  // smallest host the pattern fits into
  const auto h8 = chi1_lower(k333, 2, 8);
  CHECK(h8.size() == 3 * pairs(8) + 16);
  CHECK(verify_free(h8, k333, 3).free);  // vacuous: the pattern needs 9 vertices

  // forests degrade to the low complement; unicyclic patterns are rejected
  CHECK(chi1_lower(pattern_from_name("p2"), 2, 6) == low_complement(2, 6));
  CHECK(chi1_lower(pattern_from_name("star3"), 3, 6) == low_complement(3, 6));
  CHECK_THROWS_AS(chi1_lower(pattern_from_name("c4"), 2, 6), Error);
  CHECK_THROWS_AS(chi1_lower(kC3, 2, 6), Error);
}

TEST_CASE("tree families over a partition") {
  const Partition p = Partition::consecutive({3, 3});
  const auto fa = tree_family(p, TreeFamilyVariant::plain);
  CHECK(fa.size() == 24);  // C(6,2) + 3*3
  const auto fpa = tree_family(p, TreeFamilyVariant::pruned);
  CHECK(fpa.size() == 21);  // minus C(3,2) inside the last block

  const Partition single = Partition::consecutive({5});
  const auto lone = tree_family(single, TreeFamilyVariant::plain);
  CHECK(lone.size() == pairs(5));
  for (const QEdge& e : lone.edges()) CHECK((e.a == 1 && e.b == 1));

  // with two blocks the plain family avoids the radius-2, diameter-4 path
  const auto fa9 = tree_family(Partition::balanced(9, 2), TreeFamilyVariant::plain);
  CHECK(fa9.size() == pairs(9) + 20);
  CHECK(verify_free(fa9, pattern_from_name("p5"), 3).free);

  CHECK_THROWS_AS(Partition::consecutive({0, 3}), Error);
  CHECK_THROWS_AS(Partition({{1, 2}, {2, 3}}), Error);  // overlapping blocks
}

TEST_CASE("13/4 construction") {
  const auto h8 = tripart_13_4(8);
  CHECK(h8.size() == 94);  // 1 + 45 + 48
  CHECK(verify_free(h8, pattern_from_name("k2,3,3"), 3).free);

  // density heads towards 13/4 per pair
  const auto h40 = tripart_13_4(40);
  const double ratio = static_cast<double>(h40.size()) / static_cast<double>(pairs(40));
  CHECK(ratio == doctest::Approx(13.0 / 4.0).epsilon(0.05));

  CHECK_THROWS_AS(tripart_13_4(7), Error);
}

TEST_CASE("triangle families: sizes") {
  CHECK(triangle_family(2, 6, 1) == universal_tree(2, 6));
  CHECK(triangle_family(2, 6, 2).size() == 36);   // q^2 floor(n^2/4)
  CHECK(triangle_family(4, 6, 2).size() == 144);
  CHECK(triangle_family(2, 7, 2).size() == 4 * 12);
  CHECK(triangle_family(2, 6, 3).size() == 33);   // (q^2/4)(4k^2 - k), k = 3
  CHECK(triangle_family(4, 6, 3).size() == 132);
  for (int k = 2; k <= 5; ++k)
    CHECK(static_cast<long long>(triangle_family(4, 3 * k, 4).size()) == 36LL * k * k - 7 * k);

  CHECK_THROWS_AS(triangle_family(3, 6, 2), Error);  // odd q
  CHECK_THROWS_AS(triangle_family(2, 5, 3), Error);  // odd n
  CHECK_THROWS_AS(triangle_family(2, 6, 4), Error);  // q != 4
  CHECK_THROWS_AS(triangle_family(4, 7, 4), Error);  // n % 3 != 0
  CHECK_THROWS_AS(triangle_family(2, 6, 5), Error);
}

TEST_CASE("triangle families: freeness") {
  for (int q : {2, 4}) {
    CHECK(verify_free(triangle_family(q, 6, 1), kC3, q + 1).free);
    CHECK(verify_free(triangle_family(q, 6, 2), kC3, q + 1).free);
    CHECK(verify_free(triangle_family(q, 6, 3), kC3, q + 1).free);
  }
  CHECK(verify_free(triangle_family(4, 6, 4), kC3, 5).free);
}

TEST_CASE("triple partition") {
  for (int q = 2; q <= 10; ++q) {
    const auto triples = triple_partition(q);
    CHECK(static_cast<int>(triples.size()) == q * q);
    std::set<QEdge> seen;
    for (const auto& t : triples) {
      for (const QEdge& e : t) CHECK(seen.insert(e).second);  // disjoint
      CHECK(contains_s_copy(QGraph(3, q, {t.begin(), t.end()}), kC3, q + 1).has_value());
    }
    CHECK(seen.size() == full_qgraph(3, q).size());  // full coverage
  }
  CHECK_THROWS_AS(triple_partition(1), Error);
}

TEST_CASE("triple partition contains the documented classes") {
  auto has_triple = [](int q, std::array<QEdge, 3> t) {
    std::sort(t.begin(), t.end());
    for (const auto& cand : triple_partition(q))
      if (cand == t) return true;
    return false;
  };
  // q=2: the rotation class of (1,1),(2,1),(2,2) and the constant (1,2) triple
  CHECK(has_triple(2, {QEdge{1, 2, 1, 1}, QEdge{2, 3, 2, 1}, QEdge{1, 3, 2, 2}}));
  CHECK(has_triple(2, {QEdge{1, 2, 1, 2}, QEdge{2, 3, 1, 2}, QEdge{1, 3, 2, 1}}));
  // q=4 = 3r+1 with r=1: the constant (3,2) triple
  CHECK(has_triple(4, {QEdge{1, 2, 3, 2}, QEdge{2, 3, 3, 2}, QEdge{1, 3, 2, 3}}));
}

TEST_CASE("q=3 slice pair example") {
  const auto h8 = q3_pair_example(8);
  CHECK(h8.size() == 66);
  CHECK(slice(h8, {2, 3}).arcs.size() == 12);  // |A| * |B|
  CHECK(slice(h8, {2, 1}).arcs.size() == 54);  // ordered pairs not inside B
  CHECK(verify_free(h8, kC3, 4).free);

  const auto h40 = q3_pair_example(40);
  const double density =
      static_cast<double>(slice(h40, {2, 3}).arcs.size() + slice(h40, {2, 1}).arcs.size()) /
      (40.0 * 40.0);
  CHECK(density == doctest::Approx(9.0 / 8.0).epsilon(0.03));

  CHECK_THROWS_AS(q3_pair_example(10), Error);
}
