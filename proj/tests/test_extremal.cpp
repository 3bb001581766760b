#include <doctest.h>

#include "helpers.hpp"
#include "qturan/constructions.hpp"
#include "qturan/extremal.hpp"
#include "qturan/oracle.hpp"

using namespace qturan;

namespace {
const PatternGraph kC3 = pattern_from_name("c3");
const PatternGraph kC4 = pattern_from_name("c4");
const PatternGraph kK2 = pattern_from_name("p2");
}  // namespace

TEST_CASE("forbidden configurations") {
  const auto hg = forbidden_configs(3, 2, kC3, 3);
  CHECK(hg.ground.size() == 12);
  CHECK(hg.hyperedges.size() == 27);
  for (const auto& he : hg.hyperedges) {
    CHECK(he.size() == 3);
    std::vector<QEdge> members;
    for (int e : he) members.push_back(hg.ground[e]);
    CHECK(contains_s_copy(QGraph(3, 2, members), kC3, 3).has_value());
  }

  CHECK(forbidden_configs(3, 3, kC3, 4).hyperedges.size() == 216);
  CHECK(forbidden_configs(3, 2, kC4, 3).hyperedges.empty());

  const auto singletons = forbidden_configs(3, 2, kK2, 3);
  CHECK(singletons.hyperedges.size() == 12);  // 3 q^2 singletons
  for (const auto& he : singletons.hyperedges) CHECK(he.size() == 1);

  CHECK_THROWS_AS(forbidden_configs(6, 3, kC3, 4, 50), Error);   // ground guard
  CHECK_THROWS_AS(forbidden_configs(3, 2, PatternGraph(3, {}), 3), Error);
}

TEST_CASE("exact extremal values at small scale") {
  auto value = [](int n, const PatternGraph& f, int q, int s) {
    const auto r = extremal_number(n, f, q, s);
    CHECK(r.status == SearchStatus::exact);
    CHECK(static_cast<long long>(r.witness.size()) == r.value);
    CHECK(verify_free(r.witness, f, s).free);
    return r.value;
  };

  CHECK(value(3, kC3, 2, 3) == 8);
  CHECK(value(3, kC3, 3, 4) == 18);
  CHECK(value(2, kC3, 2, 3) == 4);
  CHECK(value(2, kC3, 3, 4) == 9);
  CHECK(value(4, kK2, 2, 3) == 0);
  CHECK(value(3, kK2, 3, 4) == 0);
}

TEST_CASE("exact extremal value for n=4, q=2") {
  const auto r = extremal_number(4, kC3, 2, 3);
  CHECK(r.status == SearchStatus::exact);
  CHECK(r.value == 16);
  CHECK(verify_free(r.witness, kC3, 3).free);
}

TEST_CASE("ordinary Turan numbers follow the bipartite bound") {
  const long long expect[] = {0, 0, 1, 2, 4, 6, 9, 12};  // floor(n^2/4)
  for (int n = 3; n <= 7; ++n) {
    const auto r = ordinary_turan(n, kC3);
    CHECK(r.status == SearchStatus::exact);
    CHECK(r.value == expect[n]);
  }
  CHECK(ordinary_turan(3, kK2).value == 0);
}

TEST_CASE("maximality certificate of exact witnesses") {
  const auto r = extremal_number(3, kC3, 2, 3);
  REQUIRE(r.status == SearchStatus::exact);
  const auto& witness = r.witness;
  const auto full = full_qgraph(3, 2);
  for (const QEdge& e : full.edges()) {
    if (witness.contains(e)) continue;
    auto edges = witness.edges();
    edges.push_back(e);
    const QGraph extended(3, 2, std::move(edges));
    CHECK_FALSE(verify_free(extended, kC3, 3).free);
  }
}

TEST_CASE("budget exhaustion degrades to a lower bound") {
  ExtremalOptions opts;
  opts.budget_nodes = 1;
  const auto r = extremal_number(3, kC3, 3, 4, opts);
  CHECK(r.status == SearchStatus::lower_bound);
  CHECK(r.value <= 18);
  CHECK(verify_free(r.witness, kC3, 4).free);
  CHECK(static_cast<long long>(r.witness.size()) == r.value);
}

TEST_CASE("sandwich and monotonicity properties") {
  // q^2 * ex(n,F) <= ex(n,F,q,q+1) <= q^2 * C(n,2)
  for (auto [n, q] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {3, 3}}) {
    const long long lower = 1LL * q * q * ordinary_turan(n, kC3).value;
    const long long mid = extremal_number(n, kC3, q, q + 1).value;
    CHECK(lower <= mid);
    CHECK(mid <= 1LL * q * q * pairs(n));
  }
  // monotone in n
  CHECK(extremal_number(2, kC3, 2, 3).value <= extremal_number(3, kC3, 2, 3).value);
  CHECK(extremal_number(3, kC3, 2, 3).value <= extremal_number(4, kC3, 2, 3).value);
  // monotone in s
  CHECK(extremal_number(3, kC3, 2, 3).value <= extremal_number(3, kC3, 2, 4).value);
}

TEST_CASE("averaging bound between n=3 and n=4") {
  for (int q : {2, 3}) {
    const auto v3 = extremal_number(3, kC3, q, q + 1);
    const auto v4 = extremal_number(4, kC3, q, q + 1);
    CHECK(v3.status == SearchStatus::exact);
    CHECK(v4.status == SearchStatus::exact);
    CHECK(2 * v4.value <= 4 * v3.value);
    CHECK(v3.value == 2LL * q * q);
    CHECK(v4.value == 4LL * q * q);
  }
}

TEST_CASE("agreement with the subset-scan oracle") {
  CHECK(extremal_number(3, kC3, 2, 3).value == oracle::extremal_bruteforce(3, kC3, 2, 3));
  CHECK(ordinary_turan(4, kC3).value == oracle::extremal_bruteforce(4, kC3, 1, 2));
  CHECK(ordinary_turan(5, kC3).value == oracle::extremal_bruteforce(5, kC3, 1, 2));
  const PatternGraph p3 = pattern_from_name("p3");
  CHECK(extremal_number(3, p3, 2, 3).value == oracle::extremal_bruteforce(3, p3, 2, 3));
  CHECK(extremal_number(3, p3, 2, 2).value == oracle::extremal_bruteforce(3, p3, 2, 2));
}

TEST_CASE("root symmetry branching does not change values") {
  ExtremalOptions plain;
  plain.root_symmetry = false;
  CHECK(extremal_number(3, kC3, 2, 3, plain).value == 8);
  CHECK(extremal_number(3, kC3, 3, 4, plain).value == 18);
  CHECK(ordinary_turan(5, kC3, plain).value == 6);
}

TEST_CASE("freeness verification") {
  CHECK(verify_free(universal_tree(3, 6), kC4, 4).free);
  const auto bad = verify_free(blowup(kC3, 2), kC3, 3);
  CHECK_FALSE(bad.free);
  REQUIRE(bad.violation.has_value());
  CHECK(embedding_valid(blowup(kC3, 2), kC3, 3, *bad.violation));
  CHECK(verify_free(QGraph(4, 2, {}), kC3, 3).free);
}
