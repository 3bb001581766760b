#include "qturan/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

#include "qturan/constructions.hpp"
#include "qturan/detect.hpp"
#include "qturan/extremal.hpp"
#include "qturan/oracle.hpp"
#include "qturan/qcore.hpp"
#include "qturan/rng.hpp"
#include "qturan/robust.hpp"
#include "qturan/wstar.hpp"

namespace qturan::acceptance {

namespace {

// Collects failures; a criterion passes when nothing was recorded.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.empty()) first_failure_ = what;
    if (!ok) ++failures_count_, failures_.push_back(what);
  }

  bool ok() const { return failures_count_ == 0; }

  std::string summary(const std::string& scope) const {
    std::ostringstream out;
    if (ok()) {
      out << scope << " (" << checks_ << " checks)";
    } else {
      out << failures_count_ << "/" << checks_ << " checks failed; first: " << first_failure_;
    }
    return out.str();
  }

 private:
  int checks_ = 0;
  int failures_count_ = 0;
  std::string first_failure_;
  std::vector<std::string> failures_;
};

std::string fmt(const char* format, auto... args) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), format, args...);
  return buffer;
}

CriterionResult criterion_counts() {
  Checker c;
  for (int q = 1; q <= 6; ++q)
    for (int n = 2; n <= 10; ++n)
      c.expect(static_cast<long long>(universal_tree(q, n).size()) == (1LL * q * q / 2) * pairs(n),
               fmt("universal tree size q=%d n=%d", q, n));
  for (int q = 1; q <= 6; ++q)
    for (int n = 2; n <= 10; ++n) {
      const long long keep = q - low_threshold(q) + 1;
      c.expect(static_cast<long long>(low_complement(q, n).size()) ==
                   (1LL * q * q - keep * keep) * pairs(n),
               fmt("low complement size q=%d n=%d", q, n));
    }
  c.expect(tripart_13_4(8).size() == 94, "tripart construction size at n=8");
  for (int k = 2; k <= 5; ++k)
    c.expect(static_cast<long long>(triangle_family(4, 3 * k, 4).size()) == 36LL * k * k - 7 * k,
             fmt("triangle family variant 4 size k=%d", k));
  return {1, "count formulas", c.ok(), c.summary("exact sizes over the full grid"), 0.0};
}

CriterionResult criterion_universal_tree_freeness() {
  Checker c;
  for (int q : {2, 3, 4})
    for (int n : {5, 6, 7})
      for (int k : {3, 4, 5})
        c.expect(verify_free(universal_tree(q, n), pattern_from_name("c" + std::to_string(k)),
                             q + 1)
                     .free,
                 fmt("universal tree q=%d n=%d vs c%d", q, n, k));
  return {2, "universal tree cycle-freeness", c.ok(),
          c.summary("no (q+1)-copy of c3..c5 for q in {2,3,4}, n in {5,6,7}"), 0.0};
}

CriterionResult criterion_exact_extremal() {
  Checker c;
  const auto c3 = pattern_from_name("c3");
  auto run = [&](int n, int q, int s, long long expect) {
    const auto r = extremal_number(n, c3, q, s);
    c.expect(r.status == SearchStatus::exact, fmt("status exact for n=%d q=%d", n, q));
    c.expect(r.value == expect, fmt("value n=%d q=%d: got %lld want %lld", n, q, r.value, expect));
    c.expect(verify_free(r.witness, c3, s).free, fmt("witness free n=%d q=%d", n, q));
  };
  run(3, 2, 3, 8);
  run(3, 3, 4, 18);
  run(4, 2, 3, 16);
  return {3, "exact extremal values", c.ok(), c.summary("ex(3,c3,2)=8, ex(3,c3,3)=18, ex(4,c3,2)=16"),
          0.0};
}

CriterionResult criterion_ordinary_turan() {
  Checker c;
  const auto c3 = pattern_from_name("c3");
  for (int n = 3; n <= 7; ++n) {
    const auto r = ordinary_turan(n, c3);
    c.expect(r.status == SearchStatus::exact && r.value == 1LL * n * n / 4,
             fmt("ex(%d,c3) = floor(n^2/4)", n));
  }
  return {4, "ordinary Turan regression", c.ok(), c.summary("ex(n,c3) for n in 3..7"), 0.0};
}

CriterionResult criterion_triple_partition() {
  Checker c;
  const auto c3 = pattern_from_name("c3");
  for (int q = 2; q <= 10; ++q) {
    const auto triples = triple_partition(q);
    c.expect(static_cast<int>(triples.size()) == q * q, fmt("q=%d: %d triples", q, static_cast<int>(triples.size())));
    std::set<QEdge> seen;
    bool disjoint = true;
    bool all_triangles = true;
    for (const auto& t : triples) {
      for (const QEdge& e : t) disjoint = disjoint && seen.insert(e).second;
      all_triangles = all_triangles &&
                      contains_s_copy(QGraph(3, q, {t.begin(), t.end()}), c3, q + 1).has_value();
    }
    c.expect(disjoint && seen.size() == full_qgraph(3, q).size(), fmt("q=%d: partition of Q(3,2)", q));
    c.expect(all_triangles, fmt("q=%d: triples are (q+1)-triangles", q));
  }
  return {5, "triple partition", c.ok(), c.summary("q^2 disjoint (q+1)-triangles covering Q(3,2), q in 2..10"),
          0.0};
}

CriterionResult criterion_robust_chromatic() {
  Checker c;
  for (int r = 1; r <= 3; ++r)
    for (int s = r; s <= 3; ++s)
      for (int t = s; t <= 3; ++t) {
        const auto f = pattern_from_name("k" + std::to_string(r) + "," + std::to_string(s) + "," +
                                         std::to_string(t));
        const int expected = (t == 1) ? 1 : (r <= 2 ? 2 : 3);
        c.expect(robust_chromatic(f) == expected, fmt("chi1(K_{%d,%d,%d}) = %d", r, s, t, expected));
      }
  c.expect(robust_chromatic(pattern_from_name("c3")) == 1, "chi1(c3) = 1");

  Rng rng(20250810);
  for (int it = 0; it < 100; ++it) {
    const int n = 1 + static_cast<int>(rng.next_below(8));
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng.next_unit() < 0.5) edges.emplace_back(u, v);
    const PatternGraph f(n, std::move(edges));
    c.expect(robust_chromatic(f) <= chromatic_number(f), fmt("chi1 <= chi on random graph %d", it));
  }
  return {6, "robust chromatic numbers", c.ok(),
          c.summary("tripartite table, chi1(c3)=1, chi1<=chi on 100 random graphs"), 0.0};
}

CriterionResult criterion_construction_freeness() {
  Checker c;
  c.expect(verify_free(tripart_13_4(8), pattern_from_name("k2,3,3"), 3).free,
           "tripart(8) has no 3-copy of K_{2,3,3}");
  c.expect(verify_free(q3_pair_example(8), pattern_from_name("c3"), 4).free,
           "q3 pair example(8) has no 4-copy of c3");
  c.expect(verify_free(tree_family(Partition::balanced(9, 2), TreeFamilyVariant::plain),
                       pattern_from_name("p5"), 3)
               .free,
           "tree family over [9] has no 3-copy of p5");
  const auto c3 = pattern_from_name("c3");
  for (int q : {2, 4})
    for (int variant : {1, 2, 3})
      c.expect(verify_free(triangle_family(q, 6, variant), c3, q + 1).free,
               fmt("triangle family v%d q=%d n=6", variant, q));
  c.expect(verify_free(triangle_family(4, 6, 4), c3, 5).free, "triangle family v4 q=4 n=6");
  return {7, "construction freeness certificates", c.ok(),
          c.summary("tripart, q3 pair, tree family, all triangle variants"), 0.0};
}

CriterionResult criterion_wstar() {
  Checker c;
  // exhaustive scan values, cross-validated against the branch and bound
  const long long expect[6] = {0, 0, 3, 8, 15, 0};
  for (int k = 2; k <= 5; ++k) {
    const auto scan = oracle::max_star_weight_exhaustive(k);
    const auto bb = max_star_weight(k);
    c.expect(scan.first == bb.value, fmt("scan vs branch and bound at k=%d", k));
    if (k <= 4) c.expect(scan.first == expect[k], fmt("max weight k=%d is %lld", k, expect[k]));
    c.expect(check_star(bb.witness).ok && bb.witness.total_weight() == bb.value,
             fmt("witness at k=%d", k));
  }
  for (int k = 1; k <= 12; ++k) {
    const auto w = quarter_split(k);
    const long long x = k / 4;
    c.expect(check_star(w).ok, fmt("quarter split satisfies the condition, k=%d", k));
    c.expect(w.total_weight() == 3 * x * (k - x) + (k - x) * (k - x - 1),
             fmt("quarter split weight, k=%d", k));
  }

  Rng rng(88);
  int tested = 0;
  while (tested < 1000) {
    const int k = 2 + static_cast<int>(rng.next_below(5));  // 2..6
    WeightFunction w(k, 0);
    for (int u = 1; u <= k; ++u)
      for (int v = u + 1; v <= k; ++v) {
        const double x = rng.next_unit();
        w.set(u, v, x < 0.34 ? 3 : x < 0.67 ? 2 : 0);
      }
    if (!check_star(w).ok) continue;
    ++tested;
    for (int u = 1; u <= k; ++u)
      for (int v = 1; v <= k; ++v) {
        if (u == v) continue;
        const auto shifted = zykov_shift(w, u, v);
        if (!check_star(shifted).ok) {
          c.expect(false, fmt("shift broke the condition (instance %d)", tested));
          break;
        }
        if (w.degree(v) - w.degree(u) >= w.at(u, v) &&
            w.total_weight() > shifted.total_weight()) {
          c.expect(false, fmt("shift weight inequality failed (instance %d)", tested));
          break;
        }
      }
  }
  c.expect(tested == 1000, "generated 1000 admissible instances");
  return {8, "weight-function oracle", c.ok(),
          c.summary("maxima 3/8/15, dual-route check, quarter split, 1000 shift instances"), 0.0};
}

CriterionResult criterion_experiment() {
  Checker c;
  const auto dense = chi1_experiment(6, 3, 0.95, 50, 42);
  c.expect(dense.frequency >= 0.9,
           fmt("frequency %.3f >= 0.9 for m=6 r=3 p=0.95 seed=42", dense.frequency));
  const auto bip = chi1_experiment(6, 2, 1.0, 10, 1);
  c.expect(bip.frequency == 1.0, fmt("frequency %.3f == 1.0 for m=6 r=2 p=1", bip.frequency));
  return {9, "random multipartite experiment", c.ok(),
          c.summary(fmt("frequencies %.3f and %.3f", dense.frequency, bip.frequency)), 0.0};
}

CriterionResult criterion_detector_oracle() {
  Checker c;
  Rng rng(424242);
  for (int it = 0; it < 200; ++it) {
    const int n = 3 + static_cast<int>(rng.next_below(3));  // 3..5
    const int q = 1 + static_cast<int>(rng.next_below(2));  // 1..2
    const int fn = 2 + static_cast<int>(rng.next_below(3)); // 2..4
    std::vector<QEdge> qedges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        for (int a = 1; a <= q; ++a)
          for (int b = 1; b <= q; ++b)
            if (rng.next_unit() < 0.5) qedges.push_back({u, v, a, b});
    const QGraph h(n, q, std::move(qedges));
    std::vector<std::pair<int, int>> fedges;
    for (int u = 1; u <= fn; ++u)
      for (int v = u + 1; v <= fn; ++v)
        if (rng.next_unit() < 0.6) fedges.emplace_back(u, v);
    const PatternGraph f(fn, std::move(fedges));
    if (f.edges().empty()) continue;
    const int s = 1 + static_cast<int>(rng.next_below(2 * q));
    const auto fast = contains_s_copy(h, f, s);
    const bool slow = oracle::contains_s_copy_bruteforce(h, f, s);
    c.expect(fast.has_value() == slow, fmt("instance %d: detector %d oracle %d", it,
                                           fast.has_value() ? 1 : 0, slow ? 1 : 0));
    if (fast) c.expect(embedding_valid(h, f, s, *fast), fmt("instance %d: witness valid", it));
  }
  return {10, "detector oracle equivalence", c.ok(), c.summary("200 randomized instances"), 0.0};
}

}  // namespace

std::vector<CriterionResult> run_all() {
  using Runner = CriterionResult (*)();
  const Runner runners[] = {
      criterion_counts,          criterion_universal_tree_freeness,
      criterion_exact_extremal,  criterion_ordinary_turan,
      criterion_triple_partition, criterion_robust_chromatic,
      criterion_construction_freeness, criterion_wstar,
      criterion_experiment,      criterion_detector_oracle,
  };
  std::vector<CriterionResult> out;
  for (Runner run : runners) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r.id = static_cast<int>(out.size()) + 1;
      r.name = "criterion " + std::to_string(r.id);
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

nlohmann::ordered_json to_json(const std::vector<CriterionResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results)
    arr.push_back({{"id", r.id},
                   {"name", r.name},
                   {"passed", r.passed},
                   {"detail", r.detail},
                   {"seconds", r.seconds}});
  return {{"all_passed", all_passed(results)}, {"criteria", std::move(arr)}};
}

}  // namespace qturan::acceptance
