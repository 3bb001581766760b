#pragma once

// Weight functions E(K_k) -> {0,2,3}, the star condition, Zykov shifts,
// and exact maximization of the total weight under the condition.
//
// The star condition requires (i) the 3-weighted edges to form a
// triangle-free graph and (ii) every 4-cycle of 3-weighted edges to have a
// 0-weighted diagonal.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qturan/error.hpp"

namespace qturan {

class WeightFunction {
 public:
  WeightFunction() = default;
  // All pairs initialized to `fill` (one of 0, 2, 3).
  explicit WeightFunction(int k, int fill = 0);

  int k() const { return k_; }
  int at(int u, int v) const;
  void set(int u, int v, int w);

  long long total_weight() const;
  long long degree(int v) const;

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  std::size_t index(int u, int v) const;
  int k_ = 0;
  std::vector<int> w_;
};

struct StarViolation {
  enum class Kind { triangle, four_cycle };
  Kind kind = Kind::triangle;
  // triangle: vertices[0..2]; four_cycle: the cycle u,v,x,y in order, with
  // diagonals {u,x} and {v,y} both non-zero.
  std::array<int, 4> vertices{};
};

struct StarCheck {
  bool ok = true;
  std::optional<StarViolation> violation;
};

StarCheck check_star(const WeightFunction& w);

// Re-weights u's pairs to copy v's and zeroes uv; preserves the star
// condition. The total weight changes by degree(v) - degree(u) - w(uv).
WeightFunction zykov_shift(const WeightFunction& w, int u, int v);

struct MaxStarResult {
  long long value = 0;
  WeightFunction witness;
  long long nodes = 0;
};

// Exact maximum total weight over all weight functions on K_k satisfying
// the star condition, by branch and bound over the pairs in lexicographic
// order. Capped (the raw space is 3^C(k,2)).
MaxStarResult max_star_weight(int k, int cap = 7);

// Sharpness witness: block X of floor(k/4) vertices with 0-weights inside,
// 3-weights between X and the rest, 2-weights inside the rest. Satisfies
// the star condition; total weight 3x(k-x) + 2*C(k-x,2) with x = floor(k/4).
WeightFunction quarter_split(int k);

// Serialization: header "wstar k=<k>" then one "u v w" line per pair; all
// C(k,2) pairs must be present.
WeightFunction parse_wstar(const std::string& text);
WeightFunction read_wstar(const std::string& path);
std::string format_wstar(const WeightFunction& w);
void write_wstar(const WeightFunction& w, const std::string& path);

}  // namespace qturan
