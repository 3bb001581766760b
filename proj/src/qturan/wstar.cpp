#include "qturan/wstar.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qturan {

WeightFunction::WeightFunction(int k, int fill) : k_(k) {
  require(k >= 0, Error::Kind::argument, "weight function needs k >= 0");
  require(fill == 0 || fill == 2 || fill == 3, Error::Kind::argument,
          "weights take values in {0,2,3}");
  w_.assign(static_cast<std::size_t>(k) * (k - 1) / 2, fill);
}

std::size_t WeightFunction::index(int u, int v) const {
  require(1 <= u && u <= k_ && 1 <= v && v <= k_ && u != v, Error::Kind::argument,
          "weight function pair out of range");
  if (u > v) std::swap(u, v);
  // pairs (1,2),(1,3),...,(1,k),(2,3),...: offset of row u plus column.
  return static_cast<std::size_t>(u - 1) * k_ - static_cast<std::size_t>(u) * (u - 1) / 2 +
         (v - u - 1);
}

int WeightFunction::at(int u, int v) const { return w_[index(u, v)]; }

void WeightFunction::set(int u, int v, int w) {
  require(w == 0 || w == 2 || w == 3, Error::Kind::argument, "weights take values in {0,2,3}");
  w_[index(u, v)] = w;
}

long long WeightFunction::total_weight() const {
  long long sum = 0;
  for (int w : w_) sum += w;
  return sum;
}

long long WeightFunction::degree(int v) const {
  long long sum = 0;
  for (int x = 1; x <= k_; ++x)
    if (x != v) sum += at(v, x);
  return sum;
}

StarCheck check_star(const WeightFunction& w) {
  const int k = w.k();
  for (int u = 1; u <= k; ++u)
    for (int v = u + 1; v <= k; ++v) {
      if (w.at(u, v) != 3) continue;
      for (int x = v + 1; x <= k; ++x)
        if (w.at(u, x) == 3 && w.at(v, x) == 3)
          return {false, StarViolation{StarViolation::Kind::triangle, {u, v, x, 0}}};
    }
  // 4-cycles u-v-x-y of 3-edges, with diagonals {u,x} and {v,y}.
  for (int u = 1; u <= k; ++u)
    for (int x = u + 1; x <= k; ++x) {
      for (int v = 1; v <= k; ++v) {
        if (v == u || v == x || w.at(u, v) != 3 || w.at(v, x) != 3) continue;
        for (int y = v + 1; y <= k; ++y) {
          if (y == u || y == x || w.at(x, y) != 3 || w.at(y, u) != 3) continue;
          if (w.at(u, x) != 0 && w.at(v, y) != 0)
            return {false, StarViolation{StarViolation::Kind::four_cycle, {u, v, x, y}}};
        }
      }
    }
  return {true, std::nullopt};
}

WeightFunction zykov_shift(const WeightFunction& w, int u, int v) {
  require(u != v, Error::Kind::argument, "shift needs two distinct vertices");
  WeightFunction out = w;
  out.set(u, v, 0);
  for (int x = 1; x <= w.k(); ++x)
    if (x != u && x != v) out.set(u, x, w.at(v, x));
  return out;
}

namespace {

// Branch and bound over the pairs in lexicographic order, trying weights
// 3, 2, 0. Violations are caught incrementally: a triangle when its last
// 3-edge arrives, a bad 4-cycle when the later of "last cycle edge" and
// "second non-zero diagonal" arrives.
class MaxStarSolver {
 public:
  explicit MaxStarSolver(int k) : k_(k), w_(k, 0), best_(k, 0) {
    for (int u = 1; u <= k; ++u)
      for (int v = u + 1; v <= k; ++v) pairs_.emplace_back(u, v);
    assigned_.assign(pairs_.size(), false);
  }

  MaxStarResult run() {
    dfs(0, 0);
    return {best_value_, best_, nodes_};
  }

 private:
  bool legal(std::size_t idx, int value) {
    const auto [u, v] = pairs_[idx];
    if (value == 3) {
      for (int x = 1; x <= k_; ++x) {
        if (x == u || x == v) continue;
        if (get(u, x) == 3 && get(v, x) == 3) return false;  // closes a triangle
      }
      // uv as a cycle edge: cycle u-v-x-y with diagonals {u,x}, {v,y}.
      for (int x = 1; x <= k_; ++x) {
        if (x == u || x == v || get(v, x) != 3) continue;
        for (int y = 1; y <= k_; ++y) {
          if (y == u || y == v || y == x) continue;
          if (get(x, y) == 3 && get(y, u) == 3 && nonzero(u, x) && nonzero(v, y)) return false;
        }
      }
    }
    if (value != 0) {
      // uv as a diagonal: cycle u-a-v-b with the other diagonal {a,b}.
      for (int a = 1; a <= k_; ++a) {
        if (a == u || a == v || get(u, a) != 3 || get(a, v) != 3) continue;
        for (int b = a + 1; b <= k_; ++b) {
          if (b == u || b == v || get(v, b) != 3 || get(b, u) != 3) continue;
          if (nonzero(a, b)) return false;
        }
      }
    }
    return true;
  }

  void dfs(std::size_t idx, long long sum) {
    ++nodes_;
    if (sum + 3 * static_cast<long long>(pairs_.size() - idx) <= best_value_) return;
    if (idx == pairs_.size()) {
      best_value_ = sum;
      best_ = w_;
      return;
    }
    const auto [u, v] = pairs_[idx];
    for (int value : {3, 2, 0}) {
      if (!legal(idx, value)) continue;
      w_.set(u, v, value);
      assigned_[idx] = true;
      dfs(idx + 1, sum + value);
      assigned_[idx] = false;
    }
  }

  // Weight if assigned, -1 otherwise.
  int get(int u, int v) {
    const std::size_t idx = pair_index(u, v);
    return assigned_[idx] ? w_.at(u, v) : -1;
  }
  bool nonzero(int u, int v) {
    const int w = get(u, v);
    return w == 2 || w == 3;
  }
  std::size_t pair_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    return static_cast<std::size_t>(u - 1) * k_ - static_cast<std::size_t>(u) * (u - 1) / 2 +
           (v - u - 1);
  }

  int k_;
  WeightFunction w_;
  WeightFunction best_;
  long long best_value_ = -1;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<bool> assigned_;
  long long nodes_ = 0;
};

}  // namespace

MaxStarResult max_star_weight(int k, int cap) {
  require(k >= 0, Error::Kind::argument, "maximization needs k >= 0");
  require(k <= cap, Error::Kind::limit,
          "maximization cap exceeded: k = " + std::to_string(k) + " (cap " + std::to_string(cap) + ")");
  if (k < 2) return {0, WeightFunction(k, 0), 1};
  return MaxStarSolver(k).run();
}

WeightFunction quarter_split(int k) {
  require(k >= 0, Error::Kind::argument, "quarter split needs k >= 0");
  const int x = k / 4;
  WeightFunction w(k, 0);
  for (int u = 1; u <= k; ++u)
    for (int v = u + 1; v <= k; ++v) {
      if (u <= x && v <= x)
        w.set(u, v, 0);
      else if (u > x && v > x)
        w.set(u, v, 2);
      else
        w.set(u, v, 3);
    }
  return w;
}

WeightFunction parse_wstar(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& message) -> void {
    throw Error(Error::Kind::parse, "line " + std::to_string(lineno) + ": " + message);
  };

  int k = -1;
  std::optional<WeightFunction> w;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    if (k < 0) {
      if (first != "wstar") fail("expected header 'wstar k=<k>'");
      std::string ktok;
      if (!(ls >> ktok) || ktok.rfind("k=", 0) != 0) fail("expected header 'wstar k=<k>'");
      try {
        k = std::stoi(ktok.substr(2));
      } catch (...) {
        fail("bad integer in '" + ktok + "'");
      }
      if (k < 0 || k > 64) fail("k out of range");
      w.emplace(k, 0);
      seen.assign(static_cast<std::size_t>(k) * (k - 1) / 2, false);
      continue;
    }
    int u, v, value;
    std::istringstream body(line);
    if (!(body >> u >> v >> value)) fail("expected 'u v w'");
    if (!(1 <= u && u <= k && 1 <= v && v <= k && u != v)) fail("pair out of range");
    if (value != 0 && value != 2 && value != 3) fail("weight must be 0, 2 or 3");
    const std::size_t idx = static_cast<std::size_t>(std::min(u, v) - 1) * k -
                            static_cast<std::size_t>(std::min(u, v)) * (std::min(u, v) - 1) / 2 +
                            (std::max(u, v) - std::min(u, v) - 1);
    if (seen[idx]) fail("duplicate pair");
    seen[idx] = true;
    w->set(u, v, value);
  }
  if (k < 0) throw Error(Error::Kind::parse, "empty weight-function file (missing header)");
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw Error(Error::Kind::parse, "weight function is not total: some pair is missing");
  return *w;
}

WeightFunction read_wstar(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Error::Kind::io, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_wstar(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string format_wstar(const WeightFunction& w) {
  std::ostringstream out;
  out << "wstar k=" << w.k() << "\n";
  for (int u = 1; u <= w.k(); ++u)
    for (int v = u + 1; v <= w.k(); ++v) out << u << ' ' << v << ' ' << w.at(u, v) << "\n";
  return out.str();
}

void write_wstar(const WeightFunction& w, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Error::Kind::io, "cannot open '" + path + "' for writing");
  out << format_wstar(w);
  if (!out) throw Error(Error::Kind::io, "write to '" + path + "' failed");
}

}  // namespace qturan
