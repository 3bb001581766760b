#include "qturan/qcore.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace qturan {

long long pairs(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

QGraph::QGraph(int n, int q, std::vector<QEdge> edges) : n_(n), q_(q), edges_(std::move(edges)) {
  require(n >= 0, Error::Kind::argument, "q-graph needs n >= 0");
  require(q >= 1, Error::Kind::argument, "q-graph needs q >= 1");
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const QEdge& e = edges_[i];
    require(1 <= e.u && e.u < e.v && e.v <= n_, Error::Kind::argument,
            "q-edge endpoints out of range (need 1 <= u < v <= n)");
    require(1 <= e.a && e.a <= q_ && 1 <= e.b && e.b <= q_, Error::Kind::argument,
            "q-edge weight out of range (need 1 <= a,b <= q)");
    require(i == 0 || edges_[i - 1] != e, Error::Kind::argument, "duplicate q-edge");
  }
}

bool QGraph::contains(const QEdge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::pair<std::size_t, std::size_t> QGraph::support_range(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto lo = std::lower_bound(edges_.begin(), edges_.end(), QEdge{u, v, 0, 0});
  auto hi = std::lower_bound(edges_.begin(), edges_.end(), QEdge{u, v + 1, 0, 0});
  return {static_cast<std::size_t>(lo - edges_.begin()), static_cast<std::size_t>(hi - edges_.begin())};
}

PatternGraph::PatternGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
  require(n >= 0, Error::Kind::argument, "pattern graph needs n >= 0");
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    require(1 <= u && u < v && v <= n_, Error::Kind::argument,
            "pattern edge out of range (need 1 <= u < v <= n, no loops)");
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i)
    require(edges_[i - 1] != edges_[i], Error::Kind::argument, "duplicate pattern edge");
}

std::vector<int> PatternGraph::degrees() const {
  std::vector<int> d(n_ + 1, 0);
  for (auto [u, v] : edges_) {
    ++d[u];
    ++d[v];
  }
  return d;
}

std::vector<std::vector<int>> PatternGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n_ + 1);
  for (auto [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

bool PatternGraph::has_isolated_vertex() const {
  auto d = degrees();
  for (int v = 1; v <= n_; ++v)
    if (d[v] == 0) return true;
  return false;
}

QGraph full_qgraph(int n, int q) {
  require(n >= 2, Error::Kind::argument, "full q-graph needs n >= 2");
  require(q >= 1, Error::Kind::argument, "full q-graph needs q >= 1");
  std::vector<QEdge> edges;
  edges.reserve(static_cast<std::size_t>(q) * q * pairs(n));
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      for (int a = 1; a <= q; ++a)
        for (int b = 1; b <= q; ++b) edges.push_back({u, v, a, b});
  return QGraph(n, q, std::move(edges));
}

std::vector<int> s_sum_intersection(const QEdge& x, const QEdge& y, int s) {
  require(s >= 0, Error::Kind::argument, "s-sum intersection needs s >= 0");
  std::vector<int> out;
  for (int i : {x.u, x.v, y.u, y.v}) {
    if (x.weight_at(i) + y.weight_at(i) >= s) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QGraph low_layer(const QGraph& h) {
  const int t = low_threshold(h.q());
  std::vector<QEdge> kept;
  for (const QEdge& e : h.edges())
    if (e.a >= t && e.b >= t) kept.push_back(e);
  return QGraph(h.n(), h.q(), std::move(kept));
}

PatternGraph support_graph(const QGraph& h) {
  std::vector<std::pair<int, int>> supports;
  for (const QEdge& e : h.edges()) {
    if (supports.empty() || supports.back() != std::make_pair(e.u, e.v))
      supports.emplace_back(e.u, e.v);
  }
  return PatternGraph(h.n(), std::move(supports));
}

SliceGraph slice(const QGraph& h, SlicePair p) {
  require(1 <= p.a && p.a <= h.q() && 1 <= p.b && p.b <= h.q(), Error::Kind::argument,
          "slice weights out of range");
  SliceGraph out;
  out.n = h.n();
  out.directed = p.a != p.b;
  for (const QEdge& e : h.edges()) {
    if (e.a == p.a && e.b == p.b) out.arcs.emplace_back(e.u, e.v);
    if (out.directed && e.a == p.b && e.b == p.a) out.arcs.emplace_back(e.v, e.u);
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  return out;
}

PatternGraph double_slice(const QGraph& h, SlicePair first, SlicePair second) {
  // {i,j} kept iff both weight patterns are realized with a common
  // orientation: (first.a,second.a at i and first.b,second.b at j), or the
  // mirror image of that.
  std::set<std::pair<int, int>> kept;
  for (int u = 1; u <= h.n(); ++u) {
    for (int v = u + 1; v <= h.n(); ++v) {
      const bool fwd = h.contains({u, v, first.a, first.b}) && h.contains({u, v, second.a, second.b});
      const bool bwd = h.contains({u, v, first.b, first.a}) && h.contains({u, v, second.b, second.a});
      if (fwd || bwd) kept.insert({u, v});
    }
  }
  return PatternGraph(h.n(), {kept.begin(), kept.end()});
}

// ---- Serialization -------------------------------------------------------

namespace {

[[noreturn]] void parse_fail(int line, const std::string& message) {
  throw Error(Error::Kind::parse, "line " + std::to_string(line) + ": " + message);
}

// Splits into trimmed lines; keeps 1-based numbering, drops blanks and '#'.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::string trimmed = line.substr(first, last - first + 1);
    if (trimmed[0] == '#') continue;
    out.emplace_back(number, trimmed);
  }
  return out;
}

std::vector<long long> parse_ints(int line, const std::string& s, std::size_t expect) {
  std::istringstream in(s);
  std::vector<long long> vals;
  long long x;
  while (in >> x) vals.push_back(x);
  std::string rest;
  if (!in.eof() && (in.clear(), in >> rest)) parse_fail(line, "unexpected token '" + rest + "'");
  if (vals.size() != expect)
    parse_fail(line, "expected " + std::to_string(expect) + " integers, got " + std::to_string(vals.size()));
  return vals;
}

long long parse_keyval(int line, const std::string& token, const std::string& key) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) parse_fail(line, "expected '" + key + "=<int>', got '" + token + "'");
  long long value = 0;
  const char* begin = token.data() + prefix.size();
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) parse_fail(line, "bad integer in '" + token + "'");
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Error::Kind::io, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Error::Kind::io, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error(Error::Kind::io, "write to '" + path + "' failed");
}

}  // namespace

QGraph parse_qgraph(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error(Error::Kind::parse, "empty q-graph file (missing header)");
  auto [hline, header] = lines.front();
  std::istringstream hin(header);
  std::string tag, ntok, qtok;
  hin >> tag >> ntok >> qtok;
  if (tag != "qgraph" || ntok.empty() || qtok.empty())
    parse_fail(hline, "expected header 'qgraph n=<n> q=<q>'");
  const long long n = parse_keyval(hline, ntok, "n");
  const long long q = parse_keyval(hline, qtok, "q");
  if (n < 0 || n > 100000) parse_fail(hline, "n out of range");
  if (q < 1 || q > 1000) parse_fail(hline, "q out of range");

  std::vector<QEdge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [no, body] = lines[i];
    auto vals = parse_ints(no, body, 4);
    QEdge e{static_cast<int>(vals[0]), static_cast<int>(vals[1]), static_cast<int>(vals[2]),
            static_cast<int>(vals[3])};
    if (!(1 <= e.u && e.u < e.v && e.v <= n)) parse_fail(no, "endpoints out of range (need 1 <= u < v <= n)");
    if (!(1 <= e.a && e.a <= q && 1 <= e.b && e.b <= q)) parse_fail(no, "weight out of range (need 1..q)");
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) parse_fail(no, "duplicate q-edge");
    edges.push_back(e);
  }
  return QGraph(static_cast<int>(n), static_cast<int>(q), std::move(edges));
}

QGraph read_qgraph(const std::string& path) {
  try {
    return parse_qgraph(read_file(path));
  } catch (const Error& e) {
    if (e.kind() == Error::Kind::io) throw;
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string format_qgraph(const QGraph& g) {
  std::ostringstream out;
  out << "qgraph n=" << g.n() << " q=" << g.q() << "\n";
  for (const QEdge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.a << ' ' << e.b << "\n";
  return out.str();
}

void write_qgraph(const QGraph& g, const std::string& path) { write_file(path, format_qgraph(g)); }

PatternGraph parse_pattern(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error(Error::Kind::parse, "empty pattern file (missing header)");
  auto [hline, header] = lines.front();
  std::istringstream hin(header);
  std::string tag, ntok;
  hin >> tag >> ntok;
  if (tag != "graph" || ntok.empty()) parse_fail(hline, "expected header 'graph n=<n>'");
  const long long n = parse_keyval(hline, ntok, "n");
  if (n < 0 || n > 100000) parse_fail(hline, "n out of range");

  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [no, body] = lines[i];
    auto vals = parse_ints(no, body, 2);
    int u = static_cast<int>(vals[0]);
    int v = static_cast<int>(vals[1]);
    if (u > v) std::swap(u, v);
    if (!(1 <= u && u < v && v <= n)) parse_fail(no, "edge out of range (need 1 <= u < v <= n)");
    if (std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end())
      parse_fail(no, "duplicate edge");
    edges.emplace_back(u, v);
  }
  return PatternGraph(static_cast<int>(n), std::move(edges));
}

PatternGraph read_pattern(const std::string& path) {
  try {
    return parse_pattern(read_file(path));
  } catch (const Error& e) {
    if (e.kind() == Error::Kind::io) throw;
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string format_pattern(const PatternGraph& g) {
  std::ostringstream out;
  out << "graph n=" << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << u << ' ' << v << "\n";
  return out.str();
}

void write_pattern(const PatternGraph& g, const std::string& path) {
  write_file(path, format_pattern(g));
}

namespace {

PatternGraph make_path(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < k; ++i) e.emplace_back(i, i + 1);
  return PatternGraph(k, std::move(e));
}

PatternGraph make_cycle(int k) {
  auto p = make_path(k);
  auto e = p.edges();
  e.emplace_back(1, k);
  return PatternGraph(k, std::move(e));
}

PatternGraph make_complete_multipartite(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) n += p;
  std::vector<int> part_of(n + 1);
  int next = 1;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) part_of[next++] = static_cast<int>(i);
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (part_of[u] != part_of[v]) e.emplace_back(u, v);
  return PatternGraph(n, std::move(e));
}

}  // namespace

PatternGraph pattern_from_name(const std::string& name) {
  auto tail_int = [&](std::size_t from, int lo, int hi) {
    long long value = 0;
    const char* begin = name.data() + from;
    const char* end = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    require(ec == std::errc() && ptr == end && lo <= value && value <= hi, Error::Kind::argument,
            "unknown pattern name '" + name + "'");
    return static_cast<int>(value);
  };
  if (name.rfind("star", 0) == 0) return make_complete_multipartite({1, tail_int(4, 1, 64)});
  if (!name.empty() && name[0] == 'c') return make_cycle(tail_int(1, 3, 64));
  if (!name.empty() && name[0] == 'p') return make_path(tail_int(1, 2, 64));
  if (!name.empty() && name[0] == 'k') {
    std::vector<int> parts;
    std::size_t pos = 1;
    while (pos < name.size()) {
      std::size_t comma = name.find(',', pos);
      std::string tok = name.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      long long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      require(ec == std::errc() && ptr == tok.data() + tok.size() && 1 <= value && value <= 64,
              Error::Kind::argument, "unknown pattern name '" + name + "'");
      parts.push_back(static_cast<int>(value));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    require(parts.size() >= 2 && parts.size() <= 4, Error::Kind::argument,
            "unknown pattern name '" + name + "'");
    return make_complete_multipartite(parts);
  }
  throw Error(Error::Kind::argument, "unknown pattern name '" + name + "'");
}

}  // namespace qturan
