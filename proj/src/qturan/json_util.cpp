#include "qturan/json_util.hpp"

#include "qturan/rng.hpp"

namespace qturan {

Json qgraph_to_json(const QGraph& g) {
  Json edges = Json::array();
  for (const QEdge& e : g.edges()) edges.push_back({e.u, e.v, e.a, e.b});
  return Json{{"n", g.n()}, {"q", g.q()}, {"edges", std::move(edges)}};
}

QGraph qgraph_from_json(const Json& j) {
  try {
    std::vector<QEdge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 4)
        throw Error(Error::Kind::parse, "q-edge must be an array [u,v,a,b]");
      edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>()});
    }
    return QGraph(j.at("n").get<int>(), j.at("q").get<int>(), std::move(edges));
  } catch (const Json::exception& e) {
    throw Error(Error::Kind::parse, std::string("bad q-graph JSON: ") + e.what());
  }
}

Json pattern_to_json(const PatternGraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

PatternGraph pattern_from_json(const Json& j) {
  try {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw Error(Error::Kind::parse, "pattern edge must be an array [u,v]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return PatternGraph(j.at("n").get<int>(), std::move(edges));
  } catch (const Json::exception& e) {
    throw Error(Error::Kind::parse, std::string("bad pattern JSON: ") + e.what());
  }
}

Json embedding_to_json(const Embedding& emb) {
  Json vm = Json::array();
  for (auto [pv, hv] : emb.vertex_map) vm.push_back({pv, hv});
  Json em = Json::array();
  for (const auto& [pe, qe] : emb.edge_map)
    em.push_back(Json{{"pattern_edge", {pe.first, pe.second}}, {"q_edge", {qe.u, qe.v, qe.a, qe.b}}});
  return Json{{"vertex_map", std::move(vm)}, {"edges", std::move(em)}};
}

Json search_result_to_json(const SearchResult& r) {
  return Json{{"value", r.value},
              {"status", to_string(r.status)},
              {"witness", qgraph_to_json(r.witness)},
              {"nodes", r.nodes},
              {"seconds", r.seconds}};
}

Json experiment_to_json(const ExperimentReport& r) {
  Json log = Json::array();
  for (const auto& t : r.log)
    log.push_back(Json{{"trial", t.trial},
                       {"seed", t.seed},
                       {"edges", t.edges},
                       {"chi", t.chi},
                       {"chi1", t.chi1}});
  return Json{{"m", r.m},
              {"r", r.r},
              {"p", r.p},
              {"trials", r.trials},
              {"seed", r.seed},
              {"rng", kRngName},
              {"frequency", r.frequency},
              {"log", std::move(log)}};
}

Json wstar_to_json(const WeightFunction& w) {
  Json entries = Json::array();
  for (int u = 1; u <= w.k(); ++u)
    for (int v = u + 1; v <= w.k(); ++v) entries.push_back({u, v, w.at(u, v)});
  return Json{{"k", w.k()}, {"weights", std::move(entries)}, {"total", w.total_weight()}};
}

Json star_check_to_json(const StarCheck& c) {
  Json out{{"ok", c.ok}};
  if (c.violation) {
    const auto& v = *c.violation;
    if (v.kind == StarViolation::Kind::triangle)
      out["violation"] = Json{{"kind", "triangle"}, {"vertices", {v.vertices[0], v.vertices[1], v.vertices[2]}}};
    else
      out["violation"] = Json{{"kind", "four_cycle"},
                              {"cycle", {v.vertices[0], v.vertices[1], v.vertices[2], v.vertices[3]}}};
  }
  return out;
}

}  // namespace qturan
