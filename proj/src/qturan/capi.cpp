// extern "C" layer over the C++ core: exceptions become status codes, the
// failing message is parked in a thread-local slot, composite results are
// serialized to JSON strings owned by the caller.

#include "qturan.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>
#include <thread>

#include "qturan/acceptance.hpp"
#include "qturan/constructions.hpp"
#include "qturan/detect.hpp"
#include "qturan/extremal.hpp"
#include "qturan/json_util.hpp"
#include "qturan/oracle.hpp"
#include "qturan/qcore.hpp"
#include "qturan/robust.hpp"
#include "qturan/wstar.hpp"

struct qt_qgraph {
  qturan::QGraph impl;
};

struct qt_pattern {
  qturan::PatternGraph impl;
};

namespace {

thread_local std::string g_last_error = "no error";

qt_status status_of(qturan::Error::Kind kind) {
  switch (kind) {
    case qturan::Error::Kind::argument: return QT_ERROR_ARGUMENT;
    case qturan::Error::Kind::parse: return QT_ERROR_PARSE;
    case qturan::Error::Kind::io: return QT_ERROR_IO;
    case qturan::Error::Kind::limit: return QT_ERROR_LIMIT;
  }
  return QT_ERROR_INTERNAL;
}

template <typename Fn>
qt_status guarded(Fn&& fn) {
  try {
    fn();
    return QT_OK;
  } catch (const qturan::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QT_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return QT_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qt_status require_args(bool ok) {
  if (!ok) {
    g_last_error = "null argument";
    return QT_ERROR_ARGUMENT;
  }
  return QT_OK;
}

}  // namespace

extern "C" {

const char* qt_last_error(void) { return g_last_error.c_str(); }

void qt_string_free(char* s) { std::free(s); }

/* ---- q-graphs ---- */

qt_status qt_qgraph_read(const char* path, qt_qgraph** out) {
  if (auto s = require_args(path && out)) return s;
  return guarded([&] { *out = new qt_qgraph{qturan::read_qgraph(path)}; });
}

qt_status qt_qgraph_parse(const char* text, qt_qgraph** out) {
  if (auto s = require_args(text && out)) return s;
  return guarded([&] { *out = new qt_qgraph{qturan::parse_qgraph(text)}; });
}

qt_status qt_qgraph_write(const qt_qgraph* g, const char* path) {
  if (auto s = require_args(g && path)) return s;
  return guarded([&] { qturan::write_qgraph(g->impl, path); });
}

qt_status qt_qgraph_format(const qt_qgraph* g, char** out) {
  if (auto s = require_args(g && out)) return s;
  return guarded([&] { *out = dup_string(qturan::format_qgraph(g->impl)); });
}

qt_status qt_qgraph_to_json(const qt_qgraph* g, char** out) {
  if (auto s = require_args(g && out)) return s;
  return guarded([&] { *out = dup_string(qturan::qgraph_to_json(g->impl).dump()); });
}

int qt_qgraph_n(const qt_qgraph* g) { return g ? g->impl.n() : 0; }
int qt_qgraph_q(const qt_qgraph* g) { return g ? g->impl.q() : 0; }
long long qt_qgraph_size(const qt_qgraph* g) {
  return g ? static_cast<long long>(g->impl.size()) : 0;
}
void qt_qgraph_free(qt_qgraph* g) { delete g; }

/* ---- patterns ---- */

qt_status qt_pattern_read(const char* path, qt_pattern** out) {
  if (auto s = require_args(path && out)) return s;
  return guarded([&] { *out = new qt_pattern{qturan::read_pattern(path)}; });
}

qt_status qt_pattern_parse(const char* text, qt_pattern** out) {
  if (auto s = require_args(text && out)) return s;
  return guarded([&] { *out = new qt_pattern{qturan::parse_pattern(text)}; });
}

qt_status qt_pattern_named(const char* name, qt_pattern** out) {
  if (auto s = require_args(name && out)) return s;
  return guarded([&] { *out = new qt_pattern{qturan::pattern_from_name(name)}; });
}

qt_status qt_pattern_write(const qt_pattern* p, const char* path) {
  if (auto s = require_args(p && path)) return s;
  return guarded([&] { qturan::write_pattern(p->impl, path); });
}

qt_status qt_pattern_to_json(const qt_pattern* p, char** out) {
  if (auto s = require_args(p && out)) return s;
  return guarded([&] { *out = dup_string(qturan::pattern_to_json(p->impl).dump()); });
}

int qt_pattern_n(const qt_pattern* p) { return p ? p->impl.n() : 0; }
long long qt_pattern_size(const qt_pattern* p) {
  return p ? static_cast<long long>(p->impl.size()) : 0;
}
void qt_pattern_free(qt_pattern* p) { delete p; }

/* ---- detection ---- */

qt_status qt_detect(const qt_qgraph* h, const qt_pattern* f, int s, long long limit,
                    char** json_out) {
  if (auto st = require_args(h && f && json_out)) return st;
  return guarded([&] {
    qturan::Json embeddings = qturan::Json::array();
    if (limit <= 0) {
      if (const auto emb = qturan::contains_s_copy(h->impl, f->impl, s))
        embeddings.push_back(qturan::embedding_to_json(*emb));
    } else {
      for (const auto& emb :
           qturan::find_s_copies(h->impl, f->impl, s, static_cast<std::size_t>(limit)))
        embeddings.push_back(qturan::embedding_to_json(emb));
    }
    const qturan::Json out{{"found", !embeddings.empty()},
                           {"count", embeddings.size()},
                           {"embeddings", std::move(embeddings)}};
    *json_out = dup_string(out.dump());
  });
}

qt_status qt_verify_free(const qt_qgraph* h, const qt_pattern* f, int s, char** json_out) {
  if (auto st = require_args(h && f && json_out)) return st;
  return guarded([&] {
    const auto check = qturan::verify_free(h->impl, f->impl, s);
    qturan::Json out{{"free", check.free}};
    if (check.violation) out["violation"] = qturan::embedding_to_json(*check.violation);
    *json_out = dup_string(out.dump());
  });
}

/* ---- extremal search ---- */

qt_status qt_extremal(int n, int q, int s, const qt_pattern* f, long long budget_nodes,
                      double budget_secs, int jobs, char** json_out) {
  if (auto st = require_args(f && json_out)) return st;
  return guarded([&] {
    qturan::ExtremalOptions opts;
    opts.budget_nodes = budget_nodes;
    opts.budget_secs = budget_secs;
    opts.jobs = std::max(1, jobs);
    const auto result = qturan::extremal_number(n, f->impl, q, s, opts);
    *json_out = dup_string(qturan::search_result_to_json(result).dump());
  });
}

/* ---- constructions ---- */

qt_status qt_construct_universal_tree(int q, int n, qt_qgraph** out) {
  if (auto s = require_args(out != nullptr)) return s;
  return guarded([&] { *out = new qt_qgraph{qturan::universal_tree(q, n)}; });
}

qt_status qt_construct_blowup(const qt_pattern* g, int q, qt_qgraph** out) {
  if (auto s = require_args(g && out)) return s;
  return guarded([&] { *out = new qt_qgraph{qturan::blowup(g->impl, q)}; });
}

qt_status qt_construct_low_complement(int q, int n, qt_qgraph** out) {
  if (auto s = require_args(out != nullptr)) return s;
  return guarded([&] { *out = new qt_qgraph{qturan::low_complement(q, n)}; });
}

qt_status qt_construct_chi1_lower(const qt_pattern* f, int q, int n, qt_qgraph** out) {
  if (auto s = require_args(f && out)) return s;
  return guarded([&] { *out = new qt_qgraph{qturan::chi1_lower(f->impl, q, n)}; });
}

qt_status qt_construct_tree_family(const int* block_sizes, int blocks, int pruned,
                                   qt_qgraph** out) {
  if (auto s = require_args(block_sizes && out && blocks >= 1)) return s;
  return guarded([&] {
    const std::vector<int> sizes(block_sizes, block_sizes + blocks);
    *out = new qt_qgraph{qturan::tree_family(
        qturan::Partition::consecutive(sizes),
        pruned ? qturan::TreeFamilyVariant::pruned : qturan::TreeFamilyVariant::plain)};
  });
}

qt_status qt_construct_tripart_13_4(int n, qt_qgraph** out) {
  if (auto s = require_args(out != nullptr)) return s;
  return guarded([&] { *out = new qt_qgraph{qturan::tripart_13_4(n)}; });
}

qt_status qt_construct_triangle_family(int q, int n, int variant, qt_qgraph** out) {
  if (auto s = require_args(out != nullptr)) return s;
  return guarded([&] { *out = new qt_qgraph{qturan::triangle_family(q, n, variant)}; });
}

qt_status qt_construct_q3_pair(int n, qt_qgraph** out) {
  if (auto s = require_args(out != nullptr)) return s;
  return guarded([&] { *out = new qt_qgraph{qturan::q3_pair_example(n)}; });
}

qt_status qt_triple_partition(int q, char** json_out) {
  if (auto s = require_args(json_out != nullptr)) return s;
  return guarded([&] {
    qturan::Json triples = qturan::Json::array();
    for (const auto& t : qturan::triple_partition(q)) {
      qturan::Json triple = qturan::Json::array();
      for (const auto& e : t) triple.push_back({e.u, e.v, e.a, e.b});
      triples.push_back(std::move(triple));
    }
    const qturan::Json out{{"q", q}, {"triples", std::move(triples)}};
    *json_out = dup_string(out.dump());
  });
}

/* ---- chromatic numbers ---- */

qt_status qt_chromatic(const qt_pattern* f, int* out) {
  if (auto s = require_args(f && out)) return s;
  return guarded([&] { *out = qturan::chromatic_number(f->impl, 64); });
}

qt_status qt_robust_chromatic(const qt_pattern* f, int* out) {
  if (auto s = require_args(f && out)) return s;
  return guarded([&] { *out = qturan::robust_chromatic(f->impl, 64); });
}

qt_status qt_chi1_experiment(int m, int r, double p, int trials, uint64_t seed, int jobs,
                             char** json_out) {
  if (auto s = require_args(json_out != nullptr)) return s;
  return guarded([&] {
    const int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    const auto report = qturan::chi1_experiment(m, r, p, trials, seed, std::max(1, workers));
    *json_out = dup_string(qturan::experiment_to_json(report).dump());
  });
}

/* ---- weight functions ---- */

qt_status qt_wstar_max(int k, char** json_out) {
  if (auto s = require_args(json_out != nullptr)) return s;
  return guarded([&] {
    const auto result = qturan::max_star_weight(k);
    const qturan::Json out{{"k", k},
                           {"value", result.value},
                           {"nodes", result.nodes},
                           {"witness", qturan::wstar_to_json(result.witness)}};
    *json_out = dup_string(out.dump());
  });
}

qt_status qt_wstar_check_file(const char* path, char** json_out) {
  if (auto s = require_args(path && json_out)) return s;
  return guarded([&] {
    const auto w = qturan::read_wstar(path);
    qturan::Json out{{"k", w.k()}, {"total", w.total_weight()}};
    out.update(qturan::star_check_to_json(qturan::check_star(w)));
    *json_out = dup_string(out.dump());
  });
}

/* ---- acceptance ---- */

qt_status qt_acceptance_run(int* all_passed, char** json_out) {
  if (auto s = require_args(all_passed && json_out)) return s;
  return guarded([&] {
    const auto results = qturan::acceptance::run_all();
    *all_passed = qturan::acceptance::all_passed(results) ? 1 : 0;
    *json_out = dup_string(qturan::acceptance::to_json(results).dump());
  });
}

} /* extern "C" */
