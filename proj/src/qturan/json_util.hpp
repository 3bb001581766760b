#pragma once

// JSON mirrors of the domain types and operation results. Key order is
// kept stable so reports diff cleanly.

#include <json.hpp>

#include "qturan/detect.hpp"
#include "qturan/extremal.hpp"
#include "qturan/qcore.hpp"
#include "qturan/robust.hpp"
#include "qturan/wstar.hpp"

namespace qturan {

using Json = nlohmann::ordered_json;

Json qgraph_to_json(const QGraph& g);
QGraph qgraph_from_json(const Json& j);

Json pattern_to_json(const PatternGraph& g);
PatternGraph pattern_from_json(const Json& j);

Json embedding_to_json(const Embedding& e);
Json search_result_to_json(const SearchResult& r);
Json experiment_to_json(const ExperimentReport& r);
Json wstar_to_json(const WeightFunction& w);
Json star_check_to_json(const StarCheck& c);

}  // namespace qturan
