#pragma once

#include <string>

#include <json.hpp>

#include "posat/constructions.hpp"
#include "posat/family.hpp"
#include "posat/lowerbound.hpp"
#include "posat/poset.hpp"
#include "posat/saturation.hpp"

namespace posat::json {

using nlohmann::json;

// Poset: {"elements": [name...], "covers": [[lower, upper]...]}
json poset_to_json(const Poset& p);
Poset poset_from_json(const json& j);

// Family: {"n": int, "sets": [[int...]...]} or {"n": int, "masks": ["0x..."]}
json family_to_json(const Family& f);
Family family_from_json(const json& j);

json embedding_to_json(const Embedding& e, const Poset& p);

json search_result_to_json(const SearchResult& r);
SearchResult search_result_from_json(const json& j);

// Graph: {"n": int, "edges": [[u, v]...]}, 1-based, u < v.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// Cover: {"value": int, "bicliques": [{"left": [...], "right": [...]}...]}
json cover_to_json(const BicliqueCover& c);
BicliqueCover cover_from_json(const json& j);

json chains_to_json(const ChainDecomposition& d);

json construction_sidecar(const ConstructionRecord& r);

/// Parses text, rethrowing syntax errors as Error(Parse).
json parse(const std::string& text);

std::string poset_to_dot(const Poset& p);
std::string graph_to_dot(const Graph& g);

}  // namespace posat::json
