#include "posat/json_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "posat/error.hpp"

namespace posat::json {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

json set_list(Mask m) { return elements_of(m); }

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

json poset_to_json(const Poset& p) {
  json covers = json::array();
  for (const auto& [lo, hi] : covers_of(p)) covers.push_back({p.label(lo), p.label(hi)});
  return {{"elements", p.labels()}, {"covers", covers}};
}

Poset poset_from_json(const json& j) {
  const json& elements = field(j, "elements");
  if (!elements.is_array() || elements.empty()) bad("'elements' must be a nonempty array");
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  for (const auto& e : elements) {
    if (!e.is_string()) bad("element names must be strings");
    const auto name = e.get<std::string>();
    if (!index.emplace(name, static_cast<int>(labels.size())).second) bad("duplicate element name '" + name + "'");
    labels.push_back(name);
  }
  CoverList covers;
  const json& pairs = field(j, "covers");
  if (!pairs.is_array()) bad("'covers' must be an array");
  for (const auto& pair : pairs) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      bad("each cover must be a pair of element names");
    auto lo = index.find(pair[0].get<std::string>());
    auto hi = index.find(pair[1].get<std::string>());
    if (lo == index.end() || hi == index.end()) bad("cover references an unknown element");
    covers.emplace_back(lo->second, hi->second);
  }
  return poset_from_covers(static_cast<int>(labels.size()), covers, labels);
}

json family_to_json(const Family& f) {
  json sets = json::array();
  for (Mask m : f.sets()) sets.push_back(set_list(m));
  return {{"n", f.ground()}, {"sets", sets}};
}

Family family_from_json(const json& j) {
  const int n = as_int(field(j, "n"), "'n'");
  if (n < 1 || n > kMaxGround) throw Error(ErrorCode::OutOfRange, "'n' must be in 1.." + std::to_string(kMaxGround));
  if (j.contains("masks")) {
    const json& masks = j["masks"];
    if (!masks.is_array()) bad("'masks' must be an array");
    std::vector<Mask> out;
    for (const auto& m : masks) {
      if (!m.is_string()) bad("masks must be hex strings");
      const auto text = m.get<std::string>();
      std::size_t used = 0;
      unsigned long value = 0;
      try {
        value = std::stoul(text, &used, 16);
      } catch (const std::exception&) {
        bad("bad hex mask '" + text + "'");
      }
      if (used != text.size()) bad("bad hex mask '" + text + "'");
      if ((value & ~static_cast<unsigned long>(full_mask(n))) != 0)
        throw Error(ErrorCode::OutOfRange, "mask " + text + " uses elements beyond n");
      out.push_back(static_cast<Mask>(value));
    }
    return Family(n, std::move(out));
  }
  const json& sets = field(j, "sets");
  if (!sets.is_array()) bad("'sets' must be an array");
  std::vector<std::vector<int>> out;
  for (const auto& s : sets) {
    if (!s.is_array()) bad("each set must be an array of integers");
    std::vector<int> elements;
    for (const auto& e : s) elements.push_back(as_int(e, "set element"));
    for (std::size_t i = 1; i < elements.size(); ++i)
      if (elements[i - 1] >= elements[i]) bad("set elements must be strictly increasing");
    out.push_back(std::move(elements));
  }
  return family_from_sets(n, out);
}

json embedding_to_json(const Embedding& e, const Poset& p) {
  json map = json::array();
  for (std::size_t i = 0; i < e.images.size(); ++i)
    map.push_back({{"element", p.label(static_cast<int>(i))}, {"set", set_list(e.images[i])}});
  return {{"mode", to_string(e.mode)}, {"map", map}};
}

json search_result_to_json(const SearchResult& r) {
  json out;
  out["value"] = r.value ? json(*r.value) : json(nullptr);
  out["certificate"] = r.value ? family_to_json(r.certificate) : json(nullptr);
  out["exhaustive"] = r.exhaustive;
  out["families_examined"] = r.families_examined;
  out["lower_start"] = r.lower_start;
  out["searched_up_to"] = r.searched_up_to;
  out["vacuous"] = r.vacuous;
  out["pruning"] = {{"symmetry", r.symmetry_used},
                    {"complement", r.complement_symmetry_used},
                    {"uctp", r.uctp_used}};
  if (!r.minimum_certificates.empty()) {
    json all = json::array();
    for (const auto& f : r.minimum_certificates) all.push_back(family_to_json(f));
    out["minimum_certificates"] = all;
  }
  return out;
}

SearchResult search_result_from_json(const json& j) {
  SearchResult r;
  const json& value = field(j, "value");
  if (!value.is_null()) {
    r.value = as_int(value, "'value'");
    r.certificate = family_from_json(field(j, "certificate"));
  }
  r.exhaustive = field(j, "exhaustive").get<bool>();
  r.families_examined = field(j, "families_examined").get<std::uint64_t>();
  r.lower_start = as_int(field(j, "lower_start"), "'lower_start'");
  r.searched_up_to = j.value("searched_up_to", 0);
  r.vacuous = j.value("vacuous", false);
  const json& pruning = field(j, "pruning");
  r.symmetry_used = field(pruning, "symmetry").get<bool>();
  r.uctp_used = field(pruning, "uctp").get<bool>();
  r.complement_symmetry_used = pruning.value("complement", false);
  if (j.contains("minimum_certificates"))
    for (const auto& f : j["minimum_certificates"]) r.minimum_certificates.push_back(family_from_json(f));
  return r;
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  const int n = as_int(field(j, "n"), "'n'");
  if (n < 0 || n > kMaxGround) throw Error(ErrorCode::OutOfRange, "'n' out of range");
  Graph g(n);
  const json& edges = field(j, "edges");
  if (!edges.is_array()) bad("'edges' must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) bad("each edge must be a pair");
    const int u = as_int(e[0], "edge endpoint");
    const int v = as_int(e[1], "edge endpoint");
    if (u >= v) bad("edges must be listed with u < v");
    g.add_edge(u, v);
  }
  return g;
}

json cover_to_json(const BicliqueCover& c) {
  json bicliques = json::array();
  for (const auto& b : c.bicliques) bicliques.push_back({{"left", set_list(b.left)}, {"right", set_list(b.right)}});
  return {{"value", c.value}, {"bicliques", bicliques}};
}

BicliqueCover cover_from_json(const json& j) {
  BicliqueCover c;
  c.value = as_int(field(j, "value"), "'value'");
  for (const auto& b : field(j, "bicliques")) {
    auto side = [&](const char* key) {
      std::vector<int> v;
      for (const auto& e : field(b, key)) v.push_back(as_int(e, "vertex"));
      return mask_of(std::span<const int>(v));
    };
    c.bicliques.push_back({side("left"), side("right")});
  }
  return c;
}

json chains_to_json(const ChainDecomposition& d) {
  json chains = json::array();
  for (const auto& chain : d.chains) {
    json c = json::array();
    for (Mask m : chain) c.push_back(set_list(m));
    chains.push_back(c);
  }
  return {{"width", d.width()}, {"chains", chains}};
}

json construction_sidecar(const ConstructionRecord& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json targets = json::array();
  for (const auto& t : r.targets) targets.push_back({{"poset", t.poset}, {"mode", to_string(t.mode)}});
  return {{"construction", r.name},
          {"params", params},
          {"expected_size", r.expected_size},
          {"verified", r.verified},
          {"targets", targets}};
}

std::string poset_to_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int i = 0; i < p.size(); ++i) out << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
  for (const auto& [lo, hi] : covers_of(p)) out << "  n" << lo << " -> n" << hi << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph separability {\n";
  for (int v = 1; v <= g.n; ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace posat::json
