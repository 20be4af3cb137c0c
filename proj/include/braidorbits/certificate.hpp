#ifndef BRAIDORBITS_CERTIFICATE_HPP
#define BRAIDORBITS_CERTIFICATE_HPP

#include <string>

#include <json.hpp>

#include "catalog.hpp"
#include "genus_zero.hpp"
#include "orbit_graph.hpp"
#include "version.hpp"

namespace braidorbits {

// Certificates are replayable records: engine version, parameters and
// seed are always embedded, and all collections are emitted in a
// deterministic order so that identical runs are byte-identical.

inline nlohmann::json tuple_json(Tuple const& t) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto const& p : t) arr.push_back(to_cycles(p));
  return arr;
}

inline Tuple tuple_from_json(nlohmann::json const& arr, int degree) {
  Tuple t;
  for (auto const& s : arr) t.push_back(parse_cycles(s.get<std::string>(), degree));
  return t;
}

inline nlohmann::json orbit_certificate(PermGroup const& G, std::string const& group_name,
                                        std::vector<int> const& type,
                                        TypeResult const& result, ClassifyParams const& params) {
  nlohmann::json j;
  j["engine_version"] = kVersion;
  j["group"] = group_name;
  j["type"] = type_string(G, type);
  j["engine"] = params.engine == Engine::Classic ? "classic" : "matching";
  j["seed"] = params.seed;
  j["k"] = params.k;
  j["s"] = params.s;
  j["t"] = params.t;
  j["orbits"] = result.orbit_count;
  j["largest_orbit"] = result.largest_orbit;
  j["lengths"] = result.orbit_lengths;
  j["verdict"] = result.deterministic ? "DETERMINISTIC" : "MONTE-CARLO";
  return j;
}

inline nlohmann::json node_inventory(NodeIndex const& index) {
  PermGroup const& G = index.group();
  nlohmann::json nodes = nlohmann::json::array();
  for (auto const& n : index.nodes()) {
    nlohmann::json e;
    e["type"] = G.conj_class(n.cls).label;
    e["head"] = n.head;
    e["tail"] = n.tail;
    e["coset_rep"] = to_cycles(G.element(n.dc_rep));
    e["representative"] = tuple_json(n.representative);
    e["length"] = n.length;
    e["generating"] = n.generating;
    e["vertex"] = n.vertex;
    if (n.forwarded_to >= 0) e["forwarded_to"] = n.forwarded_to;
    nodes.push_back(std::move(e));
  }
  nlohmann::json j;
  j["engine_version"] = kVersion;
  j["k"] = index.level();
  j["nodes"] = std::move(nodes);
  return j;
}

inline nlohmann::json component_certificate(NodeIndex const& index, OrbitGraph const& graph,
                                            ComponentReport const& report) {
  PermGroup const& G = index.group();
  nlohmann::json j;
  j["engine_version"] = kVersion;
  j["type"] = type_string(G, index.type().classes);
  j["k"] = index.level();
  j["s"] = graph.success_target;
  j["t"] = graph.try_cap;
  j["seed"] = graph.seed;
  j["verdict"] = report.deterministic ? "DETERMINISTIC" : "MONTE-CARLO";
  nlohmann::json comps = nlohmann::json::array();
  for (auto const& c : report.components) {
    nlohmann::json e;
    e["nodes"] = c.vertices;
    e["tuples"] = c.tuples;
    e["classes"] = c.classes;
    e["representative"] = tuple_json(c.representative);
    e["isolation_evidenced"] = c.isolation_evidenced;
    comps.push_back(std::move(e));
  }
  j["components"] = std::move(comps);
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    nlohmann::json e;
    e["from"] = graph.edges[i].first;
    e["to"] = graph.edges[i].second;
    e["witness_tuple"] = tuple_json(graph.witnesses[i].tuple);
    e["witness_move"] = graph.witnesses[i].move.str();
    edges.push_back(std::move(e));
  }
  j["edges"] = std::move(edges);
  return j;
}

// Appendix-style rows: group, type, number of orbits, largest orbit.
inline std::string table_row_tsv(std::string const& group, PermGroup const& G,
                                 TypeResult const& row) {
  std::string out = group;
  out += '\t';
  out += type_string(G, row.classes);
  out += '\t';
  out += std::to_string(row.orbit_count);
  out += '\t';
  out += std::to_string(row.largest_orbit);
  return out;
}

}  // namespace braidorbits

#endif  // BRAIDORBITS_CERTIFICATE_HPP
