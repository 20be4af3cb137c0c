#ifndef BRAIDORBITS_ORBIT_GRAPH_HPP
#define BRAIDORBITS_ORBIT_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "classic.hpp"
#include "matching.hpp"

namespace braidorbits {

struct EdgeWitness {
  int from = -1;
  int to = -1;
  Tuple tuple;      // the sampled tuple inside `from`
  BraidWord move;   // crossing generator taking it into `to`
};

struct SampleStats {
  int tries = 0;      // c in the stopping rule
  int successes = 0;  // d
};

struct OrbitGraph {
  std::uint64_t seed = 0;
  int success_target = 0;  // s
  int try_cap = 0;         // t
  std::vector<std::pair<int, int>> edges;  // vertex node ids, from < to
  std::vector<EdgeWitness> witnesses;      // one per edge, first discovery
  std::vector<SampleStats> stats;          // per node id
};

struct Component {
  std::vector<int> vertices;        // node ids, ascending
  std::uint64_t tuples = 0;         // summed node lengths, forwarded included
  std::uint64_t classes = 0;        // tuples * |Z(G)| / |G|
  Tuple representative;             // representative of the least vertex
  bool isolation_evidenced = true;  // every vertex hit its stopping rule
};

struct ComponentReport {
  std::vector<Component> components;
  bool deterministic = false;  // single component: connectivity is exact
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // deterministic: smaller id wins
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

// Randomized edge discovery: per node, draw random tuples, hit them with
// random crossing generators and identify where they land. The stopping
// rule is: quit after s successes, or after t consecutive failures from a
// clean slate (d stays 0). Every node owns an RNG stream derived from
// (seed, node id), so the result is independent of scheduling.
inline OrbitGraph sample_edges(NodeIndex const& index, int s, int t, std::uint64_t seed) {
  OrbitGraph graph;
  graph.seed = seed;
  graph.success_target = s;
  graph.try_cap = t;
  graph.stats.assign(index.nodes().size(), {});
  auto crossing = split_generators(index.type(), index.level()).crossing;
  if (crossing.empty()) throw std::runtime_error("crossing generator set is empty");
  std::set<std::pair<int, int>> known;

  long const hard_cap = 1000L * t;  // safety net; the rule itself has no upper bound
  for (int node = 0; node < static_cast<int>(index.nodes().size()); ++node) {
    if (!index.nodes()[node].vertex) continue;
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(node));
    SampleStats& st = graph.stats[node];
    while (true) {
      if (st.successes == s) break;
      if (st.successes == 0 && st.tries == t) break;
      if (st.tries >= hard_cap)
        throw std::runtime_error("sampling failed to reach the stopping rule");
      Tuple tuple = index.sample(node, rng);
      BraidWord const& move = crossing[rng.below(crossing.size())];
      Tuple image = move.applied(tuple);
      int target = index.identify(image);
      if (index.nodes()[target].forwarded_to >= 0)
        target = index.nodes()[target].forwarded_to;
      ++st.tries;
      if (target != node) {
        ++st.successes;
        auto edge = std::minmax(node, target);
        if (known.insert({edge.first, edge.second}).second) {
          graph.edges.push_back({edge.first, edge.second});
          graph.witnesses.push_back({node, target, std::move(tuple), move});
        }
      }
    }
  }
  return graph;
}

// Union-find over the sampled edges; forwarded identity-type nodes merge
// their lengths into the component of their forward target.
inline ComponentReport components(NodeIndex const& index, OrbitGraph const& graph) {
  auto const& nodes = index.nodes();
  detail::UnionFind uf(nodes.size());
  for (auto const& [a, b] : graph.edges) uf.unite(a, b);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].forwarded_to >= 0) uf.unite(static_cast<int>(i), nodes[i].forwarded_to);

  std::map<int, Component> by_root;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].generating) continue;
    Component& c = by_root[uf.find(static_cast<int>(i))];
    if (nodes[i].vertex) c.vertices.push_back(static_cast<int>(i));
    c.tuples += nodes[i].length;
  }

  PermGroup const& G = index.group();
  std::uint64_t center = G.center_ids().size();
  ComponentReport report;
  for (auto& [root, comp] : by_root) {
    (void)root;
    comp.representative = nodes[comp.vertices.front()].representative;
    comp.classes = comp.tuples * center / G.order();
    if (comp.tuples * center % G.order() != 0)
      throw std::runtime_error("component length is not a whole number of classes");
    for (int v : comp.vertices) {
      auto const& st = graph.stats[v];
      if (st.successes < graph.success_target &&
          !(st.successes == 0 && st.tries >= graph.try_cap))
        comp.isolation_evidenced = false;
    }
    report.components.push_back(std::move(comp));
  }
  report.deterministic = report.components.size() <= 1;
  return report;
}

// Cross-engine check: the component partition must match the classic BFS
// orbit partition orbit by orbit (count, lengths, and a representative of
// each component landing in the paired orbit).
inline bool verify_components(PermGroup const& G, ComponentReport const& matching,
                              ClassicReport const& classic) {
  if (matching.components.size() != classic.generating_orbits) return false;
  std::vector<bool> used(classic.orbits.size(), false);
  for (auto const& comp : matching.components) {
    Tuple form = canonical_form(G, comp.representative);
    auto it = classic.form_orbit.find(tuple_key(form));
    if (it == classic.form_orbit.end()) return false;
    int oid = it->second;
    if (used[oid]) return false;
    used[oid] = true;
    if (!classic.orbits[oid].generating) return false;
    if (classic.orbits[oid].length != comp.classes) return false;
  }
  return true;
}

}  // namespace braidorbits

#endif  // BRAIDORBITS_ORBIT_GRAPH_HPP
