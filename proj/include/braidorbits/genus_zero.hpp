#ifndef BRAIDORBITS_GENUS_ZERO_HPP
#define BRAIDORBITS_GENUS_ZERO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "group.hpp"
#include "matching.hpp"
#include "orbit_graph.hpp"

namespace braidorbits {

// All multisets of non-identity classes, at least three entries, whose
// permutation indices sum to 2(n - 1). Classes are listed in label order,
// so each type already satisfies the consecutive-blocks invariant.
inline std::vector<std::vector<int>> rh_candidate_types(PermGroup const& G) {
  int target = 2 * (G.degree() - 1);
  std::vector<int> by_label(G.class_count());
  {
    std::vector<std::pair<std::string, int>> order;
    for (int c = 0; c < G.class_count(); ++c) order.push_back({G.conj_class(c).label, c});
    std::sort(order.begin(), order.end(), [&](auto const& a, auto const& b) {
      auto const &A = G.conj_class(a.second), &B = G.conj_class(b.second);
      if (A.element_order != B.element_order) return A.element_order < B.element_order;
      return a.first < b.first;
    });
    for (std::size_t i = 0; i < order.size(); ++i) by_label[i] = order[i].second;
  }
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, std::size_t from, int remaining) -> void {
    if (remaining == 0) {
      if (current.size() >= 3) out.push_back(current);
      return;
    }
    for (std::size_t i = from; i < by_label.size(); ++i) {
      int cls = by_label[i];
      int idx = G.conj_class(cls).index;
      if (idx == 0 || idx > remaining) continue;
      current.push_back(cls);
      self(self, i, remaining - idx);
      current.pop_back();
    }
  };
  rec(rec, 0, target);
  return out;
}

// The Galois-cover form of the genus condition, evaluated exactly:
// |G| * sum (1 - 1/ord(tau_i)) = 2 (|G| + g - 1).
inline bool rh_galois_check(std::vector<std::uint64_t> const& element_orders,
                            std::uint64_t group_order, std::uint64_t genus) {
  std::uint64_t lhs = 0;
  for (std::uint64_t o : element_orders) {
    if (o == 0 || group_order % o != 0) return false;
    lhs += (group_order / o) * (o - 1);
  }
  return lhs == 2 * (group_order + genus) - 2;
}

// Scott's bound: v(x) = e - log_p of the largest fixed-point count over
// the socle coset xN, which recovers the fixed space of the linear part.
// Types whose v-sum falls below 2e cannot generate an irreducible group.
inline int scott_dimension_drop(PermGroup const& G, std::vector<ElemId> const& socle,
                                Permutation const& x, int p, int e) {
  int best = 0;
  for (ElemId n : socle) best = std::max(best, fixed_points(compose(x, G.element(n))));
  int v = e;
  while (best > 1) {
    if (best % p != 0) throw std::runtime_error("fixed point count is not a power of p");
    best /= p;
    --v;
  }
  return v;
}

inline bool scott_filter(PermGroup const& G, std::vector<int> const& type,
                         std::vector<ElemId> const& socle, int p, int e) {
  int sum = 0;
  for (int cls : type)
    sum += scott_dimension_drop(G, socle, G.element(G.conj_class(cls).rep), p, e);
  return sum >= 2 * e;
}

inline bool structure_constant_filter(PermGroup const& G, std::vector<int> const& type) {
  return G.product_one_count(type) > 0;
}

// ---------------------------------------------------------------------
// Length-three types: pure braid orbits all have length one, so the
// G-classes of generating triples are computed directly by a centralizer
// scan, and only the same-class elementary braids can merge them.
// ---------------------------------------------------------------------

struct TripleOrbit {
  Tuple representative;
  std::uint64_t length = 0;  // G-classes merged by the elementary braids
};

inline std::vector<TripleOrbit> enumerate_triples(PermGroup const& G, int c1, int c2, int c3) {
  Permutation a = G.element(G.conj_class(c1).rep);
  // solutions keyed by the middle entry; the third entry is forced
  std::vector<ElemId> solutions;
  std::unordered_map<ElemId, int> solution_index;
  for (ElemId b : G.conj_class(c2).members) {
    Permutation c = inverse(compose(a, G.element(b)));
    if (G.class_of_perm(c) == c3) {
      solution_index.emplace(b, static_cast<int>(solutions.size()));
      solutions.push_back(b);
    }
  }
  // C_G(a)-orbits on solutions = G-classes of triples
  auto cent = G.centralizer_of_rep(c1);
  auto cent_gens = small_generating_set(G, cent);
  std::vector<int> orbit_of(solutions.size(), -1);
  std::vector<std::vector<int>> orbits;
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    int oid = static_cast<int>(orbits.size());
    std::vector<int> members{static_cast<int>(i)};
    orbit_of[i] = oid;
    for (std::size_t at = 0; at < members.size(); ++at)
      for (ElemId cg : cent_gens) {
        int to = solution_index.at(G.conjugate_id(solutions[members[at]], cg));
        if (orbit_of[to] < 0) {
          orbit_of[to] = oid;
          members.push_back(to);
        }
      }
    orbits.push_back(std::move(members));
  }

  auto triple_of = [&](int orbit) {
    Permutation b = G.element(solutions[orbits[orbit][0]]);
    return Tuple{a, b, inverse(compose(a, b))};
  };

  // keep generating classes only
  std::vector<int> keep;
  std::vector<int> kept_id(orbits.size(), -1);
  for (std::size_t o = 0; o < orbits.size(); ++o)
    if (G.generates(triple_of(static_cast<int>(o)))) {
      kept_id[o] = static_cast<int>(keep.size());
      keep.push_back(static_cast<int>(o));
    }

  // same-class elementary braids act on the classes; merge their orbits
  detail::UnionFind uf(keep.size());
  auto locate = [&](Tuple const& t) {
    // realign the first entry onto the pinned representative
    Permutation g = *G.find_conjugator(t[0], a);
    ElemId b = G.element_id(conjugate(t[1], g));
    // minimize over the centralizer to land on a recorded solution
    auto it = solution_index.find(b);
    if (it == solution_index.end()) throw std::runtime_error("triple fell outside the solution set");
    return orbit_of[it->second];
  };
  for (std::size_t ki = 0; ki < keep.size(); ++ki) {
    Tuple t = triple_of(keep[ki]);
    for (int move = 0; move < 2; ++move) {
      if (G.class_of_perm(t[move]) != G.class_of_perm(t[move + 1])) continue;
      Tuple u = t;
      apply_qi(u, move);
      int target = kept_id[locate(u)];
      uf.unite(static_cast<int>(ki), target);
    }
  }
  std::map<int, TripleOrbit> merged;
  for (std::size_t ki = 0; ki < keep.size(); ++ki) {
    TripleOrbit& orb = merged[uf.find(static_cast<int>(ki))];
    ++orb.length;
    Tuple t = triple_of(keep[ki]);
    if (orb.representative.empty() || t < orb.representative) orb.representative = t;
  }
  std::vector<TripleOrbit> out;
  for (auto& [root, orb] : merged) {
    (void)root;
    out.push_back(std::move(orb));
  }
  return out;
}

// ---------------------------------------------------------------------
// The classification driver
// ---------------------------------------------------------------------

enum class Engine { Classic, Matching };

struct ClassifyParams {
  Engine engine = Engine::Matching;
  int k = 0;              // matching level; 0 = floor(r/2)
  int s = 5;              // edge sampling successes
  int t = 50;             // edge sampling try cap
  std::uint64_t seed = 42;
  bool scott = true;      // the filter is an optimization; results must not change
  bool skip_identity = true;
};

struct TypeResult {
  std::vector<int> classes;
  std::vector<std::string> labels;
  std::uint64_t orbit_count = 0;
  std::uint64_t largest_orbit = 0;  // length in G-classes of tuples
  bool deterministic = true;
  std::vector<std::uint64_t> orbit_lengths;
};

struct ClassifyReport {
  std::string group_name;
  int degree = 0;
  bool second_derived_nontrivial = false;
  std::uint64_t candidate_types = 0;  // after the genus condition
  std::uint64_t scott_discards = 0;
  std::uint64_t constant_discards = 0;
  std::vector<TypeResult> rows;       // types with at least one orbit
  std::uint64_t component_total = 0;
};

inline TypeResult run_type(PermGroup const& G, std::vector<int> const& type,
                           ClassifyParams const& params) {
  TypeResult result;
  result.classes = type;
  for (int cls : type) result.labels.push_back(G.conj_class(cls).label);
  if (type.size() == 3) {
    auto orbits = enumerate_triples(G, type[0], type[1], type[2]);
    result.orbit_count = orbits.size();
    for (auto const& o : orbits) {
      result.largest_orbit = std::max(result.largest_orbit, o.length);
      result.orbit_lengths.push_back(o.length);
    }
    std::sort(result.orbit_lengths.begin(), result.orbit_lengths.end());
    return result;
  }
  RamificationType rt(type);
  if (params.engine == Engine::Classic) {
    auto report = orbit_partition(G, rt, {.generating_only = true});
    result.orbit_count = report.generating_orbits;
    for (auto const& o : report.orbits)
      if (o.generating) {
        result.largest_orbit = std::max(result.largest_orbit, o.length);
        result.orbit_lengths.push_back(o.length);
      }
  } else {
    NodeIndex index(G, rt, {.k = params.k, .skip_identity = params.skip_identity});
    auto graph = sample_edges(index, params.s, params.t, params.seed);
    auto report = components(index, graph);
    result.orbit_count = report.components.size();
    result.deterministic = report.deterministic;
    for (auto const& c : report.components) {
      result.largest_orbit = std::max(result.largest_orbit, c.classes);
      result.orbit_lengths.push_back(c.classes);
    }
  }
  std::sort(result.orbit_lengths.begin(), result.orbit_lengths.end());
  return result;
}

inline ClassifyReport classify(PermGroup const& G, std::string const& name, int p, int e,
                               ClassifyParams const& params) {
  ClassifyReport report;
  report.group_name = name;
  report.degree = G.degree();
  report.second_derived_nontrivial = !G.second_derived_trivial();
  auto socle = G.socle_regular_elementary(p, e);
  auto candidates = rh_candidate_types(G);
  report.candidate_types = candidates.size();
  for (auto const& type : candidates) {
    if (params.scott && !scott_filter(G, type, socle, p, e)) {
      ++report.scott_discards;
      continue;
    }
    if (!structure_constant_filter(G, type)) {
      ++report.constant_discards;
      continue;
    }
    TypeResult row = run_type(G, type, params);
    if (row.orbit_count == 0) continue;
    report.component_total += row.orbit_count;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace braidorbits

#endif  // BRAIDORBITS_GENUS_ZERO_HPP
