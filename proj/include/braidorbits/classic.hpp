#ifndef BRAIDORBITS_CLASSIC_HPP
#define BRAIDORBITS_CLASSIC_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "braid.hpp"
#include "group.hpp"

namespace braidorbits {

// Flat byte key for hashing tuples.
inline std::string tuple_key(Tuple const& t) {
  std::string key;
  key.reserve(t.size() * t[0].degree());
  for (auto const& p : t)
    key.append(reinterpret_cast<char const*>(p.images().data()), p.images().size());
  return key;
}

// Lexicographically least diagonal conjugate of t over the listed
// conjugators. Candidate filtering position by position.
inline Tuple minimize_over(Tuple const& t, std::vector<Permutation> const& conjugators) {
  if (conjugators.empty()) throw std::invalid_argument("empty conjugator set");
  std::vector<Permutation> cands = conjugators;
  Tuple best(t.size(), Permutation::identity(t[0].degree()));
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<Permutation> keep;
    Permutation min;
    for (auto const& c : cands) {
      Permutation v = conjugate(t[i], c);
      if (keep.empty() || v < min) {
        min = v;
        keep.clear();
        keep.push_back(c);
      } else if (v == min) {
        keep.push_back(c);
      }
    }
    best[i] = min;
    cands = std::move(keep);
  }
  return best;
}

// Canonical form of a tuple under diagonal conjugation by the whole group:
// the first non-identity entry is forced onto its class representative,
// which narrows the conjugator search to that representative's
// centralizer. Constant on G-orbits, idempotent.
inline Tuple canonical_form(PermGroup const& G, Tuple const& t) {
  std::size_t pivot = 0;
  while (pivot < t.size() && t[pivot].is_identity()) ++pivot;
  if (pivot == t.size()) return t;
  ElemId id = G.element_id(t[pivot]);
  int cls = G.class_of(id);
  Permutation to_rep = G.element(G.conjugator_to_rep(id));
  std::vector<Permutation> cands;
  cands.reserve(G.centralizer_of_rep(cls).size());
  for (ElemId z : G.centralizer_of_rep(cls))
    cands.push_back(compose(to_rep, G.element(z)));
  return minimize_over(t, cands);
}

namespace detail {

// Backtracking over class members; the last entry is forced, and a
// partial product is pruned as soon as no completion through the
// remaining classes can reach the identity.
template <typename F>
void enumerate_tuples(PermGroup const& G, std::vector<int> const& classes, bool pin_first,
                      F&& f) {
  int r = static_cast<int>(classes.size());
  if (r < 2) throw std::invalid_argument("need at least two positions");
  std::vector<std::vector<std::uint64_t>> suffix(r + 1);
  for (int i = r - 1; i >= 1; --i)
    suffix[i] = G.product_profile(std::vector<int>(classes.begin() + i, classes.end()));
  Tuple tuple(r, Permutation::identity(G.degree()));
  std::vector<ElemId> partial(r + 1);
  partial[0] = G.identity_id();
  auto place = [&](auto&& self, int at, ElemId m) -> void {
    ElemId next = G.element_id(compose(G.element(partial[at]), G.element(m)));
    if (suffix[at + 1][G.class_of(G.inverse_id(next))] == 0) return;
    partial[at + 1] = next;
    tuple[at] = G.element(m);
    self(self, at + 1);
  };
  auto rec = [&](auto&& self, int at) -> void {
    if (at == r - 1) {
      Permutation last = G.element(G.inverse_id(partial[at]));
      if (G.class_of_perm(last) != classes[at]) return;
      tuple[at] = std::move(last);
      f(static_cast<Tuple const&>(tuple));
      return;
    }
    if (at == 0 && pin_first) {
      place(self, 0, G.conj_class(classes[0]).rep);
      return;
    }
    for (ElemId m : G.conj_class(classes[at]).members) place(self, at, m);
  };
  rec(rec, 0);
}

}  // namespace detail

// Every product-one tuple with entries in the prescribed classes, each
// exactly once.
template <typename F>
void for_each_product_one_tuple(PermGroup const& G, std::vector<int> const& classes, F&& f) {
  detail::enumerate_tuples(G, classes, false, f);
}

// Only tuples whose first entry is the class representative. Every
// canonical form is among them, so they seed the orbit scan.
template <typename F>
void for_each_seed_tuple(PermGroup const& G, std::vector<int> const& classes, F&& f) {
  detail::enumerate_tuples(G, classes, true, f);
}

struct ClassicOrbit {
  Tuple representative;          // least canonical form in the orbit
  std::uint64_t length = 0;      // canonical forms = G-classes of tuples
  std::uint64_t raw_tuples = 0;  // length * |G| / |tuple stabilizer|
  bool generating = false;
};

struct ClassicReport {
  std::vector<int> classes;
  std::vector<ClassicOrbit> orbits;  // generating orbits first
  std::unordered_map<std::string, int> form_orbit;  // canonical form -> orbit
  std::uint64_t generating_orbits = 0;
  std::uint64_t total_raw_tuples = 0;
};

struct ClassicParams {
  bool generating_only = false;
  std::uint64_t work_cap = 10'000'000;  // visited canonical forms
  bool minimal_parabolic = false;
};

// BFS partition of all product-one tuples of the type into orbits of the
// parabolic braid group x diagonal conjugation, deduplicating by
// canonical form. The exhaustive ground-truth engine.
inline ClassicReport orbit_partition(PermGroup const& G, RamificationType const& rt,
                                     ClassicParams const& params = {}) {
  ClassicReport report;
  report.classes = rt.classes;
  auto gens = parabolic_generators(rt, params.minimal_parabolic);

  std::vector<Tuple> frontier;
  for_each_seed_tuple(G, rt.classes, [&](Tuple const& seed) {
    Tuple cf = canonical_form(G, seed);
    std::string key = tuple_key(cf);
    if (report.form_orbit.count(key)) return;
    bool generating = G.generates(cf);
    if (params.generating_only && !generating) return;
    int oid = static_cast<int>(report.orbits.size());
    ClassicOrbit orbit;
    orbit.generating = generating;
    orbit.representative = cf;
    orbit.length = 1;
    report.form_orbit.emplace(std::move(key), oid);
    frontier.assign(1, cf);
    while (!frontier.empty()) {
      Tuple at = std::move(frontier.back());
      frontier.pop_back();
      for (auto const& w : gens) {
        Tuple next = canonical_form(G, w.applied(at));
        auto [it, fresh] = report.form_orbit.emplace(tuple_key(next), oid);
        if (fresh) {
          ++orbit.length;
          if (next < orbit.representative) orbit.representative = next;
          frontier.push_back(std::move(next));
          if (report.form_orbit.size() > params.work_cap)
            throw std::runtime_error("orbit scan exceeded the work cap");
        }
      }
    }
    // raw tuple count via the representative's stabilizer, which is
    // constant along the orbit up to conjugacy
    std::vector<ElemId> stab = G.centralizer_ids(orbit.representative[0]);
    for (std::size_t i = 1; i < orbit.representative.size() && stab.size() > 1; ++i) {
      std::vector<ElemId> next;
      for (ElemId c : stab)
        if (commute(orbit.representative[i], G.element(c))) next.push_back(c);
      stab = std::move(next);
    }
    orbit.raw_tuples = orbit.length * (G.order() / stab.size());
    report.total_raw_tuples += orbit.raw_tuples;
    report.orbits.push_back(std::move(orbit));
  });

  std::stable_sort(report.orbits.begin(), report.orbits.end(),
                   [](ClassicOrbit const& a, ClassicOrbit const& b) {
                     return a.generating > b.generating;
                   });
  std::vector<int> old_to_new(report.orbits.size());
  for (std::size_t i = 0; i < report.orbits.size(); ++i)
    old_to_new[report.form_orbit.at(tuple_key(report.orbits[i].representative))] =
        static_cast<int>(i);
  for (auto& [key, oid] : report.form_orbit) oid = old_to_new[oid];
  for (auto const& o : report.orbits)
    if (o.generating) ++report.generating_orbits;
  return report;
}

}  // namespace braidorbits

#endif  // BRAIDORBITS_CLASSIC_HPP
