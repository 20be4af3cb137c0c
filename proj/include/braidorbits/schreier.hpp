#ifndef BRAIDORBITS_SCHREIER_HPP
#define BRAIDORBITS_SCHREIER_HPP

#include <cstdint>
#include <vector>

#include "perm.hpp"

namespace braidorbits {

// Deterministic Schreier-Sims. Base points are always the smallest moved
// point of the sifted residue, so the chain (and everything derived from
// it) is reproducible run to run. No randomized variant: downstream orbit
// counts must not depend on luck.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::vector<Permutation> const& generators) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    degree_ = generators[0].degree();
    for (auto const& g : generators) {
      if (g.degree() != degree_) throw std::invalid_argument("mixed degrees in generating set");
      insert(g, 0);
    }
  }

  int degree() const { return degree_; }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (auto const& lv : levels_) n *= lv.orbit.size();
    return n;
  }

  bool contains(Permutation const& g) const {
    if (g.degree() != degree_) return false;
    Permutation h = g;
    for (auto const& lv : levels_) {
      int p = h[lv.base];
      if (lv.trans_pos[p] < 0) return false;
      h = compose(h, inverse(lv.trans[lv.trans_pos[p]]));
    }
    return h.is_identity();
  }

  // Unique decomposition over the chain's transversals; enumerates every
  // group element exactly once.
  template <typename F>
  void for_each_element(F&& f) const {
    enumerate(Permutation::identity(degree_), 0, f);
  }

  // Grow the chain by one more generator; returns whether the group grew.
  bool extend(Permutation const& g) {
    if (contains(g)) return false;
    insert(g, 0);
    return true;
  }

 private:
  struct Level {
    int base = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;          // points, in discovery order
    std::vector<int> trans_pos;      // point -> index into trans, or -1
    std::vector<Permutation> trans;  // u with u[base] == point
    // watermarks: Schreier generators of pairs below both marks have been
    // sifted already
    std::size_t done_orbit = 0;
    std::size_t done_gens = 0;
  };

  // Strip g through levels >= from; a nontrivial residue fixes the bases
  // of all levels it passed, so it joins the generator lists of every
  // level from the insertion point down to the dropout, and those levels
  // get re-closed.
  void insert(Permutation const& g, std::size_t from) {
    Permutation h = g;
    std::size_t drop = from;
    for (; drop < levels_.size(); ++drop) {
      Level const& L = levels_[drop];
      int p = h[L.base];
      if (L.trans_pos[p] < 0) break;
      h = compose(h, inverse(L.trans[L.trans_pos[p]]));
    }
    if (h.is_identity()) return;
    if (drop == levels_.size()) {
      int b = 0;
      while (h[b] == b) ++b;
      Level L;
      L.base = b;
      L.trans_pos.assign(degree_, -1);
      L.orbit.push_back(b);
      L.trans_pos[b] = 0;
      L.trans.push_back(Permutation::identity(degree_));
      levels_.push_back(std::move(L));
    }
    for (std::size_t l = from; l <= drop; ++l) levels_[l].gens.push_back(h);
    for (std::size_t l = from; l <= drop; ++l) close(l);
  }

  // Extend the orbit/transversal at `lev` and sift the not-yet-seen
  // Schreier generators into the deeper levels. Raw indexing throughout:
  // recursive inserts may reallocate levels_.
  void close(std::size_t lev) {
    for (std::size_t i = 0; i < levels_[lev].orbit.size(); ++i)
      for (std::size_t gi = 0; gi < levels_[lev].gens.size(); ++gi) {
        int q = levels_[lev].gens[gi][levels_[lev].orbit[i]];
        if (levels_[lev].trans_pos[q] < 0) {
          levels_[lev].trans_pos[q] = static_cast<int>(levels_[lev].trans.size());
          levels_[lev].trans.push_back(compose(
              levels_[lev].trans[levels_[lev].trans_pos[levels_[lev].orbit[i]]],
              levels_[lev].gens[gi]));
          levels_[lev].orbit.push_back(q);
        }
      }
    std::size_t const orbit_mark = levels_[lev].done_orbit;
    std::size_t const gens_mark = levels_[lev].done_gens;
    levels_[lev].done_orbit = levels_[lev].orbit.size();
    levels_[lev].done_gens = levels_[lev].gens.size();
    for (std::size_t i = 0; i < levels_[lev].orbit.size(); ++i)
      for (std::size_t gi = 0; gi < levels_[lev].gens.size(); ++gi) {
        if (i < orbit_mark && gi < gens_mark) continue;
        int p = levels_[lev].orbit[i];
        Permutation g = levels_[lev].gens[gi];
        Permutation u = levels_[lev].trans[levels_[lev].trans_pos[p]];
        Permutation v = levels_[lev].trans[levels_[lev].trans_pos[g[p]]];
        Permutation s = compose(compose(u, g), inverse(v));
        if (!s.is_identity()) insert(s, lev + 1);
      }
  }

  // invariant: the final element is compose(deep_part, outer), i.e. the
  // transversal element chosen at a level acts after everything deeper
  template <typename F>
  void enumerate(Permutation const& outer, std::size_t lev, F&& f) const {
    if (lev == levels_.size()) {
      f(outer);
      return;
    }
    for (auto const& u : levels_[lev].trans) enumerate(compose(u, outer), lev + 1, f);
  }

  int degree_ = 0;
  std::vector<Level> levels_;
};

}  // namespace braidorbits

#endif  // BRAIDORBITS_SCHREIER_HPP
