#ifndef BRAIDORBITS_BRAID_HPP
#define BRAIDORBITS_BRAID_HPP

#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include "perm.hpp"

namespace braidorbits {

// Product-one tuples. Positions are 0-based in code; printed braid
// generators are 1-based, matching the usual notation.
using Tuple = std::vector<Permutation>;

inline Permutation tuple_product(Tuple const& t, std::size_t first, std::size_t last) {
  Permutation p = Permutation::identity(t.at(first).degree());
  for (std::size_t i = first; i < last; ++i) p = compose(p, t[i]);
  return p;
}

inline bool product_is_one(Tuple const& t) {
  return tuple_product(t, 0, t.size()).is_identity();
}

inline void conjugate_tuple(Tuple& t, Permutation const& g) {
  for (auto& e : t) e = conjugate(e, g);
}

// Q_i: (.., g_i, g_{i+1}, ..) -> (.., g_{i+1}, g_{i+1}^-1 g_i g_{i+1}, ..)
inline void apply_qi(Tuple& t, int i) {
  if (i < 0 || i + 1 >= static_cast<int>(t.size()))
    throw std::out_of_range("braid generator index out of range");
  Permutation a = std::move(t[i]);
  t[i] = t[i + 1];
  t[i + 1] = conjugate(a, t[i]);
}

inline void apply_qi_inv(Tuple& t, int i) {
  if (i < 0 || i + 1 >= static_cast<int>(t.size()))
    throw std::out_of_range("braid generator index out of range");
  Permutation b = std::move(t[i]);
  t[i] = conjugate(t[i + 1], inverse(b));
  t[i + 1] = std::move(b);
}

// A word in the elementary generators; applied left to right, inverses
// flip sign. Pure generators Q_{ij} are kept symbolic so that logs and
// certificates can show them as single moves.
struct BraidWord {
  struct Move {
    bool pure = false;
    int i = 0;
    int j = 0;  // used when pure
    int sign = 1;
  };
  std::vector<Move> moves;

  static BraidWord qi(int i, int sign = 1) {
    BraidWord w;
    w.moves.push_back({false, i, 0, sign});
    return w;
  }

  static BraidWord qij(int i, int j) {
    BraidWord w;
    w.moves.push_back({true, i, j, 1});
    return w;
  }

  void apply(Tuple& t) const {
    for (auto const& m : moves) {
      if (!m.pure) {
        if (m.sign > 0)
          apply_qi(t, m.i);
        else
          apply_qi_inv(t, m.i);
      } else if (m.sign > 0) {
        apply_qij_generator(t, m.i, m.j);
      } else {
        apply_qij_generator_inv(t, m.i, m.j);
      }
    }
    assert(product_is_one(t));
  }

  Tuple applied(Tuple t) const {
    apply(t);
    return t;
  }

  BraidWord inverted() const {
    BraidWord w;
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
      Move m = *it;
      m.sign = -m.sign;
      w.moves.push_back(m);
    }
    return w;
  }

  // e.g. "Q3^-1 Q12"; 1-based positions, pure generators as index pairs
  std::string str() const {
    std::string out;
    for (auto const& m : moves) {
      if (!out.empty()) out += ' ';
      out += 'Q';
      out += std::to_string(m.i + 1);
      if (m.pure) out += ',' + std::to_string(m.j + 1);
      if (m.sign < 0) out += "^-1";
    }
    return out.empty() ? "id" : out;
  }

  // Q_{ij} := Q_{j-1} ... Q_{i+1} Q_i^2 Q_{i+1}^-1 ... Q_{j-1}^-1
  static void apply_qij_generator(Tuple& t, int i, int j) {
    if (i >= j) throw std::out_of_range("pure braid generator needs i < j");
    for (int a = j - 1; a > i; --a) apply_qi(t, a);
    apply_qi(t, i);
    apply_qi(t, i);
    for (int a = i + 1; a < j; ++a) apply_qi_inv(t, a);
  }

  static void apply_qij_generator_inv(Tuple& t, int i, int j) {
    if (i >= j) throw std::out_of_range("pure braid generator needs i < j");
    for (int a = j - 1; a > i; --a) apply_qi(t, a);
    apply_qi_inv(t, i);
    apply_qi_inv(t, i);
    for (int a = i + 1; a < j; ++a) apply_qi_inv(t, a);
  }
};

// Ordered list of conjugacy class ids; equal classes must be consecutive
// so that the block partition is by runs.
struct RamificationType {
  std::vector<int> classes;

  explicit RamificationType(std::vector<int> cls) : classes(std::move(cls)) {
    if (classes.size() < 2) throw std::invalid_argument("a type needs at least two entries");
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i + 2; j < classes.size(); ++j)
        if (classes[i] == classes[j] && classes[i] != classes[j - 1])
          throw std::invalid_argument("equal classes must be consecutive in a ramification type");
  }

  int arity() const { return static_cast<int>(classes.size()); }

  bool same_block(int i, int j) const { return classes[i] == classes[j]; }
};

// Generators of the parabolic subgroup preserving the class vector: all
// pure Q_{ij} plus the elementary Q_i whose two positions carry the same
// class. The full set of Q_{ij} is deliberately a superset of the minimal
// cross-block list; every Q_{ij} preserves classes, so orbits are
// unchanged, and the level-k split becomes pure bookkeeping. The minimal
// list is available for fidelity experiments.
inline std::vector<BraidWord> parabolic_generators(RamificationType const& rt,
                                                   bool minimal_set = false) {
  std::vector<BraidWord> out;
  int r = rt.arity();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (!minimal_set || !rt.same_block(i, j)) out.push_back(BraidWord::qij(i, j));
  for (int i = 0; i + 1 < r; ++i)
    if (rt.same_block(i, i + 1)) out.push_back(BraidWord::qi(i));
  return out;
}

struct SplitGenerators {
  std::vector<BraidWord> left;      // supported on head positions < k
  std::vector<BraidWord> right;     // supported on tail positions >= k
  std::vector<BraidWord> crossing;  // everything else: the sampling set S
};

// Split the parabolic generators at level k (head length k, 2 <= k <= r-1
// in 1-based terms: both sides nonempty and braidable).
inline SplitGenerators split_generators(RamificationType const& rt, int k) {
  int r = rt.arity();
  if (k < 2 || k > r - 1) throw std::invalid_argument("level k must satisfy 1 < k < r");
  SplitGenerators s;
  for (auto const& w : parabolic_generators(rt)) {
    auto const& m = w.moves[0];
    if (m.pure) {
      if (m.j < k)
        s.left.push_back(w);
      else if (m.i >= k)
        s.right.push_back(w);
      else
        s.crossing.push_back(w);
    } else {
      if (m.i + 1 < k)
        s.left.push_back(w);
      else if (m.i >= k)
        s.right.push_back(w);
      else
        s.crossing.push_back(w);  // Q_k in 1-based terms, crossing the cut
    }
  }
  return s;
}

}  // namespace braidorbits

#endif  // BRAIDORBITS_BRAID_HPP
