#ifndef BRAIDORBITS_GROUP_HPP
#define BRAIDORBITS_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "perm.hpp"
#include "schreier.hpp"

namespace braidorbits {

using ElemId = std::uint32_t;

struct ConjClass {
  ElemId rep = 0;                  // lexicographically least member
  std::vector<ElemId> members;     // ascending
  std::uint64_t size = 0;
  std::uint64_t element_order = 1;
  int index = 0;                   // degree - #cycles of the representative
  int fixed = 0;
  std::string label;               // "2A" style; pinnable via the catalog
};

// Generator-defined permutation group with a fully materialized element
// table. Orders here stay in the few-hundred-thousand range, so explicit
// enumeration is the backbone: class membership, centralizers and
// conjugator lookups all become array indexing. Caches are filled once by
// the ensure_* calls; after that the object is read-only.
class PermGroup {
 public:
  static constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

  explicit PermGroup(std::vector<Permutation> generators)
      : gens_(std::move(generators)) {
    if (gens_.empty()) throw std::invalid_argument("a group needs at least one generator");
    degree_ = gens_[0].degree();
    for (auto const& g : gens_) check_same_degree(gens_[0], g);
  }

  int degree() const { return degree_; }
  std::vector<Permutation> const& generators() const { return gens_; }

  std::uint64_t order() const {
    ensure_chain();
    return chain_->order();
  }

  bool contains(Permutation const& p) const {
    ensure_chain();
    return chain_->contains(p);
  }

  bool generates(std::vector<Permutation> const& tuple) const {
    bool all_trivial = true;
    for (auto const& t : tuple)
      if (!t.is_identity()) all_trivial = false;
    if (all_trivial) return order() == 1;
    return StabilizerChain(tuple).order() == order();
  }

  // ---- element table ----

  std::uint64_t element_count() const {
    ensure_elements();
    return elements_.size();
  }

  Permutation const& element(ElemId id) const {
    ensure_elements();
    return elements_[id];
  }

  ElemId element_id(Permutation const& p) const {
    ensure_elements();
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || !(*it == p))
      throw std::invalid_argument("permutation is not a group element");
    return static_cast<ElemId>(it - elements_.begin());
  }

  ElemId identity_id() const {
    ensure_elements();
    return identity_id_;
  }

  ElemId inverse_id(ElemId a) const {
    ensure_elements();
    return inverse_[a];
  }

  ElemId compose_id(ElemId a, ElemId b) const {
    return element_id(compose(elements_[a], elements_[b]));
  }

  ElemId conjugate_id(ElemId a, ElemId g) const {
    return element_id(conjugate(elements_[a], elements_[g]));
  }

  // ---- conjugacy classes ----

  int class_count() const {
    ensure_classes();
    return static_cast<int>(classes_.size());
  }

  ConjClass const& conj_class(int c) const {
    ensure_classes();
    return classes_[c];
  }

  int class_of(ElemId id) const {
    ensure_classes();
    return class_of_[id];
  }

  int class_of_perm(Permutation const& p) const { return class_of(element_id(p)); }

  // g with x^g = rep(class(x))
  ElemId conjugator_to_rep(ElemId id) const {
    ensure_classes();
    return to_rep_[id];
  }

  std::optional<Permutation> find_conjugator(Permutation const& x, Permutation const& y) const {
    ElemId xi = element_id(x), yi = element_id(y);
    if (class_of(xi) != class_of(yi)) return std::nullopt;
    return compose(element(to_rep_[xi]), inverse(element(to_rep_[yi])));
  }

  int class_by_label(std::string const& label) const {
    ensure_classes();
    auto it = label_to_class_.find(label);
    if (it == label_to_class_.end())
      throw std::invalid_argument("unknown class label '" + label + "'" + label_hint(label));
    return it->second;
  }

  std::vector<std::string> class_labels() const {
    ensure_classes();
    std::vector<std::string> out;
    for (auto const& c : classes_) out.push_back(c.label);
    return out;
  }

  // Re-labels classes so that each pinned representative's class carries
  // the pinned name; remaining classes of the same element order take the
  // unused letters in the default (size, representative) order.
  void pin_labels(std::map<std::string, Permutation> const& pins) {
    ensure_classes();
    std::map<int, std::string> forced;
    for (auto const& [label, rep] : pins) {
      int c = class_of_perm(rep);
      std::uint64_t ord = parse_label_order(label);
      if (ord != classes_[c].element_order)
        throw std::invalid_argument("pinned label " + label + " has element order " +
                                    std::to_string(classes_[c].element_order));
      if (forced.count(c) && forced[c] != label)
        throw std::invalid_argument("two labels pinned to one class: " + label);
      forced[c] = label;
    }
    relabel(forced);
  }

  // ---- centralizers ----

  std::vector<ElemId> const& centralizer_of_rep(int class_id) const {
    ensure_classes();
    auto& cached = rep_centralizers_[class_id];
    if (cached.empty()) {
      Permutation const& rep = element(classes_[class_id].rep);
      for (ElemId i = 0; i < elements_.size(); ++i)
        if (commute(rep, elements_[i])) cached.push_back(i);
    }
    return cached;
  }

  std::vector<ElemId> centralizer_ids(Permutation const& x) const {
    ElemId xi = element_id(x);
    int c = class_of(xi);
    if (xi == classes_[c].rep) return centralizer_of_rep(c);
    // C(x) = C(rep)^h for rep^h = x, h = inverse of the stored conjugator
    Permutation h = inverse(element(to_rep_[xi]));
    std::vector<ElemId> out;
    for (ElemId ci : centralizer_of_rep(c)) out.push_back(element_id(conjugate(element(ci), h)));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<ElemId> const& center_ids() const {
    ensure_elements();
    if (center_.empty()) {
      for (ElemId i = 0; i < elements_.size(); ++i) {
        bool central = true;
        for (auto const& g : gens_)
          if (!commute(elements_[i], g)) {
            central = false;
            break;
          }
        if (central) center_.push_back(i);
      }
    }
    return center_;
  }

  // ---- product counting (character-free structure constants) ----

  // Count tuples (g_1, ..., g_m) with g_i in the i-th listed class and
  // product equal to one fixed element of the target class; the count
  // only depends on the target's class. DP over partial-product class
  // distributions, one class-sweep per position.
  std::vector<std::uint64_t> product_profile(std::vector<int> const& class_ids) const {
    ensure_classes();
    std::vector<std::uint64_t> n(classes_.size(), 0);
    n[class_of(identity_id_)] = 1;
    for (int ci : class_ids) {
      std::vector<std::uint64_t> next(classes_.size(), 0);
      for (std::size_t t = 0; t < classes_.size(); ++t) {
        Permutation const& target = element(classes_[t].rep);
        std::uint64_t acc = 0;
        for (ElemId c : classes_[ci].members)
          acc += n[class_of_[element_id(compose(target, elements_[inverse_[c]]))]];
        next[t] = acc;
      }
      n = std::move(next);
    }
    return n;
  }

  std::uint64_t product_one_count(std::vector<int> const& class_ids) const {
    return product_profile(class_ids)[class_of(identity_id_)];
  }

  // ---- structure ----

  // The unique regular normal elementary abelian subgroup of a primitive
  // affine group of degree p^e. Searches normal closures of order-p class
  // representatives, smallest class first.
  std::vector<ElemId> socle_regular_elementary(int p, int e) const {
    std::uint64_t target = 1;
    for (int i = 0; i < e; ++i) target *= static_cast<std::uint64_t>(p);
    if (static_cast<std::uint64_t>(degree_) != target)
      throw std::invalid_argument("degree is not p^e");
    ensure_classes();
    std::vector<int> candidates;
    for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
      if (classes_[c].element_order == static_cast<std::uint64_t>(p)) candidates.push_back(c);
    std::sort(candidates.begin(), candidates.end(),
              [&](int a, int b) { return classes_[a].size < classes_[b].size; });
    for (int c : candidates) {
      if (classes_[c].size > target - 1) continue;
      std::vector<ElemId> closure = bounded_subgroup_closure(classes_[c].members, target);
      if (closure.empty()) continue;  // blew past the cap
      if (closure.size() != target) continue;
      if (!elementary_abelian(closure, p) || !transitive(closure)) continue;
      return closure;
    }
    throw std::runtime_error("no regular elementary abelian socle: group is not affine of degree p^e");
  }

  // G'' = 1 iff the derived subgroup is abelian; tested on a full normal
  // generating set of G'.
  bool second_derived_trivial() const {
    std::vector<Permutation> d = derived_generators();
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j)
        if (!commute(d[i], d[j])) return false;
    return true;
  }

  std::uint64_t enumeration_cap() const { return cap_; }
  void set_enumeration_cap(std::uint64_t cap) { cap_ = cap; }

 private:
  static std::uint64_t parse_label_order(std::string const& label) {
    std::size_t i = 0;
    std::uint64_t ord = 0;
    while (i < label.size() && isdigit(static_cast<unsigned char>(label[i])))
      ord = ord * 10 + (label[i++] - '0');
    if (ord == 0 || i == label.size())
      throw std::invalid_argument("malformed class label '" + label + "'");
    return ord;
  }

  std::string label_hint(std::string const& label) const {
    std::string close;
    for (auto const& [known, idx] : label_to_class_) {
      (void)idx;
      if (known.size() == label.size()) {
        int diff = 0;
        for (std::size_t i = 0; i < known.size(); ++i) diff += known[i] != label[i];
        if (diff <= 1) close += (close.empty() ? "" : ", ") + known;
      }
    }
    return close.empty() ? "" : " (did you mean: " + close + "?)";
  }

  void ensure_chain() const {
    if (!chain_) chain_.emplace(gens_);
  }

  void ensure_elements() const {
    if (!elements_.empty()) return;
    ensure_chain();
    if (chain_->order() > cap_)
      throw std::runtime_error("group order " + std::to_string(chain_->order()) +
                               " exceeds the enumeration cap");
    elements_.reserve(chain_->order());
    chain_->for_each_element([&](Permutation const& p) { elements_.push_back(p); });
    std::sort(elements_.begin(), elements_.end());
    inverse_.resize(elements_.size());
    for (ElemId i = 0; i < elements_.size(); ++i) {
      Permutation inv = inverse(elements_[i]);
      auto it = std::lower_bound(elements_.begin(), elements_.end(), inv);
      inverse_[i] = static_cast<ElemId>(it - elements_.begin());
      if (elements_[i].is_identity()) identity_id_ = i;
    }
  }

  void ensure_classes() const {
    if (!classes_.empty()) return;
    ensure_elements();
    class_of_.assign(elements_.size(), -1);
    to_rep_.assign(elements_.size(), 0);
    for (ElemId seed = 0; seed < elements_.size(); ++seed) {
      if (class_of_[seed] >= 0) continue;
      // seeds are scanned in lex order, so the seed is the class minimum
      int cid = static_cast<int>(classes_.size());
      ConjClass cls;
      cls.rep = seed;
      class_of_[seed] = cid;
      std::vector<ElemId> all{seed};
      std::vector<ElemId> conj{identity_id_};  // rep^conj[i] = all[i]
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (auto const& g : gens_) {
          Permutation y = conjugate(elements_[all[i]], g);
          ElemId yi = element_id(y);
          if (class_of_[yi] < 0) {
            class_of_[yi] = cid;
            all.push_back(yi);
            // conjugation composes left-to-right: x^(a*g) = (x^a)^g
            conj.push_back(element_id(compose(elements_[conj[i]], g)));
          }
        }
      }
      // stored conjugator maps the element back to the representative:
      // x^c = rep, so invert the discovery conjugator rep^a = x
      for (std::size_t i = 0; i < all.size(); ++i) to_rep_[all[i]] = inverse_[conj[i]];
      std::sort(all.begin(), all.end());
      cls.members = std::move(all);
      cls.size = cls.members.size();
      cls.element_order = element_order(elements_[seed]);
      cls.index = perm_index(elements_[seed]);
      cls.fixed = fixed_points(elements_[seed]);
      classes_.push_back(std::move(cls));
    }
    rep_centralizers_.assign(classes_.size(), {});
    relabel({});
  }

  void relabel(std::map<int, std::string> const& forced) const {
    std::vector<int> order(classes_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      auto const &A = classes_[a], &B = classes_[b];
      if (A.element_order != B.element_order) return A.element_order < B.element_order;
      if (A.size != B.size) return A.size < B.size;
      return element(A.rep) < element(B.rep);
    });
    std::map<std::uint64_t, std::vector<std::string>> taken;
    for (auto const& [cid, label] : forced)
      taken[classes_[cid].element_order].push_back(label);
    std::map<std::uint64_t, int> next_letter;
    label_to_class_.clear();
    for (int cid : order) {
      auto& cls = classes_[cid];
      auto it = forced.find(cid);
      if (it != forced.end()) {
        cls.label = it->second;
      } else {
        std::string label;
        do {
          label = std::to_string(cls.element_order) + letters(next_letter[cls.element_order]++);
        } while (std::count(taken[cls.element_order].begin(), taken[cls.element_order].end(), label));
        cls.label = label;
      }
      if (!label_to_class_.emplace(cls.label, cid).second)
        throw std::invalid_argument("duplicate class label " + cls.label);
    }
  }

  static std::string letters(int i) {
    std::string s;
    do {
      s.insert(s.begin(), static_cast<char>('A' + i % 26));
      i = i / 26 - 1;
    } while (i >= 0);
    return s;
  }

  // Closure of <seed elements>, aborting (empty result) once more than
  // `cap` elements appear.
  std::vector<ElemId> bounded_subgroup_closure(std::vector<ElemId> const& seeds,
                                               std::uint64_t cap) const {
    std::vector<ElemId> sorted{identity_id_};
    std::vector<ElemId> work{identity_id_};
    auto known = [&](ElemId x) {
      return std::binary_search(sorted.begin(), sorted.end(), x);
    };
    auto insert = [&](ElemId x) {
      sorted.insert(std::lower_bound(sorted.begin(), sorted.end(), x), x);
      work.push_back(x);
    };
    for (ElemId s : seeds)
      if (!known(s)) insert(s);
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (sorted.size() > cap) return {};
      for (ElemId s : seeds) {
        ElemId z = element_id(compose(elements_[work[i]], elements_[s]));
        if (!known(z)) insert(z);
      }
    }
    return sorted;
  }

  bool elementary_abelian(std::vector<ElemId> const& sub, int p) const {
    for (std::size_t i = 0; i < sub.size(); ++i) {
      Permutation const& a = elements_[sub[i]];
      if (!a.is_identity() && element_order(a) != static_cast<std::uint64_t>(p)) return false;
      for (std::size_t j = i + 1; j < sub.size(); ++j)
        if (!commute(a, elements_[sub[j]])) return false;
    }
    return true;
  }

  bool transitive(std::vector<ElemId> const& sub) const {
    std::vector<bool> hit(degree_, false);
    int count = 0;
    for (ElemId s : sub) {
      int im = elements_[s][0];
      if (!hit[im]) {
        hit[im] = true;
        ++count;
      }
    }
    return count == degree_;
  }

  // Normal generating set of G': commutators of the generators, closed
  // under conjugation by the generators.
  std::vector<Permutation> derived_generators() const {
    std::vector<Permutation> list;
    StabilizerChain closure({Permutation::identity(degree_)});
    auto push = [&](Permutation const& p) {
      if (!p.is_identity() && !closure.contains(p)) {
        list.push_back(p);
        closure.extend(p);
        return true;
      }
      return false;
    };
    for (auto const& a : gens_)
      for (auto const& b : gens_) push(commutator(a, b));
    for (std::size_t i = 0; i < list.size(); ++i)
      for (auto const& g : gens_) push(conjugate(list[i], g));
    return list;
  }

  std::vector<Permutation> gens_;
  int degree_ = 0;
  std::uint64_t cap_ = kDefaultEnumerationCap;

  mutable std::optional<StabilizerChain> chain_;
  mutable std::vector<Permutation> elements_;  // sorted
  mutable std::vector<ElemId> inverse_;
  mutable ElemId identity_id_ = 0;
  mutable std::vector<ConjClass> classes_;
  mutable std::vector<int> class_of_;
  mutable std::vector<ElemId> to_rep_;
  mutable std::vector<std::vector<ElemId>> rep_centralizers_;
  mutable std::vector<ElemId> center_;
  mutable std::map<std::string, int> label_to_class_;
};

// A materialized subgroup: sorted parent element ids. Centralizers,
// normalizers of braid orbits and double-coset spaces all live here; they
// are small by design.
struct Subgroup {
  PermGroup const* parent = nullptr;
  std::vector<ElemId> elems;  // ascending

  std::uint64_t order() const { return elems.size(); }

  bool contains_id(ElemId x) const {
    return std::binary_search(elems.begin(), elems.end(), x);
  }
};

struct DoubleCosets {
  std::vector<ElemId> reps;       // one per coset, in discovery order
  std::vector<int> coset_of;      // parallel to `within.elems`
};

// Partition `within` into A\within/B double cosets. A and B must be
// subgroups of `within`. BFS closure under left multiplication by
// generators of A and right multiplication by generators of B; every
// element of `within` is visited once per generator.
inline DoubleCosets double_cosets(Subgroup const& A, Subgroup const& B, Subgroup const& within) {
  PermGroup const& G = *within.parent;
  std::vector<Permutation> a_gens, b_gens;
  {
    StabilizerChain chain({Permutation::identity(G.degree())});
    for (ElemId a : A.elems)
      if (chain.extend(G.element(a))) a_gens.push_back(G.element(a));
  }
  {
    StabilizerChain chain({Permutation::identity(G.degree())});
    for (ElemId b : B.elems)
      if (chain.extend(G.element(b))) b_gens.push_back(G.element(b));
  }
  DoubleCosets out;
  out.coset_of.assign(within.elems.size(), -1);
  auto position = [&](ElemId x) {
    auto it = std::lower_bound(within.elems.begin(), within.elems.end(), x);
    if (it == within.elems.end() || *it != x)
      throw std::invalid_argument("double coset walked outside `within`: A or B is not contained");
    return static_cast<std::size_t>(it - within.elems.begin());
  };
  std::vector<std::size_t> frontier;
  for (std::size_t i = 0; i < within.elems.size(); ++i) {
    if (out.coset_of[i] >= 0) continue;
    int id = static_cast<int>(out.reps.size());
    out.reps.push_back(within.elems[i]);
    out.coset_of[i] = id;
    frontier.assign(1, i);
    while (!frontier.empty()) {
      std::size_t at = frontier.back();
      frontier.pop_back();
      Permutation const& w = G.element(within.elems[at]);
      auto visit = [&](Permutation const& prod) {
        std::size_t pos = position(G.element_id(prod));
        if (out.coset_of[pos] < 0) {
          out.coset_of[pos] = id;
          frontier.push_back(pos);
        }
      };
      for (auto const& a : a_gens) visit(compose(a, w));
      for (auto const& b : b_gens) visit(compose(w, b));
    }
  }
  return out;
}

}  // namespace braidorbits

#endif  // BRAIDORBITS_GROUP_HPP
