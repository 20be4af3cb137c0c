#ifndef BRAIDORBITS_MATCHING_HPP
#define BRAIDORBITS_MATCHING_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "braid.hpp"
#include "classic.hpp"
#include "group.hpp"
#include "rng.hpp"

namespace braidorbits {

// ---------------------------------------------------------------------
// Head/tail computation, shadow-first.
//
// A head of nodal class C is an (L_k x G)-orbit on product-one tuples
// (g_1..g_k, x) with x in C; a tail is the mirror image. Only the shadow
// (the slice with x pinned to the class representative) is ever
// materialized: the slice is small, it meets every orbit, and orbits of
// (L_k x C_G(x0)) on the slice correspond one-to-one to the full orbits.
// Everything downstream (normalizers, double cosets, node lengths, node
// identification) works on shadows.
// ---------------------------------------------------------------------

namespace detail {

// Product-one tuples over `classes` with the product of all entries equal
// to `target` (the closing element is appended by the caller).
template <typename F>
void enumerate_with_target(PermGroup const& G, std::vector<int> const& classes,
                           Permutation const& target, F&& f) {
  int r = static_cast<int>(classes.size());
  std::vector<std::vector<std::uint64_t>> suffix(r);
  for (int i = r - 1; i >= 1; --i)
    suffix[i] = G.product_profile(std::vector<int>(classes.begin() + i, classes.end()));
  ElemId target_id = G.element_id(target);
  Tuple tuple(r, Permutation::identity(G.degree()));
  std::vector<ElemId> partial(r + 1);
  partial[0] = G.identity_id();
  auto rec = [&](auto&& self, int at) -> void {
    if (at == r - 1) {
      // last entry forced: partial * last = target
      Permutation last =
          compose(G.element(G.inverse_id(partial[at])), G.element(target_id));
      if (G.class_of_perm(last) != classes[at]) return;
      tuple[at] = std::move(last);
      f(static_cast<Tuple const&>(tuple));
      return;
    }
    for (ElemId m : G.conj_class(classes[at]).members) {
      ElemId next = G.element_id(compose(G.element(partial[at]), G.element(m)));
      // remaining entries must multiply to partial^-1 * target
      ElemId needed = G.element_id(
          compose(G.element(G.inverse_id(next)), G.element(target_id)));
      if (suffix[at + 1][G.class_of(needed)] == 0) continue;
      partial[at + 1] = next;
      tuple[at] = G.element(m);
      self(self, at + 1);
    }
  };
  if (r == 1) {
    if (G.class_of(target_id) == classes[0]) f(Tuple{target});
    return;
  }
  rec(rec, 0);
}

}  // namespace detail

// A small generating set extracted greedily from an element list.
inline std::vector<ElemId> small_generating_set(PermGroup const& G,
                                                std::vector<ElemId> const& elems) {
  std::vector<ElemId> gens;
  StabilizerChain chain({Permutation::identity(G.degree())});
  for (ElemId e : elems)
    if (chain.extend(G.element(e))) gens.push_back(e);
  return gens;
}

// One head (or tail) orbit, represented by its shadow decomposition.
struct SideOrbit {
  std::vector<Tuple> base;          // base braid-only orbit, closing element included
  std::vector<ElemId> translate;    // translate[j]: base^t = j-th braid orbit; [0] = id
  std::vector<ElemId> normalizer;   // N_{C_G(x0)}(base), ascending ids
  std::uint64_t shadow_size = 0;    // base.size() * translate.size()
  std::uint64_t orbit_tuples = 0;   // shadow_size * |C|: the full orbit cardinality
};

// All heads (or tails) of one nodal class.
struct SideData {
  int cls = -1;            // nodal class C
  Permutation closing;     // x0 for heads, x0^-1 for tails
  bool is_head = true;
  std::vector<SideOrbit> orbits;
  // shadow element -> (orbit, braid orbit within the orbit)
  std::unordered_map<std::string, std::pair<int, int>> locate;

  std::pair<int, int> find(Tuple const& t) const {
    auto it = locate.find(tuple_key(t));
    if (it == locate.end())
      throw std::runtime_error("tuple not found in any head/tail orbit: node index corruption");
    return it->second;
  }
};

// Decompose the pinned slice of U_C L_{k,C} (resp. R_{k,D}) for a single
// class: braid-only orbits first, then fusion under C_G(x0), whose
// transitive action on the braid orbits of one shadow supplies the
// translates.
inline SideData compute_side(PermGroup const& G, RamificationType const& rt, int k, int cls,
                             bool is_head, Subgroup const& cent,
                             std::vector<ElemId> const& cent_gens) {
  SideData side;
  side.cls = cls;
  side.is_head = is_head;
  Permutation x0 = G.element(G.conj_class(cls).rep);
  side.closing = is_head ? x0 : inverse(x0);
  int r = rt.arity();

  std::vector<int> part_classes;
  if (is_head)
    part_classes.assign(rt.classes.begin(), rt.classes.begin() + k);
  else
    part_classes.assign(rt.classes.begin() + k, rt.classes.end());

  // the moving part multiplies to x0^-1 (heads) or to x0 (tails)
  Permutation target = is_head ? inverse(x0) : x0;
  std::vector<Tuple> shadow;
  detail::enumerate_with_target(G, part_classes, target, [&](Tuple const& part) {
    Tuple full;
    full.reserve(part.size() + 1);
    if (is_head) {
      full = part;
      full.push_back(side.closing);
    } else {
      full.push_back(side.closing);
      full.insert(full.end(), part.begin(), part.end());
    }
    shadow.push_back(std::move(full));
  });

  // braid generators acting on this side, rebased to the stored tuples
  auto split = split_generators(rt, k);
  std::vector<BraidWord> braid;
  if (is_head) {
    braid = split.left;  // positions already < k; closing sits at index k
  } else {
    for (BraidWord w : split.right) {
      for (auto& m : w.moves) {
        m.i += 1 - k;
        m.j += 1 - k;
      }
      braid.push_back(std::move(w));
    }
  }

  // braid-only orbits
  std::unordered_map<std::string, int> braid_orbit;
  std::vector<std::vector<Tuple>> orbit_elems;
  for (auto const& t : shadow) {
    std::string key = tuple_key(t);
    if (braid_orbit.count(key)) continue;
    int oid = static_cast<int>(orbit_elems.size());
    braid_orbit.emplace(std::move(key), oid);
    std::vector<Tuple> elems{t};
    std::vector<Tuple> frontier{t};
    while (!frontier.empty()) {
      Tuple at = std::move(frontier.back());
      frontier.pop_back();
      for (auto const& w : braid) {
        Tuple next = w.applied(at);
        auto [it, fresh] = braid_orbit.emplace(tuple_key(next), oid);
        if (fresh) {
          elems.push_back(next);
          frontier.push_back(std::move(next));
        }
      }
    }
    orbit_elems.push_back(std::move(elems));
  }

  // fuse braid orbits under the centralizer and record translates
  int nb = static_cast<int>(orbit_elems.size());
  std::vector<int> side_of(nb, -1);
  std::vector<ElemId> translate(nb, 0);
  std::vector<int> remap(nb, -1);
  for (int b = 0; b < nb; ++b) {
    if (side_of[b] >= 0) continue;
    int sid = static_cast<int>(side.orbits.size());
    side_of[b] = sid;
    translate[b] = G.identity_id();
    SideOrbit orbit;
    orbit.base = orbit_elems[b];
    std::vector<int> frontier{b};
    std::vector<int> members{b};
    while (!frontier.empty()) {
      int at = frontier.back();
      frontier.pop_back();
      for (ElemId cg : cent_gens) {
        Tuple image = orbit_elems[at][0];
        conjugate_tuple(image, G.element(cg));
        int to = braid_orbit.at(tuple_key(image));
        if (side_of[to] < 0) {
          side_of[to] = sid;
          translate[to] = G.element_id(compose(G.element(translate[at]), G.element(cg)));
          frontier.push_back(to);
          members.push_back(to);
        }
      }
    }
    for (int m : members) {
      if (orbit_elems[m].size() != orbit.base.size())
        throw std::runtime_error("braid orbits of one shadow differ in size");
      remap[m] = static_cast<int>(orbit.translate.size());
      orbit.translate.push_back(translate[m]);
    }
    orbit.shadow_size = orbit.base.size() * orbit.translate.size();
    orbit.orbit_tuples = orbit.shadow_size * G.conj_class(cls).size;
    side.orbits.push_back(std::move(orbit));
  }

  for (auto& [key, b] : braid_orbit)
    side.locate.emplace(key, std::make_pair(side_of[b], remap[b]));

  // normalizer of each base orbit: single-representative membership test
  for (auto& orbit : side.orbits) {
    Tuple const& rep = orbit.base[0];
    for (ElemId c : cent.elems) {
      Tuple image = rep;
      conjugate_tuple(image, G.element(c));
      auto it = side.locate.find(tuple_key(image));
      if (it == side.locate.end())
        throw std::runtime_error("centralizer moved a shadow element out of the shadow");
      auto [sid, bid] = it->second;
      if (&side.orbits[sid] == &orbit && bid == 0) orbit.normalizer.push_back(c);
    }
  }
  return side;
}

// ---------------------------------------------------------------------
// Nodes
// ---------------------------------------------------------------------

struct Node {
  int cls = -1;       // nodal class C
  int head = -1;      // index into heads[cls].orbits
  int tail = -1;      // index into tails[cls].orbits
  int coset = -1;     // double coset id within the pair
  ElemId dc_rep = 0;  // double coset representative d
  Tuple representative;
  std::uint64_t shadow_len = 0;
  std::uint64_t length = 0;  // shadow_len * |C|
  bool generating = false;
  bool vertex = false;       // participates in the sampling graph
  int forwarded_to = -1;     // for skipped identity-type nodes
};

struct PairTable {
  DoubleCosets cosets;
  std::vector<int> node_of;  // coset id -> node index
};

struct MatchingParams {
  int k = 0;                  // 0: use floor(r/2)
  bool skip_identity = true;  // drop centralizer-violating identity-type nodes
};

// Persistence hook for computed sides; see cache.hpp for the JSON store.
class SideCache {
 public:
  virtual ~SideCache() = default;
  virtual bool fetch(PermGroup const& G, std::string const& type, int k, int cls, bool is_head,
                     SideData& out) = 0;
  virtual void save(PermGroup const& G, std::string const& type, int k,
                    SideData const& side) = 0;
};

// The level-k node index of one ramification type: every prenode, the
// generating ones flagged, plus everything identify() needs.
class NodeIndex {
 public:
  NodeIndex(PermGroup const& G, RamificationType rt, MatchingParams const& params = {},
            SideCache* cache = nullptr)
      : group_(&G), rt_(std::move(rt)) {
    int r = rt_.arity();
    k_ = params.k > 0 ? params.k : r / 2;
    if (k_ < 2 || k_ > r - 1)
      throw std::invalid_argument("level k must satisfy 1 < k < r");
    skip_identity_ = params.skip_identity;
    build(cache);
  }

  PermGroup const& group() const { return *group_; }
  RamificationType const& type() const { return rt_; }
  int level() const { return k_; }
  int identity_class() const { return identity_cls_; }

  std::vector<Node> const& nodes() const { return nodes_; }
  SideData const& heads(int cls) const { return heads_.at(cls); }
  SideData const& tails(int cls) const { return tails_.at(cls); }
  bool has_class(int cls) const { return heads_.count(cls) > 0; }
  std::vector<int> const& classes_with_pairs() const { return classes_with_pairs_; }

  std::uint64_t head_orbit_count(bool include_identity_type) const {
    return side_orbit_count(heads_, include_identity_type);
  }
  std::uint64_t tail_orbit_count(bool include_identity_type) const {
    return side_orbit_count(tails_, include_identity_type);
  }

  std::uint64_t matching_pair_count(bool include_identity_type) const {
    std::uint64_t n = 0;
    for (auto const& [cls, table] : pairs_) {
      (void)table;
      if (!include_identity_type && cls == identity_cls_) continue;
      n += heads_.at(cls).orbits.size() * tails_.at(cls).orbits.size();
    }
    return n;
  }

  // classes whose head and tail sides are both nonempty contribute pairs;
  // the identity class follows the skip flag
  std::uint64_t classes_without_pairs() const {
    std::uint64_t n = 0;
    for (int c = 0; c < group_->class_count(); ++c) {
      if (c == identity_cls_) continue;
      if (!heads_.count(c) || heads_.at(c).orbits.empty() || tails_.at(c).orbits.empty()) ++n;
    }
    return n;
  }

  std::uint64_t vertex_count() const {
    std::uint64_t n = 0;
    for (auto const& node : nodes_)
      if (node.vertex) ++n;
    return n;
  }

  // total prenode length, all types including the identity type
  std::uint64_t prenode_length_total() const { return prenode_total_; }
  std::uint64_t node_length_total() const {
    std::uint64_t n = 0;
    for (auto const& node : nodes_)
      if (node.generating) n += node.length;
    return n;
  }

  // Identify the node containing an arbitrary product-one tuple of this
  // type: pin the tail product onto its class representative, locate both
  // braid orbits in the shadows, and map the translate mismatch to its
  // double coset.
  int identify(Tuple const& t) const {
    Permutation x = tuple_product(t, k_, t.size());
    ElemId xid = group_->element_id(x);
    int cls = group_->class_of(xid);
    auto hit = heads_.find(cls);
    if (hit == heads_.end())
      throw std::runtime_error("tuple has a nodal type with no computed sides");
    Permutation g = group_->element(group_->conjugator_to_rep(xid));
    Tuple tc = t;
    conjugate_tuple(tc, g);

    Tuple head(tc.begin(), tc.begin() + k_);
    head.push_back(hit->second.closing);
    Tuple tail;
    tail.push_back(inverse(hit->second.closing));
    tail.insert(tail.end(), tc.begin() + k_, tc.end());

    auto [ho, ha] = hit->second.find(head);
    auto [to, tb] = tails_.at(cls).find(tail);
    Permutation ca = group_->element(heads_.at(cls).orbits[ho].translate[ha]);
    Permutation cb = group_->element(tails_.at(cls).orbits[to].translate[tb]);
    ElemId mismatch = group_->element_id(compose(cb, inverse(ca)));

    auto const& table = pairs_.at(cls).at(pair_key(cls, ho, to));
    Subgroup const& cent = centralizers_.at(cls);
    auto pos = std::lower_bound(cent.elems.begin(), cent.elems.end(), mismatch);
    int coset = table.cosets.coset_of[pos - cent.elems.begin()];
    return table.node_of[coset];
  }

  // Uniform-ish random tuple of a node: a random centralizer translate of
  // the base braid orbits joined through the coset representative, then a
  // random diagonal conjugate.
  Tuple sample(int node_id, Rng& rng) const {
    Node const& node = nodes_[node_id];
    SideOrbit const& h = heads_.at(node.cls).orbits[node.head];
    SideOrbit const& t = tails_.at(node.cls).orbits[node.tail];
    Subgroup const& cent = centralizers_.at(node.cls);
    Permutation c = group_->element(cent.elems[rng.below(cent.elems.size())]);
    Permutation dc = compose(group_->element(node.dc_rep), c);
    Tuple head = h.base[rng.below(h.base.size())];
    Tuple tail = t.base[rng.below(t.base.size())];
    conjugate_tuple(head, c);
    conjugate_tuple(tail, dc);
    Tuple full(head.begin(), head.end() - 1);
    full.insert(full.end(), tail.begin() + 1, tail.end());
    Permutation g = group_->element(static_cast<ElemId>(rng.below(group_->element_count())));
    conjugate_tuple(full, g);
    return full;
  }

  Subgroup const& centralizer(int cls) const { return centralizers_.at(cls); }

 private:
  static long pair_key(int cls, int head, int tail) {
    (void)cls;
    return static_cast<long>(head) * 100000 + tail;
  }

  std::uint64_t side_orbit_count(std::map<int, SideData> const& sides,
                                 bool include_identity_type) const {
    std::uint64_t n = 0;
    for (auto const& [cls, side] : sides) {
      if (!include_identity_type && cls == identity_cls_) continue;
      n += side.orbits.size();
    }
    return n;
  }

  void build(SideCache* cache) {
    PermGroup const& G = *group_;
    identity_cls_ = G.class_of(G.identity_id());

    // which nodal classes can occur: the head product profile must reach
    // the class and the tail profile its inverse
    std::vector<int> head_classes(rt_.classes.begin(), rt_.classes.begin() + k_);
    std::vector<int> tail_classes(rt_.classes.begin() + k_, rt_.classes.end());
    auto head_profile = G.product_profile(head_classes);
    auto tail_profile = G.product_profile(tail_classes);

    std::string type;
    for (int c : rt_.classes) type += G.conj_class(c).label + ",";

    for (int cls = 0; cls < G.class_count(); ++cls) {
      int inv_cls = G.class_of(G.inverse_id(G.conj_class(cls).rep));
      // heads close at x0 in cls, so the moving part multiplies to x0^-1
      if (head_profile[inv_cls] == 0 || tail_profile[cls] == 0) continue;
      Subgroup cent{&G, G.centralizer_of_rep(cls)};
      auto cent_gens = small_generating_set(G, cent.elems);
      for (bool is_head : {true, false}) {
        auto& store = is_head ? heads_ : tails_;
        SideData side;
        if (!cache || !cache->fetch(G, type, k_, cls, is_head, side)) {
          side = compute_side(G, rt_, k_, cls, is_head, cent, cent_gens);
          if (cache) cache->save(G, type, k_, side);
        }
        store.emplace(cls, std::move(side));
      }
      centralizers_.emplace(cls, std::move(cent));
      classes_with_pairs_.push_back(cls);
    }

    // non-identity nodes first; identity-type prenodes may need to be
    // forwarded into them
    for (int cls : classes_with_pairs_)
      if (cls != identity_cls_) build_class(cls);
    if (heads_.count(identity_cls_)) build_class(identity_cls_);

    // forward skipped identity-type nodes: one crossing braid move leaves
    // the identity type, landing in a node that is already a vertex
    for (auto& node : nodes_) {
      if (!node.generating || node.vertex || node.cls != identity_cls_) continue;
      Tuple escaped = escape_identity_type(node.representative);
      node.forwarded_to = identify(escaped);
      if (!nodes_[node.forwarded_to].vertex)
        throw std::runtime_error("identity-type node forwarded to a non-vertex");
    }
  }

  void build_class(int cls) {
    PermGroup const& G = *group_;
    SideData const& hs = heads_.at(cls);
    SideData const& ts = tails_.at(cls);
    Subgroup const& cent = centralizers_.at(cls);
    auto& tables = pairs_[cls];
    for (int ho = 0; ho < static_cast<int>(hs.orbits.size()); ++ho) {
      for (int to = 0; to < static_cast<int>(ts.orbits.size()); ++to) {
        SideOrbit const& h = hs.orbits[ho];
        SideOrbit const& t = ts.orbits[to];
        PairTable table;
        table.cosets = double_cosets(Subgroup{&G, t.normalizer},
                                     Subgroup{&G, h.normalizer}, cent);
        table.node_of.assign(table.cosets.reps.size(), -1);
        for (std::size_t ci = 0; ci < table.cosets.reps.size(); ++ci) {
          Node node;
          node.cls = cls;
          node.head = ho;
          node.tail = to;
          node.coset = static_cast<int>(ci);
          node.dc_rep = table.cosets.reps[ci];
          node.representative = join(h.base[0], t.base[0], node.dc_rep);
          node.shadow_len = shadow_length(h, t, cent, node.dc_rep);
          node.length = node.shadow_len * G.conj_class(cls).size;
          node.generating = G.generates(node.representative);
          prenode_total_ += node.length;
          if (node.generating) {
            if (cls != identity_cls_ || !skip_identity_ || centralize_split(node.representative))
              node.vertex = true;
          }
          table.node_of[ci] = static_cast<int>(nodes_.size());
          nodes_.push_back(std::move(node));
        }
        tables[pair_key(cls, ho, to)] = std::move(table);
      }
    }
  }

  Tuple join(Tuple const& head, Tuple const& tail, ElemId d) const {
    Tuple full(head.begin(), head.end() - 1);
    Permutation dp = group_->element(d);
    for (std::size_t i = 1; i < tail.size(); ++i)
      full.push_back(conjugate(tail[i], dp));
    return full;
  }

  // |shadow| = |O_h| * |O_t| * |C_G(x0)| / |N_h meet N_t^d|
  std::uint64_t shadow_length(SideOrbit const& h, SideOrbit const& t, Subgroup const& cent,
                              ElemId d) const {
    PermGroup const& G = *group_;
    Permutation dp = G.element(d);
    std::uint64_t meet = 0;
    for (ElemId n : t.normalizer) {
      ElemId conj = G.element_id(conjugate(G.element(n), dp));
      if (std::binary_search(h.normalizer.begin(), h.normalizer.end(), conj)) ++meet;
    }
    return h.base.size() * t.base.size() * cent.elems.size() / meet;
  }

  // [H, T] = 1 test for the identity-type skip rule
  bool centralize_split(Tuple const& t) const {
    for (int i = 0; i < k_; ++i)
      for (std::size_t j = k_; j < t.size(); ++j)
        if (!commute(t[i], t[j])) return false;
    return true;
  }

  // One pure braid takes a centralizer-violating identity-type tuple to a
  // tuple of a different nodal type: pick a head partial product h_s that
  // fails to commute with a tail entry g_t and apply Q_{s,t}.
  Tuple escape_identity_type(Tuple const& t) const {
    int r = rt_.arity();
    for (int s = k_ - 1; s >= 0; --s) {
      Permutation hs = tuple_product(t, s, k_);
      for (int j = k_; j < r; ++j) {
        if (!commute(hs, t[j])) {
          Tuple image = t;
          BraidWord::apply_qij_generator(image, s, j);
          Permutation x = tuple_product(image, k_, image.size());
          if (group_->class_of_perm(x) != identity_cls_) return image;
        }
      }
    }
    throw std::runtime_error("no escape move found for identity-type node");
  }

  PermGroup const* group_;
  RamificationType rt_;
  int k_ = 0;
  bool skip_identity_ = true;
  int identity_cls_ = -1;

  std::map<int, SideData> heads_;
  std::map<int, SideData> tails_;
  std::map<int, Subgroup> centralizers_;
  std::map<int, std::map<long, PairTable>> pairs_;
  std::vector<int> classes_with_pairs_;
  std::vector<Node> nodes_;
  std::uint64_t prenode_total_ = 0;
};

}  // namespace braidorbits

#endif  // BRAIDORBITS_MATCHING_HPP
