#ifndef BRAIDORBITS_TESTS_HELPERS_HPP
#define BRAIDORBITS_TESTS_HELPERS_HPP

#include <vector>

#include "braidorbits/group.hpp"
#include "braidorbits/perm.hpp"
#include "braidorbits/rng.hpp"

namespace braidorbits::testing {

inline Permutation P(std::string const& cycles, int degree) {
  return parse_cycles(cycles, degree);
}

inline Permutation random_perm(Rng& rng, int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  for (int i = degree - 1; i > 0; --i)
    std::swap(images[i], images[rng.below(i + 1)]);
  return Permutation::from_images(images);
}

inline PermGroup symmetric(int n) {
  std::vector<Permutation> gens;
  gens.push_back(P("(1,2)", n));
  std::string cycle = "(1";
  for (int i = 2; i <= n; ++i) cycle += "," + std::to_string(i);
  cycle += ")";
  gens.push_back(P(cycle, n));
  return PermGroup(gens);
}

// x -> x+1 and x -> gx on the field with p elements, p prime, g a chosen
// primitive root: the full affine group AGL(1,p).
inline PermGroup agl1(int p, int primitive_root) {
  std::vector<int> add(p), mul(p);
  for (int x = 0; x < p; ++x) {
    add[x] = (x + 1) % p;
    mul[x] = (x * primitive_root) % p;
  }
  return PermGroup({Permutation::from_images(add), Permutation::from_images(mul)});
}

inline ElemId random_element(PermGroup const& g, Rng& rng) {
  return static_cast<ElemId>(rng.below(g.element_count()));
}

// Affine group V:H of degree p^e: the given matrices (row-major, acting
// on column vectors) plus the translation by the first basis vector.
// Vectors are indexed little-endian: index = sum v_i p^i.
inline PermGroup affine_group(int p, int e, std::vector<std::vector<int>> const& matrices) {
  int n = 1;
  for (int i = 0; i < e; ++i) n *= p;
  auto decode = [&](int idx) {
    std::vector<int> v(e);
    for (int i = 0; i < e; ++i) {
      v[i] = idx % p;
      idx /= p;
    }
    return v;
  };
  auto encode = [&](std::vector<int> const& v) {
    int idx = 0;
    for (int i = e - 1; i >= 0; --i) idx = idx * p + v[i];
    return idx;
  };
  std::vector<Permutation> gens;
  for (auto const& mat : matrices) {
    std::vector<int> images(n);
    for (int idx = 0; idx < n; ++idx) {
      auto v = decode(idx);
      std::vector<int> w(e, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) w[i] = (w[i] + mat[i * e + j] * v[j]) % p;
      images[idx] = encode(w);
    }
    gens.push_back(Permutation::from_images(images));
  }
  std::vector<int> shift(n);
  for (int idx = 0; idx < n; ++idx) {
    auto v = decode(idx);
    v[0] = (v[0] + 1) % p;
    shift[idx] = encode(v);
  }
  gens.push_back(Permutation::from_images(shift));
  return PermGroup(gens);
}

// AGL(2,3) in its natural degree-9 action.
inline PermGroup agl23() {
  return affine_group(3, 2, {{2, 0, 0, 1}, {2, 1, 2, 0}});
}

// Pick the unique class with the given element order, permutation index
// and (optionally) class size.
inline int class_by_profile(PermGroup const& g, std::uint64_t order, int index,
                            std::uint64_t size = 0) {
  int found = -1;
  for (int c = 0; c < g.class_count(); ++c) {
    auto const& cls = g.conj_class(c);
    if (cls.element_order != order || cls.index != index) continue;
    if (size != 0 && cls.size != size) continue;
    if (found >= 0) throw std::runtime_error("class profile is ambiguous");
    found = c;
  }
  if (found < 0) throw std::runtime_error("no class with the requested profile");
  return found;
}

}  // namespace braidorbits::testing

#endif
