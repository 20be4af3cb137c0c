#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "braidorbits/group.hpp"
#include "helpers.hpp"

using namespace braidorbits;
using braidorbits::testing::P;
using braidorbits::testing::symmetric;

TEST_CASE("order and membership of S3") {
  auto g = symmetric(3);
  REQUIRE(g.order() == 6);
  REQUIRE(g.contains(P("(1,3)", 3)));
  REQUIRE(g.element_count() == 6);
  REQUIRE(g.element(g.identity_id()).is_identity());
}

TEST_CASE("order of larger groups") {
  REQUIRE(symmetric(6).order() == 720);
  REQUIRE(symmetric(8).order() == 40320);
  auto a5 = PermGroup({P("(1,2,3)", 5), P("(3,4,5)", 5)});
  REQUIRE(a5.order() == 60);
  REQUIRE_FALSE(a5.contains(P("(1,2)", 5)));
}

TEST_CASE("generates") {
  auto g = symmetric(3);
  REQUIRE(g.generates({P("(1,2)", 3), P("(1,2,3)", 3)}));
  REQUIRE_FALSE(g.generates({Permutation::identity(3), Permutation::identity(3)}));
  REQUIRE_FALSE(g.generates({P("(1,2,3)", 3)}));
}

TEST_CASE("conjugacy classes of S3") {
  auto g = symmetric(3);
  REQUIRE(g.class_count() == 3);
  std::multiset<std::uint64_t> sizes;
  std::uint64_t total = 0;
  for (int i = 0; i < g.class_count(); ++i) {
    sizes.insert(g.conj_class(i).size);
    total += g.conj_class(i).size;
  }
  REQUIRE(sizes == std::multiset<std::uint64_t>{1, 2, 3});
  REQUIRE(total == g.order());
  REQUIRE(g.conj_class(g.class_by_label("1A")).size == 1);
  REQUIRE(g.conj_class(g.class_by_label("2A")).size == 3);
  REQUIRE(g.conj_class(g.class_by_label("3A")).size == 2);
}

TEST_CASE("class sizes multiply with centralizer orders") {
  for (auto const& g : {symmetric(4), symmetric(5)}) {
    for (int i = 0; i < g.class_count(); ++i) {
      auto const& cls = g.conj_class(i);
      REQUIRE(cls.size * g.centralizer_of_rep(i).size() == g.order());
      // members share order and cycle type
      auto type = cycle_type(g.element(cls.rep));
      for (ElemId m : cls.members) REQUIRE(cycle_type(g.element(m)) == type);
    }
  }
}

TEST_CASE("classes are closed under conjugation by generators") {
  auto g = symmetric(5);
  for (int i = 0; i < g.class_count(); ++i)
    for (ElemId m : g.conj_class(i).members)
      for (auto const& gen : g.generators())
        REQUIRE(g.class_of_perm(conjugate(g.element(m), gen)) == i);
}

TEST_CASE("class representative is the lexicographic minimum") {
  auto g = symmetric(4);
  for (int i = 0; i < g.class_count(); ++i) {
    auto const& cls = g.conj_class(i);
    for (ElemId m : cls.members) REQUIRE_FALSE(g.element(m) < g.element(cls.rep));
  }
}

TEST_CASE("conjugator table maps members onto the representative") {
  auto g = symmetric(5);
  for (ElemId x = 0; x < g.element_count(); ++x) {
    auto const& rep = g.element(g.conj_class(g.class_of(x)).rep);
    REQUIRE(conjugate(g.element(x), g.element(g.conjugator_to_rep(x))) == rep);
  }
}

TEST_CASE("find_conjugator") {
  auto g = symmetric(3);
  auto x = P("(1,2)", 3), y = P("(1,3)", 3);
  auto c = g.find_conjugator(x, y);
  REQUIRE(c.has_value());
  REQUIRE(conjugate(x, *c) == y);
  REQUIRE_FALSE(g.find_conjugator(x, P("(1,2,3)", 3)).has_value());
}

TEST_CASE("centralizer of a transposition in S3 has order 2") {
  auto g = symmetric(3);
  REQUIRE(g.centralizer_ids(P("(1,2)", 3)).size() == 2);
  // centralizer order times class size equals the group order, any element
  for (ElemId x = 0; x < g.element_count(); ++x)
    REQUIRE(g.centralizer_ids(g.element(x)).size() *
                g.conj_class(g.class_of(x)).size ==
            g.order());
}

TEST_CASE("double cosets") {
  auto g = symmetric(3);
  g.element_count();
  Subgroup whole{&g, {}};
  for (ElemId i = 0; i < g.element_count(); ++i) whole.elems.push_back(i);
  Subgroup pair{&g, {g.identity_id(), g.element_id(P("(1,2)", 3))}};
  std::sort(pair.elems.begin(), pair.elems.end());
  Subgroup triv{&g, {g.identity_id()}};

  SECTION("A = B = <(1,2)> inside S3 gives 2 double cosets") {
    auto dc = double_cosets(pair, pair, whole);
    REQUIRE(dc.reps.size() == 2);
    std::vector<std::uint64_t> sizes(dc.reps.size(), 0);
    for (int c : dc.coset_of) {
      REQUIRE(c >= 0);
      ++sizes[c];
    }
    REQUIRE(sizes[0] + sizes[1] == 6);
  }
  SECTION("A = within gives one double coset") {
    auto dc = double_cosets(whole, triv, whole);
    REQUIRE(dc.reps.size() == 1);
  }
  SECTION("trivial A and B give |within| double cosets") {
    auto dc = double_cosets(triv, triv, whole);
    REQUIRE(dc.reps.size() == 6);
  }
}

TEST_CASE("product_one_count on S3") {
  auto g = symmetric(3);
  int c2 = g.class_by_label("2A"), c3 = g.class_by_label("3A");

  // brute force oracle over explicit elements
  auto brute = [&](std::vector<int> const& cls) {
    std::uint64_t count = 0;
    std::vector<ElemId> stack;
    auto rec = [&](auto&& self, Permutation const& prod, std::size_t at) -> void {
      if (at == cls.size()) {
        if (prod.is_identity()) ++count;
        return;
      }
      for (ElemId m : g.conj_class(cls[at]).members)
        self(self, compose(prod, g.element(m)), at + 1);
    };
    rec(rec, Permutation::identity(3), 0);
    return count;
  };

  REQUIRE(g.product_one_count({c2, c2, c2}) == 0);
  REQUIRE(g.product_one_count({c2, c2, c3}) == 6);
  REQUIRE(g.product_one_count({c2, c2, c3}) == brute({c2, c2, c3}));
  REQUIRE(g.product_one_count({c3, c3, c3}) == brute({c3, c3, c3}));
  REQUIRE(g.product_one_count({c2, c3, c2, c3}) == brute({c2, c3, c2, c3}));
}

TEST_CASE("product_one_count of a class against its inverse class") {
  // pairs (x, x^-1): |C| tuples, matching |C| * |centralizer| / |C_G|
  for (auto const& g : {symmetric(4), symmetric(5)}) {
    for (int i = 0; i < g.class_count(); ++i) {
      auto const& rep = g.element(g.conj_class(i).rep);
      int inv_class = g.class_of_perm(inverse(rep));
      REQUIRE(g.product_one_count({i, inv_class}) == g.conj_class(i).size);
    }
  }
}

TEST_CASE("socle of an affine group") {
  // 3^2:4, the translations form the unique regular normal subgroup
  std::vector<int> tr(9), rot(9);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      int i = x + 3 * y;
      tr[i] = ((x + 1) % 3) + 3 * y;
      rot[i] = ((3 - y) % 3) + 3 * x;  // (x,y) -> (-y,x)
    }
  PermGroup g({Permutation::from_images(tr), Permutation::from_images(rot)});
  REQUIRE(g.order() == 36);
  auto socle = g.socle_regular_elementary(3, 2);
  REQUIRE(socle.size() == 9);
  for (ElemId n : socle) {
    auto const& p = g.element(n);
    if (!p.is_identity()) {
      REQUIRE(element_order(p) == 3);
      REQUIRE(fixed_points(p) == 0);
    }
  }
}

TEST_CASE("socle search rejects non-affine groups") {
  auto s5 = symmetric(5);
  REQUIRE_THROWS(s5.socle_regular_elementary(5, 1));
}

TEST_CASE("second derived subgroup detection") {
  REQUIRE(symmetric(3).second_derived_trivial());
  REQUIRE_FALSE(symmetric(4).second_derived_trivial());
  REQUIRE(braidorbits::testing::agl1(7, 3).second_derived_trivial());
}

TEST_CASE("labels sort by element order then class size") {
  auto g = symmetric(4);
  // classes: 1, (12), (12)(34), (123), (1234) with sizes 1, 6, 3, 8, 6
  REQUIRE(g.conj_class(g.class_by_label("2A")).size == 3);
  REQUIRE(g.conj_class(g.class_by_label("2B")).size == 6);
  REQUIRE(g.conj_class(g.class_by_label("3A")).size == 8);
  REQUIRE(g.conj_class(g.class_by_label("4A")).size == 6);
  REQUIRE_THROWS_AS(g.class_by_label("5A"), std::invalid_argument);
}

TEST_CASE("pinned labels override the derived letters") {
  auto g = symmetric(4);
  g.pin_labels({{"2B", P("(1,2)(3,4)", 4)}});
  REQUIRE(g.conj_class(g.class_by_label("2B")).size == 3);
  REQUIRE(g.conj_class(g.class_by_label("2A")).size == 6);
}
