#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "braidorbits/classic.hpp"
#include "helpers.hpp"

using namespace braidorbits;
using braidorbits::testing::agl23;
using braidorbits::testing::class_by_profile;
using braidorbits::testing::symmetric;

namespace {

std::vector<Tuple> all_tuples(PermGroup const& G, std::vector<int> const& classes) {
  std::vector<Tuple> out;
  for_each_product_one_tuple(G, classes, [&](Tuple const& t) { out.push_back(t); });
  return out;
}

}  // namespace

TEST_CASE("canonical form under the trivial subgroup is the identity map") {
  auto g = symmetric(3);
  Tuple t{g.element(3), g.element(4), inverse(compose(g.element(3), g.element(4)))};
  REQUIRE(minimize_over(t, {Permutation::identity(3)}) == t);
}

TEST_CASE("canonical form is constant on conjugation orbits and idempotent") {
  auto g = symmetric(4);
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Tuple t;
    for (int i = 0; i < 3; ++i)
      t.push_back(g.element(braidorbits::testing::random_element(g, rng)));
    t.push_back(inverse(tuple_product(t, 0, t.size())));
    Tuple cf = canonical_form(g, t);
    REQUIRE(canonical_form(g, cf) == cf);
    Tuple u = t;
    conjugate_tuple(u, g.element(braidorbits::testing::random_element(g, rng)));
    REQUIRE(canonical_form(g, u) == cf);
    // the form is dominated by every orbit member
    REQUIRE_FALSE(u < cf);
  }
}

TEST_CASE("distinct conjugation orbits get distinct canonical forms") {
  auto g = symmetric(3);
  int c2 = g.class_by_label("2A"), c3 = g.class_by_label("3A");
  for (auto const& classes :
       {std::vector<int>{c2, c2, c3}, {c3, c3, c3}, {c2, c2, c2, c2}}) {
    auto tuples = all_tuples(g, classes);
    // brute-force orbit partition under diagonal conjugation
    std::map<std::string, int> orbit;
    int orbits = 0;
    for (auto const& t : tuples) {
      if (orbit.count(tuple_key(t))) continue;
      for (ElemId e = 0; e < g.element_count(); ++e) {
        Tuple u = t;
        conjugate_tuple(u, g.element(e));
        orbit[tuple_key(u)] = orbits;
      }
      ++orbits;
    }
    std::set<std::string> forms;
    for (auto const& t : tuples) forms.insert(tuple_key(canonical_form(g, t)));
    REQUIRE(static_cast<int>(forms.size()) == orbits);
  }
}

TEST_CASE("tuple enumeration matches the counting oracle") {
  auto g = symmetric(3);
  int c2 = g.class_by_label("2A"), c3 = g.class_by_label("3A");
  REQUIRE(all_tuples(g, {c2, c2, c3}).size() == 6);
  REQUIRE(all_tuples(g, {c2, c2, c2}).empty());

  auto s4 = symmetric(4);
  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<int> classes;
    for (int i = 0; i < 3; ++i)
      classes.push_back(1 + static_cast<int>(rng.below(s4.class_count() - 1)));
    std::sort(classes.begin(), classes.end());
    REQUIRE(all_tuples(s4, classes).size() == s4.product_one_count(classes));
  }
}

TEST_CASE("every tuple is enumerated exactly once") {
  auto g = symmetric(4);
  std::vector<int> classes{g.class_by_label("2B"), g.class_by_label("2B"),
                           g.class_by_label("3A")};
  auto tuples = all_tuples(g, classes);
  std::set<std::string> keys;
  for (auto const& t : tuples) {
    REQUIRE(product_is_one(t));
    for (std::size_t i = 0; i < t.size(); ++i)
      REQUIRE(g.class_of_perm(t[i]) == classes[i]);
    REQUIRE(keys.insert(tuple_key(t)).second);
  }
}

TEST_CASE("seed stream reaches every canonical form") {
  auto g = symmetric(4);
  std::vector<int> classes{g.class_by_label("2A"), g.class_by_label("2B"),
                           g.class_by_label("2B"), g.class_by_label("3A")};
  std::set<std::string> all_forms, seed_forms;
  for_each_product_one_tuple(g, classes, [&](Tuple const& t) {
    all_forms.insert(tuple_key(canonical_form(g, t)));
  });
  for_each_seed_tuple(g, classes, [&](Tuple const& t) {
    seed_forms.insert(tuple_key(canonical_form(g, t)));
  });
  REQUIRE(all_forms == seed_forms);
}

TEST_CASE("orbit partition of a small type") {
  auto g = symmetric(3);
  int c2 = g.class_by_label("2A"), c3 = g.class_by_label("3A");
  auto report = orbit_partition(g, RamificationType({c2, c2, c3}));
  REQUIRE(report.orbits.size() == 1);
  REQUIRE(report.orbits[0].length == 1);
  REQUIRE(report.orbits[0].generating);
  REQUIRE(report.total_raw_tuples == 6);
}

TEST_CASE("orbit partition accounts for the full structure constant") {
  auto g = symmetric(4);
  std::vector<int> classes{g.class_by_label("2B"), g.class_by_label("2B"),
                           g.class_by_label("3A"), g.class_by_label("3A")};
  auto report = orbit_partition(g, RamificationType(classes));
  REQUIRE(report.total_raw_tuples == g.product_one_count(classes));
  std::uint64_t forms = 0;
  for (auto const& o : report.orbits) forms += o.length;
  REQUIRE(report.form_orbit.size() == forms);
}

TEST_CASE("minimal and superset parabolic generators give the same partition") {
  auto g = symmetric(4);
  std::vector<int> classes{g.class_by_label("2B"), g.class_by_label("2B"),
                           g.class_by_label("4A"), g.class_by_label("4A")};
  auto a = orbit_partition(g, RamificationType(classes), {.minimal_parabolic = false});
  auto b = orbit_partition(g, RamificationType(classes), {.minimal_parabolic = true});
  REQUIRE(a.orbits.size() == b.orbits.size());
  REQUIRE(a.form_orbit == b.form_orbit);
}

TEST_CASE("work cap aborts oversized scans") {
  auto g = symmetric(4);
  std::vector<int> classes{g.class_by_label("2B"), g.class_by_label("2B"),
                           g.class_by_label("3A"), g.class_by_label("3A")};
  REQUIRE_THROWS_AS(orbit_partition(g, RamificationType(classes), {.work_cap = 2}),
                    std::runtime_error);
}

TEST_CASE("the five-branch-point type of the affine degree-9 group") {
  auto g = agl23();
  REQUIRE(g.order() == 432);
  // the involution class acting with three fixed points and the order-3
  // class with index 4
  int c2 = class_by_profile(g, 2, 3);
  int c3 = class_by_profile(g, 3, 4);
  auto report =
      orbit_partition(g, RamificationType({c2, c2, c2, c2, c3}), {.generating_only = true});
  REQUIRE(report.generating_orbits == 1);
  REQUIRE(report.orbits[0].length == 216);
}
