#include "doctest.h"
#include "oracles.hpp"
#include "pel/perm.hpp"
#include "pel/perm_group.hpp"

using namespace pel;

TEST_CASE("composition applies left factor first") {
  // a = (0 1), b = (1 2); a then b sends 0 -> 1 -> 2
  auto a = Permutation::from_cycles(3, {{0, 1}});
  auto b = Permutation::from_cycles(3, {{1, 2}});
  auto ab = a * b;
  CHECK(ab[0] == 2);
  CHECK(ab[2] == 1);
  CHECK(ab[1] == 0);
  auto ba = b * a;
  CHECK(ba[0] == 1);
  CHECK_FALSE(ab == ba);
}

TEST_CASE("inverse, order, identity") {
  auto c = Permutation::from_cycles(6, {{0, 1, 2}, {3, 4}});
  CHECK(c.order() == 6);
  CHECK((c * c.inverse()).is_identity());
  CHECK(Permutation::identity(4).order() == 1);
  CHECK(c.smallest_moved_point() == 0);
  CHECK(Permutation::identity(4).smallest_moved_point() == 4);
  CHECK(c.cycle_string() == "(0 1 2)(3 4)");
}

TEST_CASE("conjugation matches g^-1 x g") {
  auto x = Permutation::from_cycles(5, {{0, 1}});
  auto g = Permutation::from_cycles(5, {{0, 2, 4}});
  auto conj = conjugate(x, g);
  CHECK(conj == g.inverse() * x * g);
  // conjugate of the transposition (0 1) by 0->2 maps the moved points
  CHECK(conj == Permutation::from_cycles(5, {{2, 1}}));
  CHECK(commutator(x, g) == x.inverse() * conj);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(is_p_element(Permutation::identity(2), 6), std::invalid_argument);
}

TEST_CASE("p-element predicate") {
  auto r4 = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  CHECK(is_p_element(r4, 2));
  CHECK_FALSE(is_p_element(r4, 3));
  CHECK(is_p_element(Permutation::identity(4), 3));  // identity for every p
  auto six = Permutation::from_cycles(6, {{0, 1, 2}, {3, 4}});
  CHECK_FALSE(is_p_element(six, 2));
  CHECK_FALSE(is_p_element(six, 3));
}

TEST_CASE("primality helper") {
  CHECK(is_prime(2));
  CHECK(is_prime(127));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("stabilizer chain order and membership vs closure oracle") {
  struct Case {
    uint32_t degree;
    std::vector<Permutation> gens;
  };
  std::vector<Case> cases;
  cases.push_back({4,
                   {Permutation::from_cycles(4, {{0, 1}}),
                    Permutation::from_cycles(4, {{0, 1, 2, 3}})}});  // S4
  cases.push_back({4,
                   {Permutation::from_cycles(4, {{0, 1, 2, 3}}),
                    Permutation::from_cycles(4, {{1, 3}})}});  // D8
  cases.push_back({5,
                   {Permutation::from_cycles(5, {{0, 1, 2}}),
                    Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})}});  // A5
  cases.push_back({7,
                   {Permutation::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}),
                    Permutation::from_cycles(7, {{1, 3, 2, 6, 4, 5}})}});  // F42
  for (const auto& c : cases) {
    auto reference = oracle::enumerate(c.degree, c.gens);
    PermGroup g(c.degree, c.gens);
    CHECK(g.order() == reference.size());
    auto elems = g.elements();
    CHECK(elems == reference);  // sorted and equal
    CHECK(std::is_sorted(elems.begin(), elems.end()));
    for (const auto& e : reference) CHECK(g.contains(e));
  }
}

TEST_CASE("membership rejects non-members") {
  PermGroup a4(4, {Permutation::from_cycles(4, {{0, 1, 2}}),
                   Permutation::from_cycles(4, {{1, 2, 3}})});
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.contains(Permutation::from_cycles(4, {{0, 1}})));
  CHECK(a4.contains(Permutation::from_cycles(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("enumeration bound enforced loudly") {
  uint64_t saved = config::enumeration_bound();
  config::set_enumeration_bound(100);
  PermGroup s5(5, {Permutation::from_cycles(5, {{0, 1}}),
                   Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
  CHECK(s5.order() == 120);  // order itself is fine
  CHECK_THROWS_AS(s5.elements(), GroupTooLarge);
  config::set_enumeration_bound(saved);
  CHECK(s5.elements().size() == 120);
}

TEST_CASE("conjugacy classes match oracle") {
  PermGroup s4(4, {Permutation::from_cycles(4, {{0, 1}}),
                   Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  auto fast = conjugacy_classes(s4);
  auto slow = oracle::classes(s4.elements());
  CHECK(fast.size() == slow.size());
  uint64_t total = 0;
  for (const auto& cls : fast) {
    total += cls.size;
    // representative is the minimal member and class sizes agree
    bool found = false;
    for (const auto& ref : slow)
      if (ref.front() == cls.representative) {
        found = true;
        CHECK(ref.size() == cls.size);
        CHECK(cls.element_order == cls.representative.order());
      }
    CHECK(found);
  }
  CHECK(total == 24);
}

TEST_CASE("centralizer, center, derived subgroup on S4") {
  PermGroup s4(4, {Permutation::from_cycles(4, {{0, 1}}),
                   Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  auto t = Permutation::from_cycles(4, {{0, 1}});
  CHECK(centralizer(s4, t).order() == 4);
  CHECK(center(s4).order() == 1);
  CHECK(derived_subgroup(s4).order() == 12);  // A4
  CHECK(is_solvable(s4));
  PermGroup a5(5, {Permutation::from_cycles(5, {{0, 1, 2}}),
                   Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
  CHECK_FALSE(is_solvable(a5));
}

TEST_CASE("sylow and p-core on S4") {
  PermGroup s4(4, {Permutation::from_cycles(4, {{0, 1}}),
                   Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  auto syl2 = sylow_subgroup(s4, 2);
  CHECK(syl2.order() == 8);
  CHECK_FALSE(is_normal(s4, syl2));
  CHECK(p_core(s4, 2).order() == 4);  // Klein four
  CHECK(p_core(s4, 3).order() == 1);
  auto syl3 = sylow_subgroup(s4, 3);
  CHECK(syl3.order() == 3);
  CHECK(o_p_prime_residual(s4, 2).order() == 24);
  CHECK(o_p_prime_residual(s4, 3).order() == 12);  // A4
}
