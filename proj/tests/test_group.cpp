#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "orb/constructors.hpp"
#include "orb/group.hpp"

using namespace orb;

namespace {

std::map<int, int> order_census(const FiniteGroup& g) {
    std::map<int, int> census;
    for (int x = 0; x < g.order(); ++x) ++census[g.element_order(x)];
    return census;
}

} // namespace

TEST_CASE("cyclic group basics") {
    FiniteGroup z6 = cyclic(6);
    CHECK(z6.order() == 6);
    CHECK(z6.is_abelian());
    z6.audit();
    for (int a = 0; a < 6; ++a) {
        CHECK(z6.mul(a, z6.inv(a)) == 0);
        CHECK(z6.mul(0, a) == a);
        CHECK(z6.element_order(a) == 6 / std::gcd(6, a == 0 ? 6 : a));
    }
    CHECK(z6.pow(1, 6) == 0);
    CHECK(z6.pow(1, -1) == z6.inv(1));
    CHECK(z6.pow(5, 100) == (5 * 100) % 6);
}

TEST_CASE("from_table rejects a broken identity") {
    // row 0 is not an identity row
    std::vector<int> t{1, 0, 0, 1};
    CHECK_THROWS_AS(FiniteGroup::from_table(2, std::move(t), "bad"), Error);
}

TEST_CASE("subgroup validation") {
    FiniteGroup z6 = cyclic(6);
    CHECK_NOTHROW(Subgroup(z6, {0, 2, 4}));
    CHECK_THROWS_AS(Subgroup(z6, {0, 2}), Error);      // not closed
    CHECK_THROWS_AS(Subgroup(z6, {2, 4}), Error);      // missing identity
    CHECK_THROWS_AS(Subgroup(z6, {0, 1, 2, 4}), Error); // order does not divide
}

TEST_CASE("closure and Lagrange") {
    FiniteGroup d12 = dihedral(12);
    for (int x = 0; x < d12.order(); ++x) {
        Subgroup h = closure(d12, {x});
        CHECK(d12.order() % h.size() == 0);
        CHECK(h.size() == d12.element_order(x));
    }
    Subgroup whole = closure(d12, d12.greedy_generators());
    CHECK(whole.is_whole_group());
}

TEST_CASE("center and centralizer") {
    FiniteGroup d8 = dihedral(8);
    Subgroup z = center(d8);
    CHECK(z.size() == 2);
    FiniteGroup q8 = quaternion8();
    CHECK(center(q8).size() == 2);
    // centralizer of a rotation of order 4 in D8 is the rotation subgroup
    int r = -1;
    for (int x = 0; x < 8; ++x)
        if (d8.element_order(x) == 4) {
            r = x;
            break;
        }
    Subgroup c = centralizer(d8, {r});
    CHECK(c.size() == 4);
    for (int m : c.members()) CHECK(d8.commute(m, r));
}

TEST_CASE("conjugacy classes of S3") {
    FiniteGroup s3 = dihedral(6); // D6 == S3
    auto classes = conjugacy_classes(s3);
    REQUIRE(classes.size() == 3);
    std::multiset<int> sizes;
    for (const auto& c : classes) sizes.insert(int(c.size()));
    CHECK(sizes == std::multiset<int>{1, 2, 3});
    // class sizes divide the group order
    for (const auto& c : classes) CHECK(s3.order() % c.size() == 0);
    CHECK(classes[0] == std::vector<int>{0});
}

TEST_CASE("normality") {
    FiniteGroup s3 = dihedral(6);
    int rot = -1, refl = -1;
    for (int x = 0; x < 6; ++x) {
        if (s3.element_order(x) == 3 && rot < 0) rot = x;
        if (s3.element_order(x) == 2 && refl < 0) refl = x;
    }
    CHECK(is_normal(s3, closure(s3, {rot})));
    CHECK_FALSE(is_normal(s3, closure(s3, {refl})));
    CHECK(normal_closure(s3, {refl}).is_whole_group());
    CHECK(normal_closure(s3, {rot}).size() == 3);
}

TEST_CASE("induced group from a subgroup") {
    FiniteGroup d12 = dihedral(12);
    int r = -1;
    for (int x = 0; x < 12; ++x)
        if (d12.element_order(x) == 6) {
            r = x;
            break;
        }
    InducedGroup h = as_group(closure(d12, {r}));
    CHECK(h.group.order() == 6);
    CHECK(h.group.is_abelian());
    h.group.audit();
    // index maps are mutually inverse on members
    for (int i = 0; i < h.group.order(); ++i) CHECK(h.from_parent[h.to_parent[i]] == i);
    // multiplication agrees with the parent
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            CHECK(h.to_parent[h.group.mul(a, b)] == d12.mul(h.to_parent[a], h.to_parent[b]));
}

TEST_CASE("quotient of D8 by its center") {
    FiniteGroup d8 = dihedral(8);
    QuotientGroup q = quotient(d8, center(d8));
    CHECK(q.quotient.order() == 4);
    CHECK(q.quotient.is_abelian());
    q.quotient.audit();
    // coset map is a homomorphism
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            CHECK(q.coset_of[d8.mul(a, b)] == q.quotient.mul(q.coset_of[a], q.coset_of[b]));
    // quotient by a non-normal subgroup is rejected
    FiniteGroup s3 = dihedral(6);
    int refl = -1;
    for (int x = 0; x < 6; ++x)
        if (s3.element_order(x) == 2) {
            refl = x;
            break;
        }
    CHECK_THROWS_AS(quotient(s3, closure(s3, {refl})), NotNormal);
}

TEST_CASE("direct product") {
    FiniteGroup g = direct_product(cyclic(2), cyclic(3));
    CHECK(g.order() == 6);
    CHECK(g.is_abelian());
    CHECK(order_census(g) == std::map<int, int>{{1, 1}, {2, 1}, {3, 2}, {6, 2}});
    g.audit();
}

TEST_CASE("semidirect product Z3 x| Z2 is S3") {
    FiniteGroup z3 = cyclic(3);
    FiniteGroup z2 = cyclic(2);
    // nontrivial element of Z2 inverts Z3
    std::vector<std::vector<int>> action{{0, 1, 2}, {0, 2, 1}};
    FiniteGroup g = semidirect_product(z3, z2, action);
    CHECK(g.order() == 6);
    CHECK_FALSE(g.is_abelian());
    CHECK(order_census(g) == order_census(dihedral(6)));
    g.audit();
    // a non-automorphism action is rejected
    std::vector<std::vector<int>> bad{{0, 1, 2}, {0, 0, 0}};
    CHECK_THROWS_AS(semidirect_product(z3, z2, bad), Error);
}

TEST_CASE("central product Q8 * D8") {
    FiniteGroup q8 = quaternion8();
    FiniteGroup d8 = dihedral(8);
    int zq = center(q8).members()[1];
    int zd = center(d8).members()[1];
    FiniteGroup g = central_product(q8, d8, {{0, 0}, {zq, zd}});
    CHECK(g.order() == 32);
    g.audit();
    CHECK(center(g).size() == 2);
    auto census = order_census(g);
    CHECK(census[4] == 20); // distinguishes Q8*D8 from D8*D8 (12 elements of order 4)
    // derived subgroup is the center: [G,G] computed as normal closure of commutators
    std::vector<int> comms;
    for (int a = 0; a < 32; ++a)
        for (int b = 0; b < 32; ++b) comms.push_back(g.comm(a, b));
    Subgroup derived = closure(g, comms);
    CHECK(derived.size() == 2);
}

TEST_CASE("greedy generators are small and reproducible") {
    FiniteGroup d8 = dihedral(8);
    auto gens = d8.greedy_generators();
    CHECK(gens.size() == 2);
    CHECK(gens == d8.greedy_generators());
    CHECK(closure(d8, gens).is_whole_group());
    auto zgens = cyclic(12).greedy_generators();
    CHECK(zgens.size() == 1);
}
