#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "orb/constructors.hpp"
#include "orb/field.hpp"

using namespace orb;

namespace {

std::map<int, int> order_census(const FiniteGroup& g) {
    std::map<int, int> census;
    for (int x = 0; x < g.order(); ++x) ++census[g.element_order(x)];
    return census;
}

void check_field_axioms(const GaloisField& f) {
    int q = f.q();
    for (int a = 0; a < q; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        for (int b = 0; b < q; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            for (int c = 0; c < q; ++c) {
                CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

} // namespace

TEST_CASE("field axioms hold exhaustively") {
    check_field_axioms(GaloisField::prime(2));
    check_field_axioms(GaloisField::prime(3));
    check_field_axioms(GaloisField::prime(5));
    check_field_axioms(GaloisField::prime(7));
    check_field_axioms(GaloisField::gf4());
    check_field_axioms(GaloisField::gf9());
}

TEST_CASE("primitive elements have full multiplicative order") {
    for (auto f : {GaloisField::prime(3), GaloisField::prime(5), GaloisField::prime(7),
                   GaloisField::gf4(), GaloisField::gf9()}) {
        int a = f.primitive_element();
        int x = a, o = 1;
        while (x != 1) {
            x = f.mul(x, a);
            ++o;
        }
        CHECK(o == f.q() - 1);
    }
}

TEST_CASE("matrix determinant and inverse") {
    GaloisField f3 = GaloisField::prime(3);
    Matrix m = Matrix::from_int_rows(f3, {{1, 1}, {0, 1}});
    CHECK(m.det() == 1);
    CHECK(m.mul(m.inverse()) == Matrix::identity(f3, 2));
    Matrix s = Matrix::from_int_rows(f3, {{1, 1}, {2, 2}});
    CHECK(s.det() == 0);
    CHECK_THROWS_AS(s.inverse(), Error);
    // determinant is multiplicative on a sample of invertible matrices
    Matrix a = Matrix::from_int_rows(f3, {{0, 1}, {-1, 0}});
    Matrix b = Matrix::from_int_rows(f3, {{2, 1}, {1, 1}});
    CHECK(a.mul(b).det() == f3.mul(a.det(), b.det()));
}

TEST_CASE("elementary abelian groups") {
    FiniteGroup e9 = elementary_abelian(3, 2);
    CHECK(e9.order() == 9);
    CHECK(e9.is_abelian());
    for (int x = 1; x < 9; ++x) CHECK(e9.element_order(x) == 3);
    e9.audit();
    FiniteGroup e16 = elementary_abelian(2, 4);
    CHECK(e16.order() == 16);
    for (int x = 1; x < 16; ++x) CHECK(e16.element_order(x) == 2);
}

TEST_CASE("dihedral groups") {
    FiniteGroup d8 = dihedral(8);
    CHECK(order_census(d8) == std::map<int, int>{{1, 1}, {2, 5}, {4, 2}});
    d8.audit();
    FiniteGroup d14 = dihedral(14);
    CHECK(order_census(d14) == std::map<int, int>{{1, 1}, {2, 7}, {7, 6}});
    d14.audit();
}

TEST_CASE("quaternion and dicyclic groups") {
    FiniteGroup q8 = quaternion8();
    CHECK(order_census(q8) == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}});
    q8.audit();
    FiniteGroup dic = dicyclic12();
    CHECK(order_census(dic) == std::map<int, int>{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}});
    CHECK_FALSE(dic.is_abelian());
    dic.audit();
}

TEST_CASE("symmetric and alternating groups") {
    PermGroup s4 = sym(4);
    CHECK(s4.group.order() == 24);
    s4.group.audit();
    CHECK(order_census(s4.group) == std::map<int, int>{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
    PermGroup a5 = alt(5);
    CHECK(a5.group.order() == 60);
    a5.group.audit();
    auto classes = conjugacy_classes(a5.group);
    std::multiset<int> sizes;
    for (const auto& c : classes) sizes.insert(int(c.size()));
    CHECK(sizes == std::multiset<int>{1, 12, 12, 15, 20});
    // composition convention: index arithmetic matches image-array composition
    for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b) {
            const auto& pa = a5.perm(a);
            const auto& pb = a5.perm(b);
            std::vector<int> ab(5);
            for (int x = 0; x < 5; ++x) ab[x] = pa[pb[x]];
            CHECK(a5.index_of(ab) == a5.group.mul(a, b));
        }
}

TEST_CASE("permutation closure") {
    // S4 from a transposition and a 4-cycle
    PermGroup s4 = permutation_group(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}, "S4gen");
    CHECK(s4.group.order() == 24);
    // V4 from double transpositions
    PermGroup v4 = permutation_group(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, "V4");
    CHECK(v4.group.order() == 4);
    CHECK(v4.group.is_abelian());
    CHECK_THROWS_AS(permutation_group(4, {{0, 0, 1, 2}}, "bad"), Error);
    CHECK_THROWS_AS(permutation_group(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, "S5", 30),
                    ClosureTooLarge);
}

TEST_CASE("extraspecial group of order 27 and exponent 3") {
    FiniteGroup g = extraspecial_p3_exp_p(3);
    CHECK(g.order() == 27);
    for (int x = 1; x < 27; ++x) CHECK(g.element_order(x) == 3);
    Subgroup z = center(g);
    CHECK(z.size() == 3);
    // derived subgroup equals the center
    std::vector<int> comms;
    for (int a = 0; a < 27; ++a)
        for (int b = 0; b < 27; ++b) comms.push_back(g.comm(a, b));
    CHECK(closure(g, comms).members() == z.members());
    g.audit();
}

TEST_CASE("special linear groups") {
    CHECK(sl2(3).group.order() == 24);
    CHECK(sl2(4).group.order() == 60);
    CHECK(sl2(5).group.order() == 120);
    CHECK(sl2(7).group.order() == 336);
    CHECK(sl2(9).group.order() == 720);
    MatGroup g5 = sl2(5);
    CHECK(center(g5.group).size() == 2);
    CHECK(center(sl2(4).group).size() == 1);
    // matrix indexing round-trips and matches group multiplication
    for (int a = 0; a < 20; ++a)
        for (int b = 0; b < 20; ++b)
            CHECK(g5.index_of(g5.matrix(a).mul(g5.matrix(b))) == g5.group.mul(a, b));
    // all elements have determinant one
    for (int i = 0; i < g5.group.order(); ++i) CHECK(g5.matrix(i).det() == 1);
}

TEST_CASE("projective special linear groups") {
    FiniteGroup p5 = psl2(5);
    CHECK(p5.order() == 60);
    auto classes = conjugacy_classes(p5);
    std::multiset<int> sizes;
    for (const auto& c : classes) sizes.insert(int(c.size()));
    CHECK(sizes == std::multiset<int>{1, 12, 12, 15, 20}); // same as A5
    CHECK(psl2(4).order() == 60);
    CHECK(psl2(9).order() == 360);
}
