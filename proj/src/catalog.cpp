#include "orb/catalog.hpp"

#include <algorithm>

#include "orb/constructors.hpp"
#include "orb/structure.hpp"

namespace orb {

namespace {

// conjugation is always an automorphism; skip validation
Automorphism conj_by(const FiniteGroup& g, int h) {
    Automorphism m;
    m.image.resize(g.order());
    for (int x = 0; x < g.order(); ++x) m.image[x] = g.conj(x, h);
    return m;
}

template <typename Fn>
Automorphism from_fn(const FiniteGroup& g, Fn&& fn) {
    Automorphism m;
    m.image.resize(g.order());
    for (int x = 0; x < g.order(); ++x) m.image[x] = fn(x);
    validate_automorphism(g, m.image);
    return m;
}

ActionSpec explicit_action(std::string name, std::vector<Automorphism> gens) {
    ActionSpec a;
    a.kind = ActionKind::Explicit;
    a.name = std::move(name);
    a.generators = std::move(gens);
    return a;
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Order-12 group Z3 x| Z4 with the generator of Z4 inverting Z3. The
/// action pairs the inner map of the order-4 generator with the outer
/// involution fixing the normal Z3 and inverting the complement.
CatalogEntry order12_entry() {
    FiniteGroup z3 = cyclic(3), z4 = cyclic(4);
    std::vector<std::vector<int>> invert(4);
    for (int j = 0; j < 4; ++j) invert[j] = (j % 2 == 0) ? std::vector<int>{0, 1, 2}
                                                         : std::vector<int>{0, 2, 1};
    FiniteGroup g = semidirect_product(z3, z4, invert);
    g.set_name("z3-z4");
    int tau = 1; // (0, 1)
    Automorphism t = conj_by(g, tau);
    Automorphism alpha = from_fn(g, [](int x) { return (x / 4) * 4 + (4 - x % 4) % 4; });

    CatalogEntry e;
    e.name = "z3-z4";
    e.group = g;
    CatalogAction a;
    a.name = "t-alpha";
    a.action = explicit_action("t-alpha", {t, alpha});
    a.expected.orbit_sizes = {{1, 2, 2, 2, 4}};
    a.expected.shape = "FGraphWithSingular";
    a.expected.theorem_case = "split-core-frobenius";
    a.expected.singular_orbit_size = 1;
    a.expected.singular_rep_order = 2;
    a.expected.triangle_count = 1;
    a.expected.note = "5 vertices: one triangle at the central involution plus two pendants";
    e.actions.push_back(std::move(a));
    return e;
}

CatalogEntry sl25_entry(long long budget) {
    MatGroup s = sl2(5);
    CatalogEntry e;
    e.name = "sl25";
    e.group = s.group;
    CatalogAction a;
    a.name = "full-aut";
    a.action = full_aut(e.group, budget);
    a.expected.orbit_sizes = {{1, 20, 20, 24, 24, 30}};
    a.expected.shape = "FGraphWithSingular";
    a.expected.theorem_case = "quasisimple-sl25";
    a.expected.singular_orbit_size = 1;
    a.expected.singular_rep_order = 2;
    a.expected.triangle_count = 2;
    a.expected.note = "two triangles and a tail at the central involution; "
                      "the degree-1 vertex is the size-30 orbit of order-4 elements";
    e.actions.push_back(std::move(a));
    return e;
}

/// Conjugation map of a (possibly odd) permutation u on a stored
/// permutation group.
Automorphism perm_conj(const PermGroup& pg, const std::vector<int>& u) {
    int d = pg.degree;
    return from_fn(pg.group, [&](int x) {
        const auto& p = pg.perm(x);
        std::vector<int> img(d);
        for (int i = 0; i < d; ++i) img[u[i]] = u[p[i]];
        return pg.index_of(img);
    });
}

/// A5 under conjugation by the point stabilizer S4 < S5.
CatalogEntry a5_entry() {
    PermGroup a5 = alt(5);
    CatalogEntry e;
    e.name = "a5";
    e.group = a5.group;
    CatalogAction a;
    a.name = "sym4-conj";
    a.action = explicit_action(
        "sym4-conj", {perm_conj(a5, {1, 0, 2, 3, 4}), perm_conj(a5, {1, 2, 3, 0, 4})});
    a.expected.orbit_sizes = {{3, 8, 12, 12, 24}};
    a.expected.shape = "NotConnected";
    a.expected.theorem_case = "not-applicable";
    a.expected.triangle_count = 0;
    a.expected.note = "5 isolated vertices";
    e.actions.push_back(std::move(a));
    return e;
}

/// Z7 x A5 with two actions: the scalar Frobenius generator on Z7 paired
/// with either all of S5 or the point stabilizer S4 acting on A5.
CatalogEntry z7xa5_entry() {
    PermGroup a5 = alt(5);
    FiniteGroup z7 = cyclic(7);
    FiniteGroup g = direct_product(z7, a5.group);
    g.set_name("z7xa5");
    int nh = a5.group.order();

    Automorphism scalar = from_fn(g, [&](int x) { return ((3 * (x / nh)) % 7) * nh + x % nh; });
    auto h_conj = [&](const std::vector<int>& u) {
        Automorphism inner = perm_conj(a5, u);
        return from_fn(g, [&](int x) { return (x / nh) * nh + inner(x % nh); });
    };

    CatalogEntry e;
    e.name = "z7xa5";
    e.group = g;

    CatalogAction big;
    big.name = "u1xu2";
    big.action = explicit_action(
        "u1xu2", {scalar, h_conj({1, 0, 2, 3, 4}), h_conj({1, 2, 3, 4, 0})});
    big.expected.orbit_sizes = {{6, 15, 20, 24, 90, 120, 144}};
    big.expected.shape = "Friendship(3)";
    big.expected.theorem_case = "core-times-simple";
    big.expected.singular_orbit_size = 6;
    big.expected.singular_rep_order = 7;
    big.expected.triangle_count = 3;
    big.expected.note = "friendship graph with 3 triangles; hub is the central 7-part";
    e.actions.push_back(std::move(big));

    CatalogAction small;
    small.name = "u1xu3";
    small.action = explicit_action(
        "u1xu3", {scalar, h_conj({1, 0, 2, 3, 4}), h_conj({1, 2, 3, 0, 4})});
    small.expected.orbit_sizes = {{3, 6, 8, 12, 12, 18, 24, 48, 72, 72, 144}};
    small.expected.shape = "Friendship(5)";
    small.expected.theorem_case = "core-times-simple";
    small.expected.singular_orbit_size = 6;
    small.expected.singular_rep_order = 7;
    small.expected.triangle_count = 5;
    small.expected.note = "friendship graph with 5 triangles";
    e.actions.push_back(std::move(small));
    return e;
}

/// 3^4 x| (D8*Q8) inside GL(4,3), acted on by conjugation from the two
/// extra matrices f (order 5) and g (order 8) on top of the inner maps.
CatalogEntry m81_entry() {
    GaloisField f3 = GaloisField::prime(3);
    auto m4 = [&](const std::vector<std::vector<int>>& rows) {
        return Matrix::from_int_rows(f3, rows);
    };
    Matrix al = m4({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
    Matrix be = m4({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
    Matrix ga = m4({{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, -1, 0}, {0, 1, 0, -1}});
    Matrix de = m4({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
    Matrix fm = m4({{1, 1, -1, -1}, {0, 0, -1, 1}, {0, 0, -1, -1}, {-1, 1, 1, -1}});
    Matrix gm = m4({{0, 1, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 0}});
    MatGroup s = matrix_group(f3, {al, be, ga, de}, "d8q8");

    FiniteGroup m = elementary_abelian(3, 4);
    auto vec_of = [](int idx) {
        std::vector<int> v(4);
        for (int i = 0; i < 4; ++i) {
            v[i] = idx % 3;
            idx /= 3;
        }
        return v;
    };
    auto idx_of = [](const std::vector<int>& v) {
        return v[0] + v[1] * 3 + v[2] * 9 + v[3] * 27;
    };

    int ns = s.group.order();
    std::vector<std::vector<int>> act(ns);
    for (int si = 0; si < ns; ++si) {
        act[si].resize(m.order());
        for (int x = 0; x < m.order(); ++x) act[si][x] = idx_of(s.matrix(si).apply(vec_of(x)));
    }
    FiniteGroup g = semidirect_product(m, s.group, act);
    g.set_name("m81-d8q8");

    std::vector<Automorphism> gens;
    std::vector<int> inner = {1 * ns, 3 * ns, 9 * ns, 27 * ns}; // basis of the 3^4 part
    for (const Matrix& w : {al, be, ga, de}) inner.push_back(s.index_of(w));
    for (int h : inner) gens.push_back(conj_by(g, h));
    auto outer = [&](const Matrix& w) {
        Matrix wi = w.inverse();
        return from_fn(g, [&](int x) {
            int cs = s.index_of(w.mul(s.matrix(x % ns)).mul(wi));
            return idx_of(w.apply(vec_of(x / ns))) * ns + cs;
        });
    };
    gens.push_back(outer(fm));
    gens.push_back(outer(gm));

    CatalogEntry e;
    e.name = "m81-d8q8";
    e.group = g;
    CatalogAction a;
    a.name = "msb-conj";
    a.action = explicit_action("msb-conj", std::move(gens));
    a.expected.orbit_sizes = {{80, 81, 90, 720, 1620}};
    a.expected.shape = "Friendship(2)";
    a.expected.theorem_case = "trivial-core-q8d8";
    a.expected.singular_orbit_size = 90;
    a.expected.singular_rep_order = 2;
    a.expected.triangle_count = 2;
    a.expected.note = "two triangles joined at the orbit of the involution beta; "
                      "orbit sizes 3^4-1, 3^4, 9*10, 9*8*10, 81*20";
    e.actions.push_back(std::move(a));
    return e;
}

/// Order-72 subgroup 3^2<y1,z> of 3^2 x| T, T a Sylow 2-subgroup of
/// GL(2,3); the full 144-element overgroup acts by conjugation.
CatalogEntry order72_entry() {
    GaloisField f3 = GaloisField::prime(3);
    auto m2 = [&](const std::vector<std::vector<int>>& rows) {
        return Matrix::from_int_rows(f3, rows);
    };
    MatGroup gl = matrix_group(
        f3, {m2({{1, 1}, {0, 1}}), m2({{0, -1}, {1, 0}}), m2({{-1, 0}, {0, 1}})}, "gl23");
    Subgroup tsub = sylow(gl.group, 2);
    InducedGroup t = as_group(tsub);
    const FiniteGroup& tg = t.group;

    // pick y1, y2 generating the quaternion half and an outside involution
    // z with y1^z = y1^{-1}, y2^z = y1*y2
    auto det1 = [&](int ti) { return gl.matrix(t.to_parent[ti]).det() == 1; };
    int y1 = -1, y2 = -1, z = -1;
    for (int zc = 0; zc < tg.order() && z < 0; ++zc) {
        if (tg.element_order(zc) != 2 || det1(zc)) continue;
        for (int c1 = 0; c1 < tg.order() && z < 0; ++c1) {
            if (tg.element_order(c1) != 4 || !det1(c1)) continue;
            if (tg.conj(c1, zc) != tg.inv(c1)) continue;
            for (int c2 = 0; c2 < tg.order(); ++c2) {
                if (tg.element_order(c2) != 4 || !det1(c2)) continue;
                if (closure(tg, {c1, c2}).size() != 8) continue;
                if (tg.conj(c2, zc) != tg.mul(c1, c2)) continue;
                y1 = c1;
                y2 = c2;
                z = zc;
                break;
            }
        }
    }
    if (z < 0) throw Error("order72_entry: no (y1,y2,z) triple found");

    FiniteGroup m = elementary_abelian(3, 2);
    auto vec_of = [](int idx) { return std::vector<int>{idx % 3, idx / 3}; };
    std::vector<std::vector<int>> act(tg.order());
    for (int ti = 0; ti < tg.order(); ++ti) {
        const Matrix& w = gl.matrix(t.to_parent[ti]);
        act[ti].resize(9);
        for (int x = 0; x < 9; ++x) {
            std::vector<int> v = w.apply(vec_of(x));
            act[ti][x] = v[0] + v[1] * 3;
        }
    }
    FiniteGroup a144 = semidirect_product(m, tg, act);
    a144.set_name("m9-t16");
    int nt = tg.order();
    Subgroup gsub = closure(a144, {1 * nt, 3 * nt, y1, z});
    if (gsub.size() != 72) throw Error("order72_entry: wrong subgroup order");
    OvergroupAction over = overgroup_action(a144, gsub);

    CatalogEntry e;
    e.name = "m9-d8";
    e.group = over.target.group;
    e.group.set_name("m9-d8");
    CatalogAction a;
    a.name = "overgroup";
    a.action = over.action;
    a.action.name = "overgroup";
    a.expected.orbit_sizes = {{8, 9, 12, 18, 24}};
    a.expected.shape = "FGraphWithSingular";
    a.expected.theorem_case = "trivial-core-d8";
    a.expected.singular_orbit_size = 12;
    a.expected.singular_rep_order = 2;
    a.expected.triangle_count = 1;
    a.expected.note = "triangle at the involution orbit (size 12) with a 2-edge tail "
                      "through the 3^2 core orbits";
    e.actions.push_back(std::move(a));
    return e;
}

/// Extraspecial 27 with its two dihedral outer actions over the inner maps.
CatalogEntry es27_entry() {
    FiniteGroup g = extraspecial_p3_exp_p(3);
    int a = 1, b = 3; // generators; c = [a,b] is the central generator
    // automorphism from generator images (element (i,j,k) = b^j a^i c^k)
    auto gen_map = [&](int ia, int ib) {
        int ic = g.comm(ia, ib);
        return from_fn(g, [&](int x) {
            int i = x % 3, j = (x / 3) % 3, k = x / 9;
            return g.mul(g.mul(g.pow(ib, j), g.pow(ia, i)), g.pow(ic, k));
        });
    };
    Automorphism x = gen_map(g.inv(b), a);  // a -> b^-1, b -> a (centralizes the center)
    Automorphism t = gen_map(g.inv(a), b);  // a -> a^-1, b -> b (inverts the center)
    Automorphism x2;
    x2.image.resize(g.order());
    for (int v = 0; v < g.order(); ++v) x2.image[v] = x(x(v));
    std::vector<Automorphism> inner = {conj_by(g, a), conj_by(g, b)};

    CatalogEntry e;
    e.name = "es27";
    e.group = g;

    CatalogAction a1;
    a1.name = "inn-b";
    a1.action = explicit_action("inn-b", {inner[0], inner[1], x, t});
    a1.expected.orbit_sizes = {{2, 12, 12}};
    a1.expected.shape = "Path(3)";
    a1.expected.theorem_case = "not-applicable";
    a1.expected.triangle_count = 0;
    a1.expected.note = "path of length 2 through the center orbit";
    e.actions.push_back(std::move(a1));

    CatalogAction a2;
    a2.name = "inn-c";
    a2.action = explicit_action("inn-c", {inner[0], inner[1], x2, t});
    a2.expected.orbit_sizes = {{2, 6, 6, 12}};
    a2.expected.shape = "Star(4)";
    a2.expected.theorem_case = "not-applicable";
    a2.expected.triangle_count = 0;
    a2.expected.note = "star with 4 vertices centered at the center orbit";
    e.actions.push_back(std::move(a2));
    return e;
}

/// The two groups with center of order 2 and central quotient S3, each with
/// a Sylow-2 inner action and the full inner action.
CatalogEntry center2_entry(FiniteGroup g, const std::string& name, int friendship_sylow) {
    g.set_name(name);
    Subgroup s2 = sylow(g, 2);
    std::vector<Automorphism> sgens;
    for (int h : s2.members())
        if (h != 0) sgens.push_back(conj_by(g, h));
    CatalogEntry e;
    e.name = name;
    e.group = g;

    CatalogAction a;
    a.name = "sylow2-inner";
    a.action = explicit_action("sylow2-inner", std::move(sgens));
    a.expected.shape = "Friendship(" + std::to_string(friendship_sylow) + ")";
    a.expected.theorem_case = "split-core-frobenius";
    a.expected.singular_orbit_size = 1;
    a.expected.singular_rep_order = 2;
    a.expected.triangle_count = friendship_sylow;
    a.expected.note = "conjugation by a Sylow 2-subgroup; hub is the central involution";
    e.actions.push_back(std::move(a));

    CatalogAction inn;
    inn.name = "inner";
    inn.action = inner_action(e.group);
    inn.action.name = "inner";
    inn.expected.shape = "Friendship(2)";
    inn.expected.theorem_case = "split-core-frobenius";
    inn.expected.singular_orbit_size = 1;
    inn.expected.singular_rep_order = 2;
    inn.expected.triangle_count = 2;
    inn.expected.note = "full inner action fuses the pendant pairs into two triangles";
    e.actions.push_back(std::move(inn));
    return e;
}

} // namespace

CatalogEntry gf_frobenius_pair(int p, int n, int q, int m) {
    if (!is_prime(p) || !is_prime(q) || p == q || n < 1 || m < 1)
        throw InputError("gf_frobenius_pair: need distinct primes and positive exponents");
    GaloisField fp = GaloisField::make(p, n);
    GaloisField fq = GaloisField::make(q, m);
    long long pn = fp.q(), qm = fq.q();
    if ((qm - 1) % p == 0 || (pn - 1) % q == 0)
        throw CoprimalityViolated("gf_frobenius_pair: acting group order shares a factor with |G|");
    FiniteGroup g = direct_product(elementary_abelian(p, n), elementary_abelian(q, m));
    std::string name = "gfpair-" + std::to_string(pn) + "-" + std::to_string(qm);
    g.set_name(name);
    int lp = fp.primitive_element(), lq = fq.primitive_element();
    // elementary-abelian indices coincide with field element indices
    Automorphism a1 = from_fn(g, [&](int x) { return fp.mul(lp, x / int(qm)) * int(qm) + x % int(qm); });
    Automorphism a2 = from_fn(g, [&](int x) { return (x / int(qm)) * int(qm) + fq.mul(lq, x % int(qm)); });

    CatalogEntry e;
    e.name = name;
    e.group = g;
    CatalogAction a;
    a.name = "coprime-pair";
    a.action = explicit_action("coprime-pair", {a1, a2});
    a.expected.orbit_sizes = sorted({int(pn) - 1, int(qm) - 1, int(pn - 1) * int(qm - 1)});
    a.expected.shape = "Cycle(3)";
    a.expected.theorem_case = "two-elementary-factors";
    a.expected.triangle_count = 1;
    a.expected.note = "coprime action, triangle on the two factor orbits and the mixed orbit";
    e.actions.push_back(std::move(a));
    return e;
}

std::vector<CatalogEntry> paper_catalog(long long aut_budget) {
    std::vector<CatalogEntry> out;
    out.push_back(order12_entry());
    out.push_back(sl25_entry(aut_budget));
    out.push_back(a5_entry());
    out.push_back(z7xa5_entry());
    out.push_back(m81_entry());
    out.push_back(order72_entry());
    out.push_back(es27_entry());
    out.push_back(center2_entry(direct_product(cyclic(2), dihedral(6)), "z2xs3", 3));
    out.push_back(center2_entry(dicyclic12(), "dic12", 3));
    out.push_back(gf_frobenius_pair(3, 1, 5, 1));
    out.push_back(gf_frobenius_pair(3, 2, 5, 1));
    out.push_back(gf_frobenius_pair(7, 1, 5, 1));
    return out;
}

} // namespace orb
