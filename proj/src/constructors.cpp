#include "orb/constructors.hpp"

#include <algorithm>
#include <numeric>

namespace orb {

FiniteGroup cyclic(int n) {
    if (n < 1 || n > FiniteGroup::kDenseLimit) throw OutOfRange("cyclic: order out of range");
    std::vector<int> table(size_t(n) * n);
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        labels[a] = "g^" + std::to_string(a);
        for (int b = 0; b < n; ++b) table[size_t(a) * n + b] = (a + b) % n;
    }
    return FiniteGroup::from_table(n, std::move(table), "Z" + std::to_string(n), std::move(labels));
}

FiniteGroup elementary_abelian(int p, int k) {
    if (p < 2 || k < 1) throw OutOfRange("elementary_abelian: bad parameters");
    long long ord = 1;
    for (int i = 0; i < k; ++i) ord *= p;
    if (ord > FiniteGroup::kDenseLimit) throw OutOfRange("elementary_abelian: order too large");
    int n = int(ord);
    auto add_vec = [p, k](int a, int b) {
        int out = 0, mult = 1;
        for (int i = 0; i < k; ++i) {
            out += ((a % p + b % p) % p) * mult;
            a /= p;
            b /= p;
            mult *= p;
        }
        return out;
    };
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        std::string s = "(";
        int x = a;
        for (int i = 0; i < k; ++i) {
            s += std::to_string(x % p) + (i + 1 < k ? "," : "");
            x /= p;
        }
        labels[a] = s + ")";
    }
    return FiniteGroup::from_oracle(n, add_vec,
                                    "E" + std::to_string(p) + "^" + std::to_string(k),
                                    std::move(labels));
}

FiniteGroup dihedral(int order) {
    if (order < 4 || order % 2 != 0) throw OutOfRange("dihedral: order must be even >= 4");
    int m = order / 2;
    // element (r,s) = rot^r * refl^s, index r*2+s
    auto mul = [m](int a, int b) {
        int r1 = a / 2, s1 = a % 2, r2 = b / 2, s2 = b % 2;
        int r = s1 == 0 ? (r1 + r2) % m : ((r1 - r2) % m + m) % m;
        return r * 2 + (s1 ^ s2);
    };
    std::vector<std::string> labels(order);
    for (int i = 0; i < order; ++i)
        labels[i] = "r^" + std::to_string(i / 2) + (i % 2 ? "s" : "");
    return FiniteGroup::from_oracle(order, mul, "D" + std::to_string(order), std::move(labels));
}

FiniteGroup quaternion8() {
    // elements i^a j^b, index a*2+b; relations i^4=1, j^2=i^2, i^j=i^-1
    auto mul = [](int x, int y) {
        int a1 = x / 2, b1 = x % 2, a2 = y / 2, b2 = y % 2;
        int a = b1 == 0 ? (a1 + a2) % 4 : ((a1 - a2) % 4 + 4) % 4;
        if (b1 == 1 && b2 == 1) a = (a + 2) % 4;
        return a * 2 + (b1 ^ b2);
    };
    std::vector<std::string> labels(8);
    for (int i = 0; i < 8; ++i) labels[i] = "i^" + std::to_string(i / 2) + (i % 2 ? "j" : "");
    return FiniteGroup::from_oracle(8, mul, "Q8", std::move(labels));
}

FiniteGroup dicyclic12() {
    // elements a^i b^j with a^6=1, b^2=a^3, a^b=a^-1; index i*2+j
    auto mul = [](int x, int y) {
        int i1 = x / 2, j1 = x % 2, i2 = y / 2, j2 = y % 2;
        int i = j1 == 0 ? (i1 + i2) % 6 : ((i1 - i2) % 6 + 6) % 6;
        if (j1 == 1 && j2 == 1) i = (i + 3) % 6;
        return i * 2 + (j1 ^ j2);
    };
    std::vector<std::string> labels(12);
    for (int i = 0; i < 12; ++i) labels[i] = "a^" + std::to_string(i / 2) + (i % 2 ? "b" : "");
    return FiniteGroup::from_oracle(12, mul, "Dic12", std::move(labels));
}

namespace {

std::string perm_key(const std::vector<int>& p) {
    std::string s;
    s.reserve(p.size());
    for (int v : p) s.push_back(char('0' + v));
    return s;
}

} // namespace

int PermGroup::index_of(const std::vector<int>& perm) const {
    auto it = store->index.find(perm_key(perm));
    if (it == store->index.end()) throw Error("PermGroup: permutation not in group");
    return it->second;
}

PermGroup make_perm_group(int degree, std::vector<std::vector<int>> perms, std::string name) {
    auto store = std::make_shared<PermStore>();
    store->perms = std::move(perms);
    for (int i = 0; i < int(store->perms.size()); ++i) store->index[perm_key(store->perms[i])] = i;
    int n = int(store->perms.size());
    // capture the store by value so the oracle owns its data
    auto compose = [store](int a, int b) {
        // (a*b)(x) = a(b(x)): apply b first, matching table-mul conventions below
        const auto& pa = store->perms[a];
        const auto& pb = store->perms[b];
        std::vector<int> r(pa.size());
        for (size_t x = 0; x < pa.size(); ++x) r[x] = pa[pb[x]];
        return store->index.at(perm_key(r));
    };
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = perm_key(store->perms[i]);
    PermGroup pg;
    pg.degree = degree;
    pg.store = store;
    pg.group = FiniteGroup::from_oracle(n, compose, std::move(name), std::move(labels));
    return pg;
}

PermGroup sym(int n) {
    if (n < 1 || n > 6) throw OutOfRange("sym: n must be 1..6");
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return make_perm_group(n, std::move(perms), "S" + std::to_string(n));
}

PermGroup alt(int n) {
    if (n < 1 || n > 6) throw OutOfRange("alt: n must be 1..6");
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    auto parity = [](const std::vector<int>& p) {
        int inversions = 0;
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++inversions;
        return inversions % 2;
    };
    std::vector<std::vector<int>> perms;
    do
        if (parity(base) == 0) perms.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return make_perm_group(n, std::move(perms), "A" + std::to_string(n));
}

PermGroup permutation_group(int degree, const std::vector<std::vector<int>>& generators,
                            const std::string& name, int bound) {
    for (const auto& g : generators) {
        if (int(g.size()) != degree) throw Error("permutation_group: degree mismatch");
        std::vector<char> hit(degree, 0);
        for (int v : g) {
            if (v < 0 || v >= degree || hit[v]) throw Error("permutation_group: not a permutation");
            hit[v] = 1;
        }
    }
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> elems{id};
    std::unordered_map<std::string, int> seen{{perm_key(id), 0}};
    for (size_t head = 0; head < elems.size(); ++head) {
        auto cur = elems[head]; // copy: elems may reallocate
        for (const auto& g : generators) {
            std::vector<int> prod(degree);
            for (int x = 0; x < degree; ++x) prod[x] = cur[g[x]];
            auto k = perm_key(prod);
            if (!seen.count(k)) {
                seen.emplace(std::move(k), int(elems.size()));
                elems.push_back(std::move(prod));
                if (int(elems.size()) > bound)
                    throw ClosureTooLarge("permutation_group: closure exceeds bound");
            }
        }
    }
    return make_perm_group(degree, std::move(elems), name);
}

FiniteGroup extraspecial_p3_exp_p(int p) {
    if (p != 3 && p != 5 && p != 7) throw OutOfRange("extraspecial_p3_exp_p: p must be 3, 5 or 7");
    int n = p * p * p;
    // element (i,j,k) = b^j a^i c^k with c = [a,b] central; Heisenberg product
    auto mul = [p](int x, int y) {
        int i1 = x % p, j1 = (x / p) % p, k1 = x / (p * p);
        int i2 = y % p, j2 = (y / p) % p, k2 = y / (p * p);
        int i = (i1 + i2) % p, j = (j1 + j2) % p, k = (k1 + k2 + i1 * j2) % p;
        return i + j * p + k * p * p;
    };
    std::vector<std::string> labels(n);
    for (int x = 0; x < n; ++x)
        labels[x] = "b^" + std::to_string((x / p) % p) + "a^" + std::to_string(x % p) + "c^" +
                    std::to_string(x / (p * p));
    return FiniteGroup::from_oracle(n, mul, "ES" + std::to_string(n) + "+", std::move(labels));
}

int MatGroup::index_of(const Matrix& m) const {
    auto it = store->index.find(m.key());
    if (it == store->index.end()) throw Error("MatGroup: matrix not in group");
    return it->second;
}

MatGroup matrix_group(const GaloisField& field, const std::vector<Matrix>& generators,
                      const std::string& name, int bound) {
    if (generators.empty()) throw Error("matrix_group: need at least one generator");
    int n = generators.front().n;
    for (const auto& g : generators) {
        if (g.n != n) throw Error("matrix_group: mixed dimensions");
        if (g.det() == 0) throw Error("matrix_group: singular generator");
    }
    auto store = std::make_shared<MatStore>();
    store->matrices.push_back(Matrix::identity(field, n));
    store->index[store->matrices[0].key()] = 0;
    for (size_t head = 0; head < store->matrices.size(); ++head) {
        Matrix cur = store->matrices[head];
        for (const auto& g : generators) {
            Matrix prod = cur.mul(g);
            auto k = prod.key();
            if (!store->index.count(k)) {
                store->index.emplace(std::move(k), int(store->matrices.size()));
                store->matrices.push_back(prod);
                if (int(store->matrices.size()) > bound)
                    throw ClosureTooLarge("matrix_group: closure exceeds " + std::to_string(bound));
            }
        }
    }
    int order = int(store->matrices.size());
    auto mul = [store](int a, int b) {
        return store->index.at(store->matrices[a].mul(store->matrices[b]).key());
    };
    std::vector<std::string> labels(order);
    for (int i = 0; i < order; ++i) labels[i] = store->matrices[i].str();
    MatGroup mg;
    mg.field = field;
    mg.store = store;
    mg.group = FiniteGroup::from_oracle(order, mul, name, std::move(labels));
    return mg;
}

MatGroup sl2(int q) {
    if (q != 3 && q != 4 && q != 5 && q != 7 && q != 9) throw OutOfRange("sl2: q must be in {3,4,5,7,9}");
    GaloisField f = (q == 4) ? GaloisField::gf4() : (q == 9) ? GaloisField::gf9()
                                                             : GaloisField::prime(q);
    int lam = f.primitive_element();
    std::vector<Matrix> gens{
        Matrix::from_rows(f, {{1, 1}, {0, 1}}),
        Matrix::from_rows(f, {{1, lam}, {0, 1}}),
        Matrix::from_rows(f, {{0, 1}, {f.neg(1), 0}}),
    };
    MatGroup mg = matrix_group(f, gens, "SL(2," + std::to_string(q) + ")");
    long long expected = (long long)q * (q * q - 1);
    if (mg.group.order() != expected) throw Error("sl2: unexpected order");
    return mg;
}

FiniteGroup psl2(int q) {
    MatGroup mg = sl2(q);
    Subgroup z = center(mg.group);
    QuotientGroup qg = quotient(mg.group, z);
    FiniteGroup out = std::move(qg.quotient);
    out.set_name("PSL(2," + std::to_string(q) + ")");
    return out;
}

} // namespace orb
