#include "orb/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

namespace orb {

FiniteGroup FiniteGroup::from_table(int n, std::vector<int> table, std::string name,
                                    std::vector<std::string> labels) {
    if (n <= 0 || n > kDenseLimit) throw Error("from_table: order out of dense range");
    if (int(table.size()) != n * n) throw Error("from_table: table size mismatch");
    FiniteGroup g;
    g.n_ = n;
    g.table_.resize(table.size());
    for (size_t i = 0; i < table.size(); ++i) {
        if (table[i] < 0 || table[i] >= n) throw Error("from_table: entry out of range");
        g.table_[i] = std::uint16_t(table[i]);
    }
    g.name_ = std::move(name);
    g.labels_ = std::move(labels);
    g.finish_init();
    return g;
}

FiniteGroup FiniteGroup::from_oracle(int n, std::function<int(int, int)> mul, std::string name,
                                     std::vector<std::string> labels) {
    FiniteGroup g;
    g.n_ = n;
    g.name_ = std::move(name);
    g.labels_ = std::move(labels);
    if (n <= kDenseLimit) {
        g.table_.resize(size_t(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) g.table_[size_t(a) * n + b] = std::uint16_t(mul(a, b));
    } else {
        g.oracle_ = std::move(mul);
    }
    g.finish_init();
    return g;
}

void FiniteGroup::finish_init() {
    for (int x = 0; x < n_; ++x)
        if (mul(0, x) != x || mul(x, 0) != x) throw AuditFailure(name_ + ": index 0 is not the identity");
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0) {
                if (mul(b, a) != 0) throw AuditFailure(name_ + ": one-sided inverse");
                inv_[a] = b;
                break;
            }
        if (inv_[a] < 0) throw AuditFailure(name_ + ": element without inverse");
    }
    order_of_.assign(n_, 0);
    for (int a = 0; a < n_; ++a) {
        int k = 1, x = a;
        while (x != 0) {
            x = mul(x, a);
            ++k;
            if (k > n_) throw AuditFailure(name_ + ": element order exceeds group order");
        }
        order_of_[a] = k;
    }
}

int FiniteGroup::pow(int a, long long k) const {
    int o = order_of_[a];
    k %= o;
    if (k < 0) k += o;
    int r = 0, base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (!commute(a, b)) return false;
    return true;
}

const std::string& FiniteGroup::label(int i) const {
    static const std::string empty;
    if (labels_.empty()) return empty;
    return labels_[i];
}

void FiniteGroup::audit() const {
    for (int x = 0; x < n_; ++x) {
        if (mul(0, x) != x || mul(x, 0) != x) throw AuditFailure(name_ + ": identity axiom");
        if (mul(x, inv(x)) != 0 || mul(inv(x), x) != 0) throw AuditFailure(name_ + ": inverse axiom");
    }
    auto check = [&](int a, int b, int c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw AuditFailure(name_ + ": associativity violated");
    };
    if (n_ <= 256) {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c) check(a, b, c);
    } else {
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<int> d(0, n_ - 1);
        for (int i = 0; i < 10 * n_; ++i) check(d(rng), d(rng), d(rng));
    }
    // closure is implied for dense tables; sample it on the oracle path
    if (table_.empty()) {
        std::mt19937 rng(0xc105);
        std::uniform_int_distribution<int> d(0, n_ - 1);
        for (int i = 0; i < 10 * n_; ++i) {
            int p = mul(d(rng), d(rng));
            if (p < 0 || p >= n_) throw AuditFailure(name_ + ": closure violated");
        }
    }
}

std::vector<int> FiniteGroup::greedy_generators() const {
    std::vector<int> gens;
    Subgroup h = trivial_subgroup(*this);
    while (h.size() < n_) {
        int best = -1, best_gain = -1;
        for (int x = 1; x < n_; ++x) {
            if (h.contains(x)) continue;
            auto g2 = gens;
            g2.push_back(x);
            int gain = closure(*this, g2).size();
            if (gain > best_gain) {
                best_gain = gain;
                best = x;
            }
            if (gain == n_ && best_gain == n_) break; // first maximal hit wins
        }
        gens.push_back(best);
        h = closure(*this, gens);
    }
    if (gens.empty()) gens.push_back(0);
    return gens;
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<int> members)
    : parent_(&parent), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    mask_.assign(parent.order(), 0);
    for (int x : members_) {
        if (x < 0 || x >= parent.order()) throw Error("Subgroup: member out of range");
        mask_[x] = 1;
    }
    if (members_.empty() || members_[0] != 0) throw Error("Subgroup: missing identity");
    for (int a : members_) {
        if (!mask_[parent.inv(a)]) throw Error("Subgroup: not closed under inverse");
        for (int b : members_)
            if (!mask_[parent.mul(a, b)]) throw Error("Subgroup: not closed under multiplication");
    }
    if (parent.order() % size() != 0) throw Error("Subgroup: Lagrange violation");
}

Subgroup closure(const FiniteGroup& g, const std::vector<int>& generators) {
    std::vector<char> seen(g.order(), 0);
    std::vector<int> frontier{0}, members{0};
    seen[0] = 1;
    for (int x : generators)
        if (!seen[x]) {
            seen[x] = 1;
            members.push_back(x);
            frontier.push_back(x);
        }
    while (!frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        for (int gen : generators) {
            for (int y : {g.mul(x, gen), g.mul(gen, x)}) {
                if (!seen[y]) {
                    seen[y] = 1;
                    members.push_back(y);
                    frontier.push_back(y);
                }
            }
        }
    }
    return Subgroup(g, std::move(members));
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g, {0}); }

Subgroup whole_group(const FiniteGroup& g) {
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(g, std::move(all));
}

int element_order(const FiniteGroup& g, int x) { return g.element_order(x); }

Subgroup centralizer(const FiniteGroup& g, const std::vector<int>& s) {
    if (s.empty()) throw Error("centralizer: empty set");
    std::vector<int> members;
    for (int x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (int y : s)
            if (!g.commute(x, y)) {
                ok = false;
                break;
            }
        if (ok) members.push_back(x);
    }
    return Subgroup(g, std::move(members));
}

Subgroup center(const FiniteGroup& g) {
    std::vector<int> members;
    for (int x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (int y = 0; y < g.order() && ok; ++y) ok = g.commute(x, y);
        if (ok) members.push_back(x);
    }
    return Subgroup(g, std::move(members));
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
    std::vector<std::vector<int>> classes;
    std::vector<char> seen(g.order(), 0);
    for (int x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        std::vector<int> cls;
        for (int h = 0; h < g.order(); ++h) {
            int y = g.conj(x, h);
            if (!seen[y]) {
                seen[y] = 1;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<int> class_of(const FiniteGroup& g, int x) {
    std::vector<char> seen(g.order(), 0);
    std::vector<int> cls;
    for (int h = 0; h < g.order(); ++h) {
        int y = g.conj(x, h);
        if (!seen[y]) {
            seen[y] = 1;
            cls.push_back(y);
        }
    }
    std::sort(cls.begin(), cls.end());
    return cls;
}

Subgroup normal_closure(const FiniteGroup& g, const std::vector<int>& s) {
    std::vector<int> gens;
    for (int x : s) {
        auto cls = class_of(g, x);
        gens.insert(gens.end(), cls.begin(), cls.end());
    }
    return closure(g, gens);
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
    for (int x : h.members())
        for (int a = 0; a < g.order(); ++a)
            if (!h.contains(g.conj(x, a))) return false;
    return true;
}

InducedGroup as_group(const Subgroup& h) {
    const FiniteGroup& p = h.parent();
    InducedGroup out;
    out.to_parent = h.members();
    out.from_parent.assign(p.order(), -1);
    for (int i = 0; i < h.size(); ++i) out.from_parent[out.to_parent[i]] = i;
    int m = h.size();
    std::vector<int> table(size_t(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[size_t(a) * m + b] = out.from_parent[p.mul(out.to_parent[a], out.to_parent[b])];
    std::vector<std::string> labels;
    if (p.has_labels()) {
        labels.reserve(m);
        for (int i = 0; i < m; ++i) labels.push_back(p.label(out.to_parent[i]));
    }
    out.group = FiniteGroup::from_table(m, std::move(table), p.name() + "-sub" + std::to_string(m),
                                        std::move(labels));
    return out;
}

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n) {
    if (!is_normal(g, n)) throw NotNormal("quotient: subgroup is not normal");
    int q = g.order() / n.size();
    std::vector<int> coset_of(g.order(), -1);
    std::vector<int> reps;
    for (int x = 0; x < g.order(); ++x) {
        if (coset_of[x] >= 0) continue;
        int id = int(reps.size());
        reps.push_back(x); // x is the minimal member of its coset
        for (int k : n.members()) coset_of[g.mul(x, k)] = id;
    }
    std::vector<int> table(size_t(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) table[size_t(a) * q + b] = coset_of[g.mul(reps[a], reps[b])];
    std::vector<std::string> labels(q);
    for (int i = 0; i < q; ++i) {
        labels[i] = (g.has_labels() ? g.label(reps[i]) : std::to_string(reps[i])) + "*N";
    }
    FiniteGroup fq = FiniteGroup::from_table(
        q, std::move(table), g.name() + "/N" + std::to_string(n.size()), std::move(labels));
    return QuotientGroup{n, std::move(coset_of), std::move(fq)};
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    int ng = g.order(), nh = h.order(), n = ng * nh;
    auto mul = [&, nh](int a, int b) {
        int a1 = a / nh, a2 = a % nh, b1 = b / nh, b2 = b % nh;
        return g.mul(a1, b1) * nh + h.mul(a2, b2);
    };
    std::vector<std::string> labels;
    if (g.has_labels() && h.has_labels()) {
        labels.reserve(n);
        for (int a = 0; a < ng; ++a)
            for (int b = 0; b < nh; ++b) labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
    }
    return FiniteGroup::from_oracle(n, mul, g.name() + "x" + h.name(), std::move(labels));
}

namespace {

bool is_automorphism_image(const FiniteGroup& g, const std::vector<int>& img) {
    if (int(img.size()) != g.order()) return false;
    std::vector<char> hit(g.order(), 0);
    for (int v : img) {
        if (v < 0 || v >= g.order() || hit[v]) return false;
        hit[v] = 1;
    }
    if (img[0] != 0) return false;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (img[g.mul(a, b)] != g.mul(img[a], img[b])) return false;
    return true;
}

} // namespace

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<int>>& action) {
    if (int(action.size()) != h.order()) throw BadAction("semidirect_product: need one map per element of H");
    for (const auto& img : action)
        if (!is_automorphism_image(n, img)) throw BadAction("semidirect_product: map is not an automorphism");
    for (int a = 0; a < h.order(); ++a)
        for (int b = 0; b < h.order(); ++b) {
            int ab = h.mul(a, b);
            for (int x = 0; x < n.order(); ++x)
                if (action[ab][x] != action[a][action[b][x]])
                    throw BadAction("semidirect_product: action is not a homomorphism");
        }
    int nn = n.order(), nh = h.order();
    auto mul = [&, nh](int x, int y) {
        int n1 = x / nh, h1 = x % nh, n2 = y / nh, h2 = y % nh;
        return n.mul(n1, action[h1][n2]) * nh + h.mul(h1, h2);
    };
    std::vector<std::string> labels;
    if (n.has_labels() && h.has_labels()) {
        labels.reserve(size_t(nn) * nh);
        for (int a = 0; a < nn; ++a)
            for (int b = 0; b < nh; ++b) labels.push_back("(" + n.label(a) + ";" + h.label(b) + ")");
    }
    return FiniteGroup::from_oracle(nn * nh, mul, n.name() + ":" + h.name(), std::move(labels));
}

FiniteGroup central_product(const FiniteGroup& g, const FiniteGroup& h,
                            const std::vector<std::pair<int, int>>& identification) {
    std::vector<int> zg, zh;
    std::vector<int> phi(g.order(), -1);
    for (auto [a, b] : identification) {
        zg.push_back(a);
        zh.push_back(b);
        phi[a] = b;
    }
    Subgroup z1(g, zg), z2(h, zh);
    if (z1.size() != z2.size() || z1.size() != int(identification.size()))
        throw BadIdentification("central_product: identification is not a bijection of subgroups");
    Subgroup cg = center(g), ch = center(h);
    for (int x : z1.members())
        if (!cg.contains(x)) throw BadIdentification("central_product: subgroup not central in G");
    for (int x : z2.members())
        if (!ch.contains(x)) throw BadIdentification("central_product: subgroup not central in H");
    for (int a : z1.members())
        for (int b : z1.members())
            if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b]))
                throw BadIdentification("central_product: identification is not an isomorphism");

    FiniteGroup d = direct_product(g, h);
    std::vector<int> kernel;
    for (int a : z1.members()) kernel.push_back(a * h.order() + h.inv(phi[a]));
    QuotientGroup q = quotient(d, Subgroup(d, kernel));
    FiniteGroup out = std::move(q.quotient);
    out.set_name(g.name() + "*" + h.name());
    if (out.order() != g.order() * h.order() / z1.size())
        throw BadIdentification("central_product: unexpected order");
    return out;
}

} // namespace orb
