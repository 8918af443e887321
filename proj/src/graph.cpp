#include "orb/graph.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "orb/errors.hpp"

namespace orb {

bool CommutingGraph::has_edge(int u, int v) const {
    const auto& nb = adjacency[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int CommutingGraph::edge_count() const {
    int twice = 0;
    for (const auto& nb : adjacency) twice += int(nb.size());
    return twice / 2;
}

std::vector<std::pair<int, int>> CommutingGraph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adjacency[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string GraphShape::str() const {
    switch (kind) {
        case ShapeKind::Path: return "Path(" + std::to_string(n) + ")";
        case ShapeKind::Cycle: return "Cycle(" + std::to_string(n) + ")";
        case ShapeKind::Star: return "Star(" + std::to_string(n) + ")";
        case ShapeKind::Friendship: return "Friendship(" + std::to_string(n) + ")";
        case ShapeKind::FGraphWithSingular: return "FGraphWithSingular";
        case ShapeKind::FGraphNoSingular: return "FGraphNoSingular";
        case ShapeKind::NotConnected: return "NotConnected";
        case ShapeKind::NotFGraph: return "NotFGraph";
    }
    return "?";
}

CommutingGraph build_graph(const FiniteGroup& g, const OrbitPartition& orbits,
                           std::string action_name) {
    CommutingGraph graph;
    graph.group_name = g.name();
    graph.action_name = std::move(action_name);
    // nonidentity orbits keep their relative order (minimal member order)
    std::vector<int> vertex_of(orbits.count(), -1);
    for (int o = 0; o < orbits.count(); ++o) {
        if (orbits.reps[o] == 0) continue;
        GraphVertex v;
        v.id = int(graph.vertices.size());
        v.rep = orbits.reps[o];
        v.size = orbits.sizes[o];
        vertex_of[o] = v.id;
        graph.vertices.push_back(v);
    }
    int m = graph.vertex_count();
    std::vector<char> adj(size_t(m) * m, 0);
    for (int x = 1; x < g.order(); ++x) {
        int u = vertex_of[orbits.orbit_of[x]];
        for (int y = x + 1; y < g.order(); ++y) {
            int v = vertex_of[orbits.orbit_of[y]];
            if (u == v || !g.commute(x, y)) continue;
            adj[size_t(u) * m + v] = adj[size_t(v) * m + u] = 1;
        }
    }
    graph.adjacency.resize(m);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v)
            if (adj[size_t(u) * m + v]) graph.adjacency[u].push_back(v);
    return graph;
}

std::vector<std::vector<int>> components(const CommutingGraph& graph, std::optional<int> skip) {
    int m = graph.vertex_count();
    std::vector<int> comp(m, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < m; ++s) {
        if (comp[s] != -1 || (skip && *skip == s)) continue;
        int id = int(out.size());
        out.emplace_back();
        std::vector<int> queue{s};
        comp[s] = id;
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            out[id].push_back(u);
            for (int v : graph.adjacency[u]) {
                if (comp[v] != -1 || (skip && *skip == v)) continue;
                comp[v] = id;
                queue.push_back(v);
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

std::vector<int> bfs_distances(const CommutingGraph& graph, int src, std::optional<int> skip) {
    int m = graph.vertex_count();
    std::vector<int> dist(m, -1);
    dist[src] = 0;
    std::vector<int> frontier{src};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int u : frontier)
            for (int v : graph.adjacency[u]) {
                if (dist[v] != -1 || (skip && *skip == v)) continue;
                dist[v] = dist[u] + 1;
                next.push_back(v);
            }
        frontier = std::move(next);
    }
    return dist;
}

GraphShape classify_shape(const CommutingGraph& graph) {
    GraphShape shape;
    int m = graph.vertex_count();
    if (m == 0) {
        shape.kind = ShapeKind::NotConnected;
        return shape;
    }
    if (int(components(graph).size()) > 1) {
        shape.kind = ShapeKind::NotConnected;
        return shape;
    }
    std::vector<int> high;
    for (int v = 0; v < m; ++v)
        if (graph.degree(v) >= 3) high.push_back(v);
    if (high.size() >= 2) {
        shape.kind = ShapeKind::NotFGraph;
        shape.high_degree = std::move(high);
        return shape;
    }
    if (high.size() == 1) {
        int z = high[0];
        shape.singular = z;
        bool star = true;
        for (int v = 0; v < m; ++v)
            if (v != z && !(graph.degree(v) == 1 && graph.has_edge(v, z))) star = false;
        if (star) {
            shape.kind = ShapeKind::Star;
            shape.n = m;
            return shape;
        }
        // friendship: every non-central vertex has degree 2, one edge to the
        // center and one to a partner that is also adjacent to the center
        bool friendship = graph.degree(z) == m - 1 && m % 2 == 1;
        for (int v = 0; v < m && friendship; ++v) {
            if (v == z) continue;
            if (graph.degree(v) != 2 || !graph.has_edge(v, z)) friendship = false;
        }
        if (friendship) {
            shape.kind = ShapeKind::Friendship;
            shape.n = (m - 1) / 2;
            return shape;
        }
        shape.kind = ShapeKind::FGraphWithSingular;
        return shape;
    }
    // connected with max degree <= 2: a path or a cycle
    bool all_two = true;
    for (int v = 0; v < m; ++v)
        if (graph.degree(v) != 2) all_two = false;
    if (all_two && m >= 3) {
        shape.kind = ShapeKind::Cycle;
        shape.n = m;
    } else {
        shape.kind = ShapeKind::Path;
        shape.n = m;
    }
    return shape;
}

std::optional<int> singular_vertex(const CommutingGraph& graph) {
    GraphShape shape = classify_shape(graph);
    if (!shape.is_f_graph()) throw NotFGraph("singular_vertex: not an F-graph");
    return shape.singular;
}

std::vector<std::array<int, 3>> triangles(const CommutingGraph& graph) {
    std::vector<std::array<int, 3>> out;
    int m = graph.vertex_count();
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            if (!graph.has_edge(a, b)) continue;
            for (int c = b + 1; c < m; ++c)
                if (graph.has_edge(a, c) && graph.has_edge(b, c)) out.push_back({a, b, c});
        }
    return out;
}

bool is_triangle_free(const CommutingGraph& graph) { return triangles(graph).empty(); }

std::map<int, int> max_degree_census(const CommutingGraph& graph) {
    std::map<int, int> census;
    for (int v = 0; v < graph.vertex_count(); ++v) ++census[graph.degree(v)];
    return census;
}

std::optional<std::array<int, 4>> has_induced_clique4(const CommutingGraph& graph) {
    int m = graph.vertex_count();
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            if (!graph.has_edge(a, b)) continue;
            for (int c = b + 1; c < m; ++c) {
                if (!graph.has_edge(a, c) || !graph.has_edge(b, c)) continue;
                for (int d = c + 1; d < m; ++d)
                    if (graph.has_edge(a, d) && graph.has_edge(b, d) && graph.has_edge(c, d))
                        return std::array<int, 4>{a, b, c, d};
            }
        }
    return std::nullopt;
}

CommutingGraph classic_commuting_graph(const FiniteGroup& g) {
    if (g.is_abelian()) throw AbelianGroup("classic commuting graph needs a nonabelian group");
    Subgroup z = center(g);
    CommutingGraph graph;
    graph.group_name = g.name();
    graph.action_name = "classic";
    std::vector<int> vertex_of(g.order(), -1);
    for (int x = 0; x < g.order(); ++x) {
        if (z.contains(x)) continue;
        GraphVertex v;
        v.id = int(graph.vertices.size());
        v.rep = x;
        v.size = 1;
        vertex_of[x] = v.id;
        graph.vertices.push_back(v);
    }
    graph.adjacency.resize(graph.vertex_count());
    for (int x = 0; x < g.order(); ++x) {
        if (vertex_of[x] < 0) continue;
        for (int y = x + 1; y < g.order(); ++y) {
            if (vertex_of[y] < 0 || !g.commute(x, y)) continue;
            graph.adjacency[vertex_of[x]].push_back(vertex_of[y]);
            graph.adjacency[vertex_of[y]].push_back(vertex_of[x]);
        }
    }
    for (auto& nb : graph.adjacency) std::sort(nb.begin(), nb.end());
    return graph;
}

std::string export_dot(const CommutingGraph& graph) {
    std::ostringstream os;
    os << "graph commuting {\n";
    for (const auto& v : graph.vertices)
        os << "  v" << v.id << " [label=\"orbit" << v.id << "(rep=" << v.rep
           << ",size=" << v.size << ")\"];\n";
    for (auto [u, v] : graph.edge_list()) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const CommutingGraph& graph) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : graph.vertices)
        j["vertices"].push_back({{"id", v.id}, {"rep", v.rep}, {"size", v.size}});
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : graph.edge_list()) j["edges"].push_back({u, v});
    j["source"] = {{"group", graph.group_name}, {"action", graph.action_name}};
    return j.dump(2) + "\n";
}

CommutingGraph import_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("graph json: ") + e.what());
    }
    CommutingGraph graph;
    try {
        for (const auto& v : j.at("vertices")) {
            GraphVertex gv;
            gv.id = v.at("id").get<int>();
            gv.rep = v.at("rep").get<int>();
            gv.size = v.at("size").get<int>();
            if (gv.id != int(graph.vertices.size()))
                throw InputError("graph json: vertex ids must be 0..n-1 in order");
            graph.vertices.push_back(gv);
        }
        graph.adjacency.resize(graph.vertex_count());
        for (const auto& e : j.at("edges")) {
            int u = e.at(0).get<int>();
            int v = e.at(1).get<int>();
            if (u < 0 || v < 0 || u >= graph.vertex_count() || v >= graph.vertex_count() || u == v)
                throw InputError("graph json: bad edge");
            graph.adjacency[u].push_back(v);
            graph.adjacency[v].push_back(u);
        }
        if (j.contains("source")) {
            graph.group_name = j["source"].value("group", "");
            graph.action_name = j["source"].value("action", "");
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("graph json: ") + e.what());
    }
    for (auto& nb : graph.adjacency) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw InputError("graph json: duplicate edge");
    }
    return graph;
}

} // namespace orb
