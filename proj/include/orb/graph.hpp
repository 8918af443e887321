#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orb/action.hpp"
#include "orb/group.hpp"

namespace orb {

struct GraphVertex {
    int id = 0;
    int rep = 0;  // minimal element index of the orbit
    int size = 0; // orbit size
};

/// Simple graph on the nontrivial orbits (or, for the classic commuting
/// graph, on the noncentral elements).
struct CommutingGraph {
    std::vector<GraphVertex> vertices;
    std::vector<std::vector<int>> adjacency; // sorted neighbor ids per vertex
    std::string group_name;
    std::string action_name;

    int vertex_count() const { return int(vertices.size()); }
    int degree(int v) const { return int(adjacency[v].size()); }
    bool has_edge(int u, int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edge_list() const; // (u,v) with u<v, sorted
};

enum class ShapeKind {
    Path,
    Cycle,
    Star,
    Friendship,
    FGraphWithSingular,
    FGraphNoSingular,
    NotConnected,
    NotFGraph
};

struct GraphShape {
    ShapeKind kind = ShapeKind::NotConnected;
    /// Path/Cycle/Star: vertex count. Friendship: triangle count.
    int n = 0;
    std::optional<int> singular;   // vertex id of the degree>=3 vertex
    std::vector<int> high_degree;  // NotFGraph witnesses (>=2 of them)
    bool is_f_graph() const {
        return kind != ShapeKind::NotConnected && kind != ShapeKind::NotFGraph;
    }
    std::string str() const;
};

/// Full commuting-pair sweep over G mapped onto orbit pairs.
CommutingGraph build_graph(const FiniteGroup& g, const OrbitPartition& orbits,
                           std::string action_name = "");

GraphShape classify_shape(const CommutingGraph& graph);

/// Unique degree->=3 vertex of an F-graph, absent for paths/cycles.
/// Throws NotFGraph when the graph is not an F-graph at all.
std::optional<int> singular_vertex(const CommutingGraph& graph);

std::vector<std::array<int, 3>> triangles(const CommutingGraph& graph);
bool is_triangle_free(const CommutingGraph& graph);
std::map<int, int> max_degree_census(const CommutingGraph& graph); // degree -> count
std::optional<std::array<int, 4>> has_induced_clique4(const CommutingGraph& graph);

/// Connected components (vertex lists, each sorted; ordered by minimal
/// vertex), optionally ignoring one vertex.
std::vector<std::vector<int>> components(const CommutingGraph& graph,
                                         std::optional<int> skip = std::nullopt);
/// BFS distances from src (-1 unreachable), optionally ignoring one vertex.
std::vector<int> bfs_distances(const CommutingGraph& graph, int src,
                               std::optional<int> skip = std::nullopt);

/// Classic commuting graph: vertices are the noncentral elements.
CommutingGraph classic_commuting_graph(const FiniteGroup& g); // throws AbelianGroup

std::string export_dot(const CommutingGraph& graph);
std::string export_json(const CommutingGraph& graph);
CommutingGraph import_json(const std::string& text); // throws InputError

} // namespace orb
