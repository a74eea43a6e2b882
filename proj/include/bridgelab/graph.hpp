#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

namespace bridgelab {

class Graph;
using GraphVisitor = std::function<void(const Graph&)>;

// One adjacency word per vertex. 64 vertices cover every desk-scale
// workload here and keep component sweeps branch-free.
inline constexpr int kMaxVertices = 64;

/// Labelled simple graph on vertices 0..n-1 (printed 1-based at I/O
/// boundaries). Immutable by convention once built; the sampler and the
/// enumerators mutate their own private copies.
class Graph {
public:
    explicit Graph(int n);

    // edges given 0-based
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);

    std::uint64_t row(int u) const { return adj_[u]; }
    std::uint64_t vertex_mask() const { return full_; }

    bool operator==(const Graph& o) const;

    // Position of pair {u,v} in the fixed column-major order
    // (0,1),(0,2),(1,2),(0,3),... shared by graph6 and the enumerators.
    static int edge_index(int u, int v);
    static std::pair<int, int> edge_at(int index);
    static int pair_count(int n) { return n * (n - 1) / 2; }

    std::uint64_t edge_mask() const;  // valid for pair_count(n) <= 64
    static Graph from_edge_mask(int n, std::uint64_t mask);

private:
    int n_;
    std::uint64_t full_;
    std::array<std::uint64_t, kMaxVertices> adj_;
};

struct ComponentPartition {
    std::vector<std::vector<int>> blocks;  // vertex lists, 0-based
    std::vector<int> sizes;
    int count() const { return static_cast<int>(blocks.size()); }
};

struct EdgeSet {
    std::vector<std::pair<int, int>> edges;  // u < v, 0-based
    int size() const { return static_cast<int>(edges.size()); }
};

ComponentPartition components(const Graph& g);
int component_count(const Graph& g);

// Bit mask of the component containing v, restricted to `allowed`.
std::uint64_t component_mask(const Graph& g, int v, std::uint64_t allowed);

EdgeSet bridges(const Graph& g);
int bridge_count(const Graph& g);
// Bridges among edges induced by the vertex set `allowed` only.
int bridge_count_within(const Graph& g, std::uint64_t allowed);
int component_count_within(const Graph& g, std::uint64_t allowed);

Graph skeleton(const Graph& g);

// Vertices outside one largest component.
int fragment(const Graph& g);

EdgeSet cross_pairs(const Graph& g);
long cross_count(const Graph& g);

bool is_connected(const Graph& g);
bool is_acyclic(const Graph& g);

}  // namespace bridgelab
