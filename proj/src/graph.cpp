#include "bridgelab/graph.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace bridgelab {

Graph::Graph(int n) : n_(n), adj_{} {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count must be in [1, 64]");
    full_ = (n == 64) ? ~0ull : ((1ull << n) - 1);
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::vector<std::pair<int, int>>(edges));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
    return total / 2;
}

void Graph::add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("bad edge endpoints");
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
}

void Graph::remove_edge(int u, int v) {
    adj_[u] &= ~(1ull << v);
    adj_[v] &= ~(1ull << u);
}

void Graph::toggle_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("bad edge endpoints");
    adj_[u] ^= 1ull << v;
    adj_[v] ^= 1ull << u;
}

bool Graph::operator==(const Graph& o) const {
    if (n_ != o.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (adj_[v] != o.adj_[v]) return false;
    return true;
}

int Graph::edge_index(int u, int v) {
    if (u > v) std::swap(u, v);
    return v * (v - 1) / 2 + u;
}

std::pair<int, int> Graph::edge_at(int index) {
    int v = static_cast<int>((1 + std::sqrt(8.0 * index + 1)) / 2);
    while (v * (v - 1) / 2 > index) --v;
    while ((v + 1) * v / 2 <= index) ++v;
    return {index - v * (v - 1) / 2, v};
}

std::uint64_t Graph::edge_mask() const {
    std::uint64_t mask = 0;
    for (int v = 1; v < n_; ++v) {
        std::uint64_t below = adj_[v] & ((1ull << v) - 1);
        while (below) {
            int u = std::countr_zero(below);
            below &= below - 1;
            mask |= 1ull << edge_index(u, v);
        }
    }
    return mask;
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    while (mask) {
        int b = std::countr_zero(mask);
        mask &= mask - 1;
        auto [u, v] = edge_at(b);
        g.add_edge(u, v);
    }
    return g;
}

std::uint64_t component_mask(const Graph& g, int v, std::uint64_t allowed) {
    std::uint64_t comp = 1ull << v;
    std::uint64_t frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.row(u);
        }
        frontier = next & allowed & ~comp;
        comp |= frontier;
    }
    return comp;
}

ComponentPartition components(const Graph& g) {
    ComponentPartition out;
    std::uint64_t left = g.vertex_mask();
    while (left) {
        int v = std::countr_zero(left);
        std::uint64_t comp = component_mask(g, v, left);
        left &= ~comp;
        std::vector<int> block;
        std::uint64_t bits = comp;
        while (bits) {
            block.push_back(std::countr_zero(bits));
            bits &= bits - 1;
        }
        out.sizes.push_back(static_cast<int>(block.size()));
        out.blocks.push_back(std::move(block));
    }
    return out;
}

int component_count_within(const Graph& g, std::uint64_t allowed) {
    int count = 0;
    std::uint64_t left = allowed;
    while (left) {
        int v = std::countr_zero(left);
        left &= ~component_mask(g, v, left);
        ++count;
    }
    return count;
}

int component_count(const Graph& g) { return component_count_within(g, g.vertex_mask()); }

namespace {

// Iterative low-link pass; emits every bridge exactly once.
template <typename Sink>
void scan_bridges(const Graph& g, std::uint64_t allowed, Sink&& sink) {
    std::array<int, kMaxVertices> disc{}, low{}, parent{};
    disc.fill(-1);
    parent.fill(-1);
    int time = 0;

    struct Frame {
        int v;
        std::uint64_t pending;
    };
    std::array<Frame, kMaxVertices> stack;

    std::uint64_t left = allowed;
    while (left) {
        int root = std::countr_zero(left);
        int top = 0;
        stack[0] = {root, g.row(root) & allowed};
        disc[root] = low[root] = time++;
        while (top >= 0) {
            Frame& f = stack[top];
            if (f.pending) {
                int w = std::countr_zero(f.pending);
                f.pending &= f.pending - 1;
                if (disc[w] < 0) {
                    parent[w] = f.v;
                    disc[w] = low[w] = time++;
                    stack[++top] = {w, g.row(w) & allowed & ~(1ull << f.v)};
                } else {
                    if (low[f.v] > disc[w]) low[f.v] = disc[w];
                }
            } else {
                int p = parent[f.v];
                if (p >= 0) {
                    if (low[p] > low[f.v]) low[p] = low[f.v];
                    if (low[f.v] > disc[p]) sink(p, f.v);
                }
                --top;
            }
        }
        left &= ~component_mask(g, root, allowed);
    }
}

}  // namespace

EdgeSet bridges(const Graph& g) {
    EdgeSet out;
    scan_bridges(g, g.vertex_mask(), [&](int u, int v) {
        if (u > v) std::swap(u, v);
        out.edges.emplace_back(u, v);
    });
    return out;
}

int bridge_count(const Graph& g) { return bridge_count_within(g, g.vertex_mask()); }

int bridge_count_within(const Graph& g, std::uint64_t allowed) {
    int count = 0;
    scan_bridges(g, allowed, [&](int, int) { ++count; });
    return count;
}

Graph skeleton(const Graph& g) {
    Graph out = g;
    for (auto [u, v] : bridges(g).edges) out.remove_edge(u, v);
    return out;
}

int fragment(const Graph& g) {
    int best = 0;
    std::uint64_t left = g.vertex_mask();
    while (left) {
        int v = std::countr_zero(left);
        std::uint64_t comp = component_mask(g, v, left);
        left &= ~comp;
        best = std::max(best, std::popcount(comp));
    }
    return g.vertex_count() - best;
}

EdgeSet cross_pairs(const Graph& g) {
    EdgeSet out;
    auto parts = components(g);
    std::array<int, kMaxVertices> comp_of{};
    for (int c = 0; c < parts.count(); ++c)
        for (int v : parts.blocks[c]) comp_of[v] = c;
    int n = g.vertex_count();
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (comp_of[u] != comp_of[v]) out.edges.emplace_back(u, v);
    return out;
}

long cross_count(const Graph& g) {
    auto parts = components(g);
    long total = 0;
    int n = g.vertex_count();
    for (int s : parts.sizes) total += static_cast<long>(s) * (n - s);
    return total / 2;
}

bool is_connected(const Graph& g) {
    return component_mask(g, 0, g.vertex_mask()) == g.vertex_mask();
}

bool is_acyclic(const Graph& g) {
    return g.edge_count() == g.vertex_count() - component_count(g);
}

}  // namespace bridgelab
