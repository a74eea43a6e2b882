#include "bridgelab/classes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "bridgelab/graph6.hpp"
#include "bridgelab/subprocess.hpp"

namespace bridgelab {

void check_cap(const GraphClass& cls, int n, std::optional<int> max_n_override) {
    int cap = max_n_override.value_or(cls.default_cap());
    if (n < 1)
        throw std::invalid_argument("vertex count must be >= 1");
    if (n > cap)
        throw CapError("class '" + cls.name() + "' is capped at n=" + std::to_string(cap) +
                       " (requested n=" + std::to_string(n) + "; raise --max-n to override)");
    if (Graph::pair_count(n) > 63)
        throw CapError("exhaustive enumeration is not feasible beyond n=11");
}

void GraphClass::enumerate(int n, const GraphVisitor& visit) const {
    // Filtering sweep of the full edge-subset lattice, ascending mask order.
    const std::uint64_t limit = 1ull << Graph::pair_count(n);
    Graph g(n);
    std::uint64_t prev = 0;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        std::uint64_t diff = mask ^ prev;
        while (diff) {
            int b = std::countr_zero(diff);
            diff &= diff - 1;
            auto [u, v] = Graph::edge_at(b);
            g.toggle_edge(u, v);
        }
        prev = mask;
        if (contains(g)) visit(g);
    }
}

namespace {

class AllGraphs final : public GraphClass {
public:
    std::string name() const override { return "all_graphs"; }
    bool contains(const Graph&) const override { return true; }
    int default_cap() const override { return 7; }
    bool declared_bridge_addable() const override { return true; }
    bool declared_bridge_alterable() const override { return true; }
};

class Forests final : public GraphClass {
public:
    std::string name() const override { return "forests"; }
    bool contains(const Graph& g) const override { return is_acyclic(g); }
    int default_cap() const override { return 10; }
    bool declared_bridge_addable() const override { return true; }
    bool declared_bridge_alterable() const override { return true; }

    // Cycle-pruned descent over edge positions: a branch that closes a
    // cycle cannot recover, so the subtree is skipped. Emits the same
    // ascending-mask order as the filtering sweep.
    void enumerate(int n, const GraphVisitor& visit) const override {
        const int m = Graph::pair_count(n);
        Graph g(n);
        std::array<int, kMaxVertices> parent;
        std::array<int, kMaxVertices> size;
        for (int v = 0; v < n; ++v) parent[v] = v, size[v] = 1;

        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x];
            return x;
        };

        auto rec = [&](auto&& self, int pos) -> void {
            if (pos < 0) {
                visit(g);
                return;
            }
            auto [u, v] = Graph::edge_at(pos);
            self(self, pos - 1);  // mask bit 0 first keeps ascending order
            int ru = find(u), rv = find(v);
            if (ru == rv) return;  // cycle, prune the include branch
            if (size[ru] < size[rv]) std::swap(ru, rv);
            parent[rv] = ru;
            size[ru] += size[rv];
            g.add_edge(u, v);
            self(self, pos - 1);
            g.remove_edge(u, v);
            size[ru] -= size[rv];
            parent[rv] = rv;
        };
        rec(rec, m - 1);
    }
};

class Pseudoforests final : public GraphClass {
public:
    std::string name() const override { return "pseudoforests"; }
    bool contains(const Graph& g) const override { return is_pseudoforest(g); }
    int default_cap() const override { return 7; }
    bool declared_bridge_addable() const override { return true; }
    bool declared_bridge_alterable() const override { return true; }
};

class BlockClique final : public GraphClass {
public:
    std::string name() const override { return "block_clique"; }
    bool contains(const Graph& g) const override { return is_block_clique(g); }
    int default_cap() const override { return 7; }
    bool declared_bridge_addable() const override { return true; }
    bool declared_bridge_alterable() const override { return true; }
};

class PlanarSmall final : public GraphClass {
public:
    std::string name() const override { return "planar_small"; }
    bool contains(const Graph& g) const override { return is_planar_small(g); }
    int default_cap() const override { return 7; }
    bool declared_bridge_addable() const override { return true; }
    bool declared_bridge_alterable() const override { return true; }
};

class PredicateClass final : public GraphClass {
public:
    PredicateClass(std::string name, std::function<bool(const Graph&)> pred, int cap)
        : name_(std::move(name)), pred_(std::move(pred)), cap_(cap) {}
    std::string name() const override { return name_; }
    bool contains(const Graph& g) const override { return pred_(g); }
    int default_cap() const override { return cap_; }

private:
    std::string name_;
    std::function<bool(const Graph&)> pred_;
    int cap_;
};

// External predicate protocol: one graph6 line in, one "Y" or "N" line
// back, both sides flushed per line.
class ExternalClass final : public GraphClass {
public:
    explicit ExternalClass(std::string command)
        : command_(std::move(command)),
          proc_(std::make_shared<LineSubprocess>(command_)) {}

    std::string name() const override { return "cmd:" + command_; }
    int default_cap() const override { return 6; }

    bool contains(const Graph& g) const override {
        std::string reply = proc_->ask(to_graph6(g));
        if (reply == "Y" || reply == "y" || reply == "1") return true;
        if (reply == "N" || reply == "n" || reply == "0") return false;
        throw std::runtime_error("external predicate replied '" + reply + "' (want Y or N)");
    }

private:
    std::string command_;
    std::shared_ptr<LineSubprocess> proc_;
};

}  // namespace

bool is_pseudoforest(const Graph& g) {
    std::uint64_t left = g.vertex_mask();
    while (left) {
        int v = std::countr_zero(left);
        std::uint64_t comp = component_mask(g, v, left);
        left &= ~comp;
        int edges = 0;
        std::uint64_t bits = comp;
        while (bits) {
            int u = std::countr_zero(bits);
            bits &= bits - 1;
            edges += std::popcount(g.row(u) & comp);
        }
        if (edges / 2 > std::popcount(comp)) return false;
    }
    return true;
}

namespace {

// Hopcroft-Tarjan block decomposition, checking each block for cliqueness
// as it pops off the edge stack.
class BlockCliqueScan {
public:
    explicit BlockCliqueScan(const Graph& g) : g_(g) {}

    bool run() {
        disc_.fill(-1);
        int n = g_.vertex_count();
        for (int v = 0; v < n; ++v)
            if (disc_[v] < 0 && !dfs(v, -1)) return false;
        return true;
    }

private:
    bool dfs(int v, int parent) {
        disc_[v] = low_[v] = time_++;
        std::uint64_t nb = g_.row(v);
        bool skipped_parent = false;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (w == parent && !skipped_parent) {
                skipped_parent = true;
                continue;
            }
            if (disc_[w] < 0) {
                edges_.emplace_back(v, w);
                if (!dfs(w, v)) return false;
                low_[v] = std::min(low_[v], low_[w]);
                if (low_[w] >= disc_[v]) {
                    // block rooted here
                    std::uint64_t verts = 0;
                    int count = 0;
                    while (!edges_.empty()) {
                        auto [a, b] = edges_.back();
                        edges_.pop_back();
                        verts |= (1ull << a) | (1ull << b);
                        ++count;
                        if (a == v && b == w) break;
                    }
                    int k = std::popcount(verts);
                    if (count != k * (k - 1) / 2) return false;  // not a clique
                }
            } else if (disc_[w] < disc_[v]) {
                edges_.emplace_back(v, w);
                low_[v] = std::min(low_[v], disc_[w]);
            }
        }
        return true;
    }

    const Graph& g_;
    std::array<int, kMaxVertices> disc_{}, low_{};
    int time_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

// Internally-disjoint path search used by the Kuratowski subdivision
// probes. `used` holds vertices unavailable as interior points.
bool connect_pairs(const Graph& g, const std::vector<std::pair<int, int>>& pairs, size_t idx,
                   std::uint64_t used) {
    if (idx == pairs.size()) return true;
    auto [s, t] = pairs[idx];
    std::uint64_t spare = g.vertex_mask() & ~used;

    // iterative deepening over interior vertices (at most 3 at n <= 8)
    struct Step {
        int at;
        std::uint64_t interior;
    };
    std::vector<Step> stack{{s, 0}};
    while (!stack.empty()) {
        auto [at, interior] = stack.back();
        stack.pop_back();
        if (g.has_edge(at, t)) {
            if (connect_pairs(g, pairs, idx + 1, used | interior)) return true;
        }
        std::uint64_t nexts = g.row(at) & spare & ~interior & ~(1ull << t);
        while (nexts) {
            int w = std::countr_zero(nexts);
            nexts &= nexts - 1;
            stack.push_back({w, interior | (1ull << w)});
        }
    }
    return false;
}

bool has_k5_subdivision(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (std::popcount(g.row(v)) >= 4) cand.push_back(v);
    if (static_cast<int>(cand.size()) < 5) return false;
    std::vector<int> pick(5);
    std::vector<bool> sel(cand.size(), false);
    auto choose = [&](auto&& self, size_t start, int depth) -> bool {
        if (depth == 5) {
            std::vector<std::pair<int, int>> pairs;
            std::uint64_t branch = 0;
            for (int b : pick) branch |= 1ull << b;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j) pairs.emplace_back(pick[i], pick[j]);
            return connect_pairs(g, pairs, 0, branch);
        }
        for (size_t i = start; i < cand.size(); ++i) {
            pick[depth] = cand[i];
            if (self(self, i + 1, depth + 1)) return true;
        }
        return false;
    };
    return choose(choose, 0, 0);
}

bool has_k33_subdivision(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (std::popcount(g.row(v)) >= 3) cand.push_back(v);
    if (static_cast<int>(cand.size()) < 6) return false;
    int m = static_cast<int>(cand.size());
    std::vector<int> six(6);
    auto try_split = [&](const std::vector<int>& chosen) -> bool {
        // bipartition the six branch vertices
        for (int sides = 0; sides < 64; ++sides) {
            if (std::popcount(static_cast<unsigned>(sides)) != 3) continue;
            if (!(sides & 1)) continue;  // fix vertex 0's side, halves the work
            std::vector<int> a, b;
            for (int i = 0; i < 6; ++i) ((sides >> i) & 1 ? a : b).push_back(chosen[i]);
            std::vector<std::pair<int, int>> pairs;
            std::uint64_t branch = 0;
            for (int v : chosen) branch |= 1ull << v;
            for (int x : a)
                for (int y : b) pairs.emplace_back(x, y);
            if (connect_pairs(g, pairs, 0, branch)) return true;
        }
        return false;
    };
    auto choose = [&](auto&& self, int start, int depth) -> bool {
        if (depth == 6) return try_split(six);
        for (int i = start; i < m; ++i) {
            six[depth] = cand[i];
            if (self(self, i + 1, depth + 1)) return true;
        }
        return false;
    };
    return choose(choose, 0, 0);
}

}  // namespace

bool is_block_clique(const Graph& g) { return BlockCliqueScan(g).run(); }

bool is_planar_small(const Graph& g) {
    int n = g.vertex_count();
    if (n > 8)
        throw CapError("planar_small membership is implemented for n <= 8 only");
    int e = g.edge_count();
    if (e <= 8) return true;  // a Kuratowski subdivision needs 9+ edges
    if (n >= 3 && e > 3 * n - 6) return false;
    return !has_k5_subdivision(g) && !has_k33_subdivision(g);
}

std::shared_ptr<const GraphClass> make_class(const std::string& spec) {
    if (spec == "all_graphs") return std::make_shared<AllGraphs>();
    if (spec == "forests") return std::make_shared<Forests>();
    if (spec == "pseudoforests") return std::make_shared<Pseudoforests>();
    if (spec == "block_clique") return std::make_shared<BlockClique>();
    if (spec == "planar_small") return std::make_shared<PlanarSmall>();
    if (spec.rfind("cmd:", 0) == 0) return std::make_shared<ExternalClass>(spec.substr(4));
    throw std::invalid_argument("unknown class '" + spec +
                                "' (builtins: all_graphs forests pseudoforests block_clique "
                                "planar_small, or cmd:<path>)");
}

std::vector<std::string> builtin_class_names() {
    return {"all_graphs", "forests", "pseudoforests", "block_clique", "planar_small"};
}

std::shared_ptr<const GraphClass> predicate_class(std::string name,
                                                  std::function<bool(const Graph&)> pred,
                                                  int cap) {
    return std::make_shared<PredicateClass>(std::move(name), std::move(pred), cap);
}

namespace {

struct CheckCache {
    std::mutex mu;
    std::map<std::pair<std::string, int>, ClassCheckResult> addable, alterable;
};

CheckCache& cache() {
    static CheckCache c;
    return c;
}

}  // namespace

ClassCheckResult check_bridge_addable(const GraphClass& cls, int n,
                                      std::optional<int> max_n_override) {
    {
        std::lock_guard lock(cache().mu);
        auto it = cache().addable.find({cls.name(), n});
        if (it != cache().addable.end()) return it->second;
    }
    check_cap(cls, n, max_n_override);
    ClassCheckResult result;
    result.ok = true;
    cls.enumerate(n, [&](const Graph& g) {
        if (!result.ok) return;
        Graph h = g;
        for (auto [u, v] : cross_pairs(g).edges) {
            h.add_edge(u, v);
            bool in = cls.contains(h);
            h.remove_edge(u, v);
            if (!in) {
                result.ok = false;
                result.witness = g;
                result.edge = {u, v};
                result.detail = "adding cross pair leaves the class";
                return;
            }
        }
    });
    std::lock_guard lock(cache().mu);
    cache().addable[{cls.name(), n}] = result;
    return result;
}

ClassCheckResult check_bridge_alterable(const GraphClass& cls, int n,
                                        std::optional<int> max_n_override) {
    {
        std::lock_guard lock(cache().mu);
        auto it = cache().alterable.find({cls.name(), n});
        if (it != cache().alterable.end()) return it->second;
    }
    ClassCheckResult result = check_bridge_addable(cls, n, max_n_override);
    if (result.ok) {
        cls.enumerate(n, [&](const Graph& g) {
            if (!result.ok) return;
            Graph h = g;
            for (auto [u, v] : bridges(g).edges) {
                h.remove_edge(u, v);
                bool in = cls.contains(h);
                h.add_edge(u, v);
                if (!in) {
                    result.ok = false;
                    result.witness = g;
                    result.edge = {u, v};
                    result.detail = "deleting a bridge leaves the class";
                    return;
                }
            }
        });
    }
    std::lock_guard lock(cache().mu);
    cache().alterable[{cls.name(), n}] = result;
    return result;
}

std::uint64_t count_members(const GraphClass& cls, int n, std::optional<int> max_n_override) {
    check_cap(cls, n, max_n_override);
    std::uint64_t count = 0;
    cls.enumerate(n, [&](const Graph&) { ++count; });
    return count;
}

}  // namespace bridgelab
