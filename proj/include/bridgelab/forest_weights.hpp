#pragma once

#include <map>
#include <vector>

#include "bridgelab/graph.hpp"
#include "bridgelab/rational.hpp"

namespace bridgelab {

/// Positive integer vertex weights (component sizes of a contracted base).
struct WeightVector {
    std::vector<long> w;
    long total = 0;

    explicit WeightVector(std::vector<long> weights);
    int size() const { return static_cast<int>(w.size()); }
};

/// Degree-weighted forest mass: prod_i w_i^deg(i) * lambda^edges *
/// nu^components. Rejects cyclic input.
Rational forest_mass(const Graph& forest, const WeightVector& w, const Rational& lambda,
                     const Rational& nu);

/// prod_i w_i * W^(n-2); equals the total degree-weighted mass of all
/// labelled trees (1 for n = 1, where the empty product convention holds).
BigInt moon_tree_total(const WeightVector& w);

/// Sum of w_u w_v over vertex pairs in different components.
BigInt weighted_cross(const Graph& g, const WeightVector& w);

/// Total weight minus the weight of a heaviest component.
BigInt weighted_fragment(const Graph& g, const WeightVector& w);

/// For each edge of the tree, the split side weights s and W-s contribute
/// their values within [1, W/2]; a balanced split counts once.
std::map<long, long> edge_cut_profile(const Graph& tree, const WeightVector& w);

/// Collapses each base component to one vertex; requires every edge of h
/// outside the base to join two distinct components.
Graph contract(const Graph& h, const std::vector<std::vector<int>>& base_components);

/// Trees on {0..n-1} decoded from Pruefer sequences; forests built as set
/// partitions with a tree per block. Deliberately independent of the
/// class enumerators so the two routes cross-check each other.
void for_each_tree(int n, const GraphVisitor& visit);
void for_each_forest(int n, const GraphVisitor& visit);

struct FiberReport {
    std::vector<long> weights;          // component sizes of the base
    std::uint64_t forests_checked = 0;  // contraction images visited
    std::uint64_t fiber_total = 0;      // graphs above all images
    std::uint64_t sweep_total = 0;      // independent cross-subset sweep
    bool per_forest_ok = false;         // every |fiber| and mass matched
    bool totals_match = false;          // constructive count == sweep count
    bool kappa_law_ok = false;          // tau-law of kappa == mass-law of kappa
    bool ok() const { return per_forest_ok && totals_match && kappa_law_ok; }
};

/// Verifies, for a bridgeless base: every contraction fiber has exactly
/// prod w_i^deg (F) graphs, carrying total mass equal to the forest mass,
/// and the induced component-count laws agree. Two independent
/// enumeration routes must meet in the middle.
FiberReport fiber_mass_identity_check(const Graph& bridgeless_base, const Rational& lambda,
                                      const Rational& nu);

struct TwoComponentIdentityReport {
    Rational lhs;  // Pr(two components)
    Rational rhs;  // Pr(tree) * (nu/lambda) * sum_k E[c(T,k)] / (k (W-k))
    Rational flow_total;      // mass-weighted flow into the two-component slice
    Rational two_comp_mass;   // direct mass of the slice
    bool ok() const { return lhs == rhs && flow_total == two_comp_mass; }
};

TwoComponentIdentityReport verify_fn2_identity(int n, const WeightVector& w,
                                               const Rational& lambda, const Rational& nu);

struct ComponentRatioStep {
    int i;
    Rational lhs;  // Pr(i+1 components)
    Rational rhs;  // Pr(i components)/i * (n/W) * (nu/lambda)
    bool ok;
};

struct ComponentRatioReport {
    std::vector<ComponentRatioStep> steps;
    bool ok() const {
        for (const auto& s : steps)
            if (!s.ok) return false;
        return true;
    }
};

ComponentRatioReport verify_smalln25(int n, const WeightVector& w, const Rational& lambda,
                                     const Rational& nu);

}  // namespace bridgelab
