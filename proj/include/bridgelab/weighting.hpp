#pragma once

#include <map>
#include <string>

#include "bridgelab/classes.hpp"
#include "bridgelab/graph.hpp"
#include "bridgelab/rational.hpp"

namespace bridgelab {

/// Factor assigned to the bridge-free part of a graph.
enum class BridgeFreeFactor {
    kConstantOne,    // f = 1 on every bridge-free graph
    kLambdaPowEdges, // f = lambda^(edge count): the random-cluster form
    kCustomTable,    // explicit graph6 -> rational lookup
};

/// (lambda, nu, f): assigns each graph the mass
/// f(skeleton) * lambda^(bridge count) * nu^(component count).
class Weighting {
public:
    Weighting(Rational lambda, Rational nu, BridgeFreeFactor f = BridgeFreeFactor::kConstantOne);
    static Weighting custom(Rational lambda, Rational nu, std::map<std::string, Rational> table);
    // Conditioned G(n,p) with cluster weight nu: lambda = p/(1-p),
    // f = lambda^edges, so mass(H) = lambda^e(H) * nu^kappa(H).
    static Weighting random_cluster(const Rational& p, const Rational& nu);

    const Rational& lambda() const { return lambda_; }
    const Rational& nu() const { return nu_; }
    BridgeFreeFactor factor() const { return factor_; }
    Rational alpha() const { return nu_ / lambda_; }  // the Poisson parameter nu/lambda

    Rational tau(const Graph& g) const;
    Rational factor_value(const Graph& bridge_free) const;

    // Catalog weightings admit the aggregated fast path: tau depends only
    // on (edges, bridges, components).
    bool is_catalog() const { return factor_ != BridgeFreeFactor::kCustomTable; }
    Rational tau_from_stats(int edges, int bridge_count, int kappa) const;

    std::string describe() const;

private:
    Rational lambda_, nu_;
    BridgeFreeFactor factor_;
    std::map<std::string, Rational> table_;
};

Rational tau_class(const GraphClass& cls, int n, const Weighting& w,
                   std::optional<int> max_n_override = {});

}  // namespace bridgelab
