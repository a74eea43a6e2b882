#include "bridgelab/weighting.hpp"

#include "bridgelab/graph6.hpp"

namespace bridgelab {

Weighting::Weighting(Rational lambda, Rational nu, BridgeFreeFactor f)
    : lambda_(std::move(lambda)), nu_(std::move(nu)), factor_(f) {
    if (lambda_ <= 0 || nu_ <= 0)
        throw std::invalid_argument("lambda and nu must be positive");
}

Weighting Weighting::custom(Rational lambda, Rational nu, std::map<std::string, Rational> table) {
    Weighting w(std::move(lambda), std::move(nu), BridgeFreeFactor::kCustomTable);
    for (const auto& [key, value] : table)
        if (value < 0)
            throw std::invalid_argument("custom f table value for " + key + " is negative");
    w.table_ = std::move(table);
    return w;
}

Weighting Weighting::random_cluster(const Rational& p, const Rational& nu) {
    if (p <= 0 || p >= 1)
        throw std::invalid_argument("edge probability p must lie strictly between 0 and 1");
    return Weighting(p / (1 - p), nu, BridgeFreeFactor::kLambdaPowEdges);
}

Rational Weighting::factor_value(const Graph& bridge_free) const {
    switch (factor_) {
        case BridgeFreeFactor::kConstantOne:
            return 1;
        case BridgeFreeFactor::kLambdaPowEdges:
            return rational_pow(lambda_, bridge_free.edge_count());
        case BridgeFreeFactor::kCustomTable: {
            std::string key = to_graph6(bridge_free);
            auto it = table_.find(key);
            if (it == table_.end())
                throw std::out_of_range("custom f table has no entry for bridge-free graph " +
                                        key);
            return it->second;
        }
    }
    return 1;
}

Rational Weighting::tau(const Graph& g) const {
    int e0 = bridge_count(g);
    int kappa = component_count(g);
    Rational f = 1;
    if (factor_ == BridgeFreeFactor::kLambdaPowEdges) {
        f = rational_pow(lambda_, g.edge_count() - e0);
    } else if (factor_ == BridgeFreeFactor::kCustomTable) {
        f = factor_value(skeleton(g));
    }
    return f * rational_pow(lambda_, e0) * rational_pow(nu_, kappa);
}

Rational Weighting::tau_from_stats(int edges, int bridges, int kappa) const {
    switch (factor_) {
        case BridgeFreeFactor::kConstantOne:
            return rational_pow(lambda_, bridges) * rational_pow(nu_, kappa);
        case BridgeFreeFactor::kLambdaPowEdges:
            return rational_pow(lambda_, edges) * rational_pow(nu_, kappa);
        case BridgeFreeFactor::kCustomTable:
            throw std::logic_error("custom f weightings have no stats-only mass");
    }
    return 0;
}

std::string Weighting::describe() const {
    std::string f = factor_ == BridgeFreeFactor::kConstantOne     ? "one"
                    : factor_ == BridgeFreeFactor::kLambdaPowEdges ? "cluster"
                                                                   : "table";
    return "lambda=" + rational_str(lambda_) + " nu=" + rational_str(nu_) + " f=" + f;
}

Rational tau_class(const GraphClass& cls, int n, const Weighting& w,
                   std::optional<int> max_n_override) {
    check_cap(cls, n, max_n_override);
    Rational total = 0;
    cls.enumerate(n, [&](const Graph& g) { total += w.tau(g); });
    if (total <= 0)
        throw std::domain_error("class '" + cls.name() + "' at n=" + std::to_string(n) +
                                " has zero total mass; no distribution exists");
    return total;
}

}  // namespace bridgelab
