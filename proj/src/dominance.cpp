#include "bridgelab/dominance.hpp"

#include "bridgelab/poisson.hpp"

namespace bridgelab {

DominanceReport stochastic_leq_tail(const Distribution& x,
                                    const std::function<double(int)>& y_tail, double tol) {
    DominanceReport report;
    report.mode = DominanceMode::kExactVsPoisson;
    report.holds = true;
    int lo = std::min(0, x.min_value());
    for (int t = lo; t <= x.max_value(); ++t) {
        double lhs = rational_double(x.tail_geq(t));
        double rhs = y_tail(t);
        double margin = rhs + tol - lhs;
        report.thresholds.push_back({t, lhs, rhs, margin, margin < kReviewMargin});
        if (margin < 0 && report.holds) {
            report.holds = false;
            report.witness = t;
        }
    }
    return report;
}

DominanceReport stochastic_leq_poisson(const Distribution& x, double alpha, double tol) {
    return stochastic_leq_tail(x, [alpha](int t) { return poisson_tail_geq(alpha, t); }, tol);
}

DominanceReport stochastic_leq_exact(const Distribution& x, const Distribution& y) {
    DominanceReport report;
    report.mode = DominanceMode::kExactVsExact;
    report.holds = true;
    int lo = std::min(x.min_value(), y.min_value());
    int hi = std::max(x.max_value(), y.max_value());
    for (int t = lo; t <= hi; ++t) {
        Rational lhs = x.tail_geq(t);
        Rational rhs = y.tail_geq(t);
        Rational margin = rhs - lhs;
        report.exact_margins.emplace_back(t, margin);
        report.thresholds.push_back({t, rational_double(lhs), rational_double(rhs),
                                     rational_double(margin), false});
        if (margin < 0 && report.holds) {
            report.holds = false;
            report.witness = t;
        }
    }
    return report;
}

RatioCheckResult ratio_condition_check(const Distribution& x, const Rational& alpha, int k0) {
    if (alpha <= 0) throw std::invalid_argument("ratio condition needs alpha > 0");
    RatioCheckResult result;
    for (int k = 0; k < k0; ++k) {
        // exact: (k+1) Pr(X=k+1) <= alpha Pr(X=k)
        if (Rational(k + 1) * x.pr(k + 1) > alpha * x.pr(k)) {
            result.ok = false;
            result.first_violation = k;
            break;
        }
    }
    return result;
}

Rational truncated_tail(const Distribution& x, int t, int k0) {
    Rational acc = 0;
    for (const auto& [value, mass] : x.pmf())
        if (value >= t && value <= k0) acc += mass;
    return acc;
}

}  // namespace bridgelab
