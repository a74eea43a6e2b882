#include "bridgelab/verify.hpp"

#include <cmath>

namespace bridgelab {

namespace {

void require_bridge_addable(const GraphClass& cls, int n, std::optional<int> max_n_override) {
    auto check = check_bridge_addable(cls, n, max_n_override);
    if (!check.ok)
        throw HypothesisError("class '" + cls.name() + "' is not bridge-addable at n=" +
                              std::to_string(n) + ": " + check.detail);
}

void require_bridge_alterable(const GraphClass& cls, int n, std::optional<int> max_n_override) {
    auto check = check_bridge_alterable(cls, n, max_n_override);
    if (!check.ok)
        throw HypothesisError("class '" + cls.name() + "' is not bridge-alterable at n=" +
                              std::to_string(n) + ": " + check.detail);
}

}  // namespace

ConnectivityBoundReport verify_theorem1(const GraphClass& cls, int n, const Weighting& w,
                                        std::optional<int> max_n_override) {
    ConnectivityBoundReport report;
    report.class_name = cls.name();
    report.n = n;
    report.weighting = w.describe();
    require_bridge_addable(cls, n, max_n_override);
    report.hypothesis_ok = true;

    Distribution kappa = statistic_distribution(cls, n, w, Statistic::kKappa, max_n_override);
    const Rational alpha = w.alpha();

    report.ratio_ok = true;
    for (int k = 1; k < n; ++k) {
        RatioStep step;
        step.k = k;
        step.lhs = kappa.pr(k + 1);
        step.rhs = alpha / k * kappa.pr(k);
        step.ok = step.lhs <= step.rhs;
        if (!step.ok) report.ratio_ok = false;
        report.ratio_steps.push_back(std::move(step));
    }

    report.dominance = stochastic_leq_poisson(kappa.shifted(1), rational_double(alpha));

    report.p_connected = kappa.pr(1);
    report.reference = std::exp(-rational_double(alpha));
    report.connectivity_ok =
        rational_double(report.p_connected) >= report.reference - kPoissonTolerance;

    report.e_kappa = kappa.mean();
    report.e_kappa_bound = 1 + alpha;
    report.expectation_ok = report.e_kappa <= report.e_kappa_bound;
    return report;
}

FragmentBoundReport verify_theorem2(const GraphClass& cls, int n, const Weighting& w,
                                    std::optional<int> max_n_override) {
    FragmentBoundReport report;
    report.class_name = cls.name();
    report.n = n;
    report.weighting = w.describe();
    require_bridge_addable(cls, n, max_n_override);
    report.hypothesis_ok = true;
    report.e_frag = class_moments(cls, n, w, max_n_override).e_frag;
    report.bound = 2 * w.alpha();
    return report;
}

TrendTable trend_report(const GraphClass& cls, const Weighting& w, int n_lo, int n_hi,
                        std::optional<int> max_n_override) {
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad n range");
    TrendTable table;
    table.class_name = cls.name();
    table.weighting = w.describe();
    double alpha = rational_double(w.alpha());
    table.ref_conn = std::exp(-alpha / 2);
    table.ref_kappa = 1 + alpha / 2;
    table.ref_frag = alpha;
    for (int n = n_lo; n <= n_hi; ++n) {
        require_bridge_alterable(cls, n, max_n_override);
        ClassMoments m = class_moments(cls, n, w, max_n_override);
        table.rows.push_back({n, m.p_connected, m.e_kappa, m.e_frag});
    }
    return table;
}

ConjectureReport conjecture_explorer(const GraphClass& cls, const Weighting& w, int n_lo,
                                     int n_hi, std::optional<int> max_n_override) {
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad n range");
    ConjectureReport report;
    report.class_name = cls.name();
    report.weighting = w.describe();
    auto forests = make_class("forests");
    for (int n = n_lo; n <= n_hi; ++n) {
        require_bridge_addable(cls, n, max_n_override);
        ConjectureRow row;
        row.n = n;

        Distribution kappa =
            statistic_distribution(cls, n, w, Statistic::kKappa, max_n_override);
        auto half = stochastic_leq_poisson(kappa.shifted(1), 0.5);
        row.half_poisson_holds = half.holds;
        row.half_poisson_witness = half.witness;

        row.e_frag = class_moments(cls, n, w, max_n_override).e_frag;
        row.e_frag_leq_one = row.e_frag <= 1;

        if (check_bridge_alterable(cls, n, max_n_override).ok) {
            row.forest_comparison_ran = true;
            Distribution forest_kappa =
                statistic_distribution(*forests, n, w, Statistic::kKappa, max_n_override);
            auto dom = stochastic_leq_exact(kappa, forest_kappa);
            row.forest_dominance_holds = dom.holds;
            row.forest_dominance_witness = dom.witness;

            row.e_frag_forest = class_moments(*forests, n, w, max_n_override).e_frag;
            row.e_frag_leq_forest = row.e_frag <= row.e_frag_forest;
        }

        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace bridgelab
