#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bridgelab/distribution.hpp"
#include "bridgelab/rational.hpp"

namespace bridgelab {

enum class DominanceMode { kExactVsExact, kExactVsPoisson };

struct ThresholdMargin {
    int t;
    double lhs_tail;   // Pr(X >= t)
    double rhs_tail;   // Pr(Y >= t)
    double margin;     // rhs - lhs (+tol in poisson mode)
    bool near_boundary;  // margin below the review threshold
};

struct DominanceReport {
    bool holds = false;
    DominanceMode mode = DominanceMode::kExactVsPoisson;
    std::vector<ThresholdMargin> thresholds;
    std::optional<int> witness;  // first failing t
    // exact mode only: rational margins rhs_tail - lhs_tail per t
    std::vector<std::pair<int, Rational>> exact_margins;
};

inline constexpr double kPoissonTolerance = 1e-9;
inline constexpr double kReviewMargin = 1e-6;

/// Checks Pr(X >= t) <= y_tail(t) + tol over X's support (y_tail must be
/// nonincreasing). Failure is a verdict, not an error.
DominanceReport stochastic_leq_tail(const Distribution& x,
                                    const std::function<double(int)>& y_tail,
                                    double tol);

DominanceReport stochastic_leq_poisson(const Distribution& x, double alpha,
                                       double tol = kPoissonTolerance);

/// Zero-tolerance rational comparison of the two tails.
DominanceReport stochastic_leq_exact(const Distribution& x, const Distribution& y);

struct RatioCheckResult {
    bool ok = true;
    std::optional<int> first_violation;
};

/// Pr(X=k+1) <= alpha/(k+1) * Pr(X=k) for k = 0..k0-1, exact.
RatioCheckResult ratio_condition_check(const Distribution& x, const Rational& alpha, int k0);

/// Pr(k0 >= X >= t) for the truncated-tail conclusion that the ratio
/// condition buys below k0.
Rational truncated_tail(const Distribution& x, int t, int k0);

}  // namespace bridgelab
