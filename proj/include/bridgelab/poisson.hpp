#pragma once

namespace bridgelab {

double poisson_pmf(double alpha, int k);

// Pr(Po(alpha) >= t), good to at least 12 significant digits: the tail
// series is summed upward (all positive terms, no cancellation).
double poisson_tail_geq(double alpha, int t);

// Upper tail of the chi-square distribution with `dof` degrees of
// freedom, via the regularized incomplete gamma function Q(dof/2, x/2).
double chi_square_tail(double statistic, int dof);

double gamma_q(double a, double x);

}  // namespace bridgelab
