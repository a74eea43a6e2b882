#include "bridgelab/poisson.hpp"

#include <cmath>
#include <stdexcept>

namespace bridgelab {

double poisson_pmf(double alpha, int k) {
    if (alpha <= 0 || k < 0) throw std::invalid_argument("poisson_pmf needs alpha > 0, k >= 0");
    return std::exp(-alpha + k * std::log(alpha) - std::lgamma(k + 1.0));
}

double poisson_tail_geq(double alpha, int t) {
    if (alpha <= 0) throw std::invalid_argument("poisson tail needs alpha > 0");
    if (t <= 0) return 1.0;
    double term = poisson_pmf(alpha, t);
    double sum = term;
    for (int k = t; ; ++k) {
        term *= alpha / (k + 1);
        sum += term;
        if (term < sum * 1e-17 || k > t + 100000) break;
    }
    return sum;
}

namespace {

// Regularized incomplete gamma, series branch: P(a, x).
double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < 10000; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued-fraction branch (modified Lentz): Q(a, x).
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_q(double a, double x) {
    if (a <= 0 || x < 0) throw std::invalid_argument("gamma_q needs a > 0, x >= 0");
    if (x == 0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi_square_tail(double statistic, int dof) {
    if (dof < 1) throw std::invalid_argument("chi_square_tail needs dof >= 1");
    if (statistic <= 0) return 1.0;
    return gamma_q(dof / 2.0, statistic / 2.0);
}

}  // namespace bridgelab
