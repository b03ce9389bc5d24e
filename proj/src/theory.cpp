#include "mdim/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "mdim/errors.hpp"

namespace mdim {

double binary_entropy(double y) {
    if (!(y >= 0.0 && y <= 1.0)) throw DomainError("binary_entropy: y must lie in [0, 1]");
    auto term = [](double p) { return p > 0.0 ? -p * std::log(p) : 0.0; };
    return term(y) + term(1.0 - y);
}

double rate_function(double x) {
    if (!(x > 0.0)) throw DomainError("rate_function: x must be positive");
    return 1.0 - x + x * std::log(x);
}

namespace {

// Bisection for f(x) = target on [lo, hi] where f(lo) - target and
// f(hi) - target have opposite signs.
double bisect_rate(double lo, double hi, double target, double tol) {
    const bool decreasing = rate_function(lo) > target;
    for (int it = 0; it < kMaxBisections; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = rate_function(mid);
        if (std::abs(fm - target) <= tol) return mid;
        if ((fm > target) == decreasing) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw DomainError("solve_alpha_beta: bisection did not reach tolerance");
}

}  // namespace

AlphaBeta solve_alpha_beta(double c, double tol) {
    if (!(c > 1.0)) throw DomainError("solve_alpha_beta: requires c > 1");
    if (!(tol > 0.0)) throw DomainError("solve_alpha_beta: tolerance must be positive");
    const double target = 1.0 / std::sqrt(c);

    // f(0+) = 1 > target > 0 = f(1); the lower end is kept strictly positive.
    const double alpha = bisect_rate(std::numeric_limits<double>::min(), 1.0, target, tol);

    double upper = 2.0;
    while (rate_function(upper) <= target) upper *= 2.0;
    const double beta = bisect_rate(1.0, upper, target, tol);
    return {alpha, beta};
}

std::string to_string(RegimeCase c) {
    return c == RegimeCase::Case1 ? "Case1" : "Case2";
}

double safe_power(double base, std::size_t exponent) {
    const double log_value = static_cast<double>(exponent) * std::log(base);
    if (log_value > 700.0) return std::exp(log_value);  // inf past ~709, never wraps
    double out = 1.0;
    for (std::size_t i = 0; i < exponent; ++i) out *= base;
    return out;
}

RegimeParams compute_regime(std::size_t n, double d, const RegimeOptions& opts) {
    if (n < 3) throw DomainError("compute_regime: requires n >= 3");
    if (!(d > 1.0)) throw DomainError("compute_regime: requires d > 1");
    if (!(d < static_cast<double>(n))) throw DomainError("compute_regime: requires d < n");

    RegimeParams r;
    r.n = n;
    r.d = d;
    const double nd = static_cast<double>(n);
    r.c = d / std::log(nd);
    r.gamma_threshold = opts.gamma_threshold;

    const double log_n = std::log(nd);
    const double log_d = std::log(d);
    std::size_t t = 1;
    for (;;) {
        const std::size_t next = t + 1;
        const bool below = static_cast<double>(next) * log_d > 700.0
                               ? static_cast<double>(next) * log_d < log_n
                               : safe_power(d, next) < nd;
        if (!below) break;
        t = next;
    }
    r.t_star = t;
    const double log_gamma = static_cast<double>(t + 1) * log_d - log_n;
    r.gamma = static_cast<double>(t + 1) * log_d > 700.0 ? std::exp(log_gamma)
                                                          : safe_power(d, t + 1) / nd;

    if (opts.force_unit_alpha_beta) {
        r.alpha = r.beta = 1.0;
    } else {
        if (!(r.c > 1.0)) {
            throw DomainError("compute_regime: c = d/ln n must exceed 1 (below the "
                              "connectivity threshold); force alpha = beta = 1 to override");
        }
        const auto ab = solve_alpha_beta(r.c, opts.root_tolerance);
        r.alpha = ab.alpha;
        r.beta = ab.beta;
    }
    r.case_label = r.gamma <= opts.gamma_threshold ? RegimeCase::Case1 : RegimeCase::Case2;
    return r;
}

double q_value(double alpha, double beta, double gamma) {
    if (!(alpha > 0.0 && alpha <= beta)) throw DomainError("q_value: requires 0 < alpha <= beta");
    if (!(gamma > 0.0)) throw DomainError("q_value: requires gamma > 0");
    return 1.0 - 2.0 * (-std::expm1(-alpha * gamma)) * std::exp(-beta * gamma);
}

BoundReport closed_form_bounds(const RegimeParams& r) {
    if (r.n < 2 || !(r.gamma > 0.0) || !(r.alpha > 0.0) || !(r.alpha <= r.beta)) {
        throw DomainError("closed_form_bounds: invalid regime parameters");
    }
    BoundReport b;
    const double log_n = std::log(static_cast<double>(r.n));
    auto h_at = [&](double x) { return binary_entropy(std::exp(-x * r.gamma)); };

    // H(e^{-x gamma}) is unimodal in x with peak ln 2 at x = ln 2 / gamma.
    const double peak = std::numbers::ln2 / r.gamma;
    b.entropy_maximizer = std::clamp(peak, r.alpha, r.beta);
    b.max_entropy = h_at(b.entropy_maximizer);
    const double slack = 1e-14;
    if (b.max_entropy + slack < h_at(r.alpha) || b.max_entropy + slack < h_at(r.beta)) {
        throw std::logic_error("closed_form_bounds: clamped maximizer beaten by an endpoint");
    }
    b.case1_lb = log_n / b.max_entropy;

    b.q = q_value(r.alpha, r.beta, r.gamma);
    if (b.q < 0.25) b.warnings.push_back("q(alpha,beta) < 1/4: Case 1 lower bound may exceed upper");
    // -ln q via log1p: for large gamma, q rounds to 1 long before 1 - q underflows.
    const double one_minus_q = 2.0 * (-std::expm1(-r.alpha * r.gamma)) * std::exp(-r.beta * r.gamma);
    b.case1_ub = 2.0 * log_n / -std::log1p(-one_minus_q);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (r.d > 0.0) {
        const double x = r.beta * r.gamma / r.d;
        const double lb_den = -x * std::log(x) + r.gamma * std::exp(-r.alpha * r.gamma);
        if (lb_den > 0.0) {
            b.case2_lb = log_n / lb_den;
        } else {
            b.case2_lb = nan;
            b.warnings.push_back("Case 2 lower-bound denominator is not positive (beta*gamma/d >= 1)");
        }
        const double ub_den = r.alpha * r.gamma / r.d + std::exp(-r.beta * r.gamma);
        b.case2_ub = log_n / ub_den;
    } else {
        b.case2_lb = b.case2_ub = nan;
        b.warnings.push_back("Case 2 bounds need the mean degree d");
    }
    return b;
}

BoundReport closed_form_bounds(const RegimeParams& r, std::size_t diam) {
    BoundReport b = closed_form_bounds(r);
    b.khuller_lb = khuller_lower_bound(r.n, diam);
    b.simple_diam_lb = simple_diameter_lower_bound(r.n, diam);
    return b;
}

std::size_t khuller_lower_bound(std::size_t n, std::size_t diam) {
    if (n < 2) throw DomainError("khuller_lower_bound: requires n >= 2");
    if (diam < 1) throw DomainError("khuller_lower_bound: requires diam >= 1");
    // diam^m is saturated at n, which is all the comparison needs.
    std::size_t power = 1;
    for (std::size_t m = 1;; ++m) {
        power = power > n / diam ? n : std::min(n, power * diam);
        if (power + m >= n) return m;
    }
}

double simple_diameter_lower_bound(std::size_t n, std::size_t diam) {
    if (n < 2) throw DomainError("simple_diameter_lower_bound: requires n >= 2");
    if (diam < 1) throw DomainError("simple_diameter_lower_bound: requires diam >= 1");
    return std::log(static_cast<double>(n)) / std::log(static_cast<double>(diam) + 1.0);
}

double predicted_shell_tolerance_from_log(double log_n, std::size_t t, double A) {
    if (t < 1) throw DomainError("predicted_shell_tolerance: requires t >= 1");
    if (!(A > 0.0)) throw DomainError("predicted_shell_tolerance: requires A > 0");
    if (!(log_n > 0.0)) throw DomainError("predicted_shell_tolerance: requires ln n > 0");
    return A * std::pow(log_n, -0.5 * static_cast<double>(t - 1));
}

double predicted_shell_tolerance(std::size_t n, std::size_t t, double A) {
    if (n < 3) throw DomainError("predicted_shell_tolerance: requires n >= 3");
    return predicted_shell_tolerance_from_log(std::log(static_cast<double>(n)), t, A);
}

}  // namespace mdim
