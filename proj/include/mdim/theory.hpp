#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mdim {

/// Natural-log binary entropy, 0 log 0 := 0. DomainError outside [0, 1].
double binary_entropy(double y);

/// Large-deviation rate f(x) = 1 - x + x ln x for x > 0.
double rate_function(double x);

struct AlphaBeta {
    double alpha = 1.0;
    double beta = 1.0;
};

inline constexpr double kRootTolerance = 1e-12;
inline constexpr int kMaxBisections = 200;

/// Roots alpha < 1 < beta of f(x) = 1/sqrt(c), by bisection. Requires c > 1.
AlphaBeta solve_alpha_beta(double c, double tol = kRootTolerance);

enum class RegimeCase { Case1, Case2 };

std::string to_string(RegimeCase c);

struct RegimeOptions {
    /// gamma <= threshold is labelled Case 1, otherwise Case 2.
    double gamma_threshold = 8.0;
    /// Pin alpha = beta = 1 (the dense-degree specialization).
    bool force_unit_alpha_beta = false;
    double root_tolerance = kRootTolerance;
};

/// Finite-n realization of the sparse G(n, d/n) regime.
struct RegimeParams {
    std::size_t n = 0;
    double d = 0.0;
    double c = 0.0;  ///< d / ln n
    std::size_t t_star = 0;
    double gamma = 0.0;  ///< d^(t*+1) / n
    double alpha = 1.0;
    double beta = 1.0;
    RegimeCase case_label = RegimeCase::Case1;
    double gamma_threshold = 8.0;
};

/// t* = max{t >= 1 : d^t < n}, gamma = d^(t*+1)/n, c = d/ln n, and (alpha,
/// beta) at level 1/sqrt(c). Requires n >= 3 and 1 < d < n; c <= 1 is a
/// DomainError unless alpha and beta are forced to 1.
RegimeParams compute_regime(std::size_t n, double d, const RegimeOptions& opts = {});

/// Probability that a uniformly random landmark fails to separate a
/// worst-case pair: 1 - 2 (1 - e^{-alpha gamma}) e^{-beta gamma}.
double q_value(double alpha, double beta, double gamma);

/// d^t without overflow; switches to log space when t ln d > 700.
double safe_power(double base, std::size_t exponent);

struct BoundReport {
    // Case 1 pair: ln n / max_{x in [alpha,beta]} H(e^{-x gamma}) and
    // 2 ln n / -ln q(alpha, beta).
    double case1_lb = 0.0;
    double case1_ub = 0.0;
    // Case 2 pair: ln n / (-(b g/d) ln(b g/d) + g e^{-a g}) and
    // ln n / (a g/d + e^{-b g}).
    double case2_lb = 0.0;
    double case2_ub = 0.0;
    double q = 0.0;
    double entropy_maximizer = 0.0;  ///< argmax of H(e^{-x gamma}) on [alpha, beta]
    double max_entropy = 0.0;
    std::optional<std::size_t> khuller_lb;
    std::optional<double> simple_diam_lb;
    std::vector<std::string> warnings;
};

/// Evaluates the four closed-form bounds. Denominators that are not
/// positive produce NaN and a warning rather than a meaningless number.
BoundReport closed_form_bounds(const RegimeParams& r);

/// Same, additionally filling the diameter-based classical bounds.
BoundReport closed_form_bounds(const RegimeParams& r, std::size_t diameter);

/// Smallest m >= 1 with diam^m + m >= n.
std::size_t khuller_lower_bound(std::size_t n, std::size_t diam);

/// ln n / ln(diam + 1).
double simple_diameter_lower_bound(std::size_t n, std::size_t diam);

/// A / (ln n)^((t-1)/2): relative deviation scale of |V_t| after t steps.
double predicted_shell_tolerance(std::size_t n, std::size_t t, double A);
double predicted_shell_tolerance_from_log(double log_n, std::size_t t, double A);

}  // namespace mdim
