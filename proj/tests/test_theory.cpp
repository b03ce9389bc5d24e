#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mdim/errors.hpp"
#include "mdim/rng.hpp"
#include "mdim/theory.hpp"

using namespace mdim;

namespace {

// Reference roots of 1 - x + x ln x = 1/sqrt(c), computed offline at 50 digits.
struct RootFixture {
    double c, alpha, beta;
};
constexpr RootFixture kRoots[] = {
    {4.0, 0.18668230885083704, 2.1555352035005025},
    {1.21, 0.018148554116376459, 2.625780704131},
    {100.0, 0.58753961327278798, 1.4794327174332244},
    {1e4, 0.86195282236325689, 1.1447168162432815},
    {1e6, 0.95561323110080205, 1.0450534652044342},
};

}  // namespace

TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0.5) == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(std::exp(-1.0)) == doctest::Approx(0.657817430394294).epsilon(1e-13));
    CHECK_THROWS_AS(binary_entropy(-0.01), DomainError);
    CHECK_THROWS_AS(binary_entropy(1.01), DomainError);
    CHECK_THROWS_AS(binary_entropy(std::nan("")), DomainError);

    for (int i = 0; i <= 1000; ++i) {
        const double y = i / 1000.0;
        REQUIRE(binary_entropy(y) == doctest::Approx(binary_entropy(1.0 - y)).epsilon(1e-12));
        REQUIRE(binary_entropy(y) <= std::numbers::ln2 + 1e-15);
    }
    for (int i = 0; i < 1000; ++i) {
        const double a = i / 1000.0;
        const double b = (i + 1) / 1000.0;
        const double mid = binary_entropy(0.5 * (a + b));
        REQUIRE(mid >= 0.5 * (binary_entropy(a) + binary_entropy(b)) - 1e-15);
    }
}

TEST_CASE("rate function") {
    CHECK(rate_function(1.0) == 0.0);
    CHECK(rate_function(2.0) == doctest::Approx(0.386294361119891).epsilon(1e-13));
    CHECK(rate_function(1e-12) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(rate_function(0.0), DomainError);
    CHECK_THROWS_AS(rate_function(-1.0), DomainError);

    double prev = rate_function(0.001);
    for (int i = 2; i < 1000; ++i) {
        const double x = i / 1000.0;
        const double f = rate_function(x);
        REQUIRE(f < prev);
        prev = f;
    }
    prev = rate_function(1.0);
    for (int i = 1; i <= 1000; ++i) {
        const double x = 1.0 + i / 100.0;
        const double f = rate_function(x);
        REQUIRE(f > prev);
        prev = f;
    }
}

TEST_CASE("alpha and beta against reference roots") {
    for (const auto& fx : kRoots) {
        CAPTURE(fx.c);
        const auto ab = solve_alpha_beta(fx.c);
        CHECK(ab.alpha == doctest::Approx(fx.alpha).epsilon(1e-9));
        CHECK(ab.beta == doctest::Approx(fx.beta).epsilon(1e-9));
        const double target = 1.0 / std::sqrt(fx.c);
        CHECK(std::abs(rate_function(ab.alpha) - target) <= 1e-12);
        CHECK(std::abs(rate_function(ab.beta) - target) <= 1e-12);
    }
    CHECK_THROWS_AS(solve_alpha_beta(1.0), DomainError);
    CHECK_THROWS_AS(solve_alpha_beta(0.5), DomainError);
}

TEST_CASE("alpha and beta over random c") {
    Engine eng(17);
    for (int i = 0; i < 100; ++i) {
        const double c = 1.01 + uniform01(eng) * (1e6 - 1.01);
        const auto ab = solve_alpha_beta(c);
        const double target = 1.0 / std::sqrt(c);
        REQUIRE(ab.alpha > 0.0);
        REQUIRE(ab.alpha < 1.0);
        REQUIRE(ab.beta > 1.0);
        REQUIRE(std::abs(rate_function(ab.alpha) - target) <= 1e-12);
        REQUIRE(std::abs(rate_function(ab.beta) - target) <= 1e-12);
    }
    // Monotone toward 1 as c grows.
    AlphaBeta prev = solve_alpha_beta(1.05);
    for (double c = 1.5; c < 1e7; c *= 1.7) {
        const auto ab = solve_alpha_beta(c);
        REQUIRE(ab.alpha > prev.alpha);
        REQUIRE(ab.beta < prev.beta);
        prev = ab;
    }
}

TEST_CASE("regime parameters") {
    auto r = compute_regime(1000, 10.0);
    CHECK(r.t_star == 2);
    CHECK(r.gamma == doctest::Approx(1.0));
    r = compute_regime(500, 10.0);
    CHECK(r.t_star == 2);
    CHECK(r.gamma == doctest::Approx(2.0));
    r = compute_regime(100, 10.0);
    CHECK(r.t_star == 1);
    CHECK(r.gamma == doctest::Approx(1.0));
    CHECK(r.c == doctest::Approx(10.0 / std::log(100.0)));
    CHECK(r.case_label == RegimeCase::Case1);

    CHECK_THROWS_AS(compute_regime(100, 1.0), DomainError);
    CHECK_THROWS_AS(compute_regime(100, 100.0), DomainError);
    CHECK_THROWS_AS(compute_regime(2, 1.5), DomainError);
    // Below the connectivity regime unless alpha = beta = 1 is pinned.
    CHECK_THROWS_AS(compute_regime(1000, 3.0), DomainError);
    RegimeOptions pinned;
    pinned.force_unit_alpha_beta = true;
    const auto forced = compute_regime(1000, 3.0, pinned);
    CHECK(forced.alpha == 1.0);
    CHECK(forced.beta == 1.0);

    RegimeOptions low;
    low.gamma_threshold = 0.5;
    CHECK(compute_regime(1000, 10.0, low).case_label == RegimeCase::Case2);
}

TEST_CASE("regime invariants on random (n, d)") {
    Engine eng(23);
    RegimeOptions opts;
    opts.force_unit_alpha_beta = true;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 3 + uniform_below(eng, 1'000'000);
        const double d = 1.0 + 1e-6 + uniform01(eng) * (static_cast<double>(n) - 1.0 - 2e-6);
        const auto r = compute_regime(n, d, opts);
        const double nn = static_cast<double>(n);
        CAPTURE(n);
        CAPTURE(d);
        REQUIRE(r.t_star >= 1);
        REQUIRE(static_cast<double>(r.t_star) * std::log(d) < std::log(nn) + 1e-12);
        REQUIRE(r.gamma >= 1.0 - 1e-9);
        REQUIRE(r.gamma < d * (1.0 + 1e-9));
    }
}

TEST_CASE("q value") {
    CHECK(q_value(1.0, 1.0, 1.0) == doctest::Approx(0.534911684130340).epsilon(1e-13));
    const double e1 = std::exp(-1.0);
    CHECK(q_value(1.0, 1.0, 1.0) == doctest::Approx(e1 * e1 + (1 - e1) * (1 - e1)).epsilon(1e-14));
    CHECK(q_value(0.5, 2.0, 200.0) == doctest::Approx(1.0).epsilon(1e-15));
    for (int i = 1; i <= 2000; ++i) REQUIRE(q_value(1.0, 1.0, i / 100.0) >= 0.5 - 1e-15);
    CHECK_THROWS_AS(q_value(2.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(q_value(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("closed-form bounds") {
    RegimeParams r;
    r.n = 1'000'000;
    r.d = 1000.0;
    r.gamma = 1.0;
    const auto b = closed_form_bounds(r);
    CHECK(b.case1_lb == doctest::Approx(21.002043910091109).epsilon(1e-12));
    CHECK(b.case1_ub == doctest::Approx(44.163447856309195).epsilon(1e-12));
    CHECK(b.q == doctest::Approx(0.534911684130340).epsilon(1e-13));
    CHECK(-std::log(b.q) == doctest::Approx(0.625653622104624).epsilon(1e-12));
    CHECK(b.warnings.empty());

    r.gamma = std::numbers::ln2;
    const auto half = closed_form_bounds(r);
    CHECK(half.case1_lb == doctest::Approx(std::log2(1e6)).epsilon(1e-12));
    CHECK(half.max_entropy == doctest::Approx(std::numbers::ln2).epsilon(1e-14));

    // Case 2 limit: gamma large, gamma/d small; both denominators vanish.
    RegimeParams big;
    big.n = 1'000'000;
    big.d = 1e5;
    big.gamma = 60.0;
    const auto c2 = closed_form_bounds(big);
    CHECK(std::isfinite(c2.case2_lb));
    CHECK(std::isfinite(c2.case2_ub));
    CHECK(c2.case2_lb > 1e2);
    CHECK(c2.case2_ub > c2.case2_lb);

    // beta*gamma/d >= 1 makes the Case 2 lower-bound denominator meaningless.
    RegimeParams dense;
    dense.n = 100;
    dense.d = 2.0;
    dense.gamma = 3.0;
    const auto bad = closed_form_bounds(dense);
    CHECK(std::isnan(bad.case2_lb));
    CHECK_FALSE(bad.warnings.empty());
}

TEST_CASE("bounds on a grid of regimes") {
    for (double c : {1.1, 1.5, 2.0, 4.0, 10.0, 100.0}) {
        const auto ab = solve_alpha_beta(c);
        for (double gamma = 1.0; gamma <= 8.0; gamma += 0.25) {
            RegimeParams r;
            r.n = 100'000;
            r.c = c;
            r.d = c * std::log(1e5);
            r.gamma = gamma;
            r.alpha = ab.alpha;
            r.beta = ab.beta;
            const auto b = closed_form_bounds(r);
            CAPTURE(c);
            CAPTURE(gamma);
            // The maximizer must beat a fine grid over [alpha, beta].
            for (int i = 0; i <= 200; ++i) {
                const double x = ab.alpha + (ab.beta - ab.alpha) * i / 200.0;
                REQUIRE(binary_entropy(std::exp(-x * gamma)) <= b.max_entropy + 1e-14);
            }
            REQUIRE(b.case1_lb > 0.0);
            REQUIRE(std::isfinite(b.case1_ub));
            if (b.q >= 0.25) {
                REQUIRE(b.case1_lb <= b.case1_ub);
            } else {
                REQUIRE_FALSE(b.warnings.empty());
            }
        }
    }
}

TEST_CASE("diameter-based classical bounds") {
    CHECK(khuller_lower_bound(10, 2) == 3);
    CHECK(khuller_lower_bound(5, 4) == 1);
    CHECK(khuller_lower_bound(2, 1) == 1);
    CHECK(khuller_lower_bound(1'000'000, 1) == 999'999);
    for (std::size_t n = 2; n < 300; ++n)
        for (std::size_t diam = 1; diam < 12; ++diam) {
            const auto m = khuller_lower_bound(n, diam);
            REQUIRE(std::pow(double(diam), double(m)) + double(m) >= double(n));
            if (m > 1) REQUIRE(std::pow(double(diam), double(m - 1)) + double(m - 1) < double(n));
        }

    CHECK(simple_diameter_lower_bound(8, 1) == doctest::Approx(3.0));
    CHECK(simple_diameter_lower_bound(5, 4) == doctest::Approx(1.0));
    CHECK(simple_diameter_lower_bound(100, 9) == doctest::Approx(2.0));

    RegimeParams r = compute_regime(1000, 20.0);
    const auto b = closed_form_bounds(r, 3);
    REQUIRE(b.khuller_lb);
    CHECK(*b.khuller_lb == khuller_lower_bound(1000, 3));
    CHECK(*b.simple_diam_lb == doctest::Approx(std::log(1000.0) / std::log(4.0)));
}

TEST_CASE("shell tolerance scale") {
    CHECK(predicted_shell_tolerance(1000, 1, 0.7) == doctest::Approx(0.7));
    CHECK(predicted_shell_tolerance_from_log(4.0, 3, 1.0) == doctest::Approx(0.25));
    CHECK(predicted_shell_tolerance_from_log(4.0, 5, 2.0) == doctest::Approx(0.125));
    CHECK_THROWS_AS(predicted_shell_tolerance(1000, 0, 1.0), DomainError);
}

TEST_CASE("safe power") {
    CHECK(safe_power(10.0, 3) == 1000.0);
    CHECK(std::isinf(safe_power(10.0, 400)));
    CHECK(safe_power(2.0, 0) == 1.0);
}

TEST_CASE("upper bound stays finite when q is within rounding of 1") {
    const auto r = compute_regime(1'000'000, 30.0);
    const auto b = closed_form_bounds(r);
    const double s = 2.0 * (1.0 - std::exp(-r.alpha * r.gamma)) * std::exp(-r.beta * r.gamma);
    REQUIRE(s > 0.0);
    CHECK(std::isfinite(b.case1_ub));
    CHECK(b.case1_ub == doctest::Approx(2.0 * std::log(1e6) / s).epsilon(1e-9));
}
