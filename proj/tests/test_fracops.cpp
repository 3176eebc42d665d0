#include "fracgreen/errors.hpp"
#include "fracgreen/fracops.hpp"
#include "fracgreen/special.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace fracgreen;
using doctest::Approx;

namespace {

GridFunction random_function(std::mt19937_64& rng, double offset, std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = ref::uniform(rng, -1.0, 1.0);
    return GridFunction(Grid(offset, n), v);
}

std::vector<ref::ld> widen(const GridFunction& f) {
    return {f.values().begin(), f.values().end()};
}

}  // namespace

TEST_CASE("fractional order") {
    const FractionalOrder half(0.5);
    CHECK(half.ceiling() == 1);
    CHECK_FALSE(half.is_integer());
    const FractionalOrder one(1.0 + 1e-14);
    CHECK(one.is_integer());
    CHECK(one.ceiling() == 1);
    CHECK(FractionalOrder(1.5).ceiling() == 2);
    CHECK_THROWS_AS(FractionalOrder(0.0), InputError);
    CHECK_THROWS_AS(FractionalOrder(-0.5), InputError);
}

TEST_CASE("fractional sum examples") {
    const GridFunction ones(Grid(0.0, 3), {1.0, 1.0, 1.0});
    const GridFunction half = fractional_sum(ones, 0.5);
    CHECK(half.grid().offset() == Approx(0.5));
    CHECK(half.at_point(0.5) == Approx(1.0).epsilon(1e-14));

    const GridFunction running = fractional_sum(ones, 1.0);
    CHECK(running.grid().offset() == Approx(1.0));
    CHECK(running[0] == Approx(1.0));
    CHECK(running[1] == Approx(2.0));
    CHECK(running[2] == Approx(3.0));

    const GridFunction zero = fractional_sum(GridFunction::zeros(Grid(0.3, 5)), 0.7);
    CHECK(zero.sup_norm() == 0.0);
    CHECK_THROWS_AS(fractional_sum(ones, 0.0), InputError);
}

TEST_CASE("fractional sum matches direct summation") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const double a = ref::uniform(rng, -1.0, 1.0);
        const double nu = ref::uniform(rng, 0.05, 1.95);
        const GridFunction f = random_function(rng, a, 8);
        const GridFunction s = fractional_sum(f, nu);
        for (std::size_t k = 0; k < s.size(); ++k) {
            const double want = static_cast<double>(ref::frac_sum(widen(f), a, nu, s.grid().point(k)));
            CHECK(s[k] == Approx(want).epsilon(1e-12).scale(1.0));
            CHECK(fractional_sum_at(f, nu, s.grid().point(k)) == Approx(s[k]).epsilon(1e-14).scale(1.0));
        }
    }
}

TEST_CASE("forward difference") {
    const GridFunction f(Grid(0.0, 3), {1.0, 3.0, 6.0});
    const GridFunction d = forward_difference(f, 1);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 2.0);
    CHECK(d[1] == 3.0);
    CHECK(forward_difference(f, 2)[0] == 1.0);
    CHECK_THROWS_AS(forward_difference(f, 3), TooShortError);
    CHECK(forward_difference(GridFunction(Grid(0.0, 4), {2.0, 2.0, 2.0, 2.0}), 1).sup_norm() == 0.0);
}

TEST_CASE("difference of t^(1.5) is 1.5 t^(0.5)") {
    std::vector<double> v;
    for (int k = 0; k < 6; ++k) v.push_back(special::falling_factorial(1.5 + k, 1.5));
    const GridFunction d = forward_difference(GridFunction(Grid(1.5, 6), v), 1);
    for (std::size_t k = 0; k < d.size(); ++k) {
        const double t = 1.5 + static_cast<double>(k);
        CHECK(d[k] == Approx(1.5 * special::falling_factorial(t, 0.5)).epsilon(1e-10));
    }
}

TEST_CASE("fractional difference examples") {
    const GridFunction f(Grid(0.0, 3), {1.0, 3.0, 6.0});
    const GridFunction d = fractional_difference(f, FractionalOrder(1.0));
    CHECK(d.grid().offset() == Approx(0.0));
    CHECK(d[0] == 2.0);
    CHECK(d[1] == 3.0);

    // Delta^mu t^(mu) = Gamma(mu+1) with base mu-1
    std::vector<double> v;
    for (int k = 0; k < 6; ++k) v.push_back(special::falling_factorial(-0.5 + k, 0.5));
    const GridFunction p = fractional_difference(GridFunction(Grid(-0.5, 6), v), FractionalOrder(0.5));
    CHECK(p.grid().offset() == Approx(0.0));
    REQUIRE(p.size() == 5);
    for (std::size_t k = 0; k < p.size(); ++k) {
        CHECK(p[k] == Approx(0.886226925452758).epsilon(1e-12));
    }

    CHECK(fractional_difference(GridFunction::zeros(Grid(0.2, 6)), FractionalOrder(1.4)).sup_norm() == 0.0);
    CHECK_THROWS_AS(fractional_difference(GridFunction(Grid(0.0, 2), {1.0, 1.0}), FractionalOrder(1.5)),
                    TooShortError);
}

TEST_CASE("fractional difference matches direct summation") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const double a = ref::uniform(rng, -1.0, 1.0);
        const double nu = ref::uniform(rng, 0.05, 1.95);
        const GridFunction f = random_function(rng, a, 9);
        const GridFunction d = fractional_difference(f, FractionalOrder(nu));
        for (std::size_t k = 0; k < d.size(); ++k) {
            const double t = d.grid().point(k);
            const double want = static_cast<double>(ref::frac_diff(widen(f), a, nu, t));
            CHECK(d[k] == Approx(want).epsilon(1e-11).scale(1.0));
            CHECK(fractional_difference_at(f, FractionalOrder(nu), t) == Approx(d[k]).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("property: linearity") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const double a = ref::uniform(rng, -1.0, 1.0);
        const double nu = ref::uniform(rng, 0.05, 1.95);
        const double c = ref::uniform(rng, -3.0, 3.0);
        const GridFunction f = random_function(rng, a, 10);
        const GridFunction g = random_function(rng, a, 10);
        std::vector<double> mix(10);
        for (std::size_t k = 0; k < 10; ++k) mix[k] = f[k] + c * g[k];
        const GridFunction fg(f.grid(), mix);
        const FractionalOrder order(nu);
        const auto sf = fractional_sum(f, nu), sg = fractional_sum(g, nu), sm = fractional_sum(fg, nu);
        const auto df = fractional_difference(f, order), dg = fractional_difference(g, order),
                   dm = fractional_difference(fg, order);
        for (std::size_t k = 0; k < sm.size(); ++k) {
            const double want = sf[k] + c * sg[k];
            CHECK(std::abs(sm[k] - want) <= 1e-12 * (1.0 + std::abs(sf[k]) + std::abs(c * sg[k])));
        }
        for (std::size_t k = 0; k < dm.size(); ++k) {
            const double want = df[k] + c * dg[k];
            CHECK(std::abs(dm[k] - want) <= 1e-12 * (1.0 + std::abs(df[k]) + std::abs(c * dg[k])));
        }
    }
}

TEST_CASE("property: composition with a forward difference") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const double a = ref::uniform(rng, -1.0, 1.0);
        const double nu = ref::uniform(rng, 1.05, 1.95);
        const GridFunction f = random_function(rng, a, 10);
        const GridFunction direct = fractional_difference(f, FractionalOrder(nu));
        const GridFunction staged = forward_difference(fractional_difference(f, FractionalOrder(nu - 1.0)), 1);
        REQUIRE(direct.size() == staged.size());
        CHECK(direct.grid() == staged.grid());
        for (std::size_t k = 0; k < direct.size(); ++k) {
            CHECK(direct[k] == Approx(staged[k]).epsilon(1e-10).scale(1.0));
        }
    }
}

TEST_CASE("property: power rule") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const double a = ref::uniform(rng, -1.0, 1.0);
        const double p = ref::uniform(rng, 0.0, 2.0);
        const double nu = ref::uniform(rng, 0.1, 1.9);
        std::vector<double> v(12);
        // (t-a)^(p) sampled on N_{a+p}
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = special::falling_factorial(p + static_cast<double>(k), p);
        const GridFunction f(Grid(a + p, v.size()), v);
        const GridFunction s = fractional_sum(f, nu);
        const double ratio = special::gamma(p + 1.0) / special::gamma(p + nu + 1.0);
        for (std::size_t k = 0; k < s.size(); ++k) {
            const double t = s.grid().point(k);
            const double closed = ratio * special::falling_factorial(t - a, p + nu);
            CHECK(s[k] == Approx(closed).epsilon(1e-10).scale(1.0));
        }
    }
}

TEST_CASE("convolve_shifted") {
    const Grid g(-0.5, 3);
    const GridFunction ones(g, {1.0, 1.0, 1.0});
    const GridFunction c = convolve_shifted(ones, ones);
    CHECK(c[0] == 1.0);
    CHECK(c[1] == 2.0);
    CHECK(c[2] == 3.0);

    const GridFunction pulse(g, {1.0, 0.0, 0.0});
    const GridFunction h(g, {0.3, -2.0, 7.5});
    const GridFunction id = convolve_shifted(pulse, h);
    for (std::size_t k = 0; k < 3; ++k) CHECK(id[k] == h[k]);

    const GridFunction f(g, {2.0, 5.0, 1.0});
    CHECK(convolve_shifted(f, h)[0] == 2.0 * 0.3);
    CHECK_THROWS_AS(convolve_shifted(f, GridFunction(Grid(0.5, 3), {1.0, 1.0, 1.0})), GridMismatchError);
}
