#include "fracgreen/rtransform.hpp"
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

}  // namespace

TEST_CASE("transform of zero") {
    const SequenceGenerator zero{0.5, [](double) { return 0.0; }};
    CHECK(r_transform(zero, 1.0) == 0.0);
}

TEST_CASE("geometric series") {
    // sum_{t>=0} (s+1)^-(t+1) = 1/s
    const SequenceGenerator one{0.0, [](double) { return 1.0; }};
    for (double s : {0.25, 1.0, 3.0}) {
        CHECK(r_transform(one, s) == Approx(1.0 / s).epsilon(1e-12));
    }
}

TEST_CASE("transform of t^(v-1)") {
    const double v = 1.5;
    const SequenceGenerator power{v - 1.0, [v](double t) { return special::falling_factorial(t, v - 1.0); }};
    CHECK(std::abs(r_transform(power, 1.0) - 0.886226925452758) <= 1e-6);
    CHECK(std::abs(r_transform(power, 2.0) - special::gamma(1.5) / std::pow(2.0, 1.5)) <= 1e-6);
    CHECK(std::abs(r_transform(power, 2.0) - 0.31333) <= 1e-5);
    CHECK(std::abs(r_transform(power, 0.5) - special::gamma(1.5) / std::pow(0.5, 1.5)) <= 1e-6);
}

TEST_CASE("finitely supported input is an exact finite sum") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const double a = ref::uniform(rng, -1.0, 1.0);
        const GridFunction f = random_function(rng, a, 7);
        const double s = ref::uniform(rng, 0.2, 3.0);
        ref::ld want = 0.0L;
        for (std::size_t k = 0; k < f.size(); ++k) {
            want += std::pow(static_cast<ref::ld>(s) + 1.0L, -(static_cast<ref::ld>(a + k) + 1.0L)) * f[k];
        }
        CHECK(r_transform(SequenceGenerator::from(f), s) == Approx(static_cast<double>(want)).epsilon(1e-14));
    }
}

TEST_CASE("property: linearity") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 10; ++trial) {
        const GridFunction f = random_function(rng, 0.5, 6);
        const GridFunction g = random_function(rng, 0.5, 6);
        const double c = ref::uniform(rng, -2.0, 2.0);
        const double s = ref::uniform(rng, 0.2, 3.0);
        const SequenceGenerator mix{0.5, [&](double t) {
                                        return SequenceGenerator::from(f).term(t) + c * SequenceGenerator::from(g).term(t);
                                    }};
        const double lhs = r_transform(mix, s);
        const double rhs = r_transform(SequenceGenerator::from(f), s) + c * r_transform(SequenceGenerator::from(g), s);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("convolution lemma") {
    const Grid g(-0.5, 1);
    const GridFunction pulse(g, {1.0});
    CHECK(verify_convolution_lemma(pulse, pulse, 1.0) <= 1e-12);
    const GridFunction zero = GridFunction::zeros(Grid(-0.5, 5));
    std::mt19937_64 rng(12);
    CHECK(verify_convolution_lemma(zero, random_function(rng, -0.5, 5), 0.7) == 0.0);
    for (int trial = 0; trial < 10; ++trial) {
        const double offset = ref::uniform(rng, -0.95, -0.05);
        const GridFunction f = random_function(rng, offset, 5);
        const GridFunction h = random_function(rng, offset, 5);
        CHECK(verify_convolution_lemma(f, h, 0.7) <= 1e-10);
        CHECK(verify_convolution_lemma(f, h, ref::uniform(rng, 0.2, 3.0)) <= 1e-10);
    }
}

TEST_CASE("difference lemma") {
    CHECK(verify_difference_lemma(GridFunction::zeros(Grid(-0.5, 4)), 0.5, 1, 1.0) == 0.0);
    const GridFunction pulse(Grid(-0.5, 1), {1.0});
    CHECK(verify_difference_lemma(pulse, 0.5, 1, 1.0) <= 1e-10);
    std::mt19937_64 rng(13);
    CHECK(verify_difference_lemma(random_function(rng, -0.5, 4), 1.5, 2, 1.3) <= 1e-10);
    for (int trial = 0; trial < 10; ++trial) {
        const double mu = ref::uniform(rng, 0.05, 1.95);
        const int m = mu < 1.0 ? 1 : 2;
        const GridFunction f = random_function(rng, mu - m, 4);
        CHECK(verify_difference_lemma(f, mu, m, ref::uniform(rng, 0.3, 3.0)) <= 1e-10);
    }
}
