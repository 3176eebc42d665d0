#include "fracgreen/special.hpp"

#include "fracgreen/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

extern "C" {
#include <quadmath.h>
}

namespace fracgreen::special {

namespace {

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// log Gamma(x) for x >= 0.5.
double lanczos_log_gamma(double x) {
    const double z = x - 1.0;
    double series = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
        series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

// Gamma(x) for x >= 0.5, evaluated without going through log so that the
// result keeps full relative accuracy on moderate arguments.
double lanczos_gamma(double x) {
    if (x > 140.0) {
        return std::exp(lanczos_log_gamma(x));
    }
    const double z = x - 1.0;
    double series = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
        series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    // t^(z+0.5) split in two halves to delay overflow.
    const double half = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * series;
}

[[noreturn]] void throw_pole(double x) {
    throw PoleError("Gamma pole at x = " + std::to_string(x));
}

double factorial(long n) {
    double r = 1.0;
    for (long k = 2; k <= n; ++k) {
        r *= static_cast<double>(k);
    }
    return r;
}

}  // namespace

double SignedLogValue::value() const {
    if (sign == 0) {
        return 0.0;
    }
    return static_cast<double>(sign) * std::exp(log_magnitude);
}

bool is_nonpositive_integer(double x, double snap) {
    const double r = std::round(x);
    return r <= 0.0 && std::abs(x - r) <= snap;
}

double sin_pi(double x) {
    const double n = std::round(x);
    const double r = x - n;  // r in [-0.5, 0.5]
    if (r == 0.0) {
        return 0.0;
    }
    const double s = std::sin(std::numbers::pi * r);
    return (static_cast<long long>(n) % 2 == 0) ? s : -s;
}

double gamma(double x) {
    if (is_nonpositive_integer(x)) {
        throw_pole(x);
    }
    if (x >= 0.5) {
        return lanczos_gamma(x);
    }
    return std::numbers::pi / (sin_pi(x) * lanczos_gamma(1.0 - x));
}

SignedLogValue log_gamma_signed(double x) {
    if (is_nonpositive_integer(x)) {
        throw_pole(x);
    }
    if (x >= 0.5) {
        if (x <= 30.0) {
            return {std::log(lanczos_gamma(x)), 1};
        }
        return {lanczos_log_gamma(x), 1};
    }
    const double s = sin_pi(x);
    const double log_mag = std::log(std::numbers::pi) - std::log(std::abs(s)) - lanczos_log_gamma(1.0 - x);
    return {log_mag, s > 0.0 ? 1 : -1};
}

double falling_factorial(double t, double upsilon) {
    const double num = t + 1.0;
    const double den = t + 1.0 - upsilon;
    const bool num_pole = is_nonpositive_integer(num);
    const bool den_pole = is_nonpositive_integer(den);
    if (den_pole && !num_pole) {
        return 0.0;
    }
    if (num_pole && den_pole) {
        const long p = -std::lround(num);
        const long q = -std::lround(den);
        const double sign = ((q - p) % 2 == 0) ? 1.0 : -1.0;
        if (q >= p) {
            double r = 1.0;
            for (long k = p + 1; k <= q; ++k) {
                r *= static_cast<double>(k);
            }
            return sign * r;
        }
        return sign * factorial(q) / factorial(p);
    }
    if (num_pole) {
        throw PoleError("falling factorial (" + std::to_string(t) + ")^(" + std::to_string(upsilon) +
                        ") is infinite: t+1 is a Gamma pole");
    }
    if (upsilon == 0.0) {
        return 1.0;
    }
    if (std::abs(num) < 100.0 && std::abs(den) < 100.0) {
        return gamma(num) / gamma(den);
    }
    const SignedLogValue a = log_gamma_signed(num);
    const SignedLogValue b = log_gamma_signed(den);
    return static_cast<double>(a.sign * b.sign) * std::exp(a.log_magnitude - b.log_magnitude);
}

namespace wide {

bool is_nonpositive_integer(real x, double snap) {
    const real r = roundq(x);
    return r <= 0 && fabsq(x - r) <= static_cast<real>(snap);
}

SignedLog log_gamma_signed(real x) {
    if (is_nonpositive_integer(x)) {
        throw_pole(to_double(x));
    }
    if (x > 0) {
        return {lgammaq(x), 1};
    }
    // Gamma alternates sign between consecutive negative integers and is
    // negative on (-1, 0).
    const long long fl = static_cast<long long>(floorq(x));
    return {lgammaq(x), (fl % 2 == 0) ? 1 : -1};
}

real exp(real x) { return expq(x); }
real log(real x) { return logq(x); }
real abs(real x) { return fabsq(x); }
double to_double(real x) { return static_cast<double>(x); }

}  // namespace wide

}  // namespace fracgreen::special
