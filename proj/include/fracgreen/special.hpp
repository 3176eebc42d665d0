#pragma once

// Gamma, log-gamma and the generalized falling factorial t^(v) = G(t+1)/G(t+1-v).
//
// Pole convention: if t+1-v is a pole of Gamma and t+1 is not, t^(v) = 0.
// When both are poles (only possible for integer v) the limit
// (-1)^(q-p) q!/p! is returned, with t+1 = -p and t+1-v = -q.

namespace fracgreen::special {

// Arguments within this distance of a nonpositive integer are treated as poles.
inline constexpr double kIntegerSnap = 1e-9;

struct SignedLogValue {
    double log_magnitude = 0.0;  // log|x|; ignored when sign == 0
    int sign = 0;                // -1, 0 or +1

    double value() const;
};

bool is_nonpositive_integer(double x, double snap = kIntegerSnap);

// sin(pi x) with argument reduction, exact zeros at integers.
double sin_pi(double x);

double gamma(double x);
SignedLogValue log_gamma_signed(double x);
double falling_factorial(double t, double upsilon);

// Quad-precision counterparts. The Mittag-Leffler series and the Green's
// kernel cancel catastrophically in double for |alpha| close to 1.
namespace wide {

using real = __float128;

struct SignedLog {
    real log_magnitude = 0;
    int sign = 0;
};

bool is_nonpositive_integer(real x, double snap = kIntegerSnap);
SignedLog log_gamma_signed(real x);
real exp(real x);
real log(real x);
real abs(real x);
double to_double(real x);

}  // namespace wide

}  // namespace fracgreen::special
