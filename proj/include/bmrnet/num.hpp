#ifndef BMRNET_NUM_HPP
#define BMRNET_NUM_HPP

#include <cmath>

// Scalar special functions shared by the distribution math and the autodiff
// primitives. digamma/trigamma use the ascending recurrence into the
// asymptotic regime; accurate to better than 1e-13 for arguments >= 1e-3.

namespace bmrnet::num {

inline constexpr double kLn2Pi = 1.8378770664093454835606594728112;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267793994605993438;

inline double digamma(double x) {
    double result = 0.0;
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    // Asymptotic series with Bernoulli-number coefficients.
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    result += std::log(x) - 0.5 * inv;
    result -= inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 -
              inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0 -
              inv2 * (1.0 / 12.0)))))));
    return result;
}

inline double trigamma(double x) {
    double result = 0.0;
    while (x < 10.0) {
        result += 1.0 / (x * x);
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    result += inv * (1.0 + 0.5 * inv + inv2 * (1.0 / 6.0 - inv2 * (1.0 / 30.0 -
              inv2 * (1.0 / 42.0 - inv2 * (1.0 / 30.0 - inv2 * (5.0 / 66.0 -
              inv2 * (691.0 / 2730.0)))))));
    return result;
}

inline double sigmoid(double x) {
    if (x >= 0.0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

inline double softplus(double x) {
    if (x > 0.0) return x + std::log1p(std::exp(-x));
    return std::log1p(std::exp(x));
}

// Inverse of softplus; softplus(softplus_inv(y)) == y for y > 0.
inline double softplus_inv(double y) {
    if (y > 30.0) return y;
    return std::log(std::expm1(y));
}

inline double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x * 0.70710678118654752440084436210485); }

inline double log_normal_density(double x, double mean, double variance) {
    const double d = x - mean;
    return -0.5 * (kLn2Pi + std::log(variance) + d * d / variance);
}

}  // namespace bmrnet::num

#endif  // BMRNET_NUM_HPP
