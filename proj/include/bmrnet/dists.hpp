#ifndef BMRNET_DISTS_HPP
#define BMRNET_DISTS_HPP

#include "bmrnet/ad.hpp"
#include "bmrnet/errors.hpp"
#include "bmrnet/num.hpp"

// Scalar distribution mathematics: Gaussian/Gamma KLs, moments, natural
// parameters, and the ReLU moment rules used by moment propagation. The *_t
// cores are templated on the scalar type so the same formulas serve both
// plain evaluation (double) and the reverse-mode tape (ad::Var).

namespace bmrnet::dists {

struct Gaussian1D {
    double mean = 0.0;
    double variance = 1.0;
};

struct Gamma1D {
    double shape = 1.0;  // alpha
    double rate = 1.0;   // beta
};

struct NaturalGaussian {
    double eta = 0.0;     // mean / variance
    double lambda = 1.0;  // 1 / variance
};

// KL[N(mu_q, var_q) || N(mu_p, var_p)], in nats.
template <class R>
R gaussian_kl_t(const R& mu_q, const R& var_q, double mu_p, double var_p) {
    const R d = mu_q - mu_p;
    return 0.5 * (var_q / var_p + d * d / var_p - 1.0 + std::log(var_p) - log(var_q));
}

// KL[Gamma(a_q, b_q) || Gamma(a_p, b_p)], in nats.
template <class R>
R gamma_kl_t(const R& a_q, const R& b_q, double a_p, double b_p) {
    return (a_q - a_p) * digamma(a_q) - lgamma(a_q) + std::lgamma(a_p) +
           a_p * (log(b_q) - std::log(b_p)) + a_q * (b_p - b_q) / b_q;
}

template <class R>
struct GammaMomentsT {
    R mean;      // E[gamma]
    R mean_log;  // E[ln gamma]
};

template <class R>
GammaMomentsT<R> gamma_moments_t(const R& shape, const R& rate) {
    return GammaMomentsT<R>{shape / rate, digamma(shape) - log(rate)};
}

template <class R>
struct ReluMomentsT {
    R mean;           // E[max(z, 0)]
    R second_moment;  // E[max(z, 0)^2]
};

// Moments of max(z, 0) for z ~ N(pre_mean, pre_var). The degenerate pre_var
// = 0 case is the deterministic ReLU so that pruned inputs never produce NaN.
template <class R>
ReluMomentsT<R> relu_moments_t(const R& pre_mean, const R& pre_var) {
    if (value_of(pre_var) <= 0.0) {
        const R m = relu(pre_mean);
        return ReluMomentsT<R>{m, m * m};
    }
    const R s = sqrt(pre_var);
    const R z = pre_mean / s;
    const R cdf = normal_cdf(z);
    const R pdf = normal_pdf(z);
    const R mean = pre_mean * cdf + s * pdf;
    const R second = (pre_mean * pre_mean + pre_var) * cdf + pre_mean * s * pdf;
    return ReluMomentsT<R>{mean, second};
}

inline double gaussian_kl(const Gaussian1D& q, const Gaussian1D& p) {
    return gaussian_kl_t<double>(q.mean, q.variance, p.mean, p.variance);
}

inline double gamma_kl(const Gamma1D& q, const Gamma1D& p) {
    return gamma_kl_t<double>(q.shape, q.rate, p.shape, p.rate);
}

struct GammaMoments {
    double mean;
    double mean_log;
};

inline GammaMoments gamma_moments(const Gamma1D& g) {
    const auto m = gamma_moments_t<double>(g.shape, g.rate);
    return GammaMoments{m.mean, m.mean_log};
}

inline NaturalGaussian to_natural(const Gaussian1D& g) {
    const double lambda = 1.0 / g.variance;
    return NaturalGaussian{g.mean * lambda, lambda};
}

inline Gaussian1D from_natural(const NaturalGaussian& n) {
    if (!(n.lambda > 0.0)) {
        throw NonPositivePrecision("from_natural: lambda must be > 0");
    }
    return Gaussian1D{n.eta / n.lambda, 1.0 / n.lambda};
}

struct ReluMoments {
    double mean;
    double second_moment;
};

inline ReluMoments relu_moments(double pre_mean, double pre_var) {
    const auto m = relu_moments_t<double>(pre_mean, pre_var);
    return ReluMoments{m.mean, m.second_moment};
}

}  // namespace bmrnet::dists

#endif  // BMRNET_DISTS_HPP
