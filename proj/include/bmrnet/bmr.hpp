#ifndef BMRNET_BMR_HPP
#define BMRNET_BMR_HPP

#include <compare>
#include <optional>
#include <vector>

#include "bmrnet/dists.hpp"
#include "bmrnet/errors.hpp"

// Bayesian model reduction for Gaussian parameters: the closed-form change in
// variational free energy when a parameter's prior is replaced by the narrow
// reduced prior N(reduced_mean, epsilon), the matching reduced posterior, and
// the SNR/SPR ranking baselines with the prune-set selection rule.

namespace bmrnet::bmr {

struct ReducedPriorConfig {
    double epsilon = 1e-16;    // variance of the reduced prior
    double reduced_mean = 0.0;
};

struct ParamId {
    int layer = 0;
    int index = 0;  // position within the layer's canonical flattening
    auto operator<=>(const ParamId&) const = default;
};

enum class Criterion { BMR_DELTA_F, SNR, SPR };

struct PruneScore {
    ParamId param_id;
    double value = 0.0;
    Criterion criterion = Criterion::BMR_DELTA_F;
};

// Change in VFE from adopting the reduced prior for one parameter:
//   delta_f = -ln Int q(theta) p~(theta) / p(theta) dtheta,
// evaluated in natural parameters with the log-precision terms kept in log
// space (lambda of the reduced prior reaches 1/epsilon = 1e16, which would
// otherwise wipe out the significant digits of the remaining terms).
// The operational rule is: prune exactly when delta_f <= 0.
inline double delta_f_gaussian(const dists::Gaussian1D& q, const dists::Gaussian1D& p,
                               const ReducedPriorConfig& reduced) {
    const double lam_q = 1.0 / q.variance;
    const double lam_p = 1.0 / p.variance;
    const double lam_r = 1.0 / reduced.epsilon;
    const double lam_s = lam_q + lam_r - lam_p;
    if (!(lam_s > 0.0)) {
        throw NonPositivePrecision(
            "delta_f_gaussian: reduced prior is wider than the original prior");
    }
    const double eta_q = q.mean * lam_q;
    const double eta_p = p.mean * lam_p;
    const double eta_r = reduced.reduced_mean * lam_r;
    const double eta_s = eta_q + eta_r - eta_p;

    const double ln_lam_q = -std::log(q.variance);
    const double ln_lam_p = -std::log(p.variance);
    const double ln_lam_r = -std::log(reduced.epsilon);
    const double ln_lam_s = ln_lam_r + std::log1p((lam_q - lam_p) / lam_r);

    const double log_ratio = (ln_lam_q - ln_lam_p) + (ln_lam_r - ln_lam_s);
    const double quad = eta_s * eta_s / lam_s - eta_q * eta_q / lam_q -
                        eta_r * eta_r / lam_r + eta_p * eta_p / lam_p;
    return -0.5 * log_ratio - 0.5 * quad;
}

// Reduced posterior q~ = normalized q * p~ / p: precision lam_q+lam_r-lam_p,
// natural mean eta_q+eta_r-eta_p.
inline dists::Gaussian1D reduced_posterior_gaussian(const dists::Gaussian1D& q,
                                                    const dists::Gaussian1D& p,
                                                    const ReducedPriorConfig& reduced) {
    const double lam_q = 1.0 / q.variance;
    const double lam_p = 1.0 / p.variance;
    const double lam_r = 1.0 / reduced.epsilon;
    const double lam_s = lam_q + lam_r - lam_p;
    if (!(lam_s > 0.0)) {
        throw NonPositivePrecision(
            "reduced_posterior_gaussian: reduced prior is wider than the original prior");
    }
    const double eta_s =
        q.mean * lam_q + reduced.reduced_mean * lam_r - p.mean * lam_p;
    return dists::from_natural(dists::NaturalGaussian{eta_s, lam_s});
}

inline double score_snr(const dists::Gaussian1D& q) {
    return std::abs(q.mean) / std::sqrt(q.variance);
}

inline double score_spr(const dists::Gaussian1D& q) {
    return std::abs(q.mean) + std::sqrt(q.variance);
}

// Selects the prune set, ordered ascending by score value with ties broken by
// (layer, index). BMR without a budget uses the built-in stopping rule
// delta_f <= 0; SNR/SPR have no stopping rule and require a budget rate, of
// which the lowest floor(budget * n) entries are returned.
std::vector<PruneScore> select_prunable(std::vector<PruneScore> scores, Criterion criterion,
                                        std::optional<double> budget = std::nullopt);

}  // namespace bmrnet::bmr

#endif  // BMRNET_BMR_HPP
