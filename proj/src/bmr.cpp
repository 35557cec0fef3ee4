#include "bmrnet/bmr.hpp"

#include <algorithm>
#include <cmath>

namespace bmrnet::bmr {

std::vector<PruneScore> select_prunable(std::vector<PruneScore> scores, Criterion criterion,
                                        std::optional<double> budget) {
    for (const auto& s : scores) {
        if (s.criterion != criterion) {
            throw Error("select_prunable: score list mixes criteria");
        }
    }
    std::sort(scores.begin(), scores.end(), [](const PruneScore& a, const PruneScore& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.param_id < b.param_id;
    });

    size_t take = 0;
    if (budget.has_value()) {
        if (!(*budget >= 0.0 && *budget <= 1.0)) {
            throw Error("select_prunable: budget rate must lie in [0, 1]");
        }
        take = static_cast<size_t>(std::floor(*budget * static_cast<double>(scores.size())));
    } else if (criterion == Criterion::BMR_DELTA_F) {
        while (take < scores.size() && scores[take].value <= 0.0) ++take;
    } else {
        throw MissingBudget("select_prunable: SNR/SPR ranking needs a budget rate");
    }
    scores.resize(take);
    return scores;
}

}  // namespace bmrnet::bmr
