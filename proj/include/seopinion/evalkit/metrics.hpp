#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

namespace seopinion::eval {

/// Binary confusion matrix; "positive" is the class of interest.
struct ConfusionMatrix {
    std::int64_t tp = 0;
    std::int64_t fn = 0;
    std::int64_t fp = 0;
    std::int64_t tn = 0;

    [[nodiscard]] std::int64_t total() const { return tp + fn + fp + tn; }
    ConfusionMatrix& operator+=(const ConfusionMatrix& o);
    bool operator==(const ConfusionMatrix&) const = default;
};

ConfusionMatrix confusion(const std::vector<bool>& gold, const std::vector<bool>& predicted);

struct MetricReport {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double accuracy = 0.0;
    int n_folds = 1;
    int n_reps = 1;
    // Number of evaluations whose precision / recall denominator was 0
    // (the value was taken as 0).
    int precision_undefined = 0;
    int recall_undefined = 0;

    bool operator==(const MetricReport&) const = default;
};

/// P = tp/(tp+fp), R = tp/(tp+fn), F = 2PR/(P+R), Acc = (tp+tn)/total.
/// Zero denominators give 0 and set the matching *_undefined count to 1.
/// Throws ValidationError on an empty or negative matrix.
MetricReport metrics(const ConfusionMatrix& cm);

/// Element-wise mean of per-fold reports.
MetricReport average(const std::vector<MetricReport>& reports, int n_folds, int n_reps);

nlohmann::ordered_json to_json(const MetricReport& r);

/// Fisher-Yates driven by mt19937_64 so results do not depend on the
/// standard library's distribution implementations.
template <typename T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        auto j = static_cast<std::size_t>(rng() % i);
        std::swap(v[i - 1], v[j]);
    }
}

/// Deals the indices of each class round-robin over k folds (negatives
/// continue where positives stopped), after a seeded shuffle within each
/// class. Returns fold -> example indices, each sorted.
std::vector<std::vector<std::size_t>> stratified_folds(const std::vector<bool>& labels, int k, std::mt19937_64& rng);

}  // namespace seopinion::eval
