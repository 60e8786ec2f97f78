#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "seopinion/error.hpp"
#include "seopinion/evalkit/metrics.hpp"

namespace seopinion::eval {

/// A trained classifier: true means "positive".
template <typename Example>
using Predictor = std::function<bool(const Example&)>;

/// Trains on a fold's training part and returns its predictor.
template <typename Example>
using ClassifierFactory = std::function<Predictor<Example>(const std::vector<Example>&)>;

/// Repeated stratified k-fold cross-validation. Each repetition draws its
/// own folds from one seeded generator; the report averages the k * reps
/// per-fold metrics. Throws TooFewExamples unless 2 <= k <= data.size().
template <typename Example, typename LabelOf>
MetricReport kfold_cv(const std::vector<Example>& data, LabelOf label_of, int k, int reps, std::uint64_t seed,
                      const ClassifierFactory<Example>& factory) {
    if (k < 2) throw TooFewExamples("k-fold cross-validation needs k >= 2");
    if (reps < 1) throw ValidationError("cross-validation needs at least one repetition");
    if (data.size() < static_cast<std::size_t>(k))
        throw TooFewExamples("k = " + std::to_string(k) + " exceeds the " + std::to_string(data.size()) + " examples");
    std::vector<bool> labels;
    labels.reserve(data.size());
    for (const auto& ex : data) labels.push_back(static_cast<bool>(label_of(ex)));

    std::mt19937_64 rng(seed);
    std::vector<MetricReport> reports;
    for (int rep = 0; rep < reps; ++rep) {
        auto folds = stratified_folds(labels, k, rng);
        for (int f = 0; f < k; ++f) {
            std::vector<char> in_test(data.size(), 0);
            for (auto i : folds[f]) in_test[i] = 1;
            std::vector<Example> train;
            for (std::size_t i = 0; i < data.size(); ++i)
                if (!in_test[i]) train.push_back(data[i]);
            auto predict = factory(train);
            ConfusionMatrix cm;
            for (auto i : folds[f]) {
                bool p = predict(data[i]);
                if (labels[i])
                    (p ? cm.tp : cm.fn) += 1;
                else
                    (p ? cm.fp : cm.tn) += 1;
            }
            reports.push_back(metrics(cm));
        }
    }
    return average(reports, k, reps);
}

/// n_subsets balanced datasets: every minority example plus an equally
/// sized seeded sample of the majority class, shuffled. Throws
/// DegenerateData when a class is missing.
template <typename Example, typename LabelOf>
std::vector<std::vector<Example>> balanced_subsample(const std::vector<Example>& data, LabelOf label_of,
                                                     std::uint64_t seed, int n_subsets) {
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < data.size(); ++i) (label_of(data[i]) ? pos : neg).push_back(i);
    if (pos.empty() || neg.empty()) throw DegenerateData("balanced subsampling needs both classes");
    const auto& minority = pos.size() <= neg.size() ? pos : neg;
    const auto& majority = pos.size() <= neg.size() ? neg : pos;

    std::mt19937_64 rng(seed);
    std::vector<std::vector<Example>> out;
    for (int s = 0; s < n_subsets; ++s) {
        auto pool = majority;
        seeded_shuffle(pool, rng);
        pool.resize(minority.size());
        std::vector<std::size_t> idx = minority;
        idx.insert(idx.end(), pool.begin(), pool.end());
        seeded_shuffle(idx, rng);
        std::vector<Example> subset;
        subset.reserve(idx.size());
        for (auto i : idx) subset.push_back(data[i]);
        out.push_back(std::move(subset));
    }
    return out;
}

}  // namespace seopinion::eval
