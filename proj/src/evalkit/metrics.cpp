#include "seopinion/evalkit/metrics.hpp"

#include <algorithm>

#include "seopinion/error.hpp"

namespace seopinion::eval {

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& o) {
    tp += o.tp;
    fn += o.fn;
    fp += o.fp;
    tn += o.tn;
    return *this;
}

ConfusionMatrix confusion(const std::vector<bool>& gold, const std::vector<bool>& predicted) {
    if (gold.size() != predicted.size()) throw ValidationError("gold and predicted label lists differ in length");
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < gold.size(); ++i) {
        if (gold[i])
            (predicted[i] ? cm.tp : cm.fn) += 1;
        else
            (predicted[i] ? cm.fp : cm.tn) += 1;
    }
    return cm;
}

MetricReport metrics(const ConfusionMatrix& cm) {
    if (cm.tp < 0 || cm.fn < 0 || cm.fp < 0 || cm.tn < 0) throw ValidationError("negative confusion-matrix cell");
    if (cm.total() == 0) throw ValidationError("metrics of an empty confusion matrix");
    MetricReport r;
    auto ratio = [](std::int64_t num, std::int64_t den, int& undefined) {
        if (den == 0) {
            undefined = 1;
            return 0.0;
        }
        return static_cast<double>(num) / static_cast<double>(den);
    };
    r.precision = ratio(cm.tp, cm.tp + cm.fp, r.precision_undefined);
    r.recall = ratio(cm.tp, cm.tp + cm.fn, r.recall_undefined);
    r.f1 = r.precision + r.recall > 0 ? 2 * r.precision * r.recall / (r.precision + r.recall) : 0.0;
    r.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
    return r;
}

MetricReport average(const std::vector<MetricReport>& reports, int n_folds, int n_reps) {
    MetricReport out;
    out.n_folds = n_folds;
    out.n_reps = n_reps;
    if (reports.empty()) return out;
    for (const auto& r : reports) {
        out.precision += r.precision;
        out.recall += r.recall;
        out.f1 += r.f1;
        out.accuracy += r.accuracy;
        out.precision_undefined += r.precision_undefined;
        out.recall_undefined += r.recall_undefined;
    }
    auto n = static_cast<double>(reports.size());
    out.precision /= n;
    out.recall /= n;
    out.f1 /= n;
    out.accuracy /= n;
    return out;
}

nlohmann::ordered_json to_json(const MetricReport& r) {
    return {{"precision", r.precision},
            {"recall", r.recall},
            {"f1", r.f1},
            {"accuracy", r.accuracy},
            {"n_folds", r.n_folds},
            {"n_reps", r.n_reps},
            {"precision_undefined", r.precision_undefined},
            {"recall_undefined", r.recall_undefined}};
}

std::vector<std::vector<std::size_t>> stratified_folds(const std::vector<bool>& labels, int k, std::mt19937_64& rng) {
    if (k < 1) throw ValidationError("fold count must be positive");
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < labels.size(); ++i) (labels[i] ? pos : neg).push_back(i);
    seeded_shuffle(pos, rng);
    seeded_shuffle(neg, rng);
    std::vector<std::vector<std::size_t>> folds(static_cast<std::size_t>(k));
    std::size_t slot = 0;
    for (auto i : pos) folds[slot++ % folds.size()].push_back(i);
    for (auto i : neg) folds[slot++ % folds.size()].push_back(i);
    for (auto& f : folds) std::sort(f.begin(), f.end());
    return folds;
}

}  // namespace seopinion::eval
