#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "seopinion/error.hpp"
#include "seopinion/evalkit/cross_validation.hpp"
#include "seopinion/evalkit/metrics.hpp"

using namespace seopinion;
using namespace seopinion::eval;

namespace {

struct Ex {
    double x;
    bool y;
    bool operator==(const Ex&) const = default;
};

bool label_of(const Ex& e) { return e.y; }

// Learns a midpoint threshold between the class means.
Predictor<Ex> threshold_factory(const std::vector<Ex>& train) {
    double sp = 0, sn = 0;
    int np = 0, nn = 0;
    for (const auto& e : train) (e.y ? (sp += e.x, ++np) : (sn += e.x, ++nn));
    double cut = (sp / std::max(np, 1) + sn / std::max(nn, 1)) / 2;
    return [cut](const Ex& e) { return e.x > cut; };
}

std::vector<Ex> separable(int n_pos, int n_neg) {
    std::vector<Ex> d;
    for (int i = 0; i < n_pos; ++i) d.push_back({1.0 + i * 0.01, true});
    for (int i = 0; i < n_neg; ++i) d.push_back({-1.0 - i * 0.01, false});
    return d;
}

}  // namespace

TEST_SUITE("evalkit") {

TEST_CASE("hand case") {
    auto r = metrics({6, 2, 3, 9});
    CHECK(r.precision == doctest::Approx(0.6667).epsilon(1e-4));
    CHECK(r.recall == doctest::Approx(0.75).epsilon(1e-4));
    CHECK(r.f1 == doctest::Approx(0.7059).epsilon(1e-4));
    CHECK(r.accuracy == doctest::Approx(0.75).epsilon(1e-4));
    CHECK(r.precision_undefined == 0);
}

TEST_CASE("perfect and degenerate matrices") {
    auto p = metrics({5, 0, 0, 7});
    CHECK(p.precision == 1.0);
    CHECK(p.recall == 1.0);
    CHECK(p.f1 == 1.0);
    CHECK(p.accuracy == 1.0);

    auto d = metrics({0, 4, 0, 3});
    CHECK(d.precision == 0.0);
    CHECK(d.precision_undefined == 1);
    CHECK(d.f1 == 0.0);
    CHECK(d.recall_undefined == 0);

    auto no_pos = metrics({0, 0, 2, 3});
    CHECK(no_pos.recall_undefined == 1);

    CHECK_THROWS_AS(metrics({}), ValidationError);
    CHECK_THROWS_AS(metrics({-1, 2, 0, 0}), ValidationError);
}

TEST_CASE("confusion from label lists") {
    auto cm = confusion({true, true, false, false, true}, {true, false, true, false, true});
    CHECK(cm == ConfusionMatrix{2, 1, 1, 1});
    CHECK_THROWS_AS(confusion({true}, {}), ValidationError);
    ConfusionMatrix sum{1, 2, 3, 4};
    sum += cm;
    CHECK(sum.total() == 15);
}

TEST_CASE("average") {
    auto a = average({metrics({1, 0, 0, 1}), metrics({0, 1, 0, 1})}, 2, 1);
    CHECK(a.accuracy == doctest::Approx(0.75));
    CHECK(a.precision_undefined == 1);
    CHECK(a.n_folds == 2);
    CHECK(to_json(a)["accuracy"].get<double>() == doctest::Approx(0.75));
}

TEST_CASE("cross-validation on a learnable fixture") {
    auto data = separable(10, 10);
    auto r = kfold_cv<Ex>(data, label_of, 10, 2, 42, threshold_factory);
    CHECK(r.accuracy == 1.0);
    CHECK(r.f1 == 1.0);
    CHECK(r.n_folds == 10);
    CHECK(r.n_reps == 2);
}

TEST_CASE("cross-validation preconditions and determinism") {
    auto data = separable(3, 3);
    CHECK_THROWS_AS(kfold_cv<Ex>(data, label_of, 7, 1, 1, threshold_factory), TooFewExamples);
    CHECK_THROWS_AS(kfold_cv<Ex>(data, label_of, 1, 1, 1, threshold_factory), TooFewExamples);
    CHECK_THROWS_AS(kfold_cv<Ex>(data, label_of, 2, 0, 1, threshold_factory), ValidationError);

    // A noisy fixture so the report depends on the folds.
    std::vector<Ex> noisy;
    for (int i = 0; i < 40; ++i) noisy.push_back({std::sin(i * 1.7), i % 3 == 0});
    auto a = kfold_cv<Ex>(noisy, label_of, 5, 3, 9, threshold_factory);
    auto b = kfold_cv<Ex>(noisy, label_of, 5, 3, 9, threshold_factory);
    CHECK(a == b);
}

TEST_CASE("stratified folds") {
    std::vector<bool> labels;
    for (int i = 0; i < 23; ++i) labels.push_back(i < 9);
    std::mt19937_64 rng(3);
    auto folds = stratified_folds(labels, 5, rng);
    REQUIRE(folds.size() == 5);
    std::vector<int> seen(labels.size(), 0);
    for (const auto& f : folds) {
        CHECK(std::is_sorted(f.begin(), f.end()));
        int pos = 0;
        for (auto i : f) {
            ++seen[i];
            pos += labels[i];
        }
        double expected = 9.0 * f.size() / 23.0;
        CHECK(std::abs(pos - expected) <= 1.0 + 1e-9);
    }
    for (int s : seen) CHECK(s == 1);
}

TEST_CASE("balanced subsampling") {
    std::vector<Ex> data;
    for (int i = 0; i < 62; ++i) data.push_back({double(i), true});
    for (int i = 0; i < 38; ++i) data.push_back({-double(i) - 1, false});
    auto subsets = balanced_subsample<Ex>(data, label_of, 5, 4);
    REQUIRE(subsets.size() == 4);
    for (const auto& s : subsets) {
        CHECK(s.size() == 76);
        CHECK(std::count_if(s.begin(), s.end(), label_of) == 38);
    }
    CHECK(subsets[0] != subsets[1]);

    auto even = separable(5, 5);
    for (auto s : balanced_subsample<Ex>(even, label_of, 1, 3)) {
        auto sorted = even;
        auto key = [](const Ex& a, const Ex& b) { return a.x < b.x; };
        std::sort(s.begin(), s.end(), key);
        std::sort(sorted.begin(), sorted.end(), key);
        CHECK(s == sorted);
    }
    CHECK_THROWS_AS(balanced_subsample<Ex>(separable(4, 0), label_of, 1, 1), DegenerateData);
}

}  // TEST_SUITE
