#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "scalecast/model.hpp"
#include "scalecast/trace.hpp"

namespace scalecast {

// (1/n) * sum |actual_i - predicted_i|, calls/s.
double mae(const std::vector<double>& actual,
           const std::vector<double>& predicted);

struct MapeResult {
    double percent = 0.0;
    std::size_t excluded = 0;  // points with actual == 0, left out of the mean
};

// Mean over points with actual != 0 of |(actual - predicted) / actual|,
// times 100. All-zero actuals are a hard error.
MapeResult mape(const std::vector<double>& actual,
                const std::vector<double>& predicted);

struct EvalRow {
    ModelKind kind = ModelKind::LinReg;
    double mae = 0.0;            // calls/s
    double mape_percent = 0.0;
    double fit_wall_time_s = 0.0;
    std::size_t n_test = 0;
    std::size_t n_mape_excluded = 0;
};

struct EvalReport {
    std::vector<EvalRow> rows;
};

// One row per model, metrics on the identical test set, fit time from
// the model's training metadata.
EvalReport evaluate(const std::vector<TrainedModel>& models,
                    const FeatureSet& test);

// Multi-seed comparison sweep: for each seed the dataset is re-split,
// every requested kind refit on the train side and scored on the test
// side. The report carries per-seed rows plus a min-max summary per kind.
struct SweepRow {
    std::uint64_t seed = 0;
    EvalRow eval;
};

struct ComparisonReport {
    std::vector<SweepRow> rows;                      // seed-major order
    std::map<ModelKind, EvalRow> min_summary;        // per-kind minima
    std::map<ModelKind, EvalRow> max_summary;        // per-kind maxima
};

ComparisonReport run_comparison(const Dataset& ds,
                                const std::vector<ModelKind>& kinds,
                                const std::map<ModelKind, HyperParams>& hypers,
                                double train_fraction,
                                const std::vector<std::uint64_t>& seeds);

// CSV: one row per (seed, model) plus per-model min/max summary rows.
void write_comparison_csv(const ComparisonReport& report, std::ostream& out);

// Aligned text table with per-model min-max ranges.
void write_comparison_text(const ComparisonReport& report, std::ostream& out);

}  // namespace scalecast
