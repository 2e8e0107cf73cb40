#include "scalecast/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "scalecast/csv.hpp"
#include "scalecast/errors.hpp"

namespace scalecast {

double mae(const std::vector<double>& actual,
           const std::vector<double>& predicted) {
    if (actual.empty()) throw DataError("mae: empty input");
    if (actual.size() != predicted.size()) {
        throw DataError("mae: length mismatch");
    }
    long double acc = 0.0L;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        acc += std::abs(actual[i] - predicted[i]);
    }
    return static_cast<double>(acc / actual.size());
}

MapeResult mape(const std::vector<double>& actual,
                const std::vector<double>& predicted) {
    if (actual.empty()) throw DataError("mape: empty input");
    if (actual.size() != predicted.size()) {
        throw DataError("mape: length mismatch");
    }
    long double acc = 0.0L;
    std::size_t n_used = 0, n_excluded = 0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        if (actual[i] == 0.0) {
            ++n_excluded;
            continue;
        }
        acc += std::abs((actual[i] - predicted[i]) / actual[i]);
        ++n_used;
    }
    if (n_used == 0) throw DataError("mape: every actual value is zero");
    return {static_cast<double>(acc / n_used) * 100.0, n_excluded};
}

EvalReport evaluate(const std::vector<TrainedModel>& models,
                    const FeatureSet& test) {
    if (models.empty()) throw DataError("evaluate: no models");
    if (test.size() == 0) throw DataError("evaluate: empty test set");
    EvalReport report;
    for (const auto& model : models) {
        const auto predicted = predict_batch(model, test.x);
        const auto mp = mape(test.y, predicted);
        report.rows.push_back(EvalRow{model.kind, mae(test.y, predicted),
                                      mp.percent, model.meta.fit_wall_time_s,
                                      test.size(), mp.excluded});
    }
    return report;
}

ComparisonReport run_comparison(const Dataset& ds,
                                const std::vector<ModelKind>& kinds,
                                const std::map<ModelKind, HyperParams>& hypers,
                                double train_fraction,
                                const std::vector<std::uint64_t>& seeds) {
    if (kinds.empty()) throw DataError("run_comparison: no model kinds");
    if (seeds.empty()) throw DataError("run_comparison: no seeds");

    ComparisonReport report;
    for (const std::uint64_t seed : seeds) {
        const auto [train_ds, test_ds] = split(ds, train_fraction, seed);
        if (train_ds.records.empty() || test_ds.records.empty()) {
            throw DataError("run_comparison: split produced an empty side");
        }
        const FeatureSet train = extract(train_ds);
        const FeatureSet test = extract(test_ds);
        std::vector<TrainedModel> models;
        for (const ModelKind kind : kinds) {
            const auto it = hypers.find(kind);
            const HyperParams hp =
                it != hypers.end() ? it->second : default_hyper(kind);
            models.push_back(fit(kind, train, hp, seed));
        }
        const EvalReport er = evaluate(models, test);
        for (const auto& row : er.rows) {
            report.rows.push_back(SweepRow{seed, row});
        }
    }

    for (const ModelKind kind : kinds) {
        EvalRow lo, hi;
        bool first = true;
        for (const auto& sr : report.rows) {
            if (sr.eval.kind != kind) continue;
            if (first) {
                lo = hi = sr.eval;
                first = false;
                continue;
            }
            lo.mae = std::min(lo.mae, sr.eval.mae);
            lo.mape_percent = std::min(lo.mape_percent, sr.eval.mape_percent);
            lo.fit_wall_time_s =
                std::min(lo.fit_wall_time_s, sr.eval.fit_wall_time_s);
            hi.mae = std::max(hi.mae, sr.eval.mae);
            hi.mape_percent = std::max(hi.mape_percent, sr.eval.mape_percent);
            hi.fit_wall_time_s =
                std::max(hi.fit_wall_time_s, sr.eval.fit_wall_time_s);
        }
        report.min_summary[kind] = lo;
        report.max_summary[kind] = hi;
    }
    return report;
}

void write_comparison_csv(const ComparisonReport& report, std::ostream& out) {
    csv::write_row(out, {"seed", "model", "mae", "mape_percent",
                         "fit_time_s", "n_test", "n_mape_excluded"});
    for (const auto& sr : report.rows) {
        csv::write_row(out,
                       {std::to_string(sr.seed), to_string(sr.eval.kind),
                        csv::format_double(sr.eval.mae),
                        csv::format_double(sr.eval.mape_percent),
                        csv::format_double(sr.eval.fit_wall_time_s),
                        std::to_string(sr.eval.n_test),
                        std::to_string(sr.eval.n_mape_excluded)});
    }
    for (const auto& [kind, lo] : report.min_summary) {
        csv::write_row(out, {"min", to_string(kind),
                             csv::format_double(lo.mae),
                             csv::format_double(lo.mape_percent),
                             csv::format_double(lo.fit_wall_time_s), "", ""});
    }
    for (const auto& [kind, hi] : report.max_summary) {
        csv::write_row(out, {"max", to_string(kind),
                             csv::format_double(hi.mae),
                             csv::format_double(hi.mape_percent),
                             csv::format_double(hi.fit_wall_time_s), "", ""});
    }
}

namespace {

std::string range_text(double lo, double hi, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g - %.*g", precision, lo, precision,
                  hi);
    return buf;
}

}  // namespace

void write_comparison_text(const ComparisonReport& report, std::ostream& out) {
    char line[160];
    std::snprintf(line, sizeof line, "%-8s %-25s %-25s %s\n", "model",
                  "mae [calls/s]", "mape [%]", "fit time [s]");
    out << line;
    for (const auto& [kind, lo] : report.min_summary) {
        const EvalRow& hi = report.max_summary.at(kind);
        std::snprintf(line, sizeof line, "%-8s %-25s %-25s %s\n",
                      to_string(kind).c_str(),
                      range_text(lo.mae, hi.mae, 6).c_str(),
                      range_text(lo.mape_percent, hi.mape_percent, 6).c_str(),
                      range_text(lo.fit_wall_time_s, hi.fit_wall_time_s, 4)
                          .c_str());
        out << line;
    }
}

}  // namespace scalecast
