#include "scalecast/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "scalecast/csv.hpp"
#include "scalecast/errors.hpp"
#include "scalecast/eval.hpp"
#include "scalecast/rng.hpp"

namespace scalecast {

namespace {

int as_int(const std::string& name, double value) {
    const double r = std::nearbyint(value);
    if (r != value) {
        throw ModelError("tuning: hyperparameter '" + name +
                         "' requires an integer value");
    }
    return static_cast<int>(r);
}

FeatureSet gather(const FeatureSet& fs, const std::vector<std::size_t>& idx,
                  std::size_t begin, std::size_t end) {
    FeatureSet out;
    out.x.reserve(end - begin);
    out.y.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
        out.x.push_back(fs.x[idx[i]]);
        out.y.push_back(fs.y[idx[i]]);
    }
    return out;
}

double holdout_score(const FeatureSet& train, const FeatureSet& val,
                     ModelKind kind, const HyperParams& hyper,
                     std::uint64_t seed, TuneEntry& entry) {
    const TrainedModel model = fit(kind, train, hyper, seed);
    entry.fit_wall_time_s += model.meta.fit_wall_time_s;
    entry.loss_curve = model.meta.loss_curve;
    return mae(val.y, predict_batch(model, val.x));
}

}  // namespace

HyperParams apply_param(HyperParams hyper, const std::string& name,
                        double value) {
    if (auto* mlp = std::get_if<MlpHyperParams>(&hyper)) {
        if (name == "hidden_neurons") mlp->hidden_neurons = as_int(name, value);
        else if (name == "epochs") mlp->epochs = as_int(name, value);
        else if (name == "learning_rate") mlp->learning_rate = value;
        else if (name == "batch_size") mlp->batch_size = as_int(name, value);
        else if (name == "init_scale") mlp->init_scale = value;
        else if (name == "use_relu") mlp->use_relu = as_int(name, value) != 0;
        else throw ModelError("tuning: unknown MLP hyperparameter '" + name + "'");
        return hyper;
    }
    if (auto* gbr = std::get_if<GbrHyperParams>(&hyper)) {
        if (name == "n_estimators") gbr->n_estimators = as_int(name, value);
        else if (name == "learning_rate") gbr->learning_rate = value;
        else if (name == "subsample") gbr->subsample = value;
        else if (name == "max_depth") gbr->max_depth = as_int(name, value);
        else if (name == "min_samples_split") gbr->min_samples_split = as_int(name, value);
        else if (name == "min_samples_leaf") gbr->min_samples_leaf = as_int(name, value);
        else throw ModelError("tuning: unknown GBR hyperparameter '" + name + "'");
        return hyper;
    }
    throw ModelError("tuning: LR has no tunable hyperparameter '" + name + "'");
}

TuneResult grid_search(const FeatureSet& fs, const ParamGrid& grid,
                       double val_fraction, std::uint64_t seed) {
    const std::size_t n = fs.size();
    if (n < 2) throw DataError("grid_search: need at least 2 points");
    for (const auto& [name, values] : grid.axes) {
        if (values.empty()) {
            throw DataError("grid_search: axis '" + name + "' has no values");
        }
    }

    Rng rng(seed);
    const auto idx = shuffled_indices(n, rng);

    // Hold-out split (default) or k-fold partitions over the same shuffle.
    std::vector<std::pair<FeatureSet, FeatureSet>> splits;  // (train, val)
    if (grid.k_folds >= 2) {
        const auto k = static_cast<std::size_t>(grid.k_folds);
        if (k > n) throw DataError("grid_search: more folds than points");
        for (std::size_t f = 0; f < k; ++f) {
            const std::size_t lo = f * n / k, hi = (f + 1) * n / k;
            FeatureSet train;
            for (std::size_t i = 0; i < n; ++i) {
                if (i >= lo && i < hi) continue;
                train.x.push_back(fs.x[idx[i]]);
                train.y.push_back(fs.y[idx[i]]);
            }
            splits.emplace_back(std::move(train), gather(fs, idx, lo, hi));
        }
    } else {
        const auto n_val = static_cast<std::size_t>(
            std::llround(val_fraction * static_cast<double>(n)));
        if (n_val == 0 || n_val >= n) {
            throw DataError("grid_search: validation split is empty");
        }
        splits.emplace_back(gather(fs, idx, n_val, n),
                            gather(fs, idx, 0, n_val));
    }

    // Cartesian product in grid order, first axis slowest.
    std::size_t total = 1;
    for (const auto& axis : grid.axes) total *= axis.second.size();

    TuneResult result;
    result.table.reserve(total);
    std::vector<std::size_t> counter(grid.axes.size(), 0);
    for (std::size_t ci = 0; ci < total; ++ci) {
        TuneEntry entry;
        entry.hyper = default_hyper(grid.kind);
        for (std::size_t a = 0; a < grid.axes.size(); ++a) {
            entry.config.emplace_back(grid.axes[a].first,
                                      grid.axes[a].second[counter[a]]);
        }
        try {
            for (const auto& [name, value] : entry.config) {
                entry.hyper = apply_param(entry.hyper, name, value);
            }
            const std::uint64_t config_seed = mix_seed(seed, ci);
            double total_mae = 0.0;
            for (const auto& [train, val] : splits) {
                total_mae += holdout_score(train, val, grid.kind, entry.hyper,
                                           config_seed, entry);
            }
            entry.val_mae = total_mae / static_cast<double>(splits.size());
        } catch (const std::exception& e) {
            entry.failed = true;
            entry.error = e.what();
        }
        result.table.push_back(std::move(entry));

        for (std::size_t a = grid.axes.size(); a-- > 0;) {
            if (++counter[a] < grid.axes[a].second.size()) break;
            counter[a] = 0;
        }
    }

    bool any_ok = false;
    for (std::size_t i = 0; i < result.table.size(); ++i) {
        const TuneEntry& e = result.table[i];
        if (e.failed) continue;
        if (!any_ok) {
            result.best_index = i;
            any_ok = true;
            continue;
        }
        const TuneEntry& best = result.table[result.best_index];
        if (e.val_mae < best.val_mae ||
            (e.val_mae == best.val_mae &&
             e.fit_wall_time_s < best.fit_wall_time_s)) {
            result.best_index = i;
        }
    }
    if (!any_ok) throw ModelError("grid_search: every configuration failed");
    return result;
}

std::pair<std::vector<double>, std::vector<double>> learning_curve(
    ModelKind kind, const FeatureSet& fs, const HyperParams& hyper,
    std::uint64_t seed, double val_fraction) {
    if (kind == ModelKind::LinReg) {
        throw ModelError("learning_curve: LR is not iterative");
    }
    const std::size_t n = fs.size();
    if (n < 2) throw DataError("learning_curve: need at least 2 points");

    Rng rng(seed);
    const auto idx = shuffled_indices(n, rng);
    const auto n_val = static_cast<std::size_t>(
        std::llround(val_fraction * static_cast<double>(n)));
    if (n_val == 0 || n_val >= n) {
        throw DataError("learning_curve: validation split is empty");
    }
    const FeatureSet val = gather(fs, idx, 0, n_val);
    const FeatureSet train = gather(fs, idx, n_val, n);

    if (kind == ModelKind::Gbr) {
        auto hp = std::get<GbrHyperParams>(hyper);
        hp.seed = seed;
        auto [model, train_losses] = gbr_fit(train, hp);
        return {std::move(train_losses), staged_mae(model, val)};
    }

    // MLP: train on standardized x and std-scaled y, mirroring fit();
    // the observer scores the validation side after every epoch.
    const auto& hp = std::get<MlpHyperParams>(hyper);
    auto [std_train, scaling] = standardize(train);
    long double s = 0.0L;
    for (double v : std_train.y) s += v;
    const double y_mean = static_cast<double>(s / std_train.y.size());
    long double ss = 0.0L;
    for (double v : std_train.y) {
        const long double d = v - y_mean;
        ss += d * d;
    }
    const double y_std =
        std::sqrt(static_cast<double>(ss / std_train.y.size()));
    const double y_scale = y_std > 0.0 ? y_std : 1.0;
    for (double& v : std_train.y) v /= y_scale;

    std::vector<double> val_losses;
    val_losses.reserve(static_cast<std::size_t>(hp.epochs));
    const auto observer = [&](const MlpParams& p) {
        long double acc = 0.0L;
        for (std::size_t i = 0; i < val.size(); ++i) {
            const double x = (val.x[i] - scaling.x_mean) / scaling.x_std;
            acc += std::abs(val.y[i] -
                            y_scale * mlp_forward(p, x, hp.use_relu));
        }
        val_losses.push_back(static_cast<double>(acc / val.size()));
    };
    auto [params, train_losses] = mlp_fit(std_train, hp, seed, observer);
    (void)params;
    for (double& c : train_losses) c *= y_scale;
    return {std::move(train_losses), std::move(val_losses)};
}

void write_tune_csv(const TuneResult& result, std::ostream& out) {
    std::vector<std::string> header;
    if (!result.table.empty()) {
        for (const auto& [name, value] : result.table.front().config) {
            (void)value;
            header.push_back(name);
        }
    }
    header.insert(header.end(),
                  {"val_mae", "fit_time_s", "status", "best", "loss_curve"});
    csv::write_row(out, header);
    for (std::size_t i = 0; i < result.table.size(); ++i) {
        const TuneEntry& e = result.table[i];
        std::vector<std::string> row;
        for (const auto& [name, value] : e.config) {
            (void)name;
            row.push_back(csv::format_double(value));
        }
        row.push_back(e.failed ? "" : csv::format_double(e.val_mae));
        row.push_back(e.failed ? "" : csv::format_double(e.fit_wall_time_s));
        row.push_back(e.failed ? "failed: " + e.error : "ok");
        row.push_back(!e.failed && i == result.best_index ? "1" : "0");
        std::string curve;
        for (std::size_t c = 0; c < e.loss_curve.size(); ++c) {
            if (c) curve += ';';
            curve += csv::format_double(e.loss_curve[c]);
        }
        row.push_back(std::move(curve));
        csv::write_row(out, row);
    }
}

void write_curve_csv(const std::vector<double>& train_losses,
                     const std::vector<double>& val_losses,
                     std::ostream& out) {
    csv::write_row(out, {"iteration", "train_loss", "val_loss"});
    const std::size_t n = std::max(train_losses.size(), val_losses.size());
    for (std::size_t i = 0; i < n; ++i) {
        csv::write_row(
            out, {std::to_string(i + 1),
                  i < train_losses.size()
                      ? csv::format_double(train_losses[i]) : "",
                  i < val_losses.size() ? csv::format_double(val_losses[i])
                                        : ""});
    }
}

}  // namespace scalecast
