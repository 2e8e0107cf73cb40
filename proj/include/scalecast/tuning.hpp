#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "scalecast/model.hpp"

namespace scalecast {

// Exhaustive hyperparameter grid for one model kind: every axis is a
// named hyperparameter with its candidate values; the search walks the
// full Cartesian product. k_folds >= 2 switches scoring from the default
// hold-out split to k-fold cross-validation.
struct ParamGrid {
    ModelKind kind = ModelKind::Gbr;
    std::vector<std::pair<std::string, std::vector<double>>> axes;
    int k_folds = 0;
};

struct TuneEntry {
    std::vector<std::pair<std::string, double>> config;  // axis -> value
    HyperParams hyper;
    double val_mae = 0.0;
    double fit_wall_time_s = 0.0;
    std::vector<double> loss_curve;
    bool failed = false;
    std::string error;
};

struct TuneResult {
    std::vector<TuneEntry> table;  // grid order
    std::size_t best_index = 0;    // min val MAE; ties: fit time, grid order
};

// Applies one named hyperparameter to a block; unknown names or values
// invalid for the kind are hard errors.
HyperParams apply_param(HyperParams hyper, const std::string& name,
                        double value);

// Fits every config of the Cartesian product on a deterministic
// train/validation split of fs and scores validation MAE. A config that
// throws is recorded as failed; only an all-failed grid is fatal.
TuneResult grid_search(const FeatureSet& fs, const ParamGrid& grid,
                       double val_fraction, std::uint64_t seed);

// Per-iteration train and validation losses for the iterative models
// (per stage for GBR, per epoch for MLP); LR is a hard error.
std::pair<std::vector<double>, std::vector<double>> learning_curve(
    ModelKind kind, const FeatureSet& fs, const HyperParams& hyper,
    std::uint64_t seed, double val_fraction = 0.2);

void write_tune_csv(const TuneResult& result, std::ostream& out);

void write_curve_csv(const std::vector<double>& train_losses,
                     const std::vector<double>& val_losses,
                     std::ostream& out);

}  // namespace scalecast
