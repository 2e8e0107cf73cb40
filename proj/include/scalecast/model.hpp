#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "scalecast/features.hpp"
#include "scalecast/gbr.hpp"
#include "scalecast/linreg.hpp"
#include "scalecast/mlp.hpp"

namespace scalecast {

enum class ModelKind { LinReg, Mlp, Gbr };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

// OLS has no tunable hyperparameters; the tag keeps the variant uniform.
struct LinRegHyperParams {};

using HyperParams =
    std::variant<LinRegHyperParams, MlpHyperParams, GbrHyperParams>;

HyperParams default_hyper(ModelKind kind);

struct TrainingMeta {
    std::uint64_t seed = 0;
    double fit_wall_time_s = 0.0;      // monotonic clock, fit only
    std::vector<double> loss_curve;    // calls/s; empty for LR
};

// A fitted model of any kind. scaling is present iff kind == Mlp: the MLP
// trains on standardized inputs and its output weights are rescaled after
// training, so the stored parameters map standardized mt directly to raw
// calls/s.
struct TrainedModel {
    ModelKind kind = ModelKind::LinReg;
    std::variant<LinRegParams, MlpParams, GbrModel> params;
    std::optional<ScalingParams> scaling;
    TrainingMeta meta;
};

// Dispatches to the model module matching `kind` (hyper must carry the
// same kind, else a hard error), recording wall time and the loss curve.
// Deterministic in (fs, hyper, seed).
TrainedModel fit(ModelKind kind, const FeatureSet& fs,
                 const HyperParams& hyper, std::uint64_t seed);

// Predicted call rate in calls/s for one microservice time in s/call,
// clamped at 0 from below. mt must be positive and finite.
double predict(const TrainedModel& model, double mt);

// Elementwise predict; an invalid element is a hard error naming its index.
std::vector<double> predict_batch(const TrainedModel& model,
                                  const std::vector<double>& mts);

// Versioned JSON serialization, stable byte-for-byte for equal models.
void save_model(const TrainedModel& model, std::ostream& out);
TrainedModel load_model(std::istream& in);

}  // namespace scalecast
