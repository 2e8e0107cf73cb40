#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "scalecast/features.hpp"

namespace scalecast {

// One-hidden-layer perceptron regressor: scalar in, scalar out, trained
// with mini-batch Adam on mean L1 loss. The default activation is the
// identity, making the trained function affine in its input; ReLU is
// available as an experimental switch.
struct MlpHyperParams {
    int hidden_neurons = 2;
    int epochs = 2;
    double learning_rate = 0.003;
    int batch_size = 32;
    double init_scale = 0.5;
    bool use_relu = false;
};

struct MlpParams {
    std::vector<double> w1;  // input -> hidden, size H
    std::vector<double> b1;  // size H
    std::vector<double> w2;  // hidden -> output, size H
    double b2 = 0.0;

    std::size_t hidden() const { return w1.size(); }
    bool operator==(const MlpParams&) const = default;
};

// Flat view of all parameters in a fixed order (w1, b1, w2, b2); used by
// the optimizer and by gradient checks.
struct MlpGrad {
    std::vector<double> w1, b1, w2;
    double b2 = 0.0;
};

// Weights uniform in [-init_scale/sqrt(fan_in), +init_scale/sqrt(fan_in)],
// biases zero; deterministic in seed.
MlpParams mlp_init(const MlpHyperParams& hp, std::uint64_t seed);

double mlp_forward(const MlpParams& p, double x, bool use_relu = false);

// Mean L1 loss over the given points and its gradient w.r.t. every
// parameter. Subgradient of |r| at r = 0 is 0.
std::pair<double, MlpGrad> mlp_loss_and_grad(const MlpParams& p,
                                             const std::vector<double>& xs,
                                             const std::vector<double>& ys,
                                             bool use_relu = false);

// Trains on fs as given (callers standardize x beforehand; y units are
// preserved in the returned loss curve). Batch order is reshuffled
// deterministically from seed each epoch; the loss curve holds the mean
// training L1 loss after every epoch, exactly hp.epochs entries.
// epoch_observer, when set, sees the parameters after each epoch.
std::pair<MlpParams, std::vector<double>> mlp_fit(
    const FeatureSet& fs, const MlpHyperParams& hp, std::uint64_t seed,
    const std::function<void(const MlpParams&)>& epoch_observer = {});

}  // namespace scalecast
