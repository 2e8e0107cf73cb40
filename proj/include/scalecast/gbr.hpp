#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "scalecast/features.hpp"

namespace scalecast {

struct GbrHyperParams {
    int n_estimators = 15;
    double learning_rate = 0.4;
    double subsample = 0.8;        // fraction of rows drawn per stage, (0, 1]
    int max_depth = 8;
    int min_samples_split = 200;   // nodes below this are never split
    int min_samples_leaf = 40;     // both children must keep at least this many
    std::uint64_t seed = 0;
};

// Flat binary tree; nodes[0] is the root. Internal nodes route
// x <= threshold to `left`; leaves carry `value` and have left == -1.
struct TreeNode {
    double threshold = 0.0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    double value = 0.0;

    bool is_leaf() const { return left < 0; }
};

struct RegressionTree {
    std::vector<TreeNode> nodes;

    int depth() const;  // root counts as depth 0
};

double tree_eval(const RegressionTree& tree, double x);

// Grows one tree greedily. At each node the threshold minimizing the
// children's total squared error of `targets` is chosen, scanning
// candidate midpoints between adjacent distinct sorted x in ascending
// order so equal-gain ties resolve to the smallest threshold. A node
// becomes a leaf when depth hits max_depth, it holds fewer than
// min_samples_split samples, no candidate leaves min_samples_leaf on both
// sides, or no split improves on the node's own squared error. Leaf value
// is the median of `leaf_targets` in the leaf (even count: mean of the
// two central values).
RegressionTree tree_fit(const std::vector<double>& x,
                        const std::vector<double>& targets,
                        const std::vector<double>& leaf_targets,
                        const GbrHyperParams& hp);

// Additive LAD ensemble: F(x) = init_value + learning_rate * sum of trees.
struct GbrModel {
    double init_value = 0.0;  // median of the training rates
    double learning_rate = 0.0;
    std::vector<RegressionTree> trees;
};

// LAD boosting. F_0 = median(y); each stage fits a tree to the residual
// signs (sign(0) = 0) on a per-stage subsample of ceil(subsample * n)
// rows drawn without replacement, deterministic from (seed, stage), with
// leaf values the medians of the raw residuals. The returned curve holds
// the full-training-set MAE after every stage, exactly n_estimators
// entries.
std::pair<GbrModel, std::vector<double>> gbr_fit(const FeatureSet& fs,
                                                 const GbrHyperParams& hp);

double gbr_predict(const GbrModel& m, double mt);

// MAE of the staged predictions F_1..F_E on an arbitrary set; entry e
// matches the model truncated to its first e+1 trees. Used for
// validation learning curves.
std::vector<double> staged_mae(const GbrModel& m, const FeatureSet& fs);

double median(std::vector<double> values);

}  // namespace scalecast
