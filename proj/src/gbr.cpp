#include "scalecast/gbr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scalecast/errors.hpp"
#include "scalecast/rng.hpp"

namespace scalecast {

namespace {

void validate(const GbrHyperParams& hp) {
    if (hp.n_estimators <= 0 || hp.learning_rate <= 0.0 || hp.max_depth <= 0 ||
        hp.min_samples_split <= 0 || hp.min_samples_leaf <= 0 ||
        !(hp.subsample > 0.0 && hp.subsample <= 1.0)) {
        throw ModelError("gbr: invalid hyperparameters");
    }
}

double sign(double r) { return r > 0.0 ? 1.0 : (r < 0.0 ? -1.0 : 0.0); }

// Sorted-by-x working copy of one tree's training slice.
struct SortedSamples {
    std::vector<double> x;
    std::vector<double> target;
    std::vector<double> leaf_target;
};

struct Builder {
    const GbrHyperParams& hp;
    SortedSamples s;
    std::vector<TreeNode> nodes;
    std::vector<double> scratch;

    double median_of(std::size_t lo, std::size_t hi) {
        scratch.assign(s.leaf_target.begin() + static_cast<std::ptrdiff_t>(lo),
                       s.leaf_target.begin() + static_cast<std::ptrdiff_t>(hi));
        return median(std::move(scratch));
    }

    std::int32_t leaf(std::size_t lo, std::size_t hi) {
        nodes.push_back(TreeNode{0.0, -1, -1, median_of(lo, hi)});
        return static_cast<std::int32_t>(nodes.size() - 1);
    }

    std::int32_t grow(std::size_t lo, std::size_t hi, int depth) {
        const std::size_t m = hi - lo;
        if (depth >= hp.max_depth ||
            m < static_cast<std::size_t>(hp.min_samples_split)) {
            return leaf(lo, hi);
        }
        const bool pure = std::all_of(
            s.target.begin() + static_cast<std::ptrdiff_t>(lo + 1),
            s.target.begin() + static_cast<std::ptrdiff_t>(hi),
            [&](double t) { return t == s.target[lo]; });
        if (pure) return leaf(lo, hi);

        // One ascending scan over candidate boundaries. SSE of a child is
        // sum(t^2) - sum(t)^2 / count, from running sums.
        long double total_s = 0.0L, total_ss = 0.0L;
        for (std::size_t i = lo; i < hi; ++i) {
            total_s += s.target[i];
            total_ss += s.target[i] * s.target[i];
        }
        const double parent_sse = static_cast<double>(
            total_ss - total_s * total_s / static_cast<long double>(m));

        const auto min_leaf = static_cast<std::size_t>(hp.min_samples_leaf);
        double best_sse = parent_sse;
        std::size_t best_k = 0;  // left child size; 0 = no split found
        long double left_s = 0.0L, left_ss = 0.0L;
        for (std::size_t k = 1; k < m; ++k) {
            const double t = s.target[lo + k - 1];
            left_s += t;
            left_ss += t * t;
            if (s.x[lo + k - 1] == s.x[lo + k]) continue;  // tied x
            if (k < min_leaf || m - k < min_leaf) continue;
            const long double right_s = total_s - left_s;
            const long double right_ss = total_ss - left_ss;
            const double sse = static_cast<double>(
                (left_ss - left_s * left_s / static_cast<long double>(k)) +
                (right_ss -
                 right_s * right_s / static_cast<long double>(m - k)));
            if (sse < best_sse) {
                best_sse = sse;
                best_k = k;
            }
        }
        if (best_k == 0) return leaf(lo, hi);

        const double lower = s.x[lo + best_k - 1];
        const double upper = s.x[lo + best_k];
        double threshold = lower + 0.5 * (upper - lower);
        // Adjacent doubles can round the midpoint onto `upper`, which
        // would route the boundary sample the wrong way at predict time.
        if (!(threshold < upper)) threshold = lower;
        nodes.push_back(TreeNode{threshold, -1, -1, 0.0});
        const auto node = static_cast<std::int32_t>(nodes.size() - 1);
        const std::int32_t l = grow(lo, lo + best_k, depth + 1);
        const std::int32_t r = grow(lo + best_k, hi, depth + 1);
        nodes[static_cast<std::size_t>(node)].left = l;
        nodes[static_cast<std::size_t>(node)].right = r;
        return node;
    }
};

int subtree_depth(const RegressionTree& t, std::int32_t node) {
    const auto& n = t.nodes[static_cast<std::size_t>(node)];
    if (n.is_leaf()) return 0;
    return 1 + std::max(subtree_depth(t, n.left), subtree_depth(t, n.right));
}

}  // namespace

double median(std::vector<double> values) {
    if (values.empty()) throw ModelError("median: empty input");
    const std::size_t n = values.size();
    const std::size_t mid = n / 2;
    std::nth_element(values.begin(),
                     values.begin() + static_cast<std::ptrdiff_t>(mid),
                     values.end());
    const double upper = values[mid];
    if (n % 2 == 1) return upper;
    const double lower = *std::max_element(
        values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

int RegressionTree::depth() const {
    if (nodes.empty()) return 0;
    return subtree_depth(*this, 0);
}

double tree_eval(const RegressionTree& tree, double x) {
    std::size_t i = 0;
    while (!tree.nodes[i].is_leaf()) {
        const auto& n = tree.nodes[i];
        i = static_cast<std::size_t>(x <= n.threshold ? n.left : n.right);
    }
    return tree.nodes[i].value;
}

RegressionTree tree_fit(const std::vector<double>& x,
                        const std::vector<double>& targets,
                        const std::vector<double>& leaf_targets,
                        const GbrHyperParams& hp) {
    validate(hp);
    const std::size_t n = x.size();
    if (n == 0) throw ModelError("tree_fit: empty input");
    if (targets.size() != n || leaf_targets.size() != n) {
        throw ModelError("tree_fit: input length mismatch");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });

    Builder b{hp, {}, {}, {}};
    b.s.x.reserve(n);
    b.s.target.reserve(n);
    b.s.leaf_target.reserve(n);
    for (std::size_t i : order) {
        b.s.x.push_back(x[i]);
        b.s.target.push_back(targets[i]);
        b.s.leaf_target.push_back(leaf_targets[i]);
    }
    b.grow(0, n, 0);
    return RegressionTree{std::move(b.nodes)};
}

std::pair<GbrModel, std::vector<double>> gbr_fit(const FeatureSet& fs,
                                                 const GbrHyperParams& hp) {
    validate(hp);
    const std::size_t n = fs.size();
    if (n == 0) throw ModelError("gbr_fit: empty feature set");

    GbrModel model;
    model.init_value = median(fs.y);
    model.learning_rate = hp.learning_rate;

    // ceil(subsample * n) with a guard against FP excess (0.8 * 5 rounds
    // a hair above 4).
    auto k = static_cast<std::size_t>(
        std::ceil(hp.subsample * static_cast<double>(n) - 1e-9));
    k = std::clamp<std::size_t>(k, 1, n);

    std::vector<double> f(n, model.init_value);
    std::vector<double> sub_x(k), sub_g(k), sub_r(k);
    std::vector<double> curve;
    curve.reserve(static_cast<std::size_t>(hp.n_estimators));

    for (int stage = 1; stage <= hp.n_estimators; ++stage) {
        Rng rng(hp.seed, static_cast<std::uint64_t>(stage));
        auto idx = shuffled_indices(n, rng);
        idx.resize(k);
        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t i = idx[j];
            const double r = fs.y[i] - f[i];
            sub_x[j] = fs.x[i];
            sub_g[j] = sign(r);
            sub_r[j] = r;
        }
        model.trees.push_back(tree_fit(sub_x, sub_g, sub_r, hp));
        const RegressionTree& tree = model.trees.back();

        long double abs_err = 0.0L;
        for (std::size_t i = 0; i < n; ++i) {
            f[i] += hp.learning_rate * tree_eval(tree, fs.x[i]);
            abs_err += std::abs(fs.y[i] - f[i]);
        }
        curve.push_back(static_cast<double>(abs_err / n));
    }
    return {std::move(model), std::move(curve)};
}

double gbr_predict(const GbrModel& m, double mt) {
    double acc = 0.0;
    for (const auto& tree : m.trees) acc += tree_eval(tree, mt);
    return m.init_value + m.learning_rate * acc;
}

std::vector<double> staged_mae(const GbrModel& m, const FeatureSet& fs) {
    const std::size_t n = fs.size();
    if (n == 0) throw ModelError("staged_mae: empty feature set");
    std::vector<double> f(n, m.init_value);
    std::vector<double> out;
    out.reserve(m.trees.size());
    for (const auto& tree : m.trees) {
        long double abs_err = 0.0L;
        for (std::size_t i = 0; i < n; ++i) {
            f[i] += m.learning_rate * tree_eval(tree, fs.x[i]);
            abs_err += std::abs(fs.y[i] - f[i]);
        }
        out.push_back(static_cast<double>(abs_err / n));
    }
    return out;
}

}  // namespace scalecast
