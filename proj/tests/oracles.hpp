// Test-only reference implementations, kept independent of the library
// code paths they check: a Cramer-rule normal-equation solver for OLS, a
// list-partitioning brute-force LAD tree, and finite-difference gradients
// for the MLP.
#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "scalecast/mlp.hpp"

namespace oracles {

// OLS via the raw normal equations [[Sxx, Sx], [Sx, n]] [w b]^T = [Sxy, Sy]^T,
// solved with Cramer's rule.
inline std::pair<double, double> ols_normal_equations(
    const std::vector<double>& x, const std::vector<double>& y) {
    long double sx = 0.0L, sy = 0.0L, sxx = 0.0L, sxy = 0.0L;
    const auto n = static_cast<long double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const long double det = sxx * n - sx * sx;
    const long double w = (sxy * n - sx * sy) / det;
    const long double b = (sxx * sy - sx * sxy) / det;
    return {static_cast<double>(w), static_cast<double>(b)};
}

inline double median_sorted_copy(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n % 2 == 1) return v[n / 2];
    return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct BrutePoint {
    double x;
    double target;
    double leaf_target;
};

// Greedy LAD tree grown on explicit point lists. Candidates are the
// midpoints between adjacent distinct x values; each candidate's child
// SSE is recomputed from scratch as sum(t^2) - sum(t)^2/count. A node
// stops when depth is exhausted, it is too small to split, no candidate
// keeps min_leaf on both sides, or no candidate strictly improves on the
// node's own SSE. Returns the leaf median for every input point.
struct BruteTree {
    int max_depth;
    std::size_t min_split;
    std::size_t min_leaf;

    // point index -> predicted leaf value, aligned with `points`.
    std::vector<double> fit_predict(const std::vector<BrutePoint>& points) {
        std::vector<double> out(points.size());
        std::vector<std::size_t> all(points.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        grow(points, all, 0, out);
        return out;
    }

private:
    static double sse_of(const std::vector<BrutePoint>& points,
                         const std::vector<std::size_t>& subset) {
        long double s = 0.0L, ss = 0.0L;
        for (std::size_t i : subset) {
            s += points[i].target;
            ss += points[i].target * points[i].target;
        }
        return static_cast<double>(
            ss - s * s / static_cast<long double>(subset.size()));
    }

    void grow(const std::vector<BrutePoint>& points,
              const std::vector<std::size_t>& subset, int depth,
              std::vector<double>& out) {
        bool splittable = depth < max_depth && subset.size() >= min_split;
        double best_sse = 0.0;
        double best_threshold = 0.0;
        bool found = false;
        if (splittable) {
            std::vector<double> xs;
            for (std::size_t i : subset) xs.push_back(points[i].x);
            std::sort(xs.begin(), xs.end());
            xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
            const double parent_sse = sse_of(points, subset);
            for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
                double threshold = xs[k] + 0.5 * (xs[k + 1] - xs[k]);
                if (!(threshold < xs[k + 1])) threshold = xs[k];
                std::vector<std::size_t> left, right;
                for (std::size_t i : subset) {
                    (points[i].x <= threshold ? left : right).push_back(i);
                }
                if (left.size() < min_leaf || right.size() < min_leaf) {
                    continue;
                }
                const double sse = sse_of(points, left) + sse_of(points, right);
                const double candidate_best = found ? best_sse : parent_sse;
                if (sse < candidate_best) {
                    best_sse = sse;
                    best_threshold = threshold;
                    found = true;
                }
            }
        }
        if (!found) {
            std::vector<double> leaf_vals;
            for (std::size_t i : subset) {
                leaf_vals.push_back(points[i].leaf_target);
            }
            const double value = median_sorted_copy(std::move(leaf_vals));
            for (std::size_t i : subset) out[i] = value;
            return;
        }
        std::vector<std::size_t> left, right;
        for (std::size_t i : subset) {
            (points[i].x <= best_threshold ? left : right).push_back(i);
        }
        grow(points, left, depth + 1, out);
        grow(points, right, depth + 1, out);
    }
};

// One full brute-force LAD boosting stage with learning rate 1 and no
// subsampling: start from the overall median, fit one tree to the
// residual signs with residual-median leaves, and return the staged
// predictions at every training point.
inline std::vector<double> brute_lad_stage(const std::vector<double>& x,
                                           const std::vector<double>& y,
                                           int max_depth) {
    const double f0 = median_sorted_copy(y);
    std::vector<BrutePoint> points(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - f0;
        points[i] = {x[i], r > 0.0 ? 1.0 : (r < 0.0 ? -1.0 : 0.0), r};
    }
    BruteTree tree{max_depth, 2, 1};
    std::vector<double> out = tree.fit_predict(points);
    for (double& v : out) v += f0;
    return out;
}

// Central finite differences of the mean L1 loss over every MLP
// parameter, in the same (w1, b1, w2, b2) order as MlpGrad.
inline std::vector<double> fd_mlp_gradient(const scalecast::MlpParams& p,
                                           const std::vector<double>& xs,
                                           const std::vector<double>& ys,
                                           double h) {
    const auto loss_at = [&](const scalecast::MlpParams& q) {
        double acc = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            acc += std::abs(ys[i] - scalecast::mlp_forward(q, xs[i]));
        }
        return acc / static_cast<double>(xs.size());
    };
    std::vector<double*> slots;
    scalecast::MlpParams q = p;
    for (auto& v : q.w1) slots.push_back(&v);
    for (auto& v : q.b1) slots.push_back(&v);
    for (auto& v : q.w2) slots.push_back(&v);
    slots.push_back(&q.b2);

    std::vector<double> grad;
    grad.reserve(slots.size());
    for (double* slot : slots) {
        const double orig = *slot;
        *slot = orig + h;
        const double up = loss_at(q);
        *slot = orig - h;
        const double down = loss_at(q);
        *slot = orig;
        grad.push_back((up - down) / (2.0 * h));
    }
    return grad;
}

inline std::vector<double> flatten(const scalecast::MlpGrad& g) {
    std::vector<double> out;
    out.insert(out.end(), g.w1.begin(), g.w1.end());
    out.insert(out.end(), g.b1.begin(), g.b1.end());
    out.insert(out.end(), g.w2.begin(), g.w2.end());
    out.push_back(g.b2);
    return out;
}

}  // namespace oracles
