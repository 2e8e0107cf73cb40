#pragma once

#include "scalecast/features.hpp"

namespace scalecast {

// Simple linear regression: rate' = w * mt + b.
struct LinRegParams {
    double w = 0.0;  // calls/s per (s/call)
    double b = 0.0;  // calls/s

    bool operator==(const LinRegParams&) const = default;
};

// Closed-form ordinary least squares: w = cov(x, y) / var(x),
// b = mean(y) - w * mean(x). Two-pass mean-subtracted sums in long double
// keep the covariance stable on large traces. Constant x is a hard error.
LinRegParams fit_ols(const FeatureSet& fs);

// Unclamped affine prediction; the clamp lives at the predictor layer.
inline double lr_predict(const LinRegParams& p, double mt) {
    return p.w * mt + p.b;
}

}  // namespace scalecast
