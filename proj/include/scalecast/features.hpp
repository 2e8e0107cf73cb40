#pragma once

#include <utility>
#include <vector>

#include "scalecast/trace.hpp"

namespace scalecast {

// Model-ready paired vectors: x holds microservice times in s/call,
// y the call rates in calls/s. Immutable by convention; every operation
// on it is a pure function.
struct FeatureSet {
    std::vector<double> x;  // s/call, all > 0 (standardized sets relax this)
    std::vector<double> y;  // calls/s, all >= 0

    std::size_t size() const { return x.size(); }
};

// Standardization parameters for x, population convention. Inverts via
// x = x' * x_std + x_mean.
struct ScalingParams {
    double x_mean = 0.0;  // s/call
    double x_std = 1.0;   // s/call, > 0
};

inline double ms_to_s(double ms) { return ms / 1000.0; }

// Dataset -> FeatureSet, converting mt from ms/call to s/call. This is
// the single place the unit conversion happens.
FeatureSet extract(const Dataset& ds);

// Returns a copy with x shifted/scaled to mean 0, population std 1;
// y untouched. Constant x is a hard error.
std::pair<FeatureSet, ScalingParams> standardize(const FeatureSet& fs);

// Sample Pearson correlation of (x, y), standard definition with squared
// deviations under the square roots. Requires n >= 2 and both vectors
// non-constant.
double pearson(const FeatureSet& fs);

}  // namespace scalecast
