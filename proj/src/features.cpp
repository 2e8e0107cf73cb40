#include "scalecast/features.hpp"

#include <cmath>

#include "scalecast/errors.hpp"

namespace scalecast {

namespace {

long double sum(const std::vector<double>& v) {
    long double s = 0.0L;
    for (double e : v) s += e;
    return s;
}

}  // namespace

FeatureSet extract(const Dataset& ds) {
    if (ds.records.empty()) {
        throw DataError("extract: dataset is empty");
    }
    FeatureSet fs;
    fs.x.reserve(ds.records.size());
    fs.y.reserve(ds.records.size());
    for (const auto& r : ds.records) {
        fs.x.push_back(ms_to_s(r.mt));
        fs.y.push_back(r.mcr);
    }
    return fs;
}

std::pair<FeatureSet, ScalingParams> standardize(const FeatureSet& fs) {
    const std::size_t n = fs.size();
    if (n < 2) throw DataError("standardize: need at least 2 points");
    const double mean = static_cast<double>(sum(fs.x) / n);
    long double ss = 0.0L;
    for (double v : fs.x) {
        const long double d = v - mean;
        ss += d * d;
    }
    const double stddev = std::sqrt(static_cast<double>(ss / n));
    if (stddev == 0.0) {
        throw DataError("standardize: x is constant (degenerate feature)");
    }
    FeatureSet out;
    out.x.reserve(n);
    for (double v : fs.x) out.x.push_back((v - mean) / stddev);
    out.y = fs.y;
    return {std::move(out), ScalingParams{mean, stddev}};
}

double pearson(const FeatureSet& fs) {
    const std::size_t n = fs.size();
    if (n < 2) throw DataError("pearson: need at least 2 points");
    const double mx = static_cast<double>(sum(fs.x) / n);
    const double my = static_cast<double>(sum(fs.y) / n);
    long double sxy = 0.0L, sxx = 0.0L, syy = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const long double dx = fs.x[i] - mx;
        const long double dy = fs.y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0L) throw DataError("pearson: x is constant");
    if (syy == 0.0L) throw DataError("pearson: y is constant");
    return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

}  // namespace scalecast
