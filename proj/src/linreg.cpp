#include "scalecast/linreg.hpp"

#include "scalecast/errors.hpp"

namespace scalecast {

LinRegParams fit_ols(const FeatureSet& fs) {
    const std::size_t n = fs.size();
    if (n < 2) throw ModelError("fit_ols: need at least 2 points");

    long double sx = 0.0L, sy = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        sx += fs.x[i];
        sy += fs.y[i];
    }
    const long double mx = sx / n, my = sy / n;

    long double sxy = 0.0L, sxx = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const long double dx = fs.x[i] - mx;
        sxy += dx * (fs.y[i] - my);
        sxx += dx * dx;
    }
    if (sxx == 0.0L) {
        throw ModelError("fit_ols: x is constant (singular normal equations)");
    }
    const long double w = sxy / sxx;
    return {static_cast<double>(w), static_cast<double>(my - w * mx)};
}

}  // namespace scalecast
