#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "scalecast/errors.hpp"
#include "scalecast/linreg.hpp"
#include "scalecast/rng.hpp"

using namespace scalecast;

TEST_CASE("fit_ols recovers an exact line") {
    const FeatureSet fs{{0.0, 1.0, 2.0}, {1.0, 3.0, 5.0}};
    const LinRegParams p = fit_ols(fs);
    CHECK(p.w == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(p.b == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("fit_ols on all-zero targets") {
    const LinRegParams p = fit_ols(FeatureSet{{0.0, 1.0}, {0.0, 0.0}});
    CHECK(p.w == 0.0);
    CHECK(p.b == 0.0);
}

TEST_CASE("fit_ols matches the normal-equation oracle") {
    SUBCASE("spec triple") {
        const FeatureSet fs{{0.7, 1.5, 2.0}, {2.0, 2.0, 3.0}};
        const LinRegParams p = fit_ols(fs);
        const auto [w, b] = oracles::ols_normal_equations(fs.x, fs.y);
        CHECK(p.w == doctest::Approx(w).epsilon(1e-9));
        CHECK(p.b == doctest::Approx(b).epsilon(1e-9));
    }
    SUBCASE("random small datasets") {
        Rng rng(17);
        for (int iter = 0; iter < 300; ++iter) {
            const std::size_t n = 2 + rng.below(49);
            FeatureSet fs;
            for (std::size_t i = 0; i < n; ++i) {
                fs.x.push_back(rng.uniform(0.01, 6.0));
                fs.y.push_back(rng.uniform(0.0, 500.0));
            }
            if (std::all_of(fs.x.begin(), fs.x.end(),
                            [&](double v) { return v == fs.x[0]; })) {
                continue;
            }
            const LinRegParams p = fit_ols(fs);
            const auto [w, b] = oracles::ols_normal_equations(fs.x, fs.y);
            CHECK(p.w == doctest::Approx(w).epsilon(1e-9));
            CHECK(p.b == doctest::Approx(b).epsilon(1e-9));
        }
    }
}

TEST_CASE("fit_ols residuals sum to zero and the line passes the centroid") {
    Rng rng(23);
    FeatureSet fs;
    const std::size_t n = 1000;
    for (std::size_t i = 0; i < n; ++i) {
        fs.x.push_back(rng.log_uniform(0.001, 6.0));
        fs.y.push_back(5.0 * fs.x.back() + rng.gaussian() * 3.0 + 10.0);
    }
    const LinRegParams p = fit_ols(fs);

    long double residual_sum = 0.0L, sx = 0.0L, sy = 0.0L, scale = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        residual_sum += fs.y[i] - lr_predict(p, fs.x[i]);
        sx += fs.x[i];
        sy += fs.y[i];
        scale += std::abs(fs.y[i]);
    }
    CHECK(std::abs(static_cast<double>(residual_sum)) <=
          1e-9 * static_cast<double>(scale));
    const double centroid_pred =
        lr_predict(p, static_cast<double>(sx / n));
    CHECK(centroid_pred ==
          doctest::Approx(static_cast<double>(sy / n)).epsilon(1e-12));
}

TEST_CASE("fit_ols is invariant under row reordering") {
    Rng rng(29);
    FeatureSet fs;
    for (int i = 0; i < 200; ++i) {
        fs.x.push_back(rng.uniform(0.01, 2.0));
        fs.y.push_back(rng.uniform(0.0, 50.0));
    }
    const LinRegParams base = fit_ols(fs);

    std::vector<std::size_t> order = shuffled_indices(fs.size(), rng);
    FeatureSet shuffled;
    for (std::size_t i : order) {
        shuffled.x.push_back(fs.x[i]);
        shuffled.y.push_back(fs.y[i]);
    }
    const LinRegParams permuted = fit_ols(shuffled);
    CHECK(permuted.w == doctest::Approx(base.w).epsilon(1e-12));
    CHECK(permuted.b == doctest::Approx(base.b).epsilon(1e-12));
}

TEST_CASE("fit_ols rejects degenerate inputs") {
    CHECK_THROWS_AS(fit_ols(FeatureSet{{1.0}, {1.0}}), ModelError);
    CHECK_THROWS_AS(fit_ols(FeatureSet{{2.0, 2.0}, {1.0, 5.0}}), ModelError);
}

TEST_CASE("lr_predict is plain affine arithmetic") {
    CHECK(lr_predict({2.0, 1.0}, 0.0) == 1.0);
    CHECK(lr_predict({0.0, 5.0}, 123.0) == 5.0);
    CHECK(lr_predict({2.0, 1.0}, 0.7) == doctest::Approx(2.4).epsilon(1e-15));
    CHECK(lr_predict({2.0, -10.0}, 0.5) == -9.0);  // no clamp at this layer
}
