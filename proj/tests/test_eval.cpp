#include <doctest.h>

#include <cmath>
#include <sstream>

#include "scalecast/errors.hpp"
#include "scalecast/eval.hpp"
#include "scalecast/rng.hpp"

using namespace scalecast;

namespace {

// Two-level rate structure; linear models cannot track the step.
Dataset piecewise_dataset(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    Dataset ds;
    ds.provenance = "synthetic";
    for (std::size_t i = 0; i < n; ++i) {
        TraceRecord r;
        r.timestamp = static_cast<std::int64_t>(i);
        r.microservice_id = "m" + std::to_string(i % 16);
        r.container_id = "c" + std::to_string(i);
        r.mt = rng.log_uniform(1.0, 2000.0);
        const double level = r.mt < 50.0 ? 8.0 : (r.mt < 500.0 ? 40.0 : 90.0);
        r.mcr = std::max(0.5, level + rng.gaussian() * 2.0);
        ds.records.push_back(std::move(r));
    }
    return ds;
}

}  // namespace

TEST_CASE("mae hand-computed cases") {
    CHECK(mae({2.0}, {2.0}) == 0.0);
    CHECK(mae({2.0}, {1.0}) == 1.0);
    CHECK(mae({2.0, 2.0, 3.0}, {1.4, 3.0, 6.0}) ==
          doctest::Approx((0.6 + 1.0 + 3.0) / 3.0).epsilon(1e-12));
    CHECK(mae({0.0, 0.0}, {1.0, -1.0}) == 1.0);
    CHECK(mae({5.0, 5.0, 5.0, 5.0}, {5.0, 6.0, 4.0, 5.0}) == 0.5);
}

TEST_CASE("mae errors") {
    CHECK_THROWS_AS(mae({}, {}), DataError);
    CHECK_THROWS_AS(mae({1.0}, {1.0, 2.0}), DataError);
}

TEST_CASE("mape hand-computed cases including the zero exclusion") {
    SUBCASE("equal vectors") {
        const auto r = mape({2.0, 4.0}, {2.0, 4.0});
        CHECK(r.percent == 0.0);
        CHECK(r.excluded == 0);
    }
    SUBCASE("single half-off point") {
        const auto r = mape({2.0}, {1.0});
        CHECK(r.percent == 50.0);
    }
    SUBCASE("zero actual is excluded and counted") {
        const auto r = mape({2.0, 0.0, 4.0}, {1.0, 5.0, 4.0});
        CHECK(r.percent == doctest::Approx(25.0).epsilon(1e-12));
        CHECK(r.excluded == 1);
    }
    SUBCASE("overprediction above 100 percent") {
        const auto r = mape({1.0}, {3.0});
        CHECK(r.percent == doctest::Approx(200.0).epsilon(1e-12));
    }
    SUBCASE("mixed magnitudes") {
        const auto r = mape({10.0, 100.0}, {9.0, 110.0});
        CHECK(r.percent == doctest::Approx(10.0).epsilon(1e-12));
    }
}

TEST_CASE("mape errors when every actual is zero") {
    CHECK_THROWS_AS(mape({0.0, 0.0}, {1.0, 2.0}), DataError);
    CHECK_THROWS_AS(mape({}, {}), DataError);
}

TEST_CASE("mae is symmetric, mape is not") {
    const std::vector<double> a{2.0, 5.0}, b{3.0, 4.0};
    CHECK(mae(a, b) == mae(b, a));
    CHECK(mape(a, b).percent != mape(b, a).percent);
}

TEST_CASE("mae of a constant shift is the shift") {
    Rng rng(3);
    std::vector<double> a, b;
    for (int i = 0; i < 100; ++i) {
        a.push_back(rng.uniform(0.0, 50.0));
        b.push_back(a.back() + 2.5);
    }
    CHECK(mae(a, b) == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("metrics are permutation invariant") {
    Rng rng(5);
    std::vector<double> a, b;
    for (int i = 0; i < 64; ++i) {
        a.push_back(rng.uniform(0.5, 20.0));
        b.push_back(rng.uniform(0.5, 20.0));
    }
    const double base_mae = mae(a, b);
    const double base_mape = mape(a, b).percent;
    const auto order = shuffled_indices(a.size(), rng);
    std::vector<double> pa, pb;
    for (std::size_t i : order) {
        pa.push_back(a[i]);
        pb.push_back(b[i]);
    }
    CHECK(mae(pa, pb) == doctest::Approx(base_mae).epsilon(1e-12));
    CHECK(mape(pa, pb).percent == doctest::Approx(base_mape).epsilon(1e-12));
}

TEST_CASE("evaluate reports one row per model") {
    const Dataset ds = piecewise_dataset(3000, 1);
    const auto [train_ds, test_ds] = split(ds, 0.8, 1);
    const FeatureSet train = extract(train_ds);
    const FeatureSet test = extract(test_ds);

    SUBCASE("a perfect model scores zero") {
        // LR trained on an exact line evaluated on the same line.
        FeatureSet line;
        for (int i = 1; i <= 100; ++i) {
            line.x.push_back(0.01 * i);
            line.y.push_back(3.0 * line.x.back() + 2.0);
        }
        const TrainedModel lr =
            fit(ModelKind::LinReg, line, LinRegHyperParams{}, 0);
        const EvalReport report = evaluate({lr}, line);
        REQUIRE(report.rows.size() == 1);
        CHECK(report.rows[0].mae == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(report.rows[0].mape_percent ==
              doctest::Approx(0.0).epsilon(1e-9));
        CHECK(report.rows[0].n_test == 100);
    }
    SUBCASE("a pointwise-dominated model never scores better") {
        FeatureSet line;
        for (int i = 1; i <= 50; ++i) {
            line.x.push_back(0.05 * i);
            line.y.push_back(4.0 * line.x.back() + 1.0);
        }
        TrainedModel close, far;
        close.kind = far.kind = ModelKind::LinReg;
        close.params = LinRegParams{4.0, 2.0};  // off by +1 everywhere
        far.params = LinRegParams{4.0, 4.0};    // off by +3 everywhere
        const EvalReport report = evaluate({close, far}, line);
        CHECK(report.rows[1].mae >= report.rows[0].mae);
        CHECK(report.rows[1].mape_percent >= report.rows[0].mape_percent);
    }
    SUBCASE("GBR beats LR on piecewise data") {
        const TrainedModel lr =
            fit(ModelKind::LinReg, train, LinRegHyperParams{}, 1);
        const TrainedModel gbr = fit(ModelKind::Gbr, train, GbrHyperParams{}, 1);
        const EvalReport report = evaluate({lr, gbr}, test);
        REQUIRE(report.rows.size() == 2);
        CHECK(report.rows[1].mae < report.rows[0].mae);
        CHECK(report.rows[1].mape_percent < report.rows[0].mape_percent);
    }
}

TEST_CASE("run_comparison sweeps seeds and summarizes ranges") {
    const Dataset ds = piecewise_dataset(2000, 2);
    const std::vector<ModelKind> kinds{ModelKind::LinReg, ModelKind::Gbr};
    const ComparisonReport report =
        run_comparison(ds, kinds, {}, 0.8, {1, 2, 3});
    CHECK(report.rows.size() == 6);  // 3 seeds x 2 kinds
    for (const ModelKind kind : kinds) {
        const EvalRow& lo = report.min_summary.at(kind);
        const EvalRow& hi = report.max_summary.at(kind);
        CHECK(lo.mae <= hi.mae);
        CHECK(lo.mape_percent <= hi.mape_percent);
        for (const auto& sr : report.rows) {
            if (sr.eval.kind != kind) continue;
            CHECK(sr.eval.mae >= lo.mae);
            CHECK(sr.eval.mae <= hi.mae);
        }
    }

    std::ostringstream csv_out;
    write_comparison_csv(report, csv_out);
    // 1 header + 6 seed rows + 2 min + 2 max
    std::size_t lines = 0;
    for (char c : csv_out.str()) lines += c == '\n';
    CHECK(lines == 11);

    std::ostringstream text_out;
    write_comparison_text(report, text_out);
    CHECK(text_out.str().find("lr") != std::string::npos);
    CHECK(text_out.str().find("gbr") != std::string::npos);
}
