#include <doctest.h>

#include <cmath>
#include <sstream>

#include "scalecast/errors.hpp"
#include "scalecast/model.hpp"
#include "scalecast/rng.hpp"

using namespace scalecast;

namespace {

FeatureSet linear_data(std::size_t n, std::uint64_t seed, double noise = 0.0) {
    Rng rng(seed);
    FeatureSet fs;
    for (std::size_t i = 0; i < n; ++i) {
        fs.x.push_back(rng.log_uniform(0.01, 2.0));
        fs.y.push_back(
            std::max(0.0, 2.0 * fs.x.back() + 1.0 + noise * rng.gaussian()));
    }
    return fs;
}

}  // namespace

TEST_CASE("model kind names round-trip") {
    for (ModelKind kind : {ModelKind::LinReg, ModelKind::Mlp, ModelKind::Gbr}) {
        CHECK(model_kind_from_string(to_string(kind)) == kind);
    }
    CHECK_THROWS_AS(model_kind_from_string("boost"), ModelError);
}

TEST_CASE("fit dispatches LR and recovers the line") {
    const FeatureSet fs = linear_data(50, 1);
    const TrainedModel m = fit(ModelKind::LinReg, fs, LinRegHyperParams{}, 7);
    CHECK(m.kind == ModelKind::LinReg);
    const auto& p = std::get<LinRegParams>(m.params);
    CHECK(p.w == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(p.b == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(m.meta.loss_curve.empty());
    CHECK(m.meta.seed == 7);
    CHECK(m.meta.fit_wall_time_s >= 0.0);
    CHECK_FALSE(m.scaling.has_value());
}

TEST_CASE("fit records the iteration counts the configuration dictates") {
    const FeatureSet fs = linear_data(2000, 2, 0.5);
    const TrainedModel gbr = fit(ModelKind::Gbr, fs, GbrHyperParams{}, 1);
    CHECK(gbr.meta.loss_curve.size() == 15);
    CHECK_FALSE(gbr.scaling.has_value());

    const TrainedModel mlp = fit(ModelKind::Mlp, fs, MlpHyperParams{}, 1);
    CHECK(mlp.meta.loss_curve.size() == 2);
    CHECK(mlp.scaling.has_value());
}

TEST_CASE("fit rejects a mismatched hyperparameter block") {
    const FeatureSet fs = linear_data(10, 3);
    CHECK_THROWS_AS(fit(ModelKind::LinReg, fs, GbrHyperParams{}, 0),
                    ModelError);
    CHECK_THROWS_AS(fit(ModelKind::Gbr, fs, MlpHyperParams{}, 0), ModelError);
    CHECK_THROWS_AS(fit(ModelKind::Mlp, fs, LinRegHyperParams{}, 0),
                    ModelError);
}

TEST_CASE("repeated fits are parameter-identical") {
    const FeatureSet fs = linear_data(500, 4, 1.0);
    for (ModelKind kind : {ModelKind::LinReg, ModelKind::Mlp, ModelKind::Gbr}) {
        const TrainedModel a = fit(kind, fs, default_hyper(kind), 3);
        const TrainedModel b = fit(kind, fs, default_hyper(kind), 3);
        CHECK(a.meta.loss_curve == b.meta.loss_curve);
        std::ostringstream sa, sb;
        save_model(a, sa);
        save_model(b, sb);
        // Equal up to the wall-time metadata field.
        std::string ja = sa.str(), jb = sb.str();
        const auto strip = [](std::string& s) {
            const auto pos = s.find("fit_wall_time_s");
            const auto end = s.find('\n', pos);
            s.erase(pos, end - pos);
        };
        strip(ja);
        strip(jb);
        CHECK(ja == jb);
    }
}

TEST_CASE("predict clamps negatives and validates mt") {
    TrainedModel m;
    m.kind = ModelKind::LinReg;
    m.params = LinRegParams{2.0, 1.0};
    CHECK(predict(m, 0.5) == 2.0);
    m.params = LinRegParams{2.0, -10.0};
    CHECK(predict(m, 0.5) == 0.0);
    CHECK_THROWS_AS(predict(m, 0.0), ModelError);
    CHECK_THROWS_AS(predict(m, -1.0), ModelError);
    CHECK_THROWS_AS(predict(m, std::nan("")), ModelError);
}

TEST_CASE("an empty GBR ensemble predicts its constant") {
    TrainedModel m;
    m.kind = ModelKind::Gbr;
    GbrModel gm;
    gm.init_value = 4.5;
    gm.learning_rate = 0.4;
    m.params = gm;
    for (double mt : {0.001, 0.5, 100.0}) {
        CHECK(predict(m, mt) == 4.5);
    }
}

TEST_CASE("predict_batch equals elementwise predict") {
    const FeatureSet fs = linear_data(300, 5, 2.0);
    const TrainedModel m = fit(ModelKind::Gbr, fs, GbrHyperParams{}, 2);

    SUBCASE("empty input") {
        CHECK(predict_batch(m, {}).empty());
    }
    SUBCASE("simple LR arithmetic") {
        TrainedModel lr;
        lr.kind = ModelKind::LinReg;
        lr.params = LinRegParams{2.0, 0.0};
        const auto out = predict_batch(lr, {0.7, 1.5});
        CHECK(out == std::vector<double>{1.4, 3.0});
    }
    SUBCASE("random batch") {
        Rng rng(6);
        std::vector<double> mts;
        for (int i = 0; i < 100; ++i) mts.push_back(rng.uniform(0.001, 3.0));
        const auto batch = predict_batch(m, mts);
        REQUIRE(batch.size() == mts.size());
        for (std::size_t i = 0; i < mts.size(); ++i) {
            CHECK(batch[i] == predict(m, mts[i]));
        }
    }
    SUBCASE("invalid element names its index") {
        try {
            predict_batch(m, {0.5, -2.0, 1.0});
            FAIL("expected ModelError");
        } catch (const ModelError& e) {
            CHECK(std::string(e.what()).find("index 1") != std::string::npos);
        }
    }
}

TEST_CASE("model serialization round-trips every kind") {
    const FeatureSet fs = linear_data(400, 8, 1.5);
    Rng rng(9);
    std::vector<double> probes;
    for (int i = 0; i < 50; ++i) probes.push_back(rng.uniform(0.001, 3.0));

    for (ModelKind kind : {ModelKind::LinReg, ModelKind::Mlp, ModelKind::Gbr}) {
        const TrainedModel m = fit(kind, fs, default_hyper(kind), 11);
        std::stringstream buf;
        save_model(m, buf);
        const TrainedModel back = load_model(buf);
        CHECK(back.kind == m.kind);
        CHECK(back.meta.seed == m.meta.seed);
        CHECK(back.meta.loss_curve == m.meta.loss_curve);
        for (double mt : probes) {
            CHECK(predict(back, mt) == predict(m, mt));
        }
        // Re-serialization of a parsed model is byte-identical.
        std::stringstream buf2;
        save_model(back, buf2);
        CHECK(buf.str() == buf2.str());
    }
}

TEST_CASE("load_model rejects malformed documents") {
    std::istringstream junk("not json");
    CHECK_THROWS_AS(load_model(junk), ModelError);
    std::istringstream wrong_version(
        R"({"version": 99, "kind": "lr", "params": {"w": 1, "b": 0},)"
        R"( "scaling": null, "meta": {"seed": 0, "fit_wall_time_s": 0,)"
        R"( "loss_curve": []}})");
    CHECK_THROWS_AS(load_model(wrong_version), ModelError);
    std::istringstream missing_scaling(
        R"({"version": 1, "kind": "mlp",)"
        R"( "params": {"w1": [1], "b1": [0], "w2": [1], "b2": 0},)"
        R"( "scaling": null, "meta": {"seed": 0, "fit_wall_time_s": 0,)"
        R"( "loss_curve": [1, 2]}})");
    CHECK_THROWS_AS(load_model(missing_scaling), ModelError);
}
