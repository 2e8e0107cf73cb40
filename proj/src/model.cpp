#include "scalecast/model.hpp"

#include <chrono>
#include <cmath>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "scalecast/errors.hpp"

namespace scalecast {

namespace {

using nlohmann::ordered_json;

constexpr int kModelFormatVersion = 1;

double elapsed_s(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

TrainedModel fit_linreg(const FeatureSet& fs, std::uint64_t seed) {
    TrainedModel m;
    m.kind = ModelKind::LinReg;
    m.meta.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    m.params = fit_ols(fs);
    m.meta.fit_wall_time_s = elapsed_s(start);
    return m;
}

TrainedModel fit_mlp(const FeatureSet& fs, const MlpHyperParams& hp,
                     std::uint64_t seed) {
    TrainedModel m;
    m.kind = ModelKind::Mlp;
    m.meta.seed = seed;
    const auto start = std::chrono::steady_clock::now();

    auto [std_fs, scaling] = standardize(fs);
    // Raw call rates impair Adam at the default step size; train against
    // y / y_std and fold the factor back into the output layer so the
    // stored parameters emit raw calls/s.
    long double s = 0.0L;
    for (double v : std_fs.y) s += v;
    const auto n = static_cast<long double>(std_fs.y.size());
    const double y_mean = static_cast<double>(s / n);
    long double ss = 0.0L;
    for (double v : std_fs.y) {
        const long double d = v - y_mean;
        ss += d * d;
    }
    const double y_std = std::sqrt(static_cast<double>(ss / n));
    const double y_scale = y_std > 0.0 ? y_std : 1.0;
    for (double& v : std_fs.y) v /= y_scale;

    auto [params, curve] = mlp_fit(std_fs, hp, seed);
    for (double& w : params.w2) w *= y_scale;
    params.b2 *= y_scale;
    for (double& c : curve) c *= y_scale;

    m.params = std::move(params);
    m.scaling = scaling;
    m.meta.loss_curve = std::move(curve);
    m.meta.fit_wall_time_s = elapsed_s(start);
    return m;
}

TrainedModel fit_gbr(const FeatureSet& fs, GbrHyperParams hp,
                     std::uint64_t seed) {
    TrainedModel m;
    m.kind = ModelKind::Gbr;
    m.meta.seed = seed;
    hp.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    auto [model, curve] = gbr_fit(fs, hp);
    m.params = std::move(model);
    m.meta.loss_curve = std::move(curve);
    m.meta.fit_wall_time_s = elapsed_s(start);
    return m;
}

ordered_json tree_to_json(const RegressionTree& t, std::int32_t node) {
    const auto& n = t.nodes[static_cast<std::size_t>(node)];
    if (n.is_leaf()) {
        return ordered_json{{"value", n.value}};
    }
    return ordered_json{{"threshold", n.threshold},
                        {"left", tree_to_json(t, n.left)},
                        {"right", tree_to_json(t, n.right)}};
}

std::int32_t tree_from_json(const ordered_json& j, RegressionTree& t) {
    if (j.contains("value")) {
        t.nodes.push_back(TreeNode{0.0, -1, -1, j.at("value").get<double>()});
        return static_cast<std::int32_t>(t.nodes.size() - 1);
    }
    t.nodes.push_back(
        TreeNode{j.at("threshold").get<double>(), -1, -1, 0.0});
    const auto node = static_cast<std::int32_t>(t.nodes.size() - 1);
    const std::int32_t l = tree_from_json(j.at("left"), t);
    const std::int32_t r = tree_from_json(j.at("right"), t);
    t.nodes[static_cast<std::size_t>(node)].left = l;
    t.nodes[static_cast<std::size_t>(node)].right = r;
    return node;
}

}  // namespace

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::LinReg: return "lr";
        case ModelKind::Mlp: return "mlp";
        case ModelKind::Gbr: return "gbr";
    }
    throw ModelError("unknown model kind");
}

ModelKind model_kind_from_string(const std::string& name) {
    if (name == "lr") return ModelKind::LinReg;
    if (name == "mlp") return ModelKind::Mlp;
    if (name == "gbr") return ModelKind::Gbr;
    throw ModelError("unknown model kind '" + name + "'");
}

HyperParams default_hyper(ModelKind kind) {
    switch (kind) {
        case ModelKind::LinReg: return LinRegHyperParams{};
        case ModelKind::Mlp: return MlpHyperParams{};
        case ModelKind::Gbr: return GbrHyperParams{};
    }
    throw ModelError("unknown model kind");
}

TrainedModel fit(ModelKind kind, const FeatureSet& fs,
                 const HyperParams& hyper, std::uint64_t seed) {
    if (fs.size() == 0) throw ModelError("fit: empty feature set");
    switch (kind) {
        case ModelKind::LinReg:
            if (!std::holds_alternative<LinRegHyperParams>(hyper)) {
                throw ModelError("fit: hyperparameter block does not match LR");
            }
            return fit_linreg(fs, seed);
        case ModelKind::Mlp:
            if (const auto* hp = std::get_if<MlpHyperParams>(&hyper)) {
                return fit_mlp(fs, *hp, seed);
            }
            throw ModelError("fit: hyperparameter block does not match MLP");
        case ModelKind::Gbr:
            if (const auto* hp = std::get_if<GbrHyperParams>(&hyper)) {
                return fit_gbr(fs, *hp, seed);
            }
            throw ModelError("fit: hyperparameter block does not match GBR");
    }
    throw ModelError("fit: unknown model kind");
}

double predict(const TrainedModel& model, double mt) {
    if (!(mt > 0.0) || !std::isfinite(mt)) {
        throw ModelError("predict: mt must be positive and finite");
    }
    double raw = 0.0;
    switch (model.kind) {
        case ModelKind::LinReg:
            raw = lr_predict(std::get<LinRegParams>(model.params), mt);
            break;
        case ModelKind::Mlp: {
            const auto& sc = model.scaling;
            if (!sc) throw ModelError("predict: MLP model lacks scaling");
            const double x = (mt - sc->x_mean) / sc->x_std;
            raw = mlp_forward(std::get<MlpParams>(model.params), x);
            break;
        }
        case ModelKind::Gbr:
            raw = gbr_predict(std::get<GbrModel>(model.params), mt);
            break;
    }
    return raw < 0.0 ? 0.0 : raw;  // rates cannot be negative
}

std::vector<double> predict_batch(const TrainedModel& model,
                                  const std::vector<double>& mts) {
    std::vector<double> out;
    out.reserve(mts.size());
    for (std::size_t i = 0; i < mts.size(); ++i) {
        if (!(mts[i] > 0.0) || !std::isfinite(mts[i])) {
            throw ModelError("predict_batch: invalid mt at index " +
                             std::to_string(i));
        }
        out.push_back(predict(model, mts[i]));
    }
    return out;
}

void save_model(const TrainedModel& model, std::ostream& out) {
    ordered_json j;
    j["version"] = kModelFormatVersion;
    j["kind"] = to_string(model.kind);
    switch (model.kind) {
        case ModelKind::LinReg: {
            const auto& p = std::get<LinRegParams>(model.params);
            j["params"] = ordered_json{{"w", p.w}, {"b", p.b}};
            break;
        }
        case ModelKind::Mlp: {
            const auto& p = std::get<MlpParams>(model.params);
            j["params"] = ordered_json{
                {"w1", p.w1}, {"b1", p.b1}, {"w2", p.w2}, {"b2", p.b2}};
            break;
        }
        case ModelKind::Gbr: {
            const auto& p = std::get<GbrModel>(model.params);
            ordered_json trees = ordered_json::array();
            for (const auto& t : p.trees) trees.push_back(tree_to_json(t, 0));
            j["params"] = ordered_json{{"init_value", p.init_value},
                                       {"learning_rate", p.learning_rate},
                                       {"trees", std::move(trees)}};
            break;
        }
    }
    if (model.scaling) {
        j["scaling"] = ordered_json{{"x_mean", model.scaling->x_mean},
                                    {"x_std", model.scaling->x_std}};
    } else {
        j["scaling"] = nullptr;
    }
    j["meta"] = ordered_json{{"seed", model.meta.seed},
                             {"fit_wall_time_s", model.meta.fit_wall_time_s},
                             {"loss_curve", model.meta.loss_curve}};
    out << j.dump(2) << '\n';
}

TrainedModel load_model(std::istream& in) {
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ModelError(std::string("load_model: invalid JSON: ") + e.what());
    }
    try {
        if (j.at("version").get<int>() != kModelFormatVersion) {
            throw ModelError("load_model: unsupported format version");
        }
        TrainedModel m;
        m.kind = model_kind_from_string(j.at("kind").get<std::string>());
        const auto& p = j.at("params");
        switch (m.kind) {
            case ModelKind::LinReg:
                m.params = LinRegParams{p.at("w").get<double>(),
                                        p.at("b").get<double>()};
                break;
            case ModelKind::Mlp: {
                MlpParams mp;
                mp.w1 = p.at("w1").get<std::vector<double>>();
                mp.b1 = p.at("b1").get<std::vector<double>>();
                mp.w2 = p.at("w2").get<std::vector<double>>();
                mp.b2 = p.at("b2").get<double>();
                if (mp.b1.size() != mp.w1.size() ||
                    mp.w2.size() != mp.w1.size()) {
                    throw ModelError("load_model: ragged MLP parameters");
                }
                m.params = std::move(mp);
                break;
            }
            case ModelKind::Gbr: {
                GbrModel gm;
                gm.init_value = p.at("init_value").get<double>();
                gm.learning_rate = p.at("learning_rate").get<double>();
                for (const auto& tj : p.at("trees")) {
                    RegressionTree t;
                    tree_from_json(tj, t);
                    gm.trees.push_back(std::move(t));
                }
                m.params = std::move(gm);
                break;
            }
        }
        if (!j.at("scaling").is_null()) {
            m.scaling = ScalingParams{
                j.at("scaling").at("x_mean").get<double>(),
                j.at("scaling").at("x_std").get<double>()};
        }
        if (m.kind == ModelKind::Mlp && !m.scaling) {
            throw ModelError("load_model: MLP model requires scaling block");
        }
        if (m.kind != ModelKind::Mlp && m.scaling) {
            throw ModelError("load_model: scaling only valid for MLP");
        }
        const auto& meta = j.at("meta");
        m.meta.seed = meta.at("seed").get<std::uint64_t>();
        m.meta.fit_wall_time_s = meta.at("fit_wall_time_s").get<double>();
        m.meta.loss_curve = meta.at("loss_curve").get<std::vector<double>>();
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw ModelError(std::string("load_model: malformed document: ") +
                         e.what());
    }
}

}  // namespace scalecast
