#include "scalecast/mlp.hpp"

#include <cmath>

#include "scalecast/errors.hpp"
#include "scalecast/rng.hpp"

namespace scalecast {

namespace {

void validate(const MlpHyperParams& hp) {
    if (hp.hidden_neurons <= 0 || hp.epochs <= 0 || hp.batch_size <= 0 ||
        hp.learning_rate <= 0.0 || hp.init_scale < 0.0) {
        throw ModelError("mlp: hyperparameters must be positive");
    }
}

double sign(double r) { return r > 0.0 ? 1.0 : (r < 0.0 ? -1.0 : 0.0); }

// Adam state for one parameter vector.
struct AdamState {
    std::vector<double> m, v;
    explicit AdamState(std::size_t n) : m(n, 0.0), v(n, 0.0) {}
};

constexpr double kBeta1 = 0.9;
constexpr double kBeta2 = 0.999;
constexpr double kEps = 1e-8;

void adam_step(std::vector<double>& theta, const std::vector<double>& grad,
               AdamState& st, double lr, double bc1, double bc2) {
    for (std::size_t i = 0; i < theta.size(); ++i) {
        st.m[i] = kBeta1 * st.m[i] + (1.0 - kBeta1) * grad[i];
        st.v[i] = kBeta2 * st.v[i] + (1.0 - kBeta2) * grad[i] * grad[i];
        const double mhat = st.m[i] / bc1;
        const double vhat = st.v[i] / bc2;
        theta[i] -= lr * mhat / (std::sqrt(vhat) + kEps);
    }
}

}  // namespace

MlpParams mlp_init(const MlpHyperParams& hp, std::uint64_t seed) {
    validate(hp);
    const auto h = static_cast<std::size_t>(hp.hidden_neurons);
    Rng rng(seed);
    MlpParams p;
    p.w1.resize(h);
    p.b1.assign(h, 0.0);
    p.w2.resize(h);
    p.b2 = 0.0;
    const double r1 = hp.init_scale / std::sqrt(1.0);  // fan_in of w1 is 1
    const double r2 = hp.init_scale / std::sqrt(static_cast<double>(h));
    for (std::size_t i = 0; i < h; ++i) p.w1[i] = rng.uniform(-r1, r1);
    for (std::size_t i = 0; i < h; ++i) p.w2[i] = rng.uniform(-r2, r2);
    return p;
}

double mlp_forward(const MlpParams& p, double x, bool use_relu) {
    double out = p.b2;
    for (std::size_t h = 0; h < p.hidden(); ++h) {
        double a = x * p.w1[h] + p.b1[h];
        if (use_relu && a < 0.0) a = 0.0;
        out += a * p.w2[h];
    }
    return out;
}

std::pair<double, MlpGrad> mlp_loss_and_grad(const MlpParams& p,
                                             const std::vector<double>& xs,
                                             const std::vector<double>& ys,
                                             bool use_relu) {
    const std::size_t n = xs.size();
    if (n == 0) throw ModelError("mlp: empty batch");
    const std::size_t h = p.hidden();

    MlpGrad g;
    g.w1.assign(h, 0.0);
    g.b1.assign(h, 0.0);
    g.w2.assign(h, 0.0);
    g.b2 = 0.0;

    double loss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = xs[i];
        double yhat = p.b2;
        for (std::size_t k = 0; k < h; ++k) {
            double a = x * p.w1[k] + p.b1[k];
            if (use_relu && a < 0.0) a = 0.0;
            yhat += a * p.w2[k];
        }
        const double r = ys[i] - yhat;
        loss += std::abs(r);
        const double dl = -sign(r) / static_cast<double>(n);  // dL/dyhat
        g.b2 += dl;
        for (std::size_t k = 0; k < h; ++k) {
            const double pre = x * p.w1[k] + p.b1[k];
            const double act = (use_relu && pre < 0.0) ? 0.0 : pre;
            const double dact = (use_relu && pre < 0.0) ? 0.0 : 1.0;
            g.w2[k] += dl * act;
            g.w1[k] += dl * p.w2[k] * dact * x;
            g.b1[k] += dl * p.w2[k] * dact;
        }
    }
    return {loss / static_cast<double>(n), std::move(g)};
}

std::pair<MlpParams, std::vector<double>> mlp_fit(
    const FeatureSet& fs, const MlpHyperParams& hp, std::uint64_t seed,
    const std::function<void(const MlpParams&)>& epoch_observer) {
    validate(hp);
    const std::size_t n = fs.size();
    if (n == 0) throw ModelError("mlp_fit: empty feature set");

    MlpParams p = mlp_init(hp, seed);
    AdamState st_w1(p.w1.size()), st_b1(p.b1.size()), st_w2(p.w2.size()),
        st_b2(1);
    std::vector<double> theta_b2{p.b2}, grad_b2(1);
    long long t = 0;

    const auto batch = static_cast<std::size_t>(hp.batch_size);
    std::vector<double> bx, by;
    bx.reserve(batch);
    by.reserve(batch);

    std::vector<double> curve;
    curve.reserve(static_cast<std::size_t>(hp.epochs));
    for (int epoch = 0; epoch < hp.epochs; ++epoch) {
        Rng rng(seed, static_cast<std::uint64_t>(epoch) + 1);
        const auto order = shuffled_indices(n, rng);
        for (std::size_t start = 0; start < n; start += batch) {
            const std::size_t stop = std::min(start + batch, n);
            bx.clear();
            by.clear();
            for (std::size_t i = start; i < stop; ++i) {
                bx.push_back(fs.x[order[i]]);
                by.push_back(fs.y[order[i]]);
            }
            auto [loss, g] = mlp_loss_and_grad(p, bx, by, hp.use_relu);
            (void)loss;
            ++t;
            const double bc1 = 1.0 - std::pow(kBeta1, static_cast<double>(t));
            const double bc2 = 1.0 - std::pow(kBeta2, static_cast<double>(t));
            adam_step(p.w1, g.w1, st_w1, hp.learning_rate, bc1, bc2);
            adam_step(p.b1, g.b1, st_b1, hp.learning_rate, bc1, bc2);
            adam_step(p.w2, g.w2, st_w2, hp.learning_rate, bc1, bc2);
            theta_b2[0] = p.b2;
            grad_b2[0] = g.b2;
            adam_step(theta_b2, grad_b2, st_b2, hp.learning_rate, bc1, bc2);
            p.b2 = theta_b2[0];
        }
        double epoch_loss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            epoch_loss += std::abs(fs.y[i] - mlp_forward(p, fs.x[i], hp.use_relu));
        }
        curve.push_back(epoch_loss / static_cast<double>(n));
        if (epoch_observer) epoch_observer(p);
    }
    return {std::move(p), std::move(curve)};
}

}  // namespace scalecast
