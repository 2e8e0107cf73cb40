// scalecast: trace-driven microservice call-rate prediction and replica
// planning. One subcommand per pipeline stage; every stage exchanges data
// through ordinary CSV/JSON files so stages stay independently testable.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scalecast/csv.hpp"
#include "scalecast/errors.hpp"
#include "scalecast/eval.hpp"
#include "scalecast/features.hpp"
#include "scalecast/model.hpp"
#include "scalecast/replica.hpp"
#include "scalecast/svg.hpp"
#include "scalecast/trace.hpp"
#include "scalecast/tuning.hpp"

namespace {

using namespace scalecast;

template <typename F>
auto with_input(const std::string& path, F&& f) {
    if (path == "-") return f(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open input file '" + path + "'");
    return f(in);
}

template <typename F>
auto with_output(const std::string& path, F&& f) {
    if (path == "-") {
        f(std::cout);
        if (!std::cout) throw DataError("write to stdout failed");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open output file '" + path + "'");
    f(out);
    out.flush();
    if (!out) throw DataError("write to '" + path + "' failed");
}

Dataset load_trace(const std::string& path, const CsvSchema& schema) {
    auto result = with_input(path, [&](std::istream& in) {
        return ingest_csv(in, schema, path);
    });
    if (result.rows_skipped > 0) {
        std::cerr << "note: skipped " << result.rows_skipped
                  << " unparsable row(s) in '" << path << "'\n";
    }
    if (result.dataset.records.empty()) {
        throw DataError("trace '" + path + "' has no valid rows");
    }
    return std::move(result.dataset);
}

struct HyperFlags {
    // MLP
    int hidden_neurons = 2;
    int epochs = 2;
    double mlp_learning_rate = 0.003;
    int batch_size = 32;
    double init_scale = 0.5;
    bool use_relu = false;
    // GBR
    int n_estimators = 15;
    double gbr_learning_rate = 0.4;
    double subsample = 0.8;
    int max_depth = 8;
    int min_samples_split = 200;
    int min_samples_leaf = 40;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--hidden-neurons", hidden_neurons,
                        "MLP hidden layer width");
        cmd->add_option("--epochs", epochs, "MLP training epochs");
        cmd->add_option("--mlp-learning-rate", mlp_learning_rate,
                        "MLP Adam step size");
        cmd->add_option("--batch-size", batch_size, "MLP mini-batch size");
        cmd->add_option("--init-scale", init_scale,
                        "MLP init range as a multiple of 1/sqrt(fan_in)");
        cmd->add_flag("--relu", use_relu,
                      "use ReLU activation instead of identity");
        cmd->add_option("--n-estimators", n_estimators, "GBR tree count");
        cmd->add_option("--gbr-learning-rate", gbr_learning_rate,
                        "GBR shrinkage");
        cmd->add_option("--subsample", subsample,
                        "GBR per-stage row fraction");
        cmd->add_option("--max-depth", max_depth, "GBR tree depth limit");
        cmd->add_option("--min-samples-split", min_samples_split,
                        "GBR minimum node size to split");
        cmd->add_option("--min-samples-leaf", min_samples_leaf,
                        "GBR minimum samples per leaf");
    }

    HyperParams for_kind(ModelKind kind) const {
        switch (kind) {
            case ModelKind::LinReg: return LinRegHyperParams{};
            case ModelKind::Mlp:
                return MlpHyperParams{hidden_neurons, epochs,
                                      mlp_learning_rate, batch_size,
                                      init_scale, use_relu};
            case ModelKind::Gbr:
                return GbrHyperParams{n_estimators, gbr_learning_rate,
                                      subsample, max_depth, min_samples_split,
                                      min_samples_leaf, 0};
        }
        throw ModelError("unknown model kind");
    }
};

struct SchemaFlags {
    CsvSchema schema;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--col-timestamp", schema.timestamp,
                        "timestamp column name");
        cmd->add_option("--col-microservice", schema.microservice,
                        "microservice name column");
        cmd->add_option("--col-container", schema.container,
                        "container instance column");
        cmd->add_option("--col-mt", schema.mt,
                        "microservice time column (ms/call)");
        cmd->add_option("--col-mcr", schema.mcr,
                        "call rate column (calls/s)");
    }
};

const std::string& cell(const csv::Table& table, std::size_t row,
                        std::size_t col, const std::string& what) {
    if (col >= table.rows[row].size()) {
        throw DataError("missing " + what + " in row " +
                        std::to_string(row + 2));
    }
    return table.rows[row][col];
}

double cell_as_double(const csv::Table& table, std::size_t row,
                      std::size_t col, const std::string& what) {
    const auto v = csv::parse_double(cell(table, row, col, what));
    if (!v) {
        throw DataError("non-numeric " + what + " in row " +
                        std::to_string(row + 2));
    }
    return *v;
}

// --- subcommand payloads -------------------------------------------------

struct IngestArgs {
    std::string in, out = "-";
    SchemaFlags schema;
    double mt_min = kDefaultMtBounds.low, mt_max = kDefaultMtBounds.high;
    double mcr_min = kDefaultMcrBounds.low, mcr_max = kDefaultMcrBounds.high;
    bool no_filter = false;
};

int run_ingest(const IngestArgs& a) {
    Dataset ds = load_trace(a.in, a.schema.schema);
    const std::size_t before = ds.size();
    if (!a.no_filter) {
        ds = filter_ranges(ds, {a.mt_min, a.mt_max}, {a.mcr_min, a.mcr_max});
        std::cerr << "note: " << before - ds.size()
                  << " row(s) outside metric bounds\n";
    }
    with_output(a.out, [&](std::ostream& out) {
        write_csv(ds, out, CsvSchema{});
    });
    return 0;
}

struct SynthArgs {
    std::string out = "-";
    std::size_t rows = 10000;
    double mt_low = 10.0, mt_high = 2000.0;
    double pearson = 0.75;
    double noise = 1.0;
    std::uint64_t seed = 1;
};

int run_synth(const SynthArgs& a) {
    const Dataset ds = generate_synthetic(
        {a.rows, {a.mt_low, a.mt_high}, a.pearson, a.noise, a.seed});
    with_output(a.out, [&](std::ostream& out) {
        write_csv(ds, out, CsvSchema{});
    });
    return 0;
}

struct TrainArgs {
    std::string in, out, model = "gbr";
    std::uint64_t seed = 1;
    SchemaFlags schema;
    HyperFlags hyper;
};

int run_train(const TrainArgs& a) {
    const ModelKind kind = model_kind_from_string(a.model);
    const Dataset ds = load_trace(a.in, a.schema.schema);
    const FeatureSet fs = extract(ds);
    const TrainedModel model = fit(kind, fs, a.hyper.for_kind(kind), a.seed);
    with_output(a.out, [&](std::ostream& out) { save_model(model, out); });
    std::cerr << "trained " << a.model << " on " << fs.size() << " rows in "
              << model.meta.fit_wall_time_s << " s\n";
    return 0;
}

struct EvalArgs {
    std::string in, out, text_out;
    std::vector<std::string> models{"lr", "mlp", "gbr"};
    double split = 0.8;
    std::vector<std::uint64_t> seeds{1};
    SchemaFlags schema;
    HyperFlags hyper;
};

int run_eval(const EvalArgs& a) {
    const Dataset ds = load_trace(a.in, a.schema.schema);
    std::vector<ModelKind> kinds;
    std::map<ModelKind, HyperParams> hypers;
    for (const auto& name : a.models) {
        const ModelKind kind = model_kind_from_string(name);
        kinds.push_back(kind);
        hypers.emplace(kind, a.hyper.for_kind(kind));
    }
    const ComparisonReport report =
        run_comparison(ds, kinds, hypers, a.split, a.seeds);
    with_output(a.out, [&](std::ostream& out) {
        write_comparison_csv(report, out);
    });
    if (!a.text_out.empty()) {
        with_output(a.text_out, [&](std::ostream& out) {
            write_comparison_text(report, out);
        });
    }
    return 0;
}

struct TuneArgs {
    std::string in, out, curve_out, model = "gbr", grid;
    double val_fraction = 0.2;
    int k_folds = 0;
    std::uint64_t seed = 1;
    SchemaFlags schema;
};

ParamGrid parse_grid(ModelKind kind, const std::string& text, int k_folds) {
    ParamGrid grid;
    grid.kind = kind;
    grid.k_folds = k_folds;
    std::stringstream axes(text);
    std::string axis;
    while (std::getline(axes, axis, ';')) {
        if (axis.empty()) continue;
        const auto eq = axis.find('=');
        if (eq == std::string::npos) {
            throw DataError("grid axis '" + axis + "' is missing '='");
        }
        std::vector<double> values;
        std::stringstream vals(axis.substr(eq + 1));
        std::string val;
        while (std::getline(vals, val, ',')) {
            const auto v = csv::parse_double(val);
            if (!v) {
                throw DataError("grid value '" + val + "' is not numeric");
            }
            values.push_back(*v);
        }
        if (values.empty()) {
            throw DataError("grid axis '" + axis + "' has no values");
        }
        grid.axes.emplace_back(axis.substr(0, eq), std::move(values));
    }
    return grid;
}

int run_tune(const TuneArgs& a) {
    const ModelKind kind = model_kind_from_string(a.model);
    const Dataset ds = load_trace(a.in, a.schema.schema);
    const FeatureSet fs = extract(ds);
    const ParamGrid grid = parse_grid(kind, a.grid, a.k_folds);
    const TuneResult result = grid_search(fs, grid, a.val_fraction, a.seed);
    with_output(a.out, [&](std::ostream& out) { write_tune_csv(result, out); });

    if (!a.curve_out.empty()) {
        if (kind == ModelKind::LinReg) {
            throw ModelError("tune: --curve-out requires an iterative model");
        }
        const auto& best = result.table[result.best_index];
        const auto [train_losses, val_losses] =
            learning_curve(kind, fs, best.hyper, a.seed, a.val_fraction);
        with_output(a.curve_out, [&](std::ostream& out) {
            write_curve_csv(train_losses, val_losses, out);
        });
    }
    const auto& best = result.table[result.best_index];
    std::cerr << "best config (val mae " << best.val_mae << "):";
    for (const auto& [name, value] : best.config) {
        std::cerr << ' ' << name << '=' << value;
    }
    std::cerr << '\n';
    return 0;
}

struct PredictArgs {
    std::string model, in, out = "-", mt_col = "mt";
};

int run_predict(const PredictArgs& a) {
    const TrainedModel model = with_input(a.model, [](std::istream& in) {
        return load_model(in);
    });
    const csv::Table table = with_input(a.in, [](std::istream& in) {
        return csv::read(in);
    });
    const auto col = table.column(a.mt_col);
    if (!col) throw DataError("predict: no column '" + a.mt_col + "' in input");

    std::vector<double> mts_ms(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        mts_ms[r] = cell_as_double(table, r, *col, "mt");
    }
    std::vector<double> mts_s(mts_ms.size());
    std::transform(mts_ms.begin(), mts_ms.end(), mts_s.begin(), ms_to_s);
    const std::vector<double> rates = predict_batch(model, mts_s);

    with_output(a.out, [&](std::ostream& out) {
        csv::write_row(out, {"mt", "mcr_pred"});
        for (std::size_t r = 0; r < rates.size(); ++r) {
            csv::write_row(out, {csv::format_double(mts_ms[r]),
                                 csv::format_double(rates[r])});
        }
    });
    return 0;
}

struct PlanArgs {
    std::string workload, topology, model, out, csv_out;
};

int run_plan(const PlanArgs& a) {
    const csv::Table wl = with_input(a.workload, [](std::istream& in) {
        return csv::read(in);
    });
    const auto w_prod = wl.column("producer");
    const auto w_ms = wl.column("microservice");
    const auto w_rate = wl.column("rate");
    if (!w_prod || !w_ms || !w_rate) {
        throw DataError(
            "workload CSV needs columns producer,microservice,rate");
    }
    Workload workload;
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t r = 0; r < wl.rows.size(); ++r) {
        WorkloadEntry e{cell(wl, r, *w_prod, "producer"),
                        cell(wl, r, *w_ms, "microservice"),
                        cell_as_double(wl, r, *w_rate, "rate")};
        if (e.rate < 0.0) {
            throw DataError("negative rate for microservice '" +
                            e.microservice + "'");
        }
        if (!seen.emplace(e.producer, e.microservice).second) {
            throw DataError("duplicate workload entry for (" + e.producer +
                            ", " + e.microservice + ")");
        }
        workload.entries.push_back(std::move(e));
    }

    const csv::Table topo = with_input(a.topology, [](std::istream& in) {
        return csv::read(in);
    });
    const auto t_ms = topo.column("microservice");
    const auto t_res = topo.column("resource");
    const auto t_mt = topo.column("mt_s");
    if (!t_ms || !t_res || !t_mt) {
        throw DataError(
            "topology CSV needs columns microservice,resource,mt_s");
    }
    std::map<std::string, std::string> placements;
    std::map<std::string, double> mts;
    for (std::size_t r = 0; r < topo.rows.size(); ++r) {
        const std::string& ms = cell(topo, r, *t_ms, "microservice");
        const double mt = cell_as_double(topo, r, *t_mt, "mt_s");
        if (mt <= 0.0) {
            throw DataError("non-positive mt_s for microservice '" + ms + "'");
        }
        if (!placements.emplace(ms, cell(topo, r, *t_res, "resource")).second) {
            throw DataError("duplicate topology row for microservice '" + ms +
                            "'");
        }
        mts.emplace(ms, mt);
    }

    TrainedModel model;
    const bool has_model = !a.model.empty();
    if (has_model) {
        model = with_input(a.model, [](std::istream& in) {
            return load_model(in);
        });
    }
    const ReplicaPlan plan = plan_replicas(workload, placements, mts,
                                           has_model ? &model : nullptr);
    with_output(a.out, [&](std::ostream& out) { emit_plan(plan, out); });
    if (!a.csv_out.empty()) {
        with_output(a.csv_out, [&](std::ostream& out) {
            write_plan_csv(plan, out);
        });
    }

    if (has_model) {
        // Observed workload rates act as the actuals for the error report.
        std::vector<double> actual, predicted, plan_mts;
        for (std::size_t i = 0; i < workload.entries.size(); ++i) {
            actual.push_back(workload.entries[i].rate);
            predicted.push_back(plan.rows[i].mcr_pred);
            plan_mts.push_back(plan.rows[i].mt_s);
        }
        const MapeResult err = replica_error(actual, predicted, plan_mts);
        std::cout << "replica mape: " << csv::format_double(err.percent)
                  << "% (zero-replica rows excluded: " << err.excluded
                  << ")\n";
    }
    return 0;
}

struct PlotArgs {
    std::string kind = "scatter";
    std::string points, fit, curves, out, title;
    SchemaFlags schema;
};

int run_plot(const PlotArgs& a) {
    svg::Chart chart;
    chart.title = a.title;
    if (a.kind == "scatter") {
        if (a.points.empty()) throw DataError("plot scatter: --points required");
        const Dataset ds = load_trace(a.points, a.schema.schema);
        svg::Series dots;
        dots.label = "observed";
        dots.style = svg::Series::Style::Dots;
        for (const auto& r : ds.records) dots.points.emplace_back(r.mt, r.mcr);
        chart.series.push_back(std::move(dots));
        if (!a.fit.empty()) {
            const csv::Table t = with_input(a.fit, [](std::istream& in) {
                return csv::read(in);
            });
            const auto c_mt = t.column("mt");
            const auto c_pred = t.column("mcr_pred");
            if (!c_mt || !c_pred) {
                throw DataError("plot: fit CSV needs columns mt,mcr_pred");
            }
            svg::Series line;
            line.label = "predicted";
            line.style = svg::Series::Style::Line;
            line.color = "#d62728";
            for (std::size_t r = 0; r < t.rows.size(); ++r) {
                line.points.emplace_back(cell_as_double(t, r, *c_mt, "mt"),
                                         cell_as_double(t, r, *c_pred,
                                                        "mcr_pred"));
            }
            std::sort(line.points.begin(), line.points.end());
            chart.series.push_back(std::move(line));
        }
        if (chart.title.empty()) chart.title = "call rate vs microservice time";
        chart.x_label = "microservice time [ms/call]";
        chart.y_label = "call rate [calls/s]";
    } else if (a.kind == "curves") {
        if (a.curves.empty()) throw DataError("plot curves: --curves required");
        const csv::Table t = with_input(a.curves, [](std::istream& in) {
            return csv::read(in);
        });
        const auto c_it = t.column("iteration");
        const auto c_train = t.column("train_loss");
        const auto c_val = t.column("val_loss");
        if (!c_it || !c_train) {
            throw DataError(
                "plot: curves CSV needs columns iteration,train_loss");
        }
        svg::Series train;
        train.label = "train loss";
        train.style = svg::Series::Style::Line;
        svg::Series val;
        val.label = "validation loss";
        val.style = svg::Series::Style::Line;
        val.color = "#ff7f0e";
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            const double it = cell_as_double(t, r, *c_it, "iteration");
            if (!cell(t, r, *c_train, "train_loss").empty()) {
                train.points.emplace_back(
                    it, cell_as_double(t, r, *c_train, "train_loss"));
            }
            if (c_val && *c_val < t.rows[r].size() &&
                !t.rows[r][*c_val].empty()) {
                val.points.emplace_back(
                    it, cell_as_double(t, r, *c_val, "val_loss"));
            }
        }
        chart.series.push_back(std::move(train));
        if (!val.points.empty()) chart.series.push_back(std::move(val));
        if (chart.title.empty()) chart.title = "training loss per iteration";
        chart.x_label = "iteration";
        chart.y_label = "loss [calls/s]";
    } else {
        throw DataError("plot: unknown kind '" + a.kind +
                        "' (use scatter or curves)");
    }
    with_output(a.out, [&](std::ostream& out) { chart.render(out); });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "scalecast - predict microservice call rates from execution times "
        "and plan replica counts"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "read options from a key=value file (flags override)");

    IngestArgs ingest_args;
    auto* c_ingest = app.add_subcommand(
        "ingest", "validate and filter a trace into canonical CSV");
    c_ingest->add_option("--in", ingest_args.in, "trace CSV ('-' for stdin)")
        ->required();
    c_ingest->add_option("--out", ingest_args.out, "output CSV ('-' for stdout)");
    ingest_args.schema.add_options(c_ingest);
    c_ingest->add_option("--mt-min", ingest_args.mt_min, "lower mt bound, ms/call");
    c_ingest->add_option("--mt-max", ingest_args.mt_max, "upper mt bound, ms/call");
    c_ingest->add_option("--mcr-min", ingest_args.mcr_min, "lower mcr bound, calls/s");
    c_ingest->add_option("--mcr-max", ingest_args.mcr_max, "upper mcr bound, calls/s");
    c_ingest->add_flag("--no-filter", ingest_args.no_filter,
                       "skip metric range filtering");

    SynthArgs synth_args;
    auto* c_synth = app.add_subcommand(
        "synth", "generate a synthetic trace with a target correlation");
    c_synth->add_option("--out", synth_args.out, "output CSV ('-' for stdout)");
    c_synth->add_option("--rows", synth_args.rows, "row count")->required();
    c_synth->add_option("--mt-low", synth_args.mt_low, "lowest mt, ms/call");
    c_synth->add_option("--mt-high", synth_args.mt_high, "highest mt, ms/call");
    c_synth->add_option("--pearson", synth_args.pearson,
                        "target Pearson correlation (0, 1]");
    c_synth->add_option("--noise", synth_args.noise,
                        "initial noise level (0 disables noise)");
    c_synth->add_option("--seed", synth_args.seed, "generator seed");

    TrainArgs train_args;
    auto* c_train = app.add_subcommand("train", "fit one model to a trace");
    c_train->add_option("--in", train_args.in, "trace CSV")->required();
    c_train->add_option("--out", train_args.out, "model JSON path")->required();
    c_train->add_option("--model", train_args.model, "lr | mlp | gbr");
    c_train->add_option("--seed", train_args.seed, "training seed");
    train_args.schema.add_options(c_train);
    train_args.hyper.add_options(c_train);

    EvalArgs eval_args;
    auto* c_eval = app.add_subcommand(
        "eval", "compare models over seeds on held-out data");
    c_eval->add_option("--in", eval_args.in, "trace CSV")->required();
    c_eval->add_option("--out", eval_args.out, "report CSV path")->required();
    c_eval->add_option("--text-out", eval_args.text_out,
                       "aligned text table path");
    c_eval->add_option("--models", eval_args.models, "model kinds")
        ->delimiter(',');
    c_eval->add_option("--split", eval_args.split, "train fraction (0, 1)");
    c_eval->add_option("--seeds", eval_args.seeds, "seed list")
        ->delimiter(',');
    eval_args.schema.add_options(c_eval);
    eval_args.hyper.add_options(c_eval);

    TuneArgs tune_args;
    auto* c_tune = app.add_subcommand(
        "tune", "exhaustive grid search with validation scoring");
    c_tune->add_option("--in", tune_args.in, "trace CSV")->required();
    c_tune->add_option("--out", tune_args.out, "result table CSV")->required();
    c_tune->add_option("--curve-out", tune_args.curve_out,
                       "learning-curve CSV for the best config");
    c_tune->add_option("--model", tune_args.model, "mlp | gbr | lr");
    c_tune->add_option("--grid", tune_args.grid,
                       "grid spec, e.g. n_estimators=1,15;learning_rate=0.4");
    c_tune->add_option("--val-fraction", tune_args.val_fraction,
                       "validation fraction for hold-out scoring");
    c_tune->add_option("--k-folds", tune_args.k_folds,
                       "use k-fold cross-validation when >= 2");
    c_tune->add_option("--seed", tune_args.seed, "search seed");
    tune_args.schema.add_options(c_tune);

    PredictArgs predict_args;
    auto* c_predict = app.add_subcommand(
        "predict", "map a microservice-time column to predicted call rates");
    c_predict->add_option("--model", predict_args.model, "model JSON")
        ->required();
    c_predict->add_option("--in", predict_args.in, "input CSV")->required();
    c_predict->add_option("--out", predict_args.out, "output CSV");
    c_predict->add_option("--mt-col", predict_args.mt_col,
                          "column holding mt in ms/call");

    PlanArgs plan_args;
    auto* c_plan = app.add_subcommand(
        "plan", "emit a replica plan from workload and topology");
    c_plan->add_option("--workload", plan_args.workload,
                       "CSV: producer,microservice,rate")
        ->required();
    c_plan->add_option("--topology", plan_args.topology,
                       "CSV: microservice,resource,mt_s")
        ->required();
    c_plan->add_option("--model", plan_args.model,
                       "model JSON; when set, rates are predicted from mt");
    c_plan->add_option("--out", plan_args.out, "plan JSON path")->required();
    c_plan->add_option("--csv-out", plan_args.csv_out, "plan CSV path");

    PlotArgs plot_args;
    auto* c_plot = app.add_subcommand("plot", "render emitted CSVs to SVG");
    c_plot->add_option("--kind", plot_args.kind, "scatter | curves");
    c_plot->add_option("--points", plot_args.points, "trace CSV for dots");
    c_plot->add_option("--fit", plot_args.fit, "prediction CSV (mt,mcr_pred)");
    c_plot->add_option("--curves", plot_args.curves,
                       "learning-curve CSV (iteration,train_loss,val_loss)");
    c_plot->add_option("--out", plot_args.out, "SVG path")->required();
    c_plot->add_option("--title", plot_args.title, "chart title");
    plot_args.schema.add_options(c_plot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c_ingest->parsed()) return run_ingest(ingest_args);
        if (c_synth->parsed()) return run_synth(synth_args);
        if (c_train->parsed()) return run_train(train_args);
        if (c_eval->parsed()) return run_eval(eval_args);
        if (c_tune->parsed()) return run_tune(tune_args);
        if (c_predict->parsed()) return run_predict(predict_args);
        if (c_plan->parsed()) return run_plan(plan_args);
        if (c_plot->parsed()) return run_plot(plot_args);
    } catch (const ModelError& e) {
        std::cerr << "model error: " << e.what() << '\n';
        return 3;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
