#include "scalecast/trace.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include "scalecast/csv.hpp"
#include "scalecast/errors.hpp"
#include "scalecast/rng.hpp"

namespace scalecast {

namespace {

std::size_t require_column(const csv::Table& t, const std::string& name) {
    const auto idx = t.column(name);
    if (!idx) throw DataError("trace: missing mapped column '" + name + "'");
    return *idx;
}

double pearson_of(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    long double sx = 0.0L, sy = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const long double mx = sx / n, my = sy / n;
    long double sxy = 0.0L, sxx = 0.0L, syy = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const long double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

}  // namespace

IngestResult ingest_csv(std::istream& in, const CsvSchema& schema,
                        std::string provenance) {
    const csv::Table table = csv::read(in);
    const std::size_t c_ts = require_column(table, schema.timestamp);
    const std::size_t c_ms = require_column(table, schema.microservice);
    const std::size_t c_ct = require_column(table, schema.container);
    const std::size_t c_mt = require_column(table, schema.mt);
    const std::size_t c_mcr = require_column(table, schema.mcr);
    const std::size_t width =
        1 + std::max({c_ts, c_ms, c_ct, c_mt, c_mcr});

    IngestResult result;
    result.dataset.provenance = std::move(provenance);
    result.dataset.records.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        if (row.size() < width) {
            ++result.rows_skipped;
            continue;
        }
        const auto ts = csv::parse_int(row[c_ts]);
        const auto mt = csv::parse_double(row[c_mt]);
        const auto mcr = csv::parse_double(row[c_mcr]);
        if (!ts || *ts < 0 || !mt || *mt <= 0.0 || !mcr || *mcr < 0.0) {
            ++result.rows_skipped;
            continue;
        }
        result.dataset.records.push_back(
            {*ts, row[c_ms], row[c_ct], *mt, *mcr});
    }
    return result;
}

void write_csv(const Dataset& ds, std::ostream& out, const CsvSchema& schema) {
    csv::write_row(out, {schema.timestamp, schema.microservice,
                         schema.container, schema.mt, schema.mcr});
    for (const auto& r : ds.records) {
        csv::write_row(out, {std::to_string(r.timestamp), r.microservice_id,
                             r.container_id, csv::format_double(r.mt),
                             csv::format_double(r.mcr)});
    }
}

Dataset filter_ranges(const Dataset& ds, Bounds mt_bounds, Bounds mcr_bounds) {
    if (mt_bounds.low > mt_bounds.high) {
        throw DataError("filter_ranges: inverted mt bounds");
    }
    if (mcr_bounds.low > mcr_bounds.high) {
        throw DataError("filter_ranges: inverted mcr bounds");
    }
    Dataset out;
    out.provenance = ds.provenance;
    for (const auto& r : ds.records) {
        if (r.mt >= mt_bounds.low && r.mt <= mt_bounds.high &&
            r.mcr >= mcr_bounds.low && r.mcr <= mcr_bounds.high) {
            out.records.push_back(r);
        }
    }
    return out;
}

std::pair<Dataset, Dataset> split(const Dataset& ds, double train_fraction,
                                  std::uint64_t seed) {
    const std::size_t n = ds.records.size();
    if (n < 2) throw DataError("split: dataset needs at least 2 records");
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw DataError("split: train_fraction must be in (0, 1)");
    }
    Rng rng(seed);
    const auto idx = shuffled_indices(n, rng);
    const auto n_train = static_cast<std::size_t>(
        std::llround(train_fraction * static_cast<double>(n)));

    Dataset train, test;
    train.provenance = ds.provenance;
    test.provenance = ds.provenance;
    train.records.reserve(n_train);
    test.records.reserve(n - n_train);
    for (std::size_t i = 0; i < n; ++i) {
        (i < n_train ? train : test).records.push_back(ds.records[idx[i]]);
    }
    return {std::move(train), std::move(test)};
}

Dataset generate_synthetic(const SyntheticSpec& spec) {
    if (spec.n_rows < 3) {
        throw DataError("generate_synthetic: n_rows must be >= 3");
    }
    if (!(spec.mt_range.low > 0.0 && spec.mt_range.high > spec.mt_range.low)) {
        throw DataError("generate_synthetic: mt_range must satisfy 0 < low < high");
    }
    if (!(spec.target_pearson > 0.0 && spec.target_pearson <= 1.0)) {
        throw DataError("generate_synthetic: target_pearson must be in (0, 1]");
    }
    if (spec.noise_scale < 0.0) {
        throw DataError("generate_synthetic: noise_scale must be >= 0");
    }

    const std::size_t n = spec.n_rows;
    Rng rng(spec.seed);
    std::vector<double> mt(n), noise(n);
    for (std::size_t i = 0; i < n; ++i) {
        mt[i] = rng.log_uniform(spec.mt_range.low, spec.mt_range.high);
    }
    for (std::size_t i = 0; i < n; ++i) {
        noise[i] = rng.gaussian();
    }

    const auto rates_for = [&](double sigma) {
        std::vector<double> mcr(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double v =
                kSyntheticSlopePerMs * mt[i] + kSyntheticIntercept +
                sigma * noise[i];
            mcr[i] = std::max(v, 0.0);
        }
        return mcr;
    };

    std::vector<double> mcr;
    if (spec.noise_scale == 0.0) {
        mcr = rates_for(0.0);
    } else {
        // Noise is drawn once; only its scale is searched, so the output
        // is a deterministic function of the spec.
        long double sx = 0.0L, sxx = 0.0L;
        for (double v : mt) {
            sx += v;
            sxx += v * v;
        }
        const double x_std = std::sqrt(
            static_cast<double>(sxx / n - (sx / n) * (sx / n)));
        const double signal_std = kSyntheticSlopePerMs * x_std;

        constexpr double kTolerance = 0.02;  // inside the contractual 0.05
        double lo = 0.0;  // pearson(lo) = 1
        double hi = std::max(spec.noise_scale, 1e-6) * signal_std;
        double achieved = 0.0;
        bool bracketed = false;
        for (int i = 0; i < 60; ++i) {
            achieved = pearson_of(mt, rates_for(hi));
            if (std::abs(achieved - spec.target_pearson) <= kTolerance) {
                mcr = rates_for(hi);
                break;
            }
            if (achieved < spec.target_pearson) {
                bracketed = true;
                break;
            }
            lo = hi;
            hi *= 2.0;
        }
        if (mcr.empty() && bracketed) {
            for (int i = 0; i < 80 && mcr.empty(); ++i) {
                const double mid = 0.5 * (lo + hi);
                achieved = pearson_of(mt, rates_for(mid));
                if (std::abs(achieved - spec.target_pearson) <= kTolerance) {
                    mcr = rates_for(mid);
                } else if (achieved > spec.target_pearson) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
        }
        if (mcr.empty()) {
            throw DataError(
                "generate_synthetic: could not reach target Pearson " +
                csv::format_double(spec.target_pearson) + "; achieved " +
                csv::format_double(achieved));
        }
    }

    Dataset out;
    out.provenance = "synthetic";
    out.records.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        TraceRecord r;
        r.timestamp = static_cast<std::int64_t>(i) * 30;  // 30 s cadence
        r.microservice_id = "m" + std::to_string(i % 64);
        r.container_id = "c" + std::to_string(i);
        r.mt = mt[i];
        r.mcr = mcr[i];
        out.records.push_back(std::move(r));
    }
    return out;
}

}  // namespace scalecast
