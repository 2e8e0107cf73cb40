#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace scalecast {

// One monitored observation from a microservice trace.
// mt is the per-call execution time in ms/call, mcr the arrival rate in
// calls/s. Units stay at the ingestion convention; the ms -> s conversion
// happens exactly once, in features::extract.
struct TraceRecord {
    std::int64_t timestamp = 0;   // seconds since epoch, >= 0
    std::string microservice_id;
    std::string container_id;
    double mt = 0.0;              // ms/call, > 0
    double mcr = 0.0;             // calls/s, >= 0

    bool operator==(const TraceRecord&) const = default;
};

// Immutable after construction; safe to share across readers.
struct Dataset {
    std::vector<TraceRecord> records;
    std::string provenance;  // file path or "synthetic"

    std::size_t size() const { return records.size(); }
};

// Maps CSV header names onto the five record fields. Defaults follow the
// Alibaba-style trace column set.
struct CsvSchema {
    std::string timestamp = "timestamp";
    std::string microservice = "msname";
    std::string container = "msinstanceid";
    std::string mt = "mt";
    std::string mcr = "mcr";
};

struct IngestResult {
    Dataset dataset;
    std::size_t rows_skipped = 0;  // rows dropped for unparsable/invalid metrics
};

// Closed interval [low, high].
struct Bounds {
    double low;
    double high;
};

// Parameters for the synthetic trace generator. mt is drawn log-uniform
// over mt_range (ms/call); mcr follows a fixed affine law plus Gaussian
// noise calibrated so the empirical Pearson coefficient lands within
// +-0.05 of target_pearson. noise_scale = 0 disables noise entirely
// (exact line); otherwise it seeds the calibration bracket as a multiple
// of the signal's standard deviation.
struct SyntheticSpec {
    std::size_t n_rows = 0;          // >= 3
    Bounds mt_range{0.0, 0.0};       // ms/call, 0 < low < high
    double target_pearson = 0.0;     // (0, 1]
    double noise_scale = 1.0;        // >= 0
    std::uint64_t seed = 0;
};

// Affine law used by generate_synthetic: mcr = slope * mt_ms + intercept
// before noise and clamping. Exposed so noiseless outputs can be checked
// against an exact line.
inline constexpr double kSyntheticSlopePerMs = 0.8;  // calls/s per (ms/call)
inline constexpr double kSyntheticIntercept = 5.0;   // calls/s

// Reads a trace from CSV. Rows with unparsable or invalid metric fields
// (non-numeric mt/mcr, mt <= 0, mcr < 0, bad timestamp, short rows) are
// skipped and counted rather than aborting; a missing mapped column is a
// hard error.
IngestResult ingest_csv(std::istream& in, const CsvSchema& schema,
                        std::string provenance);

// Writes the identical CSV dialect ingest_csv reads; round-trips exactly.
void write_csv(const Dataset& ds, std::ostream& out, const CsvSchema& schema);

// Keeps exactly the records with mt and mcr inside both closed intervals,
// order preserved. Inverted bounds are a hard error.
Dataset filter_ranges(const Dataset& ds, Bounds mt_bounds, Bounds mcr_bounds);

// Default bounds used for the Alibaba-style trace.
inline constexpr Bounds kDefaultMtBounds{0.01, 5859.0};    // ms/call
inline constexpr Bounds kDefaultMcrBounds{0.025, 4874.0};  // calls/s

// Disjoint partition covering all records; the shuffle is a deterministic
// function of seed and |train| = round(train_fraction * n).
std::pair<Dataset, Dataset> split(const Dataset& ds, double train_fraction,
                                  std::uint64_t seed);

Dataset generate_synthetic(const SyntheticSpec& spec);

}  // namespace scalecast
