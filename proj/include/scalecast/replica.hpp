#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "scalecast/eval.hpp"
#include "scalecast/model.hpp"

namespace scalecast {

// A cloud machine: core count, memory in GB, processing speed in MI/s.
struct ResourceSpec {
    std::string id;
    double cores = 0.0;
    double mem_gb = 0.0;
    double cpu_speed = 0.0;  // MI/s
};

// Per-microservice requirement tuple: minimum cores, memory in MB,
// execution deadline in seconds, computational workload in MI.
struct MicroserviceReq {
    std::string id;
    double cores = 0.0;
    double mem_mb = 0.0;
    double deadline_s = 0.0;
    double workload_mi = 0.0;
};

// Producer -> microservice rate entries; only rates are modeled, payload
// contents stay out of scope. (producer, microservice) pairs are unique.
struct WorkloadEntry {
    std::string producer;
    std::string microservice;
    double rate = 0.0;  // calls/s, observed or predicted
};

struct Workload {
    std::vector<WorkloadEntry> entries;
};

struct ReplicaRow {
    std::string microservice;
    std::string resource;
    double mt_s = 0.0;       // s/call
    double mcr_pred = 0.0;   // calls/s
    long long replicas = 0;  // ceil(mcr_pred * mt_s), 0 when rate is 0
};

struct ReplicaPlan {
    std::vector<ReplicaRow> rows;
    std::string generated_at;  // RFC 3339; filled at emission when empty
};

// Per-call execution time: workload MI divided by resource speed MI/s.
double microservice_time(const MicroserviceReq& req, const ResourceSpec& res);

// True iff the resource meets cores, memory (MB vs GB at 1 GB = 1024 MB)
// and the per-call time fits the deadline.
bool feasible(const MicroserviceReq& req, const ResourceSpec& res);

// Replica count for one (rate, time) pair.
long long replica_count(double mcr, double mt_s);

// One plan row per workload entry. With a model, the rate is predicted
// from the measured mt; otherwise the observed rate is used. A missing
// placement or mt is a hard error naming the microservice.
ReplicaPlan plan_replicas(const Workload& workload,
                          const std::map<std::string, std::string>& placements,
                          const std::map<std::string, double>& mts,
                          const TrainedModel* model);

// MAPE between actual and predicted replica counts derived from the same
// microservice times; zero-actual-replica rows are excluded and counted.
MapeResult replica_error(const std::vector<double>& actual_rates,
                         const std::vector<double>& predicted_rates,
                         const std::vector<double>& mts);

// {"version", "generated_at", "rows": [...]} JSON document; emission of a
// parsed plan is byte-identical to its source.
void emit_plan(const ReplicaPlan& plan, std::ostream& out);
ReplicaPlan parse_plan(std::istream& in);

void write_plan_csv(const ReplicaPlan& plan, std::ostream& out);

}  // namespace scalecast
