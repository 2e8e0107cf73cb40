#include "scalecast/replica.hpp"

#include <cmath>
#include <ctime>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "scalecast/csv.hpp"
#include "scalecast/errors.hpp"

namespace scalecast {

namespace {

using nlohmann::ordered_json;

constexpr int kPlanFormatVersion = 1;
constexpr double kMbPerGb = 1024.0;

std::string now_rfc3339() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

double microservice_time(const MicroserviceReq& req, const ResourceSpec& res) {
    if (!(res.cpu_speed > 0.0)) {
        throw DataError("microservice_time: resource '" + res.id +
                        "' has non-positive cpu speed");
    }
    return req.workload_mi / res.cpu_speed;
}

bool feasible(const MicroserviceReq& req, const ResourceSpec& res) {
    return req.cores <= res.cores && req.mem_mb <= res.mem_gb * kMbPerGb &&
           microservice_time(req, res) <= req.deadline_s;
}

long long replica_count(double mcr, double mt_s) {
    if (!(mcr > 0.0)) return 0;
    return static_cast<long long>(std::ceil(mcr * mt_s));
}

ReplicaPlan plan_replicas(const Workload& workload,
                          const std::map<std::string, std::string>& placements,
                          const std::map<std::string, double>& mts,
                          const TrainedModel* model) {
    ReplicaPlan plan;
    plan.rows.reserve(workload.entries.size());
    for (const auto& entry : workload.entries) {
        const auto placement = placements.find(entry.microservice);
        if (placement == placements.end()) {
            throw DataError("plan_replicas: no placement for microservice '" +
                            entry.microservice + "'");
        }
        const auto mt = mts.find(entry.microservice);
        if (mt == mts.end()) {
            throw DataError("plan_replicas: no microservice time for '" +
                            entry.microservice + "'");
        }
        const double rate =
            model ? predict(*model, mt->second) : entry.rate;
        plan.rows.push_back(ReplicaRow{entry.microservice, placement->second,
                                       mt->second, rate,
                                       replica_count(rate, mt->second)});
    }
    return plan;
}

MapeResult replica_error(const std::vector<double>& actual_rates,
                         const std::vector<double>& predicted_rates,
                         const std::vector<double>& mts) {
    if (actual_rates.size() != predicted_rates.size() ||
        actual_rates.size() != mts.size()) {
        throw DataError("replica_error: length mismatch");
    }
    std::vector<double> actual(actual_rates.size());
    std::vector<double> predicted(actual_rates.size());
    for (std::size_t i = 0; i < actual_rates.size(); ++i) {
        actual[i] =
            static_cast<double>(replica_count(actual_rates[i], mts[i]));
        predicted[i] =
            static_cast<double>(replica_count(predicted_rates[i], mts[i]));
    }
    return mape(actual, predicted);
}

void emit_plan(const ReplicaPlan& plan, std::ostream& out) {
    ordered_json j;
    j["version"] = kPlanFormatVersion;
    j["generated_at"] =
        plan.generated_at.empty() ? now_rfc3339() : plan.generated_at;
    ordered_json rows = ordered_json::array();
    for (const auto& r : plan.rows) {
        rows.push_back(ordered_json{{"microservice", r.microservice},
                                    {"resource", r.resource},
                                    {"mt_s", r.mt_s},
                                    {"mcr_pred", r.mcr_pred},
                                    {"replicas", r.replicas}});
    }
    j["rows"] = std::move(rows);
    const std::string doc = j.dump(2);
    out.write(doc.data(), static_cast<std::streamsize>(doc.size()));
    out.put('\n');
    if (!out) throw DataError("emit_plan: write failed");
}

ReplicaPlan parse_plan(std::istream& in) {
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("parse_plan: invalid JSON: ") + e.what());
    }
    try {
        if (j.at("version").get<int>() != kPlanFormatVersion) {
            throw DataError("parse_plan: unsupported format version");
        }
        ReplicaPlan plan;
        plan.generated_at = j.at("generated_at").get<std::string>();
        for (const auto& rj : j.at("rows")) {
            plan.rows.push_back(ReplicaRow{
                rj.at("microservice").get<std::string>(),
                rj.at("resource").get<std::string>(),
                rj.at("mt_s").get<double>(), rj.at("mcr_pred").get<double>(),
                rj.at("replicas").get<long long>()});
        }
        return plan;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("parse_plan: malformed document: ") +
                        e.what());
    }
}

void write_plan_csv(const ReplicaPlan& plan, std::ostream& out) {
    csv::write_row(out,
                   {"microservice", "resource", "mt_s", "mcr_pred", "replicas"});
    for (const auto& r : plan.rows) {
        csv::write_row(out, {r.microservice, r.resource,
                             csv::format_double(r.mt_s),
                             csv::format_double(r.mcr_pred),
                             std::to_string(r.replicas)});
    }
}

}  // namespace scalecast
