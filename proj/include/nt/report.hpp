#pragma once

#include <string>

#include <json.hpp>

#include "nt/arith.hpp"

namespace nt {

using json = nlohmann::json;

// Outcome of a verification sweep.  Failure witnesses carry the op inputs and
// both sides, so any failure can be replayed from its serialization.
struct SweepReport {
    std::string suite;
    json params = json::object();
    i64 checks = 0;
    std::vector<json> failures;
    double max_deviation = 0.0;
    double wall_seconds = 0.0;

    bool passed() const { return failures.empty(); }

    void record(bool ok, double deviation, const json& witness) {
        ++checks;
        if (deviation > max_deviation) max_deviation = deviation;
        if (!ok) failures.push_back(witness);
    }

    // hot-loop variant: the witness is only materialized on failure
    template <class WitnessFn>
    void tally(bool ok, double deviation, WitnessFn&& witness) {
        ++checks;
        if (deviation > max_deviation) max_deviation = deviation;
        if (!ok) failures.push_back(witness());
    }

    void merge(const SweepReport& other) {
        checks += other.checks;
        max_deviation = std::max(max_deviation, other.max_deviation);
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

json to_json(const SweepReport& r);

// deterministic serialization: keys sorted, floats rendered %.12e
std::string dump_json(const json& j, int indent = 0);

std::string dump_report(const SweepReport& r);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace nt
