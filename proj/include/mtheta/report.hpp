#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace mtheta::report {

using json = nlohmann::ordered_json;

struct CheckRecord {
    std::string name;
    std::string status;  // "pass" | "fail" | "skip"
    json witness;        // inputs echoed exactly for failing checks

    static CheckRecord pass(std::string name) { return {std::move(name), "pass", json()}; }
    static CheckRecord fail(std::string name, json witness) {
        return {std::move(name), "fail", std::move(witness)};
    }
    static CheckRecord skip(std::string name, json witness = json()) {
        return {std::move(name), "skip", std::move(witness)};
    }
};

struct Report {
    std::string command;
    json params;
    json conventions;
    std::vector<CheckRecord> checks;
    std::uint64_t seed = 0;

    bool all_pass() const;
    int exit_code() const { return all_pass() ? 0 : 1; }

    // Machine form: fixed field order, checks sorted by name, no floats;
    // byte-identical for identical (params, seed).
    json to_json() const;
    std::string to_text() const;
};

// Convention strings echoed by every report.
json conventions();

}  // namespace mtheta::report
