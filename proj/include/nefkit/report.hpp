#pragma once

#include "nefkit/cones.hpp"
#include "nefkit/diagonal.hpp"
#include "nefkit/exactnum.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace nefkit {

enum class ReportFormat { Text, Json };

// Result of one CLI command. JSON output is key-sorted and carries no
// timestamps, so identical inputs give byte-identical reports.
struct Report {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json result = nlohmann::json::object();
    std::vector<std::string> provenance;

    nlohmann::json to_json() const;
    static Report from_json(const nlohmann::json& j);

    bool operator==(const Report&) const = default;
};

std::string emit_report(const Report& report, ReportFormat format);

// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
nlohmann::json exact_to_json(const ExactInt& v);
ExactInt exact_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);

} // namespace nefkit
