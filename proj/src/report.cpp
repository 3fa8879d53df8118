#include "nefkit/report.hpp"

#include <limits>
#include <sstream>

namespace nefkit {

using nlohmann::json;

json Report::to_json() const
{
    return json{
        {"command", command},
        {"inputs", inputs},
        {"result", result},
        {"provenance", provenance},
    };
}

Report Report::from_json(const json& j)
{
    Report r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.result = j.at("result");
    r.provenance = j.at("provenance").get<std::vector<std::string>>();
    return r;
}

json exact_to_json(const ExactInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min()
        && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return to_string(v);
}

ExactInt exact_from_json(const json& j)
{
    if (j.is_number_integer())
        return ExactInt(j.get<std::int64_t>());
    return ExactInt(j.get<std::string>());
}

json verdict_to_json(const Verdict& v)
{
    json w = json::object();
    if (v.witness.euler)
        w["euler"] = exact_to_json(*v.witness.euler);
    if (v.witness.bound)
        w["bound"] = exact_to_json(*v.witness.bound);
    if (!v.witness.class_a.empty())
        w["class_a"] = v.witness.class_a;
    if (!v.witness.class_b.empty())
        w["class_b"] = v.witness.class_b;
    if (v.witness.value)
        w["value"] = exact_to_json(*v.witness.value);
    if (!v.witness.table_entry.empty())
        w["table_entry"] = v.witness.table_entry;
    return json{
        {"status", std::string(to_string(v.status))},
        {"reason", std::string(to_string(v.reason))},
        {"criterion", v.criterion},
        {"detail", v.detail},
        {"witness", w},
    };
}

Verdict verdict_from_json(const json& j)
{
    Verdict v;
    v.status = status_from_string(j.at("status").get<std::string>());
    v.reason = reason_from_string(j.at("reason").get<std::string>());
    v.criterion = j.at("criterion").get<std::string>();
    v.detail = j.at("detail").get<std::string>();
    const auto& w = j.at("witness");
    if (w.contains("euler"))
        v.witness.euler = exact_from_json(w["euler"]);
    if (w.contains("bound"))
        v.witness.bound = exact_from_json(w["bound"]);
    v.witness.class_a = w.value("class_a", "");
    v.witness.class_b = w.value("class_b", "");
    if (w.contains("value"))
        v.witness.value = exact_from_json(w["value"]);
    v.witness.table_entry = w.value("table_entry", "");
    return v;
}

namespace {

std::string scalar_text(const json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    return j.dump();
}

bool all_scalars(const json& arr)
{
    for (const auto& e : arr)
        if (e.is_structured())
            return false;
    return true;
}

void render(std::ostream& os, const std::string& key, const json& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        os << pad << key << ":\n";
        for (const auto& [k, v] : j.items())
            render(os, k, v, indent + 1);
    } else if (j.is_array() && !all_scalars(j)) {
        os << pad << key << ":\n";
        for (const auto& e : j)
            os << pad << "  - " << e.dump() << '\n';
    } else if (j.is_array()) {
        os << pad << key << ": [";
        for (std::size_t i = 0; i < j.size(); ++i)
            os << (i ? ", " : "") << scalar_text(j[i]);
        os << "]\n";
    } else {
        os << pad << key << ": " << scalar_text(j) << '\n';
    }
}

} // namespace

std::string emit_report(const Report& report, ReportFormat format)
{
    if (format == ReportFormat::Json)
        return report.to_json().dump(2) + "\n";

    std::ostringstream os;
    if (report.result.contains("value"))
        os << scalar_text(report.result["value"]) << '\n';
    for (const auto& [k, v] : report.result.items())
        if (k != "value")
            render(os, k, v, 0);
    os << "command: " << report.command << '\n';
    if (!report.inputs.empty()) {
        os << "inputs:";
        for (const auto& [k, v] : report.inputs.items())
            os << ' ' << k << '=' << (v.is_array() && all_scalars(v) ? v.dump() : scalar_text(v));
        os << '\n';
    }
    for (const auto& p : report.provenance)
        os << "provenance: " << p << '\n';
    return os.str();
}

} // namespace nefkit
