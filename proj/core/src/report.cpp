#include "kernelalg/report.hpp"

#include <json.hpp>

namespace kernelalg {

void Report::add(CheckRecord rec) {
    pass = pass && rec.pass;
    checks.push_back(std::move(rec));
}

const CheckRecord* Report::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string Report::to_json_string() const {
    nlohmann::json j;
    j["schema"] = "kernelalg-report-v1";
    j["suite"] = suite;
    j["space"] = space_summary;
    j["seed"] = seed;
    j["pass"] = pass;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (std::isfinite(c.value) || std::isnan(c.value)) {
            if (!std::isnan(c.value)) jc["value"] = c.value;
        }
        if (!std::isnan(c.bound)) jc["bound"] = c.bound;
        if (!c.values.empty()) jc["values"] = c.values;
        if (!c.bounds.empty()) jc["bounds"] = c.bounds;
        if (!c.note.empty()) jc["note"] = c.note;
        j["checks"].push_back(jc);
    }
    return j.dump(2) + "\n";
}

}  // namespace kernelalg
