#ifndef KERNELALG_REPORT_HPP
#define KERNELALG_REPORT_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace kernelalg {

// One verification record: a measured value against its bound, with optional
// per-index arrays (one entry per net element, margin, probe, ...).
struct CheckRecord {
    std::string name;
    bool pass = true;
    double value = std::numeric_limits<double>::quiet_NaN();
    double bound = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> values;
    std::vector<double> bounds;
    std::string note;
};

// Structured record of a verification run. Serialization is deterministic:
// identical inputs produce identical bytes. Wall time is carried in memory for
// console output and never enters the serialized document.
struct Report {
    std::string suite;
    std::string space_summary;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;
    bool pass = true;
    double wall_time_ms = 0.0;

    void add(CheckRecord rec);
    const CheckRecord* find(const std::string& name) const;
    // JSON document, schema kernelalg-report-v1.
    std::string to_json_string() const;
};

}  // namespace kernelalg

#endif
