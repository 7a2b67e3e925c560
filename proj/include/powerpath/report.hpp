#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace powerpath {

inline constexpr const char* kReportKinds[] = {"construction", "containment",   "formula",
                                               "oracle",       "decomposition", "verification"};

struct ReportRecord {
    std::string kind;
    std::map<std::string, std::int64_t> parameters;
    nlohmann::json result = nlohmann::json::object();
    std::vector<std::string> artifact_refs;  // graph6 strings

    friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

bool is_report_kind(const std::string& kind);

void to_json(nlohmann::json& j, const ReportRecord& r);
// Throws ParseError on a missing field, a wrong type or an unknown kind.
void from_json(const nlohmann::json& j, ReportRecord& r);

// One compact JSON object per line.
std::string to_json_line(const ReportRecord& r);
void append_json_line(const std::filesystem::path& file, const ReportRecord& r);
std::vector<ReportRecord> read_json_lines(std::istream& in);

// Columns: kind, every parameter key, then every scalar result key, each set
// sorted and unioned over the records. Missing cells stay empty.
void write_csv(std::ostream& out, const std::vector<ReportRecord>& records);

}  // namespace powerpath
