#include "powerpath/report.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>

#include "powerpath/errors.hpp"

namespace powerpath {

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string scalar_text(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::optional<std::string> read_record(const nlohmann::json& j, ReportRecord& r) {
    try {
        r.kind = j.at("kind").get<std::string>();
        r.parameters = j.at("parameters").get<std::map<std::string, std::int64_t>>();
        r.result = j.at("result");
        r.artifact_refs = j.at("artifact_refs").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        return std::string("malformed report record: ") + e.what();
    }
    if (!is_report_kind(r.kind)) return "unknown report kind '" + r.kind + "'";
    if (!r.result.is_object()) return std::string("report result must be an object");
    return std::nullopt;
}

}  // namespace

bool is_report_kind(const std::string& kind) {
    return std::find(std::begin(kReportKinds), std::end(kReportKinds), kind) != std::end(kReportKinds);
}

void to_json(nlohmann::json& j, const ReportRecord& r) {
    j = nlohmann::json{{"kind", r.kind}, {"parameters", r.parameters}, {"result", r.result},
                       {"artifact_refs", r.artifact_refs}};
}

void from_json(const nlohmann::json& j, ReportRecord& r) {
    if (auto problem = read_record(j, r)) throw ParseError(*problem, 0);
}

std::string to_json_line(const ReportRecord& r) { return nlohmann::json(r).dump(); }

void append_json_line(const std::filesystem::path& file, const ReportRecord& r) {
    std::ofstream out(file, std::ios::app);
    if (!out) throw InputError("cannot open " + file.string() + " for appending");
    out << to_json_line(r) << '\n';
    if (!out) throw InputError("write to " + file.string() + " failed");
}

std::vector<ReportRecord> read_json_lines(std::istream& in) {
    std::vector<ReportRecord> out;
    std::string line;
    std::size_t line_no = 0;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t start = offset;
        offset += line.size() + 1;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError("line " + std::to_string(line_no) + ": invalid JSON", start + (e.byte > 0 ? e.byte - 1 : 0));
        }
        ReportRecord r;
        if (auto problem = read_record(j, r)) throw ParseError("line " + std::to_string(line_no) + ": " + *problem, start);
        out.push_back(std::move(r));
    }
    return out;
}

void write_csv(std::ostream& out, const std::vector<ReportRecord>& records) {
    std::set<std::string> params, results;
    for (const auto& r : records) {
        for (const auto& [k, v] : r.parameters) params.insert(k);
        for (const auto& [k, v] : r.result.items()) {
            if (v.is_primitive()) results.insert(k);
        }
    }
    out << "kind";
    for (const auto& k : params) out << ',' << csv_cell(k);
    for (const auto& k : results) out << ',' << csv_cell(k);
    out << '\n';
    for (const auto& r : records) {
        out << csv_cell(r.kind);
        for (const auto& k : params) {
            out << ',';
            if (auto it = r.parameters.find(k); it != r.parameters.end()) out << it->second;
        }
        for (const auto& k : results) {
            out << ',';
            if (auto it = r.result.find(k); it != r.result.end() && it->is_primitive()) out << csv_cell(scalar_text(*it));
        }
        out << '\n';
    }
}

}  // namespace powerpath
