#include "ilab/report.hpp"

#include "ilab/error.hpp"

#include <json.hpp>

#include <sstream>

namespace ilab {

using ordered_json = nlohmann::ordered_json;

Format parse_format(std::string_view name) {
    if (name == "md") return Format::Markdown;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    fail(ErrorKind::UnknownFormat, "unknown format '" + std::string(name) + "' (expected md, csv or json)");
}

namespace {

std::string shown(const AssertionRecord& r, const std::string& value) {
    return r.numeric ? Rational::parse(value).str() : value;
}

std::string md_cell(std::string s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\|";
        else out += c;
    }
    return out;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

ordered_json to_json(const ScenarioReport& r) {
    ordered_json j;
    j["scenario"] = r.scenario;
    j["assertions"] = ordered_json::array();
    for (const auto& a : r.records) {
        ordered_json x;
        x["file"] = a.pos.file;
        x["line"] = a.pos.line;
        x["col"] = a.pos.col;
        x["desc"] = a.desc;
        x["expected"] = a.expected;
        x["computed"] = a.computed;
        x["pass"] = a.pass;
        j["assertions"].push_back(std::move(x));
    }
    j["summary"] = {{"passed", r.passed()}, {"failed", r.failed()}};
    return j;
}

void markdown(std::ostringstream& os, const ScenarioReport& r) {
    os << "## " << r.scenario << "\n\n";
    os << "| line | assertion | expected | computed | result |\n";
    os << "|---:|---|---|---|---|\n";
    for (const auto& a : r.records)
        os << "| " << a.pos.line << " | `" << md_cell(a.desc) << "` | " << md_cell(shown(a, a.expected)) << " | "
           << md_cell(shown(a, a.computed)) << " | " << (a.pass ? "pass" : "**FAIL**") << " |\n";
    os << "\n" << r.passed() << " passed, " << r.failed() << " failed\n";
}

void csv_rows(std::ostringstream& os, const ScenarioReport& r) {
    for (const auto& a : r.records)
        os << csv_cell(a.pos.file) << "," << a.pos.line << "," << a.pos.col << "," << csv_cell(a.desc) << ","
           << csv_cell(a.expected) << "," << csv_cell(a.computed) << "," << (a.pass ? "true" : "false") << "\n";
}

const char* kCsvHeader = "file,line,col,desc,expected,computed,pass\n";

}  // namespace

std::string emit_report(const ScenarioReport& report, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::Json: os << to_json(report).dump(2) << "\n"; break;
        case Format::Csv:
            os << kCsvHeader;
            csv_rows(os, report);
            break;
        case Format::Markdown: markdown(os, report); break;
    }
    return os.str();
}

std::string emit_reports(const std::vector<ScenarioReport>& reports, Format format) {
    if (reports.size() == 1) return emit_report(reports.front(), format);
    std::ostringstream os;
    switch (format) {
        case Format::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : reports) arr.push_back(to_json(r));
            os << arr.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            os << kCsvHeader;
            for (const auto& r : reports) csv_rows(os, r);
            break;
        case Format::Markdown: {
            std::size_t passed = 0, failed = 0;
            os << "# Summary\n\n| scenario | passed | failed | status |\n|---|---:|---:|---|\n";
            for (const auto& r : reports) {
                os << "| " << md_cell(r.scenario) << " | " << r.passed() << " | " << r.failed() << " | "
                   << (r.failed() ? "**FAIL**" : "pass") << " |\n";
                passed += r.passed();
                failed += r.failed();
            }
            os << "\nTotal: " << passed << " passed, " << failed << " failed\n";
            for (const auto& r : reports) {
                os << "\n";
                markdown(os, r);
            }
            break;
        }
    }
    return os.str();
}

std::string emit_table(const Table& t, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::Json: {
            ordered_json j;
            j["title"] = t.title;
            j["rows"] = t.row_labels;
            j["cols"] = t.col_labels;
            j["values"] = ordered_json::array();
            for (std::size_t i = 0; i < t.values.rows(); ++i) {
                ordered_json row = ordered_json::array();
                for (std::size_t k = 0; k < t.values.cols(); ++k) row.push_back(t.values(i, k).fraction_str());
                j["values"].push_back(row);
            }
            os << j.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            os << "row";
            for (const auto& c : t.col_labels) os << "," << csv_cell(c);
            os << "\n";
            for (std::size_t i = 0; i < t.values.rows(); ++i) {
                os << csv_cell(t.row_labels[i]);
                for (std::size_t k = 0; k < t.values.cols(); ++k) os << "," << t.values(i, k).str();
                os << "\n";
            }
            break;
        case Format::Markdown:
            if (!t.title.empty()) os << "### " << t.title << "\n\n";
            os << "| |";
            for (const auto& c : t.col_labels) os << " " << md_cell(c) << " |";
            os << "\n|---|";
            for (std::size_t k = 0; k < t.col_labels.size(); ++k) os << "---:|";
            os << "\n";
            for (std::size_t i = 0; i < t.values.rows(); ++i) {
                os << "| " << md_cell(t.row_labels[i]) << " |";
                for (std::size_t k = 0; k < t.values.cols(); ++k) os << " " << t.values(i, k).str() << " |";
                os << "\n";
            }
            break;
    }
    return os.str();
}

}  // namespace ilab
