#pragma once

#include "ilab/dsl.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ilab {

enum class Format { Markdown, Csv, Json };

Format parse_format(std::string_view name);

std::string emit_report(const ScenarioReport& report, Format format);
// Several scenarios; json yields an array of per-scenario objects.
std::string emit_reports(const std::vector<ScenarioReport>& reports, Format format);

// Labeled rational matrix, e.g. a pairing table.
struct Table {
    std::string title;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    Matrix values;
};

std::string emit_table(const Table& table, Format format);

}  // namespace ilab
