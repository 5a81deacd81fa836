#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mtad/series.hpp"

namespace mtad {

struct CsvData {
    MultivariateSeries series;
    std::optional<LabelSequence> labels;
    std::vector<std::string> column_names;  // data columns, file order
};

// Reads a UTF-8, comma-separated file with a header row. When `has_labels`
// is set a column named "label" holding integers in {1,2} must be present;
// it is excluded from the returned series. Rejects ragged rows, non-numeric
// or non-finite cells, and out-of-range labels, reporting the file line and
// column of the offending cell. Throws data_error.
CsvData load_csv(const std::filesystem::path& path, bool has_labels);

// Writes `series` (plus `labels`, when given, as a trailing "label" column)
// with 17 significant digits, so a write/load round trip reproduces every
// value bit-exactly. Column names default to v1..vn.
void write_csv(const std::filesystem::path& path, const MultivariateSeries& series,
               const LabelSequence* labels = nullptr,
               const std::vector<std::string>* column_names = nullptr);

}  // namespace mtad
