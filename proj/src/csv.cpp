#include "mtad/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mtad/errors.hpp"

namespace mtad {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_cell(const std::string& raw, std::size_t line_no, std::size_t col_no) {
    const std::string cell = trim(raw);
    auto fail = [&](const char* why) {
        throw data_error("line " + std::to_string(line_no) + ", column " +
                         std::to_string(col_no) + ": " + why + " ('" + cell + "')");
    };
    if (cell.empty()) fail("empty cell");
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size()) fail("non-numeric cell");
    if (!std::isfinite(value)) fail("non-finite value");
    return value;
}

}  // namespace

CsvData load_csv(const std::filesystem::path& path, bool has_labels) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open file: " + path.string());

    std::string line;
    if (!std::getline(in, line)) throw data_error("empty file: " + path.string());
    if (!line.empty() && line.back() == '\n') line.pop_back();

    const std::vector<std::string> header = split_line(line);
    std::size_t label_col = header.size();
    std::vector<std::string> names;
    std::vector<std::size_t> data_cols;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (trim(header[c]) == "label") {
            if (label_col != header.size())
                throw data_error("duplicate 'label' column in " + path.string());
            label_col = c;
        } else {
            names.push_back(trim(header[c]));
            data_cols.push_back(c);
        }
    }
    if (has_labels && label_col == header.size())
        throw data_error("no 'label' column in " + path.string());
    if (data_cols.empty()) throw data_error("no data columns in " + path.string());

    std::vector<std::vector<double>> rows;
    LabelSequence labels;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const std::vector<std::string> cells = split_line(line);
        if (cells.size() != header.size())
            throw data_error("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(header.size()) + " cells, got " +
                             std::to_string(cells.size()));
        std::vector<double> row;
        row.reserve(data_cols.size());
        for (std::size_t c : data_cols) row.push_back(parse_cell(cells[c], line_no, c + 1));
        rows.push_back(std::move(row));
        if (label_col < header.size()) {
            const double raw = parse_cell(cells[label_col], line_no, label_col + 1);
            const int label = static_cast<int>(raw);
            if (raw != static_cast<double>(label) ||
                (label != kNormalLabel && label != kAbnormalLabel))
                throw data_error("line " + std::to_string(line_no) + ", column " +
                                 std::to_string(label_col + 1) + ": label outside {1,2}");
            labels.push_back(label);
        }
    }
    if (rows.empty()) throw data_error("no data rows in " + path.string());

    CsvData out;
    out.series = MultivariateSeries::from_rows(rows);
    out.column_names = std::move(names);
    if (label_col < header.size()) out.labels = std::move(labels);
    return out;
}

void write_csv(const std::filesystem::path& path, const MultivariateSeries& series,
               const LabelSequence* labels, const std::vector<std::string>* column_names) {
    if (labels && labels->size() != series.length())
        throw std::invalid_argument("label count does not match series length");
    if (column_names && column_names->size() != series.arity())
        throw std::invalid_argument("column name count does not match arity");

    std::ofstream out(path);
    if (!out) throw data_error("cannot write file: " + path.string());

    for (std::size_t i = 0; i < series.arity(); ++i) {
        if (i) out << ',';
        if (column_names)
            out << (*column_names)[i];
        else
            out << 'v' << (i + 1);
    }
    if (labels) out << ",label";
    out << '\n';

    char buf[64];
    for (std::size_t t = 0; t < series.length(); ++t) {
        for (std::size_t i = 0; i < series.arity(); ++i) {
            if (i) out << ',';
            std::snprintf(buf, sizeof buf, "%.17g", series(t, i));
            out << buf;
        }
        if (labels) out << ',' << (*labels)[t];
        out << '\n';
    }
    if (!out) throw data_error("write failed: " + path.string());
}

}  // namespace mtad
