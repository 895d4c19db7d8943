#include "ordeval/csv.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <vector>

namespace ordeval {

namespace {

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            break;
        }
        fields.emplace_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

// Locale-independent; rejects anything but a plain decimal float, so
// "0,5"-style separators fail loudly instead of parsing as 0.
double parse_double(std::string_view field, const std::filesystem::path& path,
                    std::size_t line_no, std::size_t column) {
    const std::string_view s = trim(field);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) {
        throw ParseError(fmt::format("{} line {}: column {}: '{}' is not a number",
                                     path.string(), line_no, column, std::string(s)));
    }
    return value;
}

int parse_label(std::string_view field, const std::filesystem::path& path,
                std::size_t line_no, std::size_t column) {
    const std::string_view s = trim(field);
    int value = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) {
        throw ParseError(fmt::format("{} line {}: column {}: '{}' is not an integer label",
                                     path.string(), line_no, column, std::string(s)));
    }
    return value;
}

struct RawTable {
    std::vector<std::vector<double>> numeric_rows;
    std::vector<int> labels;
    std::vector<std::size_t> line_numbers;  // source line of each data row
    std::size_t n_value_columns = 0;
};

// Shared reader for the two CSV schemas. expected_prefix is "p" or "x";
// fixed_columns pins the value-column count (0 = inferred from the header).
RawTable read_table(const std::filesystem::path& path, std::string_view expected_prefix,
                    std::size_t fixed_columns) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(fmt::format("{}: cannot open file", path.string()));
    }

    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(fmt::format("{} line 1: missing header", path.string()));
    }
    const std::vector<std::string> header = split_fields(line);
    if (header.size() < 3 || trim(header.back()) != "label") {
        throw ParseError(fmt::format(
            "{} line 1: header must be {}1,...,{}M,label", path.string(),
            expected_prefix, expected_prefix));
    }
    const std::size_t n_cols = header.size() - 1;
    for (std::size_t j = 0; j < n_cols; ++j) {
        const std::string expected = fmt::format("{}{}", expected_prefix, j + 1);
        if (trim(header[j]) != expected) {
            throw ParseError(fmt::format("{} line 1: expected column '{}', got '{}'",
                                         path.string(), expected,
                                         std::string(trim(header[j]))));
        }
    }
    if (fixed_columns != 0 && n_cols != fixed_columns) {
        throw ParseError(fmt::format("{} line 1: expected {} value columns, got {}",
                                     path.string(), fixed_columns, n_cols));
    }

    RawTable table;
    table.n_value_columns = n_cols;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != n_cols + 1) {
            throw ParseError(fmt::format("{} line {}: expected {} fields, got {}",
                                         path.string(), line_no, n_cols + 1,
                                         fields.size()));
        }
        std::vector<double> row(n_cols);
        for (std::size_t j = 0; j < n_cols; ++j) {
            row[j] = parse_double(fields[j], path, line_no, j + 1);
        }
        table.numeric_rows.push_back(std::move(row));
        table.labels.push_back(parse_label(fields[n_cols], path, line_no, n_cols + 1));
        table.line_numbers.push_back(line_no);
    }
    if (table.numeric_rows.empty()) {
        throw ParseError(fmt::format("{}: no data rows", path.string()));
    }
    return table;
}

Matrix to_matrix(const std::vector<std::vector<double>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

} // namespace

EvaluationSet read_prediction_file(const std::filesystem::path& path) {
    RawTable table = read_table(path, "p", 0);
    const std::size_t m = table.n_value_columns;

    // Line-addressed diagnostics for the common file mistakes;
    // validate_evaluation_set below stays the authoritative gate.
    for (std::size_t i = 0; i < table.numeric_rows.size(); ++i) {
        const std::size_t line_no = table.line_numbers[i];
        double sum = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double p = table.numeric_rows[i][j];
            if (!(p >= 0.0 && p <= 1.0)) {
                throw ParseError(
                    fmt::format("{} line {}: probability p{} = {} is outside [0, 1]",
                                path.string(), line_no, j + 1, p));
            }
            sum += p;
        }
        if (std::abs(sum - 1.0) > kRowSumTolerance) {
            throw ParseError(fmt::format(
                "{} line {}: probabilities sum to {} (must be 1 within {})",
                path.string(), line_no, sum, kRowSumTolerance));
        }
        if (table.labels[i] < 1 || static_cast<std::size_t>(table.labels[i]) > m) {
            throw ParseError(fmt::format("{} line {}: label {} outside 1..{}",
                                         path.string(), line_no, table.labels[i], m));
        }
    }

    return validate_evaluation_set(to_matrix(table.numeric_rows, m),
                                   std::move(table.labels));
}

std::string format_prediction_csv(const EvaluationSet& set) {
    std::string out;
    for (std::size_t j = 1; j <= set.n_classes(); ++j) {
        out += fmt::format("p{},", j);
    }
    out += "label\n";
    for (std::size_t i = 0; i < set.n_observations(); ++i) {
        for (std::size_t j = 0; j < set.n_classes(); ++j) {
            out += fmt::format("{:.15g},", set.probabilities()(i, j));
        }
        out += fmt::format("{}\n", set.label(i));
    }
    return out;
}

void write_prediction_file(const std::filesystem::path& path, const EvaluationSet& set) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError(fmt::format("{}: cannot open for writing", path.string()));
    }
    out << format_prediction_csv(set);
}

Dataset read_dataset_file(const std::filesystem::path& path) {
    RawTable table = read_table(path, "x", sim::kNumFeatures);
    for (std::size_t i = 0; i < table.labels.size(); ++i) {
        if (table.labels[i] < 1 ||
            static_cast<std::size_t>(table.labels[i]) > sim::kNumClasses) {
            throw ParseError(fmt::format("{} line {}: label {} outside 1..{}",
                                         path.string(), i + 2, table.labels[i],
                                         sim::kNumClasses));
        }
    }
    Dataset dataset;
    dataset.features = to_matrix(table.numeric_rows, sim::kNumFeatures);
    dataset.labels = std::move(table.labels);
    return dataset;
}

std::string format_dataset_csv(const Dataset& dataset) {
    std::string out = "x1,x2,x3,label\n";
    for (std::size_t i = 0; i < dataset.features.rows(); ++i) {
        out += fmt::format("{:.15g},{:.15g},{:.15g},{}\n", dataset.features(i, 0),
                           dataset.features(i, 1), dataset.features(i, 2),
                           dataset.labels[i]);
    }
    return out;
}

void write_dataset_file(const std::filesystem::path& path, const Dataset& dataset) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError(fmt::format("{}: cannot open for writing", path.string()));
    }
    out << format_dataset_csv(dataset);
}

} // namespace ordeval
