#pragma once

#include <filesystem>
#include <string>

#include "ordeval/core.hpp"
#include "ordeval/simulation.hpp"

namespace ordeval {

// Prediction file: header "p1,...,pM,label", one observation per row,
// probabilities as decimal floats, label as 1-based integer. UTF-8, LF or
// CRLF line endings, no quoting. Parse failures throw ParseError with the
// file name and 1-based line number; validation failures are rethrown the
// same way so CLI diagnostics always point at a line.
EvaluationSet read_prediction_file(const std::filesystem::path& path);

std::string format_prediction_csv(const EvaluationSet& set);
void write_prediction_file(const std::filesystem::path& path, const EvaluationSet& set);

// Dataset file: header "x1,x2,x3,label", same conventions.
Dataset read_dataset_file(const std::filesystem::path& path);
std::string format_dataset_csv(const Dataset& dataset);
void write_dataset_file(const std::filesystem::path& path, const Dataset& dataset);

} // namespace ordeval
