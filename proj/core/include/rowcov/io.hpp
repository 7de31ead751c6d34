#pragma once

#include <string>

#include "rowcov/linalg.hpp"

namespace rowcov {

// Numeric CSV: rows are observations, columns variables. A single header
// row is auto-detected (first row with any non-numeric field) and skipped.
Matrix read_csv_matrix(const std::string& path);

// Design file: numeric columns are used as-is; a file whose fields are not
// all numeric is treated as a single categorical column and expanded to a
// full indicator matrix (one column per level, no level dropped), levels
// ordered by first appearance.
Matrix read_design_matrix(const std::string& path);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace rowcov
