#include "rowcov/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "rowcov/errors.hpp"

namespace rowcov {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim surrounding whitespace
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    fields.push_back(first == std::string::npos
                         ? std::string()
                         : field.substr(first, last - first + 1));
  }
  return fields;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* begin = s.data();
  const char* end = begin + s.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

std::vector<std::vector<std::string>> read_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInputError("cannot open file: " + path);
  }
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    rows.push_back(split_fields(line));
  }
  if (rows.empty()) {
    throw InvalidInputError("empty file: " + path);
  }
  return rows;
}

bool all_numeric(const std::vector<std::string>& fields) {
  double v;
  for (const std::string& f : fields) {
    if (!parse_double(f, v)) return false;
  }
  return true;
}

}  // namespace

Matrix read_csv_matrix(const std::string& path) {
  auto rows = read_rows(path);
  std::size_t start = 0;
  if (!all_numeric(rows[0])) {
    if (rows.size() < 2) {
      throw InvalidInputError(path + ": no numeric rows");
    }
    start = 1;  // header
  }
  const std::size_t ncol = rows[start].size();
  Matrix m(static_cast<Index>(rows.size() - start), static_cast<Index>(ncol));
  for (std::size_t i = start; i < rows.size(); ++i) {
    if (rows[i].size() != ncol) {
      throw InvalidInputError(path + ": ragged row " + std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < ncol; ++j) {
      double v;
      if (!parse_double(rows[i][j], v)) {
        throw InvalidInputError(path + ": non-numeric field in row " +
                                std::to_string(i + 1));
      }
      m(static_cast<Index>(i - start), static_cast<Index>(j)) = v;
    }
  }
  return m;
}

Matrix read_design_matrix(const std::string& path) {
  auto rows = read_rows(path);
  std::size_t start = 0;
  bool numeric_body = true;
  for (std::size_t i = start; i < rows.size(); ++i) {
    if (!all_numeric(rows[i])) {
      numeric_body = false;
      break;
    }
  }
  if (!numeric_body && rows.size() > 1 && !all_numeric(rows[0])) {
    // Could be a header over a numeric body; retry from row 1.
    numeric_body = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (!all_numeric(rows[i])) {
        numeric_body = false;
        break;
      }
    }
    if (numeric_body) start = 1;
  }
  if (numeric_body) {
    if (start == 0) return read_csv_matrix(path);
    // re-parse skipping the header row
    const std::size_t ncol = rows[start].size();
    Matrix m(static_cast<Index>(rows.size() - start),
             static_cast<Index>(ncol));
    for (std::size_t i = start; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < ncol; ++j) {
        double v;
        parse_double(rows[i][j], v);
        m(static_cast<Index>(i - start), static_cast<Index>(j)) = v;
      }
    }
    return m;
  }
  // Categorical single column -> full indicator matrix, no dropped level.
  std::vector<std::string> levels;
  std::vector<std::size_t> assignment;
  for (const auto& row : rows) {
    if (row.size() != 1) {
      throw InvalidDesignError(
          path + ": categorical designs must have a single column");
    }
    const std::string& label = row[0];
    auto it = std::find(levels.begin(), levels.end(), label);
    if (it == levels.end()) {
      levels.push_back(label);
      assignment.push_back(levels.size() - 1);
    } else {
      assignment.push_back(static_cast<std::size_t>(it - levels.begin()));
    }
  }
  Matrix m = Matrix::Zero(static_cast<Index>(rows.size()),
                          static_cast<Index>(levels.size()));
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    m(static_cast<Index>(i), static_cast<Index>(assignment[i])) = 1.0;
  }
  return m;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidInputError("cannot open output file: " + path);
  }
  out << contents;
}

}  // namespace rowcov
