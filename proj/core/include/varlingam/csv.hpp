#pragma once

#include <string>

#include "varlingam/data_matrix.hpp"

namespace varlingam {

struct CsvOptions {
    char delimiter = ',';
    bool header = true;
};

/// Reads a rectangular numeric table. Rows are time-ordered samples, columns
/// are variables. With header enabled the first line supplies variable names;
/// otherwise names default to v0..v{m-1}. Row and column indices in errors
/// count data cells only (the header line is excluded) from zero. Blank lines
/// are skipped. Values are parsed strictly; no validation beyond parsing is
/// applied here.
DataMatrix load_csv(const std::string& path, CsvOptions options = {});

/// Writes a data matrix as delimited text with a header line. Values are
/// printed with 17 significant digits, so load_csv(save_csv(x)) reproduces x
/// exactly.
void save_csv(const std::string& path, const DataMatrix& x,
              char delimiter = ',');

}  // namespace varlingam
