#pragma once

#include <string>
#include <vector>

namespace sfm {

// One parsed CSV record plus its 1-based line number in the source file.
struct CsvRow {
  std::vector<std::string> fields;
  int line = 0;
};

// RFC-4180 style table: UTF-8, comma separated, optional "-quoted fields with
// "" escapes. The first row is the header.
struct CsvTable {
  std::string path;
  std::vector<std::string> header;
  std::vector<CsvRow> rows;

  // Index of a required column; throws DataError naming file and column.
  int column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

std::string csv_escape(const std::string& field);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace sfm
