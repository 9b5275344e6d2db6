#include "sfm/csv.hpp"

#include <fstream>

#include "sfm/util.hpp"

namespace sfm {

int CsvTable::column(const std::string& name) const {
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  throw DataError(concat(path, ": missing required column \"", name, "\""));
}

namespace {

// Splits one physical file into records honoring quoted fields (a quoted
// field may contain commas and newlines).
std::vector<CsvRow> parse_records(const std::string& text, const std::string& path) {
  std::vector<CsvRow> rows;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool row_started = false;
  int line = 1;
  int row_line = 1;

  const auto end_field = [&] {
    fields.push_back(field);
    field.clear();
  };
  const auto end_row = [&] {
    end_field();
    rows.push_back(CsvRow{std::move(fields), row_line});
    fields = {};
    row_started = false;
  };

  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (!row_started && c != '\n' && c != '\r') {
      row_started = true;
      row_line = line;
    }
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) {
          throw DataError(concat(path, ":", line, ": stray quote inside unquoted field"));
        }
        in_quotes = true;
        break;
      case ',':
        if (!row_started) {  // row of the form ",..."
          row_started = true;
          row_line = line;
        }
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        if (row_started) end_row();
        ++line;
        break;
      default:
        field.push_back(c);
    }
  }
  if (in_quotes) {
    throw DataError(concat(path, ": unterminated quoted field at end of file"));
  }
  if (row_started || !field.empty() || !fields.empty()) end_row();
  return rows;
}

}  // namespace

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(concat("cannot open file: ", path));
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  auto records = parse_records(text, path);
  if (records.empty()) throw DataError(concat(path, ": empty file, expected a header row"));

  CsvTable table;
  table.path = path;
  table.header = std::move(records.front().fields);
  records.erase(records.begin());
  table.rows = std::move(records);

  for (const auto& row : table.rows) {
    if (row.fields.size() != table.header.size()) {
      throw DataError(concat(path, ":", row.line, ": expected ", table.header.size(),
                             " fields, got ", row.fields.size()));
    }
  }
  return table;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError(concat("cannot open file for writing: ", path));
  const auto put_row = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_escape(row[i]);
    }
    out << '\n';
  };
  put_row(header);
  for (const auto& row : rows) put_row(row);
  if (!out) throw DataError(concat("write failed: ", path));
}

}  // namespace sfm
