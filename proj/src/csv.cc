// Copyright 2026 The Duplicity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "duplicity/csv.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "duplicity/error.h"

namespace duplicity {

std::string FormatCsv(const Table& table) {
  if (table.columns.empty() || table.rows.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "refusing to emit an empty table");
  }
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  char buf[64];
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw Error(ErrorKind::kInvalidArgument, "row width mismatch");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      // Avoid printing negative zero.
      const double v = row[c] == 0.0 ? 0.0 : row[c];
      std::snprintf(buf, sizeof(buf), "%.9g", v);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

void WriteCsv(const Table& table, const std::filesystem::path& path) {
  const std::string text = FormatCsv(table);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error(ErrorKind::kIoError, "cannot open " + path.string());
  }
  file << text;
  if (!file) throw Error(ErrorKind::kIoError, "cannot write " + path.string());
}

Table ReadCsv(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::kIoError, "cannot open " + path.string());
  Table table;
  std::string line;
  bool header = true;
  while (std::getline(file, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) {
      if (header) {
        table.columns.push_back(cell);
      } else {
        try {
          row.push_back(std::stod(cell));
        } catch (const std::exception&) {
          throw Error(ErrorKind::kParseError,
                      "bad number '" + cell + "' in " + path.string());
        }
      }
    }
    if (!header) table.rows.push_back(std::move(row));
    header = false;
  }
  return table;
}

}  // namespace duplicity
