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

#ifndef DUPLICITY_CSV_H_
#define DUPLICITY_CSV_H_

#include <filesystem>
#include <string>

#include "duplicity/table.h"

namespace duplicity {

// Header row then one line per row, values printed with 9 significant
// digits ("%.9g"), "\n" line endings. Error(kInvalidArgument) for an empty
// table or a row whose width differs from the header.
std::string FormatCsv(const Table& table);

// Writes FormatCsv(table); Error(kIoError) when the file cannot be written.
void WriteCsv(const Table& table, const std::filesystem::path& path);

// Parses a file produced by WriteCsv (used by the golden-file tests).
Table ReadCsv(const std::filesystem::path& path);

}  // namespace duplicity

#endif  // DUPLICITY_CSV_H_
