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

#ifndef DUPLICITY_TABLE_H_
#define DUPLICITY_TABLE_H_

#include <string>
#include <vector>

namespace duplicity {

// Numeric table with named columns; rows are kept in insertion order.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void AddRow(std::vector<double> row) { rows.push_back(std::move(row)); }
  bool empty() const { return rows.empty(); }
};

}  // namespace duplicity

#endif  // DUPLICITY_TABLE_H_
