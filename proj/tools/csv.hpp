// Copyright 2026 The acgem Authors
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

#ifndef ACGEM_TOOLS_CSV_HPP
#define ACGEM_TOOLS_CSV_HPP

#include <string>
#include <utility>
#include <vector>

namespace acgem::cli {

/// In-memory CSV table with a `#` provenance preamble. Numbers use %.9g.
class CsvTable {
   public:
    explicit CsvTable(std::vector<std::string> columns);

    void comment(const std::string &line);
    void row(const std::vector<double> &values);
    std::size_t rows() const { return rows_.size(); }
    std::string str() const;

   private:
    std::vector<std::string> columns_;
    std::vector<std::string> comments_;
    std::vector<std::string> rows_;
};

std::string format_number(double v);

/// Preamble shared by every output: tool version, command and resolved parameters.
std::vector<std::string> provenance(const std::string &version, const std::string &command,
                                    const std::vector<std::pair<std::string, std::string>> &params);

}  // namespace acgem::cli

#endif
