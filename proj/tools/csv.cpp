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

#include "csv.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace acgem::cli {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

CsvTable::CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvTable::comment(const std::string &line) { comments_.push_back(line); }

void CsvTable::row(const std::vector<double> &values) {
    if (values.size() != columns_.size()) throw std::logic_error("CSV row width mismatch");
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) line += ',';
        line += format_number(values[i]);
    }
    rows_.push_back(std::move(line));
}

std::string CsvTable::str() const {
    std::string out;
    for (const auto &c : comments_) out += "# " + c + "\n";
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) out += ',';
        out += columns_[i];
    }
    out += '\n';
    for (const auto &r : rows_) out += r + "\n";
    return out;
}

std::vector<std::string> provenance(const std::string &version, const std::string &command,
                                    const std::vector<std::pair<std::string, std::string>> &params) {
    std::vector<std::string> lines;
    lines.push_back("acgem " + version);
    lines.push_back("command: " + command);
    for (const auto &[k, v] : params) lines.push_back(k + " = " + v);
    return lines;
}

}  // namespace acgem::cli
