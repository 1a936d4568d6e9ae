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

#ifndef ACGEM_TOOLS_CONFIG_HPP
#define ACGEM_TOOLS_CONFIG_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "units.hpp"

namespace acgem::cli {

class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class ValueKind { quantity, real, integer, boolean, choice };

struct KeySpec {
    std::string key;  // "section.name"
    ValueKind kind;
    Dimension dimension;
    std::string default_text;
    std::vector<std::string> choices;
    std::string help;
};

/// Every recognized key, in output order.
const std::vector<KeySpec> &schema();

/// Flat `[section]` / `key = value` configuration with unit-checked values.
/// Every schema key has a default; unknown keys are rejected.
class Config {
   public:
    Config();

    void load_file(const std::string &path);
    void load_text(const std::string &text, const std::string &origin);
    /// "section.key=value".
    void set_override(const std::string &assignment);
    void set(const std::string &key, const std::string &value, const std::string &origin);

    /// SI value; frequencies in Hz.
    double quantity(const std::string &key) const;
    double real(const std::string &key) const;
    long integer(const std::string &key) const;
    bool boolean(const std::string &key) const;
    const std::string &choice(const std::string &key) const;

    /// (key, canonical value) for every key, schema order.
    std::vector<std::pair<std::string, std::string>> resolved() const;

   private:
    struct Value {
        Quantity q{0.0, {}};
        long i = 0;
        bool b = false;
        std::string text;
    };
    const KeySpec &spec(const std::string &key) const;
    Value parse(const KeySpec &spec, const std::string &text, const std::string &origin) const;
    std::map<std::string, Value> values_;
};

}  // namespace acgem::cli

#endif
