/*
 * Copyright 2026 rmlforge contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rmlforge/config.hpp"

#include <fstream>

namespace rmlforge {

namespace {

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::string unquote(std::string v) {
    if (v.size() >= 2 && ((v.front() == '"' && v.back() == '"') ||
                          (v.front() == '\'' && v.back() == '\''))) {
        return v.substr(1, v.size() - 2);
    }
    return v;
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("config key '" + key + "' expects a boolean, got '" + v + "'");
}

}  // namespace

void apply_config_file(EngineConfig& cfg, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = unquote(trim(line.substr(eq + 1)));

        if (key == "tables_dir") {
            cfg.tables_dir = value;
        } else if (key == "mirror_dir") {
            cfg.mirror_dir = value;
        } else if (key == "data_dir") {
            cfg.data_dir = value;
        } else if (key == "allow_fetch") {
            cfg.allow_fetch = parse_bool(value, key);
        } else if (key == "dedup") {
            cfg.dedup = parse_bool(value, key);
        } else if (key == "random_bnodes") {
            cfg.random_bnodes = parse_bool(value, key);
        } else if (key == "base") {
            cfg.base = Iri(value);
        } else if (key == "csv_delimiter") {
            if (value.size() != 1) {
                throw ConfigError("csv_delimiter expects a single character");
            }
            cfg.csv_delimiter = value[0];
        } else {
            throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                              ": unknown config key '" + key + "'");
        }
    }
}

}  // namespace rmlforge
