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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "rmlforge/rdf.hpp"

namespace rmlforge {

/// Engine-wide settings. Paths may be empty, in which case the respective
/// lookup step is skipped.
struct EngineConfig {
    std::filesystem::path tables_dir;  // where rr:tableName CSV files live
    std::filesystem::path mirror_dir;  // URL sources resolve here unless fetching
    std::filesystem::path data_dir;    // base for relative file sources
    bool allow_fetch = false;
    std::optional<Iri> base;  // base IRI for relative generated terms
    bool dedup = true;
    bool random_bnodes = false;
    std::uint64_t bnode_seed = 0;  // 0 = nondeterministic seed per run
    char csv_delimiter = ',';
};

/// Applies `key = value` lines from a config file. Known keys: tables_dir,
/// mirror_dir, data_dir, allow_fetch, base, dedup, random_bnodes,
/// csv_delimiter. '#' starts a comment. Unknown keys raise ConfigError.
void apply_config_file(EngineConfig& cfg, const std::filesystem::path& path);

}  // namespace rmlforge
