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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rmlforge {

/// Invalid RDF term construction (bad IRI, bad blank node label, ...).
struct RdfError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Syntax error in a parsed text format, with 1-based position.
struct ParseError : std::runtime_error {
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(column) + ": " + what),
          line(line),
          column(column) {}

    std::size_t line;
    std::size_t column;
};

/// Structural problem while loading a mapping document.
struct MappingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Problem opening or reading a logical source.
struct SourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Contradictory or unreadable vocabulary constraints.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Per-record term generation failure; counted and skipped by the engine.
struct TermGenError : std::runtime_error {
    TermGenError(std::string reason, const std::string& detail)
        : std::runtime_error(reason + ": " + detail), reason(std::move(reason)) {}

    std::string reason;
};

/// Bad CLI or config file input.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rmlforge
