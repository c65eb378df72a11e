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

#include <optional>
#include <string_view>

#include "rmlforge/rdf.hpp"

namespace rmlforge {

// Turtle reader for the subset the mapping documents use:
// @prefix/@base directives, IRIs and prefixed names, literals with ^^ and @,
// blank node labels and [ ... ] anonymous nodes, ';' and ',' abbreviations,
// and the 'a' keyword. Collections, quoted triples and numeric shorthand
// are not part of the subset and are rejected.
//
// Throws ParseError with line/column on syntax errors, undefined prefixes,
// and relative IRIs when no base is in effect.
Graph parse_turtle(std::string_view text, std::optional<Iri> base = {});

/// Reads and parses a Turtle file (UTF-8). When the file declares no @base,
/// relative IRIs resolve against a file:// IRI of the path.
Graph parse_turtle_file(const std::string& path);

/// RFC 3986-style reference resolution for the subset of forms Turtle
/// documents use (absolute, fragment, absolute-path, relative-path).
/// Throws RdfError when `reference` is relative and `base` is absent.
Iri resolve_iri(std::string_view reference, const std::optional<Iri>& base);

}  // namespace rmlforge
