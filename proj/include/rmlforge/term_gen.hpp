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
#include <optional>
#include <string>
#include <vector>

#include "rmlforge/mapping.hpp"
#include "rmlforge/source.hpp"

namespace rmlforge {

/// Produces blank node labels scoped to one triples map. Value-free term
/// maps get one label per record ordinal, stable within a run; in random
/// mode the per-run prefix changes between runs. Value-carrying blank node
/// maps derive their label from the value, so equal values unify.
class BlankNodeFactory {
public:
    static BlankNodeFactory deterministic(std::size_t tm_index);
    static BlankNodeFactory randomized(std::size_t tm_index, std::uint64_t seed);

    BlankNode for_record(std::size_t ordinal) const;
    BlankNode from_value(const std::string& value) const;

private:
    BlankNodeFactory(std::size_t tm_index, std::string run_prefix)
        : tm_index_(tm_index), run_prefix_(std::move(run_prefix)) {}

    std::size_t tm_index_;
    std::string run_prefix_;  // empty in deterministic mode
};

struct TemplatePart {
    bool is_reference = false;
    std::string text;
};

/// Splits a string template into literal text and {reference} parts.
/// Backslash escapes \{ and \} produce literal braces.
/// Throws MappingError on unbalanced braces.
std::vector<TemplatePart> parse_template(const std::string& tmpl);

/// Expands every placeholder against the record. Returns no value when any
/// placeholder has no value in this record; multi-valued references fan out
/// (cartesian, in placeholder order). With `iri_safe`, each substituted
/// value (not the literal template text) is percent-encoded.
std::vector<std::string> expand_template(const std::string& tmpl, const Record& record,
                                         bool iri_safe = false);

/// Percent-encodes everything outside unreserved characters (UTF-8 bytes).
std::string iri_encode(std::string_view value);

/// Evaluates one term map against one record: zero or more RDF terms.
/// Constants are record-invariant; templates and references may fan out;
/// value-free blank node maps draw from the factory. Literal results carry
/// the datatype or the evaluated language map. Throws TermGenError for
/// per-record failures (IRI casts of unusable values, ill-shaped language
/// tags); the engine counts these and skips the triple.
std::vector<RdfTerm> generate_terms(const TermMap& tm, const Record& record,
                                    const BlankNodeFactory& bnf,
                                    const std::optional<Iri>& base = {});

}  // namespace rmlforge
