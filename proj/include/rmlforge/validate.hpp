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

#include <string>
#include <vector>

#include "rmlforge/mapping.hpp"
#include "rmlforge/schema.hpp"

namespace rmlforge {

enum class ViolationKind { Domain, Range, DatatypeIllFormed, LanguageShape };
enum class ViolationLevel { Rule, Triple };

std::string to_string(ViolationKind k);
std::string to_string(ViolationLevel l);

/// One detected inconsistency. Rule-level violations point at mapping-graph
/// nodes (term map ids); triple-level ones at the serialized quad.
struct Violation {
    ViolationKind kind = ViolationKind::Domain;
    ViolationLevel level = ViolationLevel::Rule;
    std::string locus;
    Iri predicate;
    std::string expected;
    std::string found;

    // Rule-level provenance for clustering and ranking.
    std::string triples_map;
    std::vector<std::string> involved;  // term map ids this violation touches
    std::vector<Iri> mentioned;         // vocabulary terms for the term ranking
};

/// Something the rule validator cannot decide before data is seen, e.g. a
/// non-constant predicate map.
struct Advisory {
    std::string locus;
    std::string message;
};

struct RuleValidation {
    std::vector<Violation> violations;
    std::vector<Advisory> advisories;
};

/// Validates the mapping rules themselves: for every subject/predicate/
/// object map triple with a constant predicate, checks the subject classes
/// against the predicate's domains and the object shape against its range.
/// Data volume never changes the result.
RuleValidation validate_rules(const MappingDocument& doc, const SchemaIndex& schema);

/// The triple-level baseline: walks every quad (incl. duplicates when the
/// dataset was built without dedup), checking domains against asserted
/// rdf:type classes, ranges against the object, datatype lexical forms and
/// language tag shape.
std::vector<Violation> validate_triples(const Dataset& ds, const SchemaIndex& schema);

/// JSON array with the stable report fields
/// {level, kind, locus, predicate, expected, found}.
std::string violations_to_json(const std::vector<Violation>& violations);

}  // namespace rmlforge
