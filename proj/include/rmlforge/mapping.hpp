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

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rmlforge/rdf.hpp"

namespace rmlforge {

enum class Formulation { Csv, XPath, JsonPath };
enum class TermKind { Constant, Template, Column, Reference, None };
enum class TermType { Iri, BlankNode, Literal };
enum class Position { Subject, Predicate, Object, Graph, Language };
enum class Dialect { R2rml, Rml };

std::string to_string(Formulation f);
std::string to_string(TermKind k);
std::string to_string(TermType t);
std::string to_string(Position p);

/// One term-generation rule. After normalize() the term type is always
/// resolved and rr:column has been folded into a reference.
struct TermMap {
    std::string id;  // mapping-graph node, or a synthesized path for shortcuts
    Position position = Position::Object;
    TermKind kind = TermKind::None;
    std::optional<RdfTerm> constant;
    std::string expr;  // template text or reference expression
    std::optional<TermType> term_type;
    std::optional<Iri> datatype;
    std::shared_ptr<TermMap> language_map;
    std::optional<std::string> language_constant;  // rr:language before normalize

    bool operator==(const TermMap& other) const;  // canonical equality, ignores id
};

/// Where a triples map reads its records from. An R2RML table is carried in
/// `table_name` until normalize() rewrites it to "<name>.csv".
struct LogicalSource {
    std::string source;  // file path or URL
    Formulation formulation = Formulation::Csv;
    std::optional<std::string> iterator;
    std::optional<std::string> table_name;

    bool operator==(const LogicalSource&) const = default;
};

struct ReferencingObjectMap {
    std::string id;
    std::string parent;      // triples map id as written in the document
    int parent_index = -1;   // resolved by normalize(); -1 = unresolved
    std::vector<std::pair<std::string, std::string>> join_conditions;  // child, parent

    bool operator==(const ReferencingObjectMap& other) const {
        return parent == other.parent && join_conditions == other.join_conditions;
    }
};

using ObjectMap = std::variant<TermMap, ReferencingObjectMap>;

struct PredicateObjectMap {
    std::string id;
    std::vector<TermMap> predicate_maps;  // >= 1
    std::vector<ObjectMap> object_maps;   // >= 1
    std::vector<TermMap> graph_maps;

    bool operator==(const PredicateObjectMap& other) const {
        return predicate_maps == other.predicate_maps &&
               object_maps == other.object_maps && graph_maps == other.graph_maps;
    }
};

struct TriplesMap {
    std::string id;
    LogicalSource logical_source;
    TermMap subject_map;
    std::vector<Iri> classes;
    std::vector<TermMap> graph_maps;  // subject-map level
    std::vector<PredicateObjectMap> predicate_object_maps;

    bool operator==(const TriplesMap& other) const {
        return logical_source == other.logical_source &&
               subject_map == other.subject_map && classes == other.classes &&
               graph_maps == other.graph_maps &&
               predicate_object_maps == other.predicate_object_maps;
    }
};

struct MappingDocument {
    std::vector<TriplesMap> triples_maps;
    Graph source_graph;  // retained for violation provenance
    std::vector<std::string> warnings;
    bool normalized = false;

    const TriplesMap* find(const std::string& id) const;

    bool operator==(const MappingDocument& other) const {
        return triples_maps == other.triples_maps;
    }
};

/// Typed view of a parsed mapping graph. Recognizes the R2RML and RML
/// constructs (logical tables and sources, term maps and their shortcut
/// forms, referencing object maps, classes and graph maps).
/// Throws MappingError on: no triples maps, a map without a logical
/// source/table, a map without a subject map, a predicate-object map
/// missing a side, or an unknown reference formulation. In R2rml dialect,
/// any rml:/ql: vocabulary is rejected.
MappingDocument load_mapping(const Graph& graph, Dialect dialect = Dialect::Rml);

/// Canonical form: columns become references, tables become CSV sources,
/// rr:language becomes a constant language map, and every term map gets its
/// default term type when unspecified. Total on loaded documents and
/// idempotent.
MappingDocument normalize(MappingDocument doc);

/// Default term type as given by the term-map/term-type combination table:
/// constant and template maps default to IRI, column/reference maps to
/// Literal; language maps are always Literal. Throws MappingError for
/// combinations with no default (kind None).
TermType default_term_type(Position position, TermKind kind);

struct StructuralError {
    std::string where;  // term map / triples map id
    std::string message;
};

/// Checks the normalized document against the model invariants: admitted
/// (kind, position, term type) combinations, datatype/language exclusivity,
/// resolvable parent maps, iterator presence for hierarchical sources, and
/// reference-expression syntax per formulation.
std::vector<StructuralError> check_structure(const MappingDocument& doc);

/// Static syntax check of a reference expression for a formulation.
bool supported_expression(Formulation formulation, const std::string& expr);

}  // namespace rmlforge
