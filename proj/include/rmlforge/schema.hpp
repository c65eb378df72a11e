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

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rmlforge/rdf.hpp"

namespace rmlforge {

/// What a property's rdfs:range admits. Absent constraints answer "any":
/// open world, the absence of a constraint is never a violation.
struct RangeConstraint {
    enum class Kind { Any, Resource, Literal };
    Kind kind = Kind::Any;
    std::set<Iri> classes;                    // Resource: admitted object classes
    std::optional<std::set<Iri>> datatypes;   // Literal: admitted datatypes
};

/// Vocabulary constraints consulted by both validators: property domains,
/// property ranges, and the subclass closure.
class SchemaIndex {
public:
    /// Domains declared for the property, or nullptr (no constraint).
    const std::set<Iri>* domains_of(const Iri& property) const;

    /// Range constraint; Kind::Any when the property is unknown.
    const RangeConstraint& range_of(const Iri& property) const;

    /// Reflexive-transitive subclass test.
    bool is_subclass_of(const Iri& cls, const Iri& ancestor) const;

    /// True when some declared class reaches some required class through
    /// the subclass closure (or either side is empty: nothing to check).
    bool classes_compatible(const std::vector<Iri>& declared,
                            const std::set<Iri>& required) const;

    bool empty() const { return domains_.empty() && ranges_.empty(); }

    // Populated by load_schema.
    std::map<Iri, std::set<Iri>> domains_;
    std::map<Iri, RangeConstraint> ranges_;
    std::map<Iri, std::set<Iri>> superclasses_;  // transitive closure
};

/// Builds the index from vocabulary graphs: rdfs:domain, rdfs:range,
/// rdfs:subClassOf, owl:DatatypeProperty/ObjectProperty typing. Multiple
/// datatype ranges accumulate into the allowed set; mixing a class range
/// with a datatype range for one property throws SchemaError.
SchemaIndex load_schema(const std::vector<Graph>& graphs);

/// Whether `iri` denotes a datatype (xsd: namespace, rdf:langString,
/// rdfs:Literal, or anything the graphs type as rdfs:Datatype).
bool is_datatype_iri(const Iri& iri, const std::set<Iri>& declared_datatypes);

/// Lexical form check for the XSD datatypes the validator knows; unknown
/// datatypes always pass.
bool lexical_form_valid(const std::string& lexical, const Iri& datatype);

}  // namespace rmlforge
