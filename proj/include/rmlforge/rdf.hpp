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

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rmlforge/errors.hpp"

namespace rmlforge {

/// Absolute IRI. Validation is syntactic: non-empty, has a scheme
/// delimiter, and contains no whitespace or angle brackets.
class Iri {
public:
    Iri() = default;
    explicit Iri(std::string value);

    const std::string& value() const { return value_; }
    bool empty() const { return value_.empty(); }

    auto operator<=>(const Iri&) const = default;

private:
    std::string value_;
};

/// Returns true iff `value` would be accepted by the Iri constructor.
bool is_valid_iri(std::string_view value);

/// Blank node with an opaque label, unique within one dataset.
class BlankNode {
public:
    BlankNode() = default;
    explicit BlankNode(std::string label);

    const std::string& label() const { return label_; }

    auto operator<=>(const BlankNode&) const = default;

private:
    std::string label_;
};

bool is_valid_bnode_label(std::string_view label);

/// Literal value. Exactly one of: language tag (datatype rdf:langString),
/// an explicit datatype, or the default xsd:string.
class Literal {
public:
    Literal() = default;
    Literal(std::string lexical, Iri datatype, std::optional<std::string> language);

    const std::string& lexical() const { return lexical_; }
    const Iri& datatype() const { return datatype_; }
    const std::optional<std::string>& language() const { return language_; }

    auto operator<=>(const Literal&) const = default;

private:
    std::string lexical_;
    Iri datatype_;
    std::optional<std::string> language_;
};

/// Builds a literal, applying the defaults: no datatype and no language
/// means xsd:string; a language tag means rdf:langString and the tag is
/// lowercased. Throws RdfError if a non-language-string datatype is
/// combined with a language tag.
Literal make_literal(std::string lexical, std::optional<Iri> datatype = {},
                     std::optional<std::string> language = {});

using RdfTerm = std::variant<Iri, BlankNode, Literal>;
using Resource = std::variant<Iri, BlankNode>;  // legal subject positions

inline RdfTerm to_term(const Resource& r) {
    return std::visit([](const auto& t) { return RdfTerm(t); }, r);
}

/// One RDF statement, optionally placed in a named graph.
/// The predicate is an Iri by construction.
struct Quad {
    Resource subject;
    Iri predicate;
    RdfTerm object;
    std::optional<Iri> graph;  // absent = default graph

    auto operator<=>(const Quad&) const = default;
};

inline Quad make_triple(Resource s, Iri p, RdfTerm o) {
    return Quad{std::move(s), std::move(p), std::move(o), std::nullopt};
}

/// A set of quads plus the prefix table collected while parsing.
/// Insertion deduplicates by default; a Dataset opened with dedup=false
/// keeps duplicate quads, which per-instance consumers (triple-level
/// validation under the volume law) rely on.
class Dataset {
public:
    explicit Dataset(bool dedup = true) : dedup_(dedup) {}

    /// Returns true when the quad was actually added.
    bool insert(Quad q);

    std::size_t size() const { return quads_.size(); }
    bool empty() const { return quads_.empty(); }
    const std::vector<Quad>& quads() const { return quads_; }
    bool deduplicating() const { return dedup_; }

    void set_prefix(std::string prefix, Iri ns);
    const std::map<std::string, Iri>& prefixes() const { return prefixes_; }

    /// Objects o such that (subject, predicate, o) is asserted (any graph).
    std::vector<RdfTerm> objects_of(const Resource& subject, const Iri& predicate) const;

    /// All distinct subjects appearing in the dataset.
    std::vector<Resource> subjects() const;

    bool contains(const Quad& q) const { return seen_.count(q) > 0; }

private:
    bool dedup_ = true;
    std::vector<Quad> quads_;
    std::set<Quad> seen_;
    std::map<std::string, Iri> prefixes_;
};

using Graph = Dataset;

// ---- N-Quads / N-Triples output -------------------------------------------

/// Serialization of one term in N-Quads syntax (<iri>, _:label, "literal").
std::string term_to_nquads(const RdfTerm& term);
std::string term_to_nquads(const Resource& term);

/// One line per quad, LF-terminated, sorted lexicographically by
/// (graph, subject, predicate, object) for deterministic output.
std::string serialize_nquads(const Dataset& dataset);

/// As serialize_nquads but drops graph names. Sets `dropped_graphs` to the
/// number of quads that lost their graph, when requested.
std::string serialize_ntriples(const Dataset& dataset, std::size_t* dropped_graphs = nullptr);

/// BCP-47 shape check: alpha subtag then alphanumeric subtags, '-'-separated.
bool is_language_tag_shaped(std::string_view tag);

std::string to_lower_ascii(std::string_view s);

}  // namespace rmlforge
