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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmlforge/mapping.hpp"
#include "rmlforge/turtle.hpp"
#include "rmlforge/vocab.hpp"
#include "testutil.hpp"

using namespace rmlforge;

namespace {

const char* kPrefixes =
    "@prefix rr:   <http://www.w3.org/ns/r2rml#> .\n"
    "@prefix rml:  <http://semweb.mmlab.be/ns/rml#> .\n"
    "@prefix ql:   <http://semweb.mmlab.be/ns/ql#> .\n"
    "@prefix xsd:  <http://www.w3.org/2001/XMLSchema#> .\n"
    "@prefix foaf: <http://xmlns.com/foaf/0.1/> .\n"
    "@prefix ex:   <http://ex.com/ns#> .\n";

MappingDocument load_text(const std::string& body, Dialect dialect = Dialect::Rml) {
    Graph g = parse_turtle(kPrefixes + body, Iri("http://ex.com/m"));
    return load_mapping(g, dialect);
}

MappingDocument load_normalized(const std::string& body) {
    return normalize(load_text(body));
}

}  // namespace

TEST_CASE("load_mapping: logical table with table name") {
    MappingDocument doc = load_text(
        "<#PoleVaulters>        rr:logicalTable <#PoleVaultersDBtable> ;\n"
        "                       rr:subjectMap [ rr:template \"http:://ex.com/p/{name}\" ] .\n"
        "<#PoleVaultersDBtable> rr:tableName \"poleVaulters\" .\n");
    REQUIRE(doc.triples_maps.size() == 1);
    const TriplesMap& tm = doc.triples_maps[0];
    CHECK(tm.logical_source.table_name == "poleVaulters");
    CHECK(tm.logical_source.formulation == Formulation::Csv);

    MappingDocument canon = normalize(std::move(doc));
    CHECK(canon.triples_maps[0].logical_source.source == "poleVaulters.csv");
    CHECK(!canon.triples_maps[0].logical_source.table_name);
}

TEST_CASE("load_mapping: XML logical source with iterator and formulation") {
    MappingDocument doc = load_text(
        "<#Countries>    rml:logicalSource <#CountriesXML> ;\n"
        "                rr:subjectMap [ rr:template \"http:://ex.com/c/{country}\" ] .\n"
        "<#CountriesXML> rml:source <http://rml.io/data/semWebSer/countries.xml> ;\n"
        "                rml:referenceFormulation ql:XPath ;\n"
        "                rml:iterator \"/countries/country\" .\n");
    REQUIRE(doc.triples_maps.size() == 1);
    const LogicalSource& ls = doc.triples_maps[0].logical_source;
    CHECK(ls.source == "http://rml.io/data/semWebSer/countries.xml");
    CHECK(ls.formulation == Formulation::XPath);
    CHECK(ls.iterator == "/countries/country");
}

TEST_CASE("load_mapping: empty graph") {
    Graph g = parse_turtle("", Iri("http://ex.com/m"));
    CHECK_THROWS_WITH_AS(load_mapping(g), "no triples maps found", MappingError);
}

TEST_CASE("load_mapping error paths") {
    SUBCASE("triples map with no logical source") {
        CHECK_THROWS_AS(
            load_text("<#T> a rr:TriplesMap ; rr:subjectMap [ rr:constant ex:s ] .\n"),
            MappingError);
    }
    SUBCASE("triples map with no subject map") {
        CHECK_THROWS_AS(
            load_text("<#T> rr:logicalTable [ rr:tableName \"t\" ] .\n"), MappingError);
    }
    SUBCASE("predicate-object map missing the object side") {
        CHECK_THROWS_AS(
            load_text("<#T> rr:logicalTable [ rr:tableName \"t\" ] ;\n"
                      "     rr:subjectMap [ rr:constant ex:s ] ;\n"
                      "     rr:predicateObjectMap [ rr:predicate ex:p ] .\n"),
            MappingError);
    }
    SUBCASE("predicate-object map missing the predicate side") {
        CHECK_THROWS_AS(
            load_text("<#T> rr:logicalTable [ rr:tableName \"t\" ] ;\n"
                      "     rr:subjectMap [ rr:constant ex:s ] ;\n"
                      "     rr:predicateObjectMap [ rr:object ex:o ] .\n"),
            MappingError);
    }
    SUBCASE("unknown reference formulation") {
        CHECK_THROWS_AS(
            load_text("<#T> rml:logicalSource [ rml:source \"x.csv\" ;\n"
                      "         rml:referenceFormulation ql:SPARQL ] ;\n"
                      "     rr:subjectMap [ rr:constant ex:s ] .\n"),
            MappingError);
    }
}

TEST_CASE("r2rml dialect rejects rml vocabulary") {
    std::string body =
        "<#T> rml:logicalSource [ rml:source \"x.csv\" ] ;\n"
        "     rr:subjectMap [ rr:constant ex:s ] .\n";
    CHECK_NOTHROW(load_text(body, Dialect::Rml));
    try {
        load_text(body, Dialect::R2rml);
        FAIL("expected MappingError");
    } catch (const MappingError& e) {
        CHECK(std::string(e.what()).find("RML construct in R2RML mode") !=
              std::string::npos);
    }
}

TEST_CASE("unknown mapping vocabulary is warned about, not fatal") {
    MappingDocument doc = load_text(
        "<#T> rr:logicalTable [ rr:tableName \"t\" ] ;\n"
        "     rr:subjectMap [ rr:constant ex:s ] ;\n"
        "     rr:sqlVersion \"SQL2008\" .\n");
    REQUIRE(doc.warnings.size() == 1);
    CHECK(doc.warnings[0].find("sqlVersion") != std::string::npos);
}

TEST_CASE("normalize: column becomes a Literal reference") {
    MappingDocument doc = load_normalized(
        "<#T> rr:logicalTable [ rr:tableName \"t\" ] ;\n"
        "     rr:subjectMap [ rr:template \"http:://ex.com/{id}\" ] ;\n"
        "     rr:predicateObjectMap [ rr:predicate ex:p ;\n"
        "                             rr:objectMap [ rr:column \"name\" ] ] .\n");
    const TermMap& om =
        std::get<TermMap>(doc.triples_maps[0].predicate_object_maps[0].object_maps[0]);
    CHECK(om.kind == TermKind::Reference);
    CHECK(om.expr == "name");
    CHECK(om.term_type == TermType::Literal);
}

TEST_CASE("normalize: rr:language becomes a constant language map") {
    MappingDocument doc = load_normalized(
        "<#T> rr:logicalTable [ rr:tableName \"t\" ] ;\n"
        "     rr:subjectMap [ rr:template \"http:://ex.com/{id}\" ] ;\n"
        "     rr:predicateObjectMap [ rr:predicate ex:p ;\n"
        "         rr:objectMap [ rr:column \"country\" ; rr:language \"en-us\" ] ] .\n");
    const TermMap& om =
        std::get<TermMap>(doc.triples_maps[0].predicate_object_maps[0].object_maps[0]);
    REQUIRE(om.language_map);
    CHECK(om.language_map->kind == TermKind::Constant);
    CHECK(om.language_map->term_type == TermType::Literal);
    CHECK(!om.language_constant);
    const auto& lit = std::get<Literal>(*om.language_map->constant);
    CHECK(lit.lexical() == "en-us");
}

TEST_CASE("normalize: constant with no term type defaults to IRI") {
    MappingDocument doc = load_normalized(
        "<#T> rr:logicalTable [ rr:tableName \"t\" ] ;\n"
        "     rr:subjectMap [ rr:template \"http:://ex.com/{id}\" ] ;\n"
        "     rr:predicateObjectMap [ rr:predicate ex:p ;\n"
        "         rr:objectMap [ rr:constant ex:score ] ] .\n");
    const TermMap& om =
        std::get<TermMap>(doc.triples_maps[0].predicate_object_maps[0].object_maps[0]);
    CHECK(om.term_type == TermType::Iri);
}

TEST_CASE("normalize is idempotent") {
    std::string body = testutil::read_file(testutil::fixture("mappings/pole_vaulters.ttl"));
    Graph g = parse_turtle(body, Iri("http://ex.com/mapping/poleVaulters"));
    MappingDocument once = normalize(load_mapping(g));
    MappingDocument twice = normalize(once);
    CHECK(once == twice);
}

TEST_CASE("R2RML and its RML translation normalize to the same canonical document") {
    for (const std::string pair : {"eq1", "eq2", "eq3", "eq4", "eq5"}) {
        MappingDocument r2rml = normalize(load_mapping(
            parse_turtle_file(testutil::fixture("mappings/" + pair + "_r2rml.ttl"))));
        MappingDocument rml = normalize(load_mapping(
            parse_turtle_file(testutil::fixture("mappings/" + pair + "_rml.ttl"))));
        INFO("pair ", pair);
        CHECK(r2rml == rml);
    }
}

TEST_CASE("default_term_type follows the combination table") {
    CHECK(default_term_type(Position::Object, TermKind::Reference) == TermType::Literal);
    CHECK(default_term_type(Position::Object, TermKind::Column) == TermType::Literal);
    CHECK(default_term_type(Position::Subject, TermKind::Template) == TermType::Iri);
    CHECK(default_term_type(Position::Predicate, TermKind::Constant) == TermType::Iri);
    CHECK(default_term_type(Position::Language, TermKind::Reference) == TermType::Literal);
    CHECK_THROWS_AS(default_term_type(Position::Predicate, TermKind::None), MappingError);
}

TEST_CASE("check_structure: well-formed document is clean") {
    std::string body = testutil::read_file(testutil::fixture("mappings/pole_vaulters.ttl"));
    Graph g = parse_turtle(body, Iri("http://ex.com/mapping/poleVaulters"));
    MappingDocument doc = normalize(load_mapping(g));
    CHECK(check_structure(doc).empty());
}

TEST_CASE("check_structure: literal subject map") {
    MappingDocument doc = load_normalized(
        "<#T> rr:logicalTable [ rr:tableName \"t\" ] ;\n"
        "     rr:subjectMap [ rr:column \"id\" ] .\n");
    std::vector<StructuralError> errors = check_structure(doc);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].message == "subject must be IRI or BlankNode");
}

TEST_CASE("check_structure: unresolved parent triples map") {
    MappingDocument doc = load_normalized(
        "<#T> rr:logicalTable [ rr:tableName \"t\" ] ;\n"
        "     rr:subjectMap [ rr:template \"http:://ex.com/{id}\" ] ;\n"
        "     rr:predicateObjectMap [ rr:predicate ex:p ;\n"
        "         rr:objectMap [ rr:parentTriplesMap <#Nowhere> ] ] .\n");
    std::vector<StructuralError> errors = check_structure(doc);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].message.find("unknown parent triples map") != std::string::npos);
}

TEST_CASE("check_structure: missing iterator for hierarchical sources") {
    MappingDocument doc = load_normalized(
        "<#T> rml:logicalSource [ rml:source \"c.xml\" ;\n"
        "                         rml:referenceFormulation ql:XPath ] ;\n"
        "     rr:subjectMap [ rr:template \"http:://ex.com/{a}\" ] .\n");
    std::vector<StructuralError> errors = check_structure(doc);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].message.find("iterator") != std::string::npos);
}

TEST_CASE("check_structure: expression syntax per formulation") {
    MappingDocument doc = load_normalized(
        "<#T> rr:logicalTable [ rr:tableName \"t\" ] ;\n"
        "     rr:subjectMap [ rr:template \"http:://ex.com/{id}\" ] ;\n"
        "     rr:predicateObjectMap [ rr:predicate ex:p ;\n"
        "         rr:objectMap [ rml:reference \"a[0]\" ] ] .\n");
    std::vector<StructuralError> errors = check_structure(doc);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].message.find("a[0]") != std::string::npos);
}

TEST_CASE("check_structure: datatype and language map are exclusive") {
    MappingDocument doc = load_normalized(
        "<#T> rr:logicalTable [ rr:tableName \"t\" ] ;\n"
        "     rr:subjectMap [ rr:template \"http:://ex.com/{id}\" ] ;\n"
        "     rr:predicateObjectMap [ rr:predicate ex:p ;\n"
        "         rr:objectMap [ rr:column \"c\" ; rr:datatype xsd:int ;\n"
        "                        rr:language \"en\" ] ] .\n");
    std::vector<StructuralError> errors = check_structure(doc);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].message.find("mutually exclusive") != std::string::npos);
}

TEST_CASE("zero predicate-object maps are allowed") {
    MappingDocument doc = load_normalized(
        "<#T> rr:logicalTable [ rr:tableName \"t\" ] ;\n"
        "     rr:subjectMap [ rr:template \"http:://ex.com/{id}\" ;\n"
        "                     rr:class ex:Thing ] .\n");
    CHECK(doc.triples_maps[0].predicate_object_maps.empty());
    CHECK(doc.triples_maps[0].classes.size() == 1);
    CHECK(check_structure(doc).empty());
}

TEST_CASE("after normalization every term map has a resolved term type") {
    std::string body =
        testutil::read_file(testutil::fixture("mappings/two_maps_one_dirty.ttl"));
    Graph g = parse_turtle(body, Iri("http://ex.com/mapping/twoMaps"));
    MappingDocument doc = normalize(load_mapping(g));
    for (const TriplesMap& tm : doc.triples_maps) {
        CHECK(tm.subject_map.term_type.has_value());
        for (const PredicateObjectMap& pom : tm.predicate_object_maps) {
            for (const TermMap& pm : pom.predicate_maps) {
                CHECK(pm.term_type.has_value());
            }
            for (const ObjectMap& om : pom.object_maps) {
                if (const auto* term_map = std::get_if<TermMap>(&om)) {
                    CHECK(term_map->term_type.has_value());
                }
            }
        }
    }
}
