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

#include <string_view>

// Namespace IRIs and the individual vocabulary terms the engine recognizes.
// The rr/rml/ql namespaces are fixed; changing them changes the dialect.

namespace rmlforge::vocab {

inline constexpr std::string_view RR = "http://www.w3.org/ns/r2rml#";
inline constexpr std::string_view RML = "http://semweb.mmlab.be/ns/rml#";
inline constexpr std::string_view QL = "http://semweb.mmlab.be/ns/ql#";
inline constexpr std::string_view RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view RDFS = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view XSD = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view OWL = "http://www.w3.org/2002/07/owl#";

inline constexpr std::string_view RDF_TYPE =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view RDF_LANG_STRING =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view XSD_STRING =
    "http://www.w3.org/2001/XMLSchema#string";

inline constexpr std::string_view RDFS_DOMAIN =
    "http://www.w3.org/2000/01/rdf-schema#domain";
inline constexpr std::string_view RDFS_RANGE =
    "http://www.w3.org/2000/01/rdf-schema#range";
inline constexpr std::string_view RDFS_SUBCLASS_OF =
    "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view RDFS_LITERAL =
    "http://www.w3.org/2000/01/rdf-schema#Literal";
inline constexpr std::string_view RDFS_DATATYPE =
    "http://www.w3.org/2000/01/rdf-schema#Datatype";
inline constexpr std::string_view OWL_DATATYPE_PROPERTY =
    "http://www.w3.org/2002/07/owl#DatatypeProperty";
inline constexpr std::string_view OWL_OBJECT_PROPERTY =
    "http://www.w3.org/2002/07/owl#ObjectProperty";

// R2RML / RML mapping vocabulary.
inline constexpr std::string_view RR_TRIPLES_MAP = "http://www.w3.org/ns/r2rml#TriplesMap";
inline constexpr std::string_view RR_LOGICAL_TABLE = "http://www.w3.org/ns/r2rml#logicalTable";
inline constexpr std::string_view RR_TABLE_NAME = "http://www.w3.org/ns/r2rml#tableName";
inline constexpr std::string_view RR_SUBJECT_MAP = "http://www.w3.org/ns/r2rml#subjectMap";
inline constexpr std::string_view RR_SUBJECT = "http://www.w3.org/ns/r2rml#subject";
inline constexpr std::string_view RR_PREDICATE_OBJECT_MAP =
    "http://www.w3.org/ns/r2rml#predicateObjectMap";
inline constexpr std::string_view RR_PREDICATE_MAP = "http://www.w3.org/ns/r2rml#predicateMap";
inline constexpr std::string_view RR_PREDICATE = "http://www.w3.org/ns/r2rml#predicate";
inline constexpr std::string_view RR_OBJECT_MAP = "http://www.w3.org/ns/r2rml#objectMap";
inline constexpr std::string_view RR_OBJECT = "http://www.w3.org/ns/r2rml#object";
inline constexpr std::string_view RR_CONSTANT = "http://www.w3.org/ns/r2rml#constant";
inline constexpr std::string_view RR_TEMPLATE = "http://www.w3.org/ns/r2rml#template";
inline constexpr std::string_view RR_COLUMN = "http://www.w3.org/ns/r2rml#column";
inline constexpr std::string_view RR_TERM_TYPE = "http://www.w3.org/ns/r2rml#termType";
inline constexpr std::string_view RR_DATATYPE = "http://www.w3.org/ns/r2rml#datatype";
inline constexpr std::string_view RR_LANGUAGE = "http://www.w3.org/ns/r2rml#language";
inline constexpr std::string_view RR_CLASS = "http://www.w3.org/ns/r2rml#class";
inline constexpr std::string_view RR_GRAPH_MAP = "http://www.w3.org/ns/r2rml#graphMap";
inline constexpr std::string_view RR_GRAPH = "http://www.w3.org/ns/r2rml#graph";
inline constexpr std::string_view RR_DEFAULT_GRAPH = "http://www.w3.org/ns/r2rml#defaultGraph";
inline constexpr std::string_view RR_PARENT_TRIPLES_MAP =
    "http://www.w3.org/ns/r2rml#parentTriplesMap";
inline constexpr std::string_view RR_JOIN_CONDITION = "http://www.w3.org/ns/r2rml#joinCondition";
inline constexpr std::string_view RR_JOIN = "http://www.w3.org/ns/r2rml#join";
inline constexpr std::string_view RR_CHILD = "http://www.w3.org/ns/r2rml#child";
inline constexpr std::string_view RR_PARENT = "http://www.w3.org/ns/r2rml#parent";
inline constexpr std::string_view RR_IRI = "http://www.w3.org/ns/r2rml#IRI";
inline constexpr std::string_view RR_BLANK_NODE = "http://www.w3.org/ns/r2rml#BlankNode";
inline constexpr std::string_view RR_LITERAL = "http://www.w3.org/ns/r2rml#Literal";

inline constexpr std::string_view RML_LOGICAL_SOURCE =
    "http://semweb.mmlab.be/ns/rml#logicalSource";
inline constexpr std::string_view RML_SOURCE = "http://semweb.mmlab.be/ns/rml#source";
inline constexpr std::string_view RML_REFERENCE_FORMULATION =
    "http://semweb.mmlab.be/ns/rml#referenceFormulation";
inline constexpr std::string_view RML_ITERATOR = "http://semweb.mmlab.be/ns/rml#iterator";
inline constexpr std::string_view RML_REFERENCE = "http://semweb.mmlab.be/ns/rml#reference";
inline constexpr std::string_view RML_LANGUAGE_MAP = "http://semweb.mmlab.be/ns/rml#languageMap";

inline constexpr std::string_view QL_CSV = "http://semweb.mmlab.be/ns/ql#CSV";
inline constexpr std::string_view QL_XPATH = "http://semweb.mmlab.be/ns/ql#XPath";
inline constexpr std::string_view QL_JSONPATH = "http://semweb.mmlab.be/ns/ql#JSONPath";

}  // namespace rmlforge::vocab
