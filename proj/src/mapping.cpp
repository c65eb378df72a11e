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

#include "rmlforge/mapping.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rmlforge/term_gen.hpp"
#include "rmlforge/vocab.hpp"

namespace rmlforge {

std::string to_string(Formulation f) {
    switch (f) {
        case Formulation::Csv: return "CSV";
        case Formulation::XPath: return "XPath";
        case Formulation::JsonPath: return "JSONPath";
    }
    return "?";
}

std::string to_string(TermKind k) {
    switch (k) {
        case TermKind::Constant: return "constant";
        case TermKind::Template: return "template";
        case TermKind::Column: return "column";
        case TermKind::Reference: return "reference";
        case TermKind::None: return "none";
    }
    return "?";
}

std::string to_string(TermType t) {
    switch (t) {
        case TermType::Iri: return "IRI";
        case TermType::BlankNode: return "BlankNode";
        case TermType::Literal: return "Literal";
    }
    return "?";
}

std::string to_string(Position p) {
    switch (p) {
        case Position::Subject: return "subject";
        case Position::Predicate: return "predicate";
        case Position::Object: return "object";
        case Position::Graph: return "graph";
        case Position::Language: return "language";
    }
    return "?";
}

bool TermMap::operator==(const TermMap& other) const {
    if (position != other.position || kind != other.kind || constant != other.constant ||
        expr != other.expr || term_type != other.term_type ||
        datatype != other.datatype || language_constant != other.language_constant) {
        return false;
    }
    if (static_cast<bool>(language_map) != static_cast<bool>(other.language_map)) {
        return false;
    }
    return !language_map || *language_map == *other.language_map;
}

const TriplesMap* MappingDocument::find(const std::string& id) const {
    for (const TriplesMap& tm : triples_maps) {
        if (tm.id == id) return &tm;
    }
    return nullptr;
}

namespace {

std::string node_id(const Resource& r) {
    if (const auto* iri = std::get_if<Iri>(&r)) return "<" + iri->value() + ">";
    return "_:" + std::get<BlankNode>(r).label();
}

bool in_namespace(const Iri& iri, std::string_view ns) {
    return iri.value().compare(0, ns.size(), ns) == 0;
}

const std::set<std::string_view>& known_predicates() {
    using namespace vocab;
    static const std::set<std::string_view> known = {
        RR_LOGICAL_TABLE, RR_TABLE_NAME,  RR_SUBJECT_MAP,    RR_SUBJECT,
        RR_PREDICATE_OBJECT_MAP,          RR_PREDICATE_MAP,  RR_PREDICATE,
        RR_OBJECT_MAP,    RR_OBJECT,      RR_CONSTANT,       RR_TEMPLATE,
        RR_COLUMN,        RR_TERM_TYPE,   RR_DATATYPE,       RR_LANGUAGE,
        RR_CLASS,         RR_GRAPH_MAP,   RR_GRAPH,          RR_PARENT_TRIPLES_MAP,
        RR_JOIN_CONDITION, RR_JOIN,       RR_CHILD,          RR_PARENT,
        RML_LOGICAL_SOURCE, RML_SOURCE,   RML_REFERENCE_FORMULATION,
        RML_ITERATOR,     RML_REFERENCE,  RML_LANGUAGE_MAP,
    };
    return known;
}

class MappingLoader {
public:
    MappingLoader(const Graph& graph, Dialect dialect) : g_(graph), dialect_(dialect) {}

    MappingDocument load() {
        index_graph();
        if (dialect_ == Dialect::R2rml) reject_rml_vocabulary();
        collect_warnings();

        std::vector<Resource> tm_nodes = find_triples_map_nodes();
        if (tm_nodes.empty()) throw MappingError("no triples maps found");

        MappingDocument doc;
        doc.source_graph = g_;
        doc.warnings = warnings_;
        for (const Resource& node : tm_nodes) {
            doc.triples_maps.push_back(load_triples_map(node));
        }
        return doc;
    }

private:
    void index_graph() {
        for (const Quad& q : g_.quads()) {
            spo_[q.subject].emplace_back(q.predicate, q.object);
        }
    }

    void reject_rml_vocabulary() const {
        for (const Quad& q : g_.quads()) {
            if (in_namespace(q.predicate, vocab::RML) ||
                in_namespace(q.predicate, vocab::QL)) {
                throw MappingError("RML construct in R2RML mode: <" +
                                   q.predicate.value() + ">");
            }
        }
    }

    void collect_warnings() {
        for (const Quad& q : g_.quads()) {
            const Iri& p = q.predicate;
            if ((in_namespace(p, vocab::RR) || in_namespace(p, vocab::RML) ||
                 in_namespace(p, vocab::QL)) &&
                known_predicates().count(p.value()) == 0) {
                std::string w = "ignoring unknown mapping vocabulary <" + p.value() + ">";
                if (std::find(warnings_.begin(), warnings_.end(), w) == warnings_.end()) {
                    warnings_.push_back(w);
                }
            }
        }
    }

    std::vector<Resource> find_triples_map_nodes() const {
        std::vector<Resource> nodes;
        std::set<Resource> seen;
        auto add = [&](const Resource& r) {
            if (seen.insert(r).second) nodes.push_back(r);
        };
        for (const Quad& q : g_.quads()) {
            const std::string& p = q.predicate.value();
            if (p == vocab::RDF_TYPE) {
                if (const auto* t = std::get_if<Iri>(&q.object);
                    t && t->value() == vocab::RR_TRIPLES_MAP) {
                    add(q.subject);
                }
            } else if (p == vocab::RR_LOGICAL_TABLE || p == vocab::RML_LOGICAL_SOURCE) {
                add(q.subject);
            }
        }
        return nodes;
    }

    std::vector<RdfTerm> objects(const Resource& s, std::string_view pred) const {
        std::vector<RdfTerm> out;
        auto it = spo_.find(s);
        if (it == spo_.end()) return out;
        for (const auto& [p, o] : it->second) {
            if (p.value() == pred) out.push_back(o);
        }
        return out;
    }

    std::optional<RdfTerm> unique_object(const Resource& s, std::string_view pred) const {
        auto all = objects(s, pred);
        if (all.empty()) return std::nullopt;
        if (all.size() > 1) {
            throw MappingError(node_id(s) + ": multiple values for <" +
                               std::string(pred) + ">");
        }
        return all.front();
    }

    std::optional<std::string> literal_value(const Resource& s, std::string_view pred) const {
        auto term = unique_object(s, pred);
        if (!term) return std::nullopt;
        if (const auto* lit = std::get_if<Literal>(&*term)) return lit->lexical();
        throw MappingError(node_id(s) + ": <" + std::string(pred) + "> must be a literal");
    }

    static Resource as_resource(const RdfTerm& t, const std::string& context) {
        if (const auto* iri = std::get_if<Iri>(&t)) return *iri;
        if (const auto* bn = std::get_if<BlankNode>(&t)) return *bn;
        throw MappingError(context + ": expected an IRI or blank node, found a literal");
    }

    LogicalSource load_logical_source(const Resource& tm_node) const {
        auto table = unique_object(tm_node, vocab::RR_LOGICAL_TABLE);
        auto source = unique_object(tm_node, vocab::RML_LOGICAL_SOURCE);
        if (table && source) {
            throw MappingError(node_id(tm_node) +
                               ": both a logical table and a logical source given");
        }
        if (table) {
            Resource t = as_resource(*table, node_id(tm_node) + " logical table");
            auto name = literal_value(t, vocab::RR_TABLE_NAME);
            if (!name) {
                throw MappingError(node_id(t) + ": logical table has no rr:tableName");
            }
            LogicalSource ls;
            ls.formulation = Formulation::Csv;
            ls.table_name = *name;
            return ls;
        }
        if (!source) {
            throw MappingError("triples map " + node_id(tm_node) +
                               ": no logical source or logical table");
        }
        Resource s = as_resource(*source, node_id(tm_node) + " logical source");
        LogicalSource ls;
        auto src = unique_object(s, vocab::RML_SOURCE);
        if (!src) {
            throw MappingError(node_id(s) + ": logical source has no rml:source");
        }
        if (const auto* iri = std::get_if<Iri>(&*src)) {
            ls.source = iri->value();
        } else if (const auto* lit = std::get_if<Literal>(&*src)) {
            ls.source = lit->lexical();
        } else {
            throw MappingError(node_id(s) + ": rml:source must be an IRI or literal");
        }
        if (auto rf = unique_object(s, vocab::RML_REFERENCE_FORMULATION)) {
            const auto* iri = std::get_if<Iri>(&*rf);
            if (!iri) {
                throw MappingError(node_id(s) + ": reference formulation must be an IRI");
            }
            if (iri->value() == vocab::QL_CSV) {
                ls.formulation = Formulation::Csv;
            } else if (iri->value() == vocab::QL_XPATH) {
                ls.formulation = Formulation::XPath;
            } else if (iri->value() == vocab::QL_JSONPATH) {
                ls.formulation = Formulation::JsonPath;
            } else {
                throw MappingError("unknown reference formulation <" + iri->value() + ">");
            }
        }
        ls.iterator = literal_value(s, vocab::RML_ITERATOR);
        return ls;
    }

    TermMap load_term_map(const Resource& node, Position position) const {
        TermMap tm;
        tm.id = node_id(node);
        tm.position = position;

        int value_kinds = 0;
        if (auto c = unique_object(node, vocab::RR_CONSTANT)) {
            tm.kind = TermKind::Constant;
            tm.constant = *c;
            ++value_kinds;
        }
        if (auto t = literal_value(node, vocab::RR_TEMPLATE)) {
            tm.kind = TermKind::Template;
            tm.expr = *t;
            ++value_kinds;
        }
        if (auto col = literal_value(node, vocab::RR_COLUMN)) {
            tm.kind = TermKind::Column;
            tm.expr = *col;
            ++value_kinds;
        }
        if (auto ref = literal_value(node, vocab::RML_REFERENCE)) {
            tm.kind = TermKind::Reference;
            tm.expr = *ref;
            ++value_kinds;
        }
        if (value_kinds > 1) {
            throw MappingError(tm.id +
                               ": term map mixes constant/template/column/reference");
        }

        if (auto tt = unique_object(node, vocab::RR_TERM_TYPE)) {
            const auto* iri = std::get_if<Iri>(&*tt);
            if (!iri) throw MappingError(tm.id + ": rr:termType must be an IRI");
            if (iri->value() == vocab::RR_IRI) {
                tm.term_type = TermType::Iri;
            } else if (iri->value() == vocab::RR_BLANK_NODE) {
                tm.term_type = TermType::BlankNode;
            } else if (iri->value() == vocab::RR_LITERAL) {
                tm.term_type = TermType::Literal;
            } else {
                throw MappingError(tm.id + ": unknown term type <" + iri->value() + ">");
            }
        }

        if (auto dt = unique_object(node, vocab::RR_DATATYPE)) {
            const auto* iri = std::get_if<Iri>(&*dt);
            if (!iri) throw MappingError(tm.id + ": rr:datatype must be an IRI");
            tm.datatype = *iri;
        }
        tm.language_constant = literal_value(node, vocab::RR_LANGUAGE);
        if (auto lm = unique_object(node, vocab::RML_LANGUAGE_MAP)) {
            Resource lm_node = as_resource(*lm, tm.id + " language map");
            tm.language_map = std::make_shared<TermMap>(
                load_term_map(lm_node, Position::Language));
        }
        return tm;
    }

    TermMap constant_term_map(RdfTerm value, Position position, std::string id) const {
        TermMap tm;
        tm.id = std::move(id);
        tm.position = position;
        tm.kind = TermKind::Constant;
        tm.constant = std::move(value);
        return tm;
    }

    // Graph maps attached to a subject map or predicate-object map node.
    std::vector<TermMap> load_graph_maps(const Resource& node,
                                         const std::string& owner_id) const {
        std::vector<TermMap> out;
        for (const RdfTerm& g : objects(node, vocab::RR_GRAPH)) {
            out.push_back(constant_term_map(
                g, Position::Graph,
                owner_id + "/graph[" + std::to_string(out.size()) + "]"));
        }
        for (const RdfTerm& g : objects(node, vocab::RR_GRAPH_MAP)) {
            Resource gm = as_resource(g, owner_id + " graph map");
            out.push_back(load_term_map(gm, Position::Graph));
        }
        return out;
    }

    PredicateObjectMap load_pom(const Resource& node) const {
        PredicateObjectMap pom;
        pom.id = node_id(node);
        for (const RdfTerm& p : objects(node, vocab::RR_PREDICATE)) {
            pom.predicate_maps.push_back(constant_term_map(
                p, Position::Predicate,
                pom.id + "/predicate[" + std::to_string(pom.predicate_maps.size()) + "]"));
        }
        for (const RdfTerm& p : objects(node, vocab::RR_PREDICATE_MAP)) {
            Resource pm = as_resource(p, pom.id + " predicate map");
            pom.predicate_maps.push_back(load_term_map(pm, Position::Predicate));
        }
        if (pom.predicate_maps.empty()) {
            throw MappingError("predicate-object map " + pom.id + ": no predicate maps");
        }

        for (const RdfTerm& o : objects(node, vocab::RR_OBJECT)) {
            pom.object_maps.push_back(constant_term_map(
                o, Position::Object,
                pom.id + "/object[" + std::to_string(pom.object_maps.size()) + "]"));
        }
        for (const RdfTerm& o : objects(node, vocab::RR_OBJECT_MAP)) {
            Resource om = as_resource(o, pom.id + " object map");
            if (unique_object(om, vocab::RR_PARENT_TRIPLES_MAP)) {
                pom.object_maps.push_back(load_referencing_object_map(om));
            } else {
                pom.object_maps.push_back(load_term_map(om, Position::Object));
            }
        }
        if (pom.object_maps.empty()) {
            throw MappingError("predicate-object map " + pom.id + ": no object maps");
        }
        pom.graph_maps = load_graph_maps(node, pom.id);
        return pom;
    }

    ReferencingObjectMap load_referencing_object_map(const Resource& node) const {
        ReferencingObjectMap rom;
        rom.id = node_id(node);
        auto parent = unique_object(node, vocab::RR_PARENT_TRIPLES_MAP);
        rom.parent = node_id(as_resource(*parent, rom.id + " parent triples map"));
        // rr:join appears in the wild as a shorthand for rr:joinCondition.
        std::vector<RdfTerm> conds = objects(node, vocab::RR_JOIN_CONDITION);
        for (const RdfTerm& j : objects(node, vocab::RR_JOIN)) conds.push_back(j);
        for (const RdfTerm& j : conds) {
            Resource jc = as_resource(j, rom.id + " join condition");
            auto child = literal_value(jc, vocab::RR_CHILD);
            auto par = literal_value(jc, vocab::RR_PARENT);
            if (!child || !par) {
                throw MappingError(rom.id +
                                   ": join condition needs rr:child and rr:parent");
            }
            rom.join_conditions.emplace_back(*child, *par);
        }
        return rom;
    }

    TriplesMap load_triples_map(const Resource& node) const {
        TriplesMap tm;
        tm.id = node_id(node);
        tm.logical_source = load_logical_source(node);

        auto sm_node = unique_object(node, vocab::RR_SUBJECT_MAP);
        auto sm_const = unique_object(node, vocab::RR_SUBJECT);
        if (sm_node && sm_const) {
            throw MappingError(tm.id + ": both rr:subjectMap and rr:subject given");
        }
        if (sm_node) {
            Resource sm = as_resource(*sm_node, tm.id + " subject map");
            tm.subject_map = load_term_map(sm, Position::Subject);
            for (const RdfTerm& c : objects(sm, vocab::RR_CLASS)) {
                const auto* iri = std::get_if<Iri>(&c);
                if (!iri) throw MappingError(tm.id + ": rr:class must be an IRI");
                tm.classes.push_back(*iri);
            }
            tm.graph_maps = load_graph_maps(sm, tm.subject_map.id);
        } else if (sm_const) {
            tm.subject_map =
                constant_term_map(*sm_const, Position::Subject, tm.id + "/subject");
        } else {
            throw MappingError("triples map " + tm.id + ": no subject map");
        }

        for (const RdfTerm& p : objects(node, vocab::RR_PREDICATE_OBJECT_MAP)) {
            Resource pom = as_resource(p, tm.id + " predicate-object map");
            tm.predicate_object_maps.push_back(load_pom(pom));
        }
        return tm;
    }

    const Graph& g_;
    Dialect dialect_;
    std::map<Resource, std::vector<std::pair<Iri, RdfTerm>>> spo_;
    std::vector<std::string> warnings_;
};

TermType term_kind_of(const RdfTerm& t) {
    if (std::holds_alternative<Iri>(t)) return TermType::Iri;
    if (std::holds_alternative<BlankNode>(t)) return TermType::BlankNode;
    return TermType::Literal;
}

void normalize_term_map(TermMap& tm) {
    if (tm.kind == TermKind::Column) tm.kind = TermKind::Reference;

    if (tm.language_constant) {
        TermMap lm;
        lm.id = tm.id + "/languageMap";
        lm.position = Position::Language;
        lm.kind = TermKind::Constant;
        lm.constant = make_literal(*tm.language_constant);
        tm.language_map = std::make_shared<TermMap>(std::move(lm));
        tm.language_constant.reset();
    }
    if (tm.language_map) {
        // Copy-on-write: language maps are shared_ptrs.
        auto lm = std::make_shared<TermMap>(*tm.language_map);
        normalize_term_map(*lm);
        tm.language_map = std::move(lm);
    }

    if (!tm.term_type) {
        if (tm.kind == TermKind::None) {
            tm.term_type = TermType::BlankNode;
        } else if (tm.kind == TermKind::Constant) {
            tm.term_type = term_kind_of(*tm.constant);
        } else {
            tm.term_type = default_term_type(tm.position, tm.kind);
        }
    }
}

}  // namespace

MappingDocument load_mapping(const Graph& graph, Dialect dialect) {
    return MappingLoader(graph, dialect).load();
}

TermType default_term_type(Position position, TermKind kind) {
    if (kind == TermKind::None) {
        throw MappingError("no default term type for a value-free " +
                           to_string(position) + " map");
    }
    if (position == Position::Language) return TermType::Literal;
    switch (kind) {
        case TermKind::Constant:
        case TermKind::Template: return TermType::Iri;
        case TermKind::Column:
        case TermKind::Reference: return TermType::Literal;
        default: break;
    }
    throw MappingError("no default term type for kind " + to_string(kind));
}

MappingDocument normalize(MappingDocument doc) {
    std::map<std::string, int> index_by_id;
    for (std::size_t i = 0; i < doc.triples_maps.size(); ++i) {
        index_by_id[doc.triples_maps[i].id] = static_cast<int>(i);
    }
    for (TriplesMap& tm : doc.triples_maps) {
        LogicalSource& ls = tm.logical_source;
        if (ls.table_name) {
            ls.source = *ls.table_name + ".csv";
            ls.formulation = Formulation::Csv;
            ls.iterator.reset();
            ls.table_name.reset();
        }
        normalize_term_map(tm.subject_map);
        for (TermMap& gm : tm.graph_maps) normalize_term_map(gm);
        for (PredicateObjectMap& pom : tm.predicate_object_maps) {
            for (TermMap& pm : pom.predicate_maps) normalize_term_map(pm);
            for (TermMap& gm : pom.graph_maps) normalize_term_map(gm);
            for (ObjectMap& om : pom.object_maps) {
                if (auto* term_map = std::get_if<TermMap>(&om)) {
                    normalize_term_map(*term_map);
                } else {
                    auto& rom = std::get<ReferencingObjectMap>(om);
                    auto it = index_by_id.find(rom.parent);
                    rom.parent_index = it == index_by_id.end() ? -1 : it->second;
                }
            }
        }
    }
    doc.normalized = true;
    return doc;
}

namespace {

bool combination_admitted(Position position, TermKind kind, TermType tt) {
    if (kind == TermKind::Column) kind = TermKind::Reference;
    switch (position) {
        case Position::Subject:
            if (kind == TermKind::Template) {
                return tt == TermType::Iri || tt == TermType::BlankNode;
            }
            if (kind == TermKind::Constant) return tt == TermType::Iri;
            if (kind == TermKind::Reference) {
                return tt == TermType::Iri || tt == TermType::BlankNode;
            }
            if (kind == TermKind::None) return tt == TermType::BlankNode;
            return false;
        case Position::Predicate:
            return kind != TermKind::None && tt == TermType::Iri;
        case Position::Object:
            if (kind == TermKind::Template) {
                return tt == TermType::Iri || tt == TermType::Literal;
            }
            if (kind == TermKind::Constant) {
                return tt == TermType::Iri || tt == TermType::Literal;
            }
            if (kind == TermKind::Reference) return true;  // IRI, BlankNode, Literal
            return false;
        case Position::Graph:
            return kind != TermKind::None && tt == TermType::Iri;
        case Position::Language:
            return kind != TermKind::None && tt == TermType::Literal;
    }
    return false;
}

class StructureChecker {
public:
    explicit StructureChecker(const MappingDocument& doc) : doc_(doc) {}

    std::vector<StructuralError> run() {
        for (const TriplesMap& tm : doc_.triples_maps) {
            check_triples_map(tm);
        }
        return std::move(errors_);
    }

private:
    void add(const std::string& where, const std::string& message) {
        errors_.push_back({where, message});
    }

    void check_expression(const std::string& where, Formulation f,
                          const std::string& expr) {
        if (!supported_expression(f, expr)) {
            add(where, "reference '" + expr + "' is not a supported " + to_string(f) +
                           " expression");
        }
    }

    void check_term_map(const TermMap& tm, Formulation f) {
        if (!tm.term_type) {
            add(tm.id, "term type unresolved (document not normalized)");
            return;
        }
        TermType tt = *tm.term_type;
        if (!combination_admitted(tm.position, tm.kind, tt)) {
            if (tm.position == Position::Subject && tt == TermType::Literal) {
                add(tm.id, "subject must be IRI or BlankNode");
            } else {
                add(tm.id, "combination (" + to_string(tm.kind) + ", " +
                               to_string(tm.position) + ", " + to_string(tt) +
                               ") is not admitted");
            }
        }
        if (tm.kind == TermKind::Constant && tm.constant &&
            term_kind_of(*tm.constant) != tt) {
            add(tm.id, "constant value is a " + to_string(term_kind_of(*tm.constant)) +
                           " but the term type is " + to_string(tt));
        }
        if (tm.datatype && tm.language_map) {
            add(tm.id, "datatype and language map are mutually exclusive");
        }
        if ((tm.datatype || tm.language_map) && tt != TermType::Literal) {
            add(tm.id, "datatype/language map require a Literal term type");
        }
        if (tm.kind == TermKind::Reference || tm.kind == TermKind::Column) {
            check_expression(tm.id, f, tm.expr);
        }
        if (tm.kind == TermKind::Template) {
            try {
                for (const TemplatePart& part : parse_template(tm.expr)) {
                    if (part.is_reference) check_expression(tm.id, f, part.text);
                }
            } catch (const MappingError& e) {
                add(tm.id, e.what());
            }
        }
        if (tm.language_map) check_term_map(*tm.language_map, f);
    }

    void check_triples_map(const TriplesMap& tm) {
        Formulation f = tm.logical_source.formulation;
        if ((f == Formulation::XPath || f == Formulation::JsonPath) &&
            !tm.logical_source.iterator) {
            add(tm.id, "logical source with " + to_string(f) +
                           " formulation requires an iterator");
        }
        if (tm.logical_source.iterator && f != Formulation::Csv) {
            check_expression(tm.id, f, *tm.logical_source.iterator);
        }
        check_term_map(tm.subject_map, f);
        for (const TermMap& gm : tm.graph_maps) check_term_map(gm, f);
        for (const PredicateObjectMap& pom : tm.predicate_object_maps) {
            for (const TermMap& pm : pom.predicate_maps) check_term_map(pm, f);
            for (const TermMap& gm : pom.graph_maps) check_term_map(gm, f);
            for (const ObjectMap& om : pom.object_maps) {
                if (const auto* term_map = std::get_if<TermMap>(&om)) {
                    check_term_map(*term_map, f);
                    continue;
                }
                const auto& rom = std::get<ReferencingObjectMap>(om);
                if (rom.parent_index < 0 ||
                    rom.parent_index >= static_cast<int>(doc_.triples_maps.size())) {
                    add(rom.id, "references unknown parent triples map " + rom.parent);
                    continue;
                }
                const TriplesMap& parent = doc_.triples_maps[rom.parent_index];
                for (const auto& [child_expr, parent_expr] : rom.join_conditions) {
                    check_expression(rom.id, f, child_expr);
                    check_expression(rom.id, parent.logical_source.formulation,
                                     parent_expr);
                }
            }
        }
    }

    const MappingDocument& doc_;
    std::vector<StructuralError> errors_;
};

}  // namespace

std::vector<StructuralError> check_structure(const MappingDocument& doc) {
    return StructureChecker(doc).run();
}

}  // namespace rmlforge
