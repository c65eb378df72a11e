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

#include "rmlforge/validate.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "rmlforge/vocab.hpp"

namespace rmlforge {

std::string to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::Domain: return "domain";
        case ViolationKind::Range: return "range";
        case ViolationKind::DatatypeIllFormed: return "datatype-ill-formed";
        case ViolationKind::LanguageShape: return "language-shape";
    }
    return "?";
}

std::string to_string(ViolationLevel l) {
    return l == ViolationLevel::Rule ? "rule" : "triple";
}

namespace {

std::string describe_classes(const std::set<Iri>& classes) {
    std::string out = "{";
    bool first = true;
    for (const Iri& c : classes) {
        if (!first) out += ", ";
        out += "<" + c.value() + ">";
        first = false;
    }
    return out + "}";
}

std::string describe_classes(const std::vector<Iri>& classes) {
    return describe_classes(std::set<Iri>(classes.begin(), classes.end()));
}

Iri literal_datatype(const TermMap& om) {
    if (om.datatype) return *om.datatype;
    if (om.language_map) return Iri(std::string(vocab::RDF_LANG_STRING));
    if (om.kind == TermKind::Constant && om.constant) {
        if (const auto* lit = std::get_if<Literal>(&*om.constant)) return lit->datatype();
    }
    return Iri(std::string(vocab::XSD_STRING));
}

class RuleValidator {
public:
    RuleValidator(const MappingDocument& doc, const SchemaIndex& schema)
        : doc_(doc), schema_(schema) {}

    RuleValidation run() {
        for (const TriplesMap& tm : doc_.triples_maps) {
            check_triples_map(tm);
        }
        return std::move(result_);
    }

private:
    // Classes asserted for the subject: rr:class entries plus constant
    // objects of rdf:type predicate-object maps.
    std::vector<Iri> subject_classes(const TriplesMap& tm) const {
        std::vector<Iri> classes = tm.classes;
        for (const PredicateObjectMap& pom : tm.predicate_object_maps) {
            bool is_type = false;
            for (const TermMap& pm : pom.predicate_maps) {
                if (pm.kind == TermKind::Constant && pm.constant) {
                    if (const auto* iri = std::get_if<Iri>(&*pm.constant);
                        iri && iri->value() == vocab::RDF_TYPE) {
                        is_type = true;
                    }
                }
            }
            if (!is_type) continue;
            for (const ObjectMap& om : pom.object_maps) {
                if (const auto* term_map = std::get_if<TermMap>(&om)) {
                    if (term_map->kind == TermKind::Constant && term_map->constant) {
                        if (const auto* iri = std::get_if<Iri>(&*term_map->constant)) {
                            classes.push_back(*iri);
                        }
                    }
                }
            }
        }
        return classes;
    }

    void check_triples_map(const TriplesMap& tm) {
        std::vector<Iri> classes = subject_classes(tm);
        for (const PredicateObjectMap& pom : tm.predicate_object_maps) {
            for (const TermMap& pm : pom.predicate_maps) {
                if (pm.kind != TermKind::Constant) {
                    result_.advisories.push_back(
                        {pm.id, "unverifiable predicate: value depends on the data"});
                    continue;
                }
                const auto* p = std::get_if<Iri>(&*pm.constant);
                if (!p) continue;  // malformed; structure check reports it
                check_domain(tm, *p, classes);
                for (const ObjectMap& om : pom.object_maps) {
                    check_range(tm, *p, om);
                }
            }
        }
    }

    void check_domain(const TriplesMap& tm, const Iri& p,
                      const std::vector<Iri>& classes) {
        const std::set<Iri>* domains = schema_.domains_of(p);
        if (!domains || classes.empty()) return;  // open world
        if (schema_.classes_compatible(classes, *domains)) return;

        Violation v;
        v.kind = ViolationKind::Domain;
        v.level = ViolationLevel::Rule;
        v.locus = tm.subject_map.id;
        v.predicate = p;
        v.expected = "subject class in " + describe_classes(*domains);
        v.found = describe_classes(classes);
        v.triples_map = tm.id;
        v.involved = {tm.subject_map.id};
        v.mentioned.push_back(p);
        for (const Iri& c : classes) v.mentioned.push_back(c);
        result_.violations.push_back(std::move(v));
    }

    void add_range_violation(const TriplesMap& tm, const Iri& p, const std::string& locus,
                             ViolationKind kind, std::string expected, std::string found,
                             std::vector<Iri> mentioned_extra) {
        Violation v;
        v.kind = kind;
        v.level = ViolationLevel::Rule;
        v.locus = locus;
        v.predicate = p;
        v.expected = std::move(expected);
        v.found = std::move(found);
        v.triples_map = tm.id;
        v.involved = {locus};
        v.mentioned.push_back(p);
        for (Iri& m : mentioned_extra) v.mentioned.push_back(std::move(m));
        result_.violations.push_back(std::move(v));
    }

    void check_range(const TriplesMap& tm, const Iri& p, const ObjectMap& om) {
        const RangeConstraint& range = schema_.range_of(p);

        if (const auto* rom = std::get_if<ReferencingObjectMap>(&om)) {
            if (range.kind == RangeConstraint::Kind::Literal) {
                add_range_violation(tm, p, rom->id, ViolationKind::Range,
                                    "a literal object", "parent subject (resource)", {});
                return;
            }
            if (range.kind == RangeConstraint::Kind::Resource && !range.classes.empty() &&
                rom->parent_index >= 0) {
                const TriplesMap& parent = doc_.triples_maps[rom->parent_index];
                if (!parent.classes.empty() &&
                    !schema_.classes_compatible(parent.classes, range.classes)) {
                    add_range_violation(tm, p, rom->id, ViolationKind::Range,
                                        "object class in " +
                                            describe_classes(range.classes),
                                        describe_classes(parent.classes),
                                        parent.classes);
                }
            }
            return;
        }

        const TermMap& object = std::get<TermMap>(om);
        TermType tt = object.term_type.value_or(TermType::Literal);

        if (tt == TermType::Literal) {
            if (range.kind == RangeConstraint::Kind::Resource) {
                add_range_violation(tm, p, object.id, ViolationKind::Range,
                                    "resource of class " + describe_classes(range.classes),
                                    "literal object map", {});
                return;
            }
            Iri dt = literal_datatype(object);
            if (range.datatypes && range.datatypes->count(dt) == 0) {
                add_range_violation(tm, p, object.id, ViolationKind::Range,
                                    "literal with datatype in " +
                                        describe_classes(*range.datatypes),
                                    "<" + dt.value() + ">", {dt});
                return;
            }
            // Constant literals expose their lexical form at rule time.
            if (object.kind == TermKind::Constant && object.constant) {
                if (const auto* lit = std::get_if<Literal>(&*object.constant)) {
                    if (!lexical_form_valid(lit->lexical(), lit->datatype())) {
                        add_range_violation(
                            tm, p, object.id, ViolationKind::DatatypeIllFormed,
                            "lexical form valid for <" + lit->datatype().value() + ">",
                            "\"" + lit->lexical() + "\"", {lit->datatype()});
                    }
                }
            }
            if (object.language_map && object.language_map->kind == TermKind::Constant &&
                object.language_map->constant) {
                if (const auto* lit =
                        std::get_if<Literal>(&*object.language_map->constant)) {
                    if (!is_language_tag_shaped(lit->lexical())) {
                        add_range_violation(tm, p, object.id,
                                            ViolationKind::LanguageShape,
                                            "BCP-47 shaped language tag",
                                            "\"" + lit->lexical() + "\"", {});
                    }
                }
            }
            return;
        }

        // IRI or blank node object map.
        if (range.kind == RangeConstraint::Kind::Literal) {
            add_range_violation(tm, p, object.id, ViolationKind::Range,
                                "a literal object", to_string(tt) + " object map", {});
        }
        // Resource ranges with classes: a constant IRI's classes are not
        // known at rule level; open world, nothing to report.
    }

    const MappingDocument& doc_;
    const SchemaIndex& schema_;
    RuleValidation result_;
};

std::string quad_locus(const Quad& q) {
    std::string line = term_to_nquads(q.subject) + " <" + q.predicate.value() + "> " +
                       term_to_nquads(q.object);
    if (q.graph) line += " <" + q.graph->value() + ">";
    return line;
}

}  // namespace

RuleValidation validate_rules(const MappingDocument& doc, const SchemaIndex& schema) {
    return RuleValidator(doc, schema).run();
}

std::vector<Violation> validate_triples(const Dataset& ds, const SchemaIndex& schema) {
    // Asserted classes per subject, gathered across all graphs.
    std::map<std::string, std::vector<Iri>> types;
    for (const Quad& q : ds.quads()) {
        if (q.predicate.value() != vocab::RDF_TYPE) continue;
        if (const auto* cls = std::get_if<Iri>(&q.object)) {
            std::vector<Iri>& list = types[term_to_nquads(q.subject)];
            if (std::find(list.begin(), list.end(), *cls) == list.end()) {
                list.push_back(*cls);
            }
        }
    }
    static const std::vector<Iri> no_classes;
    auto classes_of = [&](const std::string& key) -> const std::vector<Iri>& {
        auto it = types.find(key);
        return it == types.end() ? no_classes : it->second;
    };

    std::vector<Violation> out;
    for (const Quad& q : ds.quads()) {
        const Iri& p = q.predicate;
        std::string locus = quad_locus(q);

        const std::set<Iri>* domains = schema.domains_of(p);
        const std::vector<Iri>& subject_classes = classes_of(term_to_nquads(q.subject));
        if (domains && !subject_classes.empty() &&
            !schema.classes_compatible(subject_classes, *domains)) {
            Violation v;
            v.kind = ViolationKind::Domain;
            v.level = ViolationLevel::Triple;
            v.locus = locus;
            v.predicate = p;
            v.expected = "subject class in " + describe_classes(*domains);
            v.found = describe_classes(subject_classes);
            v.mentioned.push_back(p);
            for (const Iri& c : subject_classes) v.mentioned.push_back(c);
            out.push_back(std::move(v));
        }

        const RangeConstraint& range = schema.range_of(p);
        auto add = [&](ViolationKind kind, std::string expected, std::string found,
                       std::vector<Iri> mentioned_extra) {
            Violation v;
            v.kind = kind;
            v.level = ViolationLevel::Triple;
            v.locus = locus;
            v.predicate = p;
            v.expected = std::move(expected);
            v.found = std::move(found);
            v.mentioned.push_back(p);
            for (Iri& m : mentioned_extra) v.mentioned.push_back(std::move(m));
            out.push_back(std::move(v));
        };

        if (const auto* lit = std::get_if<Literal>(&q.object)) {
            bool range_violated = false;
            if (range.kind == RangeConstraint::Kind::Resource) {
                add(ViolationKind::Range,
                    "resource of class " + describe_classes(range.classes),
                    "literal " + term_to_nquads(q.object), {});
                range_violated = true;
            } else if (range.datatypes && range.datatypes->count(lit->datatype()) == 0) {
                add(ViolationKind::Range,
                    "literal with datatype in " + describe_classes(*range.datatypes),
                    "<" + lit->datatype().value() + ">", {lit->datatype()});
                range_violated = true;
            }
            // The lexical check only applies once the datatype itself is
            // admissible; a disallowed datatype is already reported above.
            if (!range_violated &&
                !lexical_form_valid(lit->lexical(), lit->datatype())) {
                add(ViolationKind::DatatypeIllFormed,
                    "lexical form valid for <" + lit->datatype().value() + ">",
                    "\"" + lit->lexical() + "\"", {lit->datatype()});
            }
            if (lit->language() && !is_language_tag_shaped(*lit->language())) {
                add(ViolationKind::LanguageShape, "BCP-47 shaped language tag",
                    "\"" + *lit->language() + "\"", {});
            }
        } else {
            if (range.kind == RangeConstraint::Kind::Literal) {
                add(ViolationKind::Range, "a literal object",
                    "resource " + term_to_nquads(q.object), {});
            } else if (range.kind == RangeConstraint::Kind::Resource &&
                       !range.classes.empty()) {
                const std::vector<Iri>& object_classes =
                    classes_of(term_to_nquads(q.object));
                if (!object_classes.empty() &&
                    !schema.classes_compatible(object_classes, range.classes)) {
                    add(ViolationKind::Range,
                        "object class in " + describe_classes(range.classes),
                        describe_classes(object_classes), object_classes);
                }
            }
        }
    }
    return out;
}

std::string violations_to_json(const std::vector<Violation>& violations) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Violation& v : violations) {
        arr.push_back({{"level", to_string(v.level)},
                       {"kind", to_string(v.kind)},
                       {"locus", v.locus},
                       {"predicate", v.predicate.value()},
                       {"expected", v.expected},
                       {"found", v.found}});
    }
    return arr.dump(2);
}

}  // namespace rmlforge
