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

#include "rmlforge/schema.hpp"

#include <cctype>
#include <deque>

#include "rmlforge/vocab.hpp"

namespace rmlforge {

const std::set<Iri>* SchemaIndex::domains_of(const Iri& property) const {
    auto it = domains_.find(property);
    return it == domains_.end() ? nullptr : &it->second;
}

const RangeConstraint& SchemaIndex::range_of(const Iri& property) const {
    static const RangeConstraint any;
    auto it = ranges_.find(property);
    return it == ranges_.end() ? any : it->second;
}

bool SchemaIndex::is_subclass_of(const Iri& cls, const Iri& ancestor) const {
    if (cls == ancestor) return true;
    auto it = superclasses_.find(cls);
    return it != superclasses_.end() && it->second.count(ancestor) > 0;
}

bool SchemaIndex::classes_compatible(const std::vector<Iri>& declared,
                                     const std::set<Iri>& required) const {
    if (declared.empty() || required.empty()) return true;
    for (const Iri& c : declared) {
        for (const Iri& r : required) {
            if (is_subclass_of(c, r)) return true;
        }
    }
    return false;
}

bool is_datatype_iri(const Iri& iri, const std::set<Iri>& declared_datatypes) {
    const std::string& v = iri.value();
    if (v.compare(0, vocab::XSD.size(), vocab::XSD) == 0) return true;
    if (v == vocab::RDF_LANG_STRING || v == vocab::RDFS_LITERAL) return true;
    return declared_datatypes.count(iri) > 0;
}

SchemaIndex load_schema(const std::vector<Graph>& graphs) {
    SchemaIndex index;
    std::set<Iri> declared_datatypes;
    std::map<Iri, std::set<Iri>> direct_superclasses;

    // First pass: find declared datatypes so ranges classify correctly.
    for (const Graph& g : graphs) {
        for (const Quad& q : g.quads()) {
            if (q.predicate.value() != vocab::RDF_TYPE) continue;
            const auto* obj = std::get_if<Iri>(&q.object);
            const auto* subj = std::get_if<Iri>(&q.subject);
            if (obj && subj && obj->value() == vocab::RDFS_DATATYPE) {
                declared_datatypes.insert(*subj);
            }
        }
    }

    for (const Graph& g : graphs) {
        for (const Quad& q : g.quads()) {
            const auto* subj = std::get_if<Iri>(&q.subject);
            const auto* obj = std::get_if<Iri>(&q.object);
            if (!subj || !obj) continue;
            const std::string& p = q.predicate.value();

            if (p == vocab::RDFS_DOMAIN) {
                index.domains_[*subj].insert(*obj);
            } else if (p == vocab::RDFS_RANGE) {
                RangeConstraint& rc = index.ranges_[*subj];
                if (obj->value() == vocab::RDFS_LITERAL) {
                    if (rc.kind == RangeConstraint::Kind::Resource) {
                        throw SchemaError("contradictory range constraints for <" +
                                          subj->value() + ">");
                    }
                    rc.kind = RangeConstraint::Kind::Literal;
                } else if (is_datatype_iri(*obj, declared_datatypes)) {
                    if (rc.kind == RangeConstraint::Kind::Resource) {
                        throw SchemaError("contradictory datatype constraints for <" +
                                          subj->value() + ">");
                    }
                    rc.kind = RangeConstraint::Kind::Literal;
                    if (!rc.datatypes) rc.datatypes.emplace();
                    rc.datatypes->insert(*obj);
                } else {
                    if (rc.kind == RangeConstraint::Kind::Literal) {
                        throw SchemaError("contradictory datatype constraints for <" +
                                          subj->value() + ">");
                    }
                    rc.kind = RangeConstraint::Kind::Resource;
                    rc.classes.insert(*obj);
                }
            } else if (p == vocab::RDFS_SUBCLASS_OF) {
                direct_superclasses[*subj].insert(*obj);
            } else if (p == vocab::RDF_TYPE) {
                if (obj->value() == vocab::OWL_DATATYPE_PROPERTY) {
                    RangeConstraint& rc = index.ranges_[*subj];
                    if (rc.kind == RangeConstraint::Kind::Resource) {
                        throw SchemaError("contradictory range constraints for <" +
                                          subj->value() + ">");
                    }
                    rc.kind = RangeConstraint::Kind::Literal;
                } else if (obj->value() == vocab::OWL_OBJECT_PROPERTY) {
                    RangeConstraint& rc = index.ranges_[*subj];
                    if (rc.kind == RangeConstraint::Kind::Literal) {
                        throw SchemaError("contradictory range constraints for <" +
                                          subj->value() + ">");
                    }
                    rc.kind = RangeConstraint::Kind::Resource;
                }
            }
        }
    }

    // Transitive closure of the subclass graph (BFS per class).
    for (const auto& [cls, direct] : direct_superclasses) {
        std::set<Iri> closure;
        std::deque<Iri> queue(direct.begin(), direct.end());
        while (!queue.empty()) {
            Iri cur = queue.front();
            queue.pop_front();
            if (!closure.insert(cur).second) continue;
            auto it = direct_superclasses.find(cur);
            if (it != direct_superclasses.end()) {
                for (const Iri& up : it->second) queue.push_back(up);
            }
        }
        index.superclasses_[cls] = std::move(closure);
    }
    return index;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (unsigned char c : s) {
        if (!std::isdigit(c)) return false;
    }
    return true;
}

bool integer_shaped(std::string_view s) {
    if (s.empty()) return false;
    if (s[0] == '+' || s[0] == '-') s.remove_prefix(1);
    return all_digits(s);
}

bool decimal_shaped(std::string_view s) {
    if (s.empty()) return false;
    if (s[0] == '+' || s[0] == '-') s.remove_prefix(1);
    auto dot = s.find('.');
    if (dot == std::string_view::npos) return all_digits(s);
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) return false;
    return (ip.empty() || all_digits(ip)) && (fp.empty() || all_digits(fp));
}

bool double_shaped(std::string_view s) {
    if (s == "NaN" || s == "INF" || s == "-INF" || s == "+INF") return true;
    auto e = s.find_first_of("eE");
    if (e == std::string_view::npos) return decimal_shaped(s);
    return decimal_shaped(s.substr(0, e)) && integer_shaped(s.substr(e + 1));
}

bool date_shaped(std::string_view s) {
    // YYYY-MM-DD with optional timezone suffix ignored.
    if (s.size() < 10) return false;
    return all_digits(s.substr(0, 4)) && s[4] == '-' && all_digits(s.substr(5, 2)) &&
           s[7] == '-' && all_digits(s.substr(8, 2));
}

bool positive_value(std::string_view s) {
    for (unsigned char c : s) {
        if (c >= '1' && c <= '9') return true;
    }
    return false;
}

}  // namespace

bool lexical_form_valid(const std::string& lexical, const Iri& datatype) {
    const std::string& dt = datatype.value();
    if (dt.compare(0, vocab::XSD.size(), vocab::XSD) != 0) return true;
    std::string local = dt.substr(vocab::XSD.size());

    if (local == "string" || local == "anyURI" || local == "normalizedString" ||
        local == "token") {
        return true;
    }
    if (local == "integer" || local == "long" || local == "int" || local == "short" ||
        local == "byte") {
        return integer_shaped(lexical);
    }
    if (local == "positiveInteger") {
        return integer_shaped(lexical) && lexical[0] != '-' && positive_value(lexical);
    }
    if (local == "nonNegativeInteger" || local == "unsignedLong" ||
        local == "unsignedInt") {
        return integer_shaped(lexical) && lexical[0] != '-';
    }
    if (local == "negativeInteger") {
        return integer_shaped(lexical) && lexical[0] == '-' && positive_value(lexical);
    }
    if (local == "decimal") return decimal_shaped(lexical);
    if (local == "double" || local == "float") return double_shaped(lexical);
    if (local == "boolean") {
        return lexical == "true" || lexical == "false" || lexical == "0" ||
               lexical == "1";
    }
    if (local == "date") return date_shaped(lexical);
    if (local == "dateTime") {
        return lexical.size() > 11 && date_shaped(lexical.substr(0, 10)) &&
               lexical[10] == 'T';
    }
    if (local == "gYear") return lexical.size() >= 4 && all_digits(lexical.substr(0, 4));
    return true;  // unrecognized xsd type: no shape opinion
}

}  // namespace rmlforge
