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

#include "rmlforge/rdf.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "rmlforge/vocab.hpp"

namespace rmlforge {

bool is_valid_iri(std::string_view value) {
    if (value.empty()) return false;
    if (value.find(':') == std::string_view::npos) return false;
    for (char c : value) {
        if (c == '<' || c == '>' || c == '"' || c == ' ' || c == '\t' || c == '\n' ||
            c == '\r') {
            return false;
        }
    }
    return true;
}

Iri::Iri(std::string value) : value_(std::move(value)) {
    if (!is_valid_iri(value_)) {
        throw RdfError("invalid IRI: '" + value_ + "'");
    }
}

bool is_valid_bnode_label(std::string_view label) {
    if (label.empty()) return false;
    return std::all_of(label.begin(), label.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

BlankNode::BlankNode(std::string label) : label_(std::move(label)) {
    if (!is_valid_bnode_label(label_)) {
        throw RdfError("invalid blank node label: '" + label_ + "'");
    }
}

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

bool is_language_tag_shaped(std::string_view tag) {
    if (tag.empty()) return false;
    std::size_t i = 0;
    std::size_t sub = 0;
    bool first = true;
    while (i <= tag.size()) {
        if (i == tag.size() || tag[i] == '-') {
            if (sub == 0 || sub > 8) return false;
            if (i == tag.size()) break;
            sub = 0;
            first = false;
            ++i;
            continue;
        }
        unsigned char c = tag[i];
        bool ok = first ? std::isalpha(c) != 0 : std::isalnum(c) != 0;
        if (!ok) return false;
        ++sub;
        ++i;
    }
    return true;
}

Literal::Literal(std::string lexical, Iri datatype, std::optional<std::string> language)
    : lexical_(std::move(lexical)),
      datatype_(std::move(datatype)),
      language_(std::move(language)) {
    bool is_lang_string = datatype_.value() == vocab::RDF_LANG_STRING;
    if (language_.has_value() != is_lang_string) {
        throw RdfError("literal language tag and rdf:langString datatype must go together");
    }
}

Literal make_literal(std::string lexical, std::optional<Iri> datatype,
                     std::optional<std::string> language) {
    if (language) {
        if (datatype && datatype->value() != vocab::RDF_LANG_STRING) {
            throw RdfError("literal cannot carry both a language tag and datatype <" +
                           datatype->value() + ">");
        }
        return Literal(std::move(lexical), Iri(std::string(vocab::RDF_LANG_STRING)),
                       to_lower_ascii(*language));
    }
    if (datatype) {
        if (datatype->value() == vocab::RDF_LANG_STRING) {
            throw RdfError("rdf:langString literal requires a language tag");
        }
        return Literal(std::move(lexical), *std::move(datatype), std::nullopt);
    }
    return Literal(std::move(lexical), Iri(std::string(vocab::XSD_STRING)), std::nullopt);
}

bool Dataset::insert(Quad q) {
    if (dedup_) {
        if (!seen_.insert(q).second) return false;
    } else {
        seen_.insert(q);
    }
    quads_.push_back(std::move(q));
    return true;
}

void Dataset::set_prefix(std::string prefix, Iri ns) {
    prefixes_[std::move(prefix)] = std::move(ns);
}

std::vector<RdfTerm> Dataset::objects_of(const Resource& subject,
                                         const Iri& predicate) const {
    std::vector<RdfTerm> out;
    for (const Quad& q : quads_) {
        if (q.subject == subject && q.predicate == predicate) {
            out.push_back(q.object);
        }
    }
    return out;
}

std::vector<Resource> Dataset::subjects() const {
    std::set<Resource> uniq;
    for (const Quad& q : quads_) uniq.insert(q.subject);
    return {uniq.begin(), uniq.end()};
}

namespace {

void escape_into(std::string& out, std::string_view s) {
    for (unsigned char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    static const char* hex = "0123456789ABCDEF";
                    out += "\\u00";
                    out += hex[(c >> 4) & 0xF];
                    out += hex[c & 0xF];
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
}

}  // namespace

std::string term_to_nquads(const RdfTerm& term) {
    std::string out;
    if (const auto* iri = std::get_if<Iri>(&term)) {
        out = "<" + iri->value() + ">";
    } else if (const auto* bn = std::get_if<BlankNode>(&term)) {
        out = "_:" + bn->label();
    } else {
        const auto& lit = std::get<Literal>(term);
        out = "\"";
        escape_into(out, lit.lexical());
        out += "\"";
        if (lit.language()) {
            out += "@" + *lit.language();
        } else if (lit.datatype().value() != vocab::XSD_STRING) {
            out += "^^<" + lit.datatype().value() + ">";
        }
    }
    return out;
}

std::string term_to_nquads(const Resource& term) { return term_to_nquads(to_term(term)); }

namespace {

struct Line {
    std::string graph, subject, predicate, object;

    auto operator<=>(const Line&) const = default;
};

std::vector<Line> sorted_lines(const Dataset& ds) {
    std::vector<Line> lines;
    lines.reserve(ds.size());
    for (const Quad& q : ds.quads()) {
        lines.push_back(Line{q.graph ? "<" + q.graph->value() + ">" : std::string(),
                             term_to_nquads(q.subject), "<" + q.predicate.value() + ">",
                             term_to_nquads(q.object)});
    }
    std::sort(lines.begin(), lines.end());
    return lines;
}

}  // namespace

std::string serialize_nquads(const Dataset& dataset) {
    std::string out;
    for (const Line& l : sorted_lines(dataset)) {
        out += l.subject;
        out += ' ';
        out += l.predicate;
        out += ' ';
        out += l.object;
        if (!l.graph.empty()) {
            out += ' ';
            out += l.graph;
        }
        out += " .\n";
    }
    return out;
}

std::string serialize_ntriples(const Dataset& dataset, std::size_t* dropped_graphs) {
    std::size_t dropped = 0;
    std::string out;
    for (const Line& l : sorted_lines(dataset)) {
        if (!l.graph.empty()) ++dropped;
        out += l.subject;
        out += ' ';
        out += l.predicate;
        out += ' ';
        out += l.object;
        out += " .\n";
    }
    if (dropped_graphs) *dropped_graphs = dropped;
    return out;
}

}  // namespace rmlforge
