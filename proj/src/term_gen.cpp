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

#include "rmlforge/term_gen.hpp"

#include <cctype>
#include <random>

#include "rmlforge/turtle.hpp"
#include "rmlforge/vocab.hpp"

namespace rmlforge {

BlankNodeFactory BlankNodeFactory::deterministic(std::size_t tm_index) {
    return BlankNodeFactory(tm_index, "");
}

BlankNodeFactory BlankNodeFactory::randomized(std::size_t tm_index, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (tm_index + 1)));
    static const char* hex = "0123456789abcdef";
    std::string prefix;
    for (int i = 0; i < 12; ++i) prefix += hex[rng() & 0xF];
    return BlankNodeFactory(tm_index, std::move(prefix));
}

BlankNode BlankNodeFactory::for_record(std::size_t ordinal) const {
    if (run_prefix_.empty()) {
        return BlankNode("b" + std::to_string(tm_index_) + "_" + std::to_string(ordinal));
    }
    return BlankNode("r" + run_prefix_ + "_" + std::to_string(ordinal));
}

BlankNode BlankNodeFactory::from_value(const std::string& value) const {
    std::string label = "v";
    for (unsigned char c : value) {
        label += std::isalnum(c) ? static_cast<char>(c) : '_';
    }
    return BlankNode(label);
}

std::vector<TemplatePart> parse_template(const std::string& tmpl) {
    std::vector<TemplatePart> parts;
    std::string current;
    bool in_ref = false;
    for (std::size_t i = 0; i < tmpl.size(); ++i) {
        char c = tmpl[i];
        if (c == '\\' && i + 1 < tmpl.size() &&
            (tmpl[i + 1] == '{' || tmpl[i + 1] == '}')) {
            current += tmpl[++i];
            continue;
        }
        if (c == '{') {
            if (in_ref) throw MappingError("unbalanced braces in template: " + tmpl);
            if (!current.empty()) parts.push_back({false, std::move(current)});
            current.clear();
            in_ref = true;
            continue;
        }
        if (c == '}') {
            if (!in_ref) throw MappingError("unbalanced braces in template: " + tmpl);
            if (current.empty()) throw MappingError("empty reference in template: " + tmpl);
            parts.push_back({true, std::move(current)});
            current.clear();
            in_ref = false;
            continue;
        }
        current += c;
    }
    if (in_ref) throw MappingError("unbalanced braces in template: " + tmpl);
    if (!current.empty()) parts.push_back({false, std::move(current)});
    return parts;
}

std::string iri_encode(std::string_view value) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : value) {
        bool unreserved = std::isalnum(c) || c == '-' || c == '.' || c == '_' || c == '~';
        if (unreserved) {
            out += static_cast<char>(c);
        } else {
            out += '%';
            out += hex[(c >> 4) & 0xF];
            out += hex[c & 0xF];
        }
    }
    return out;
}

std::vector<std::string> expand_template(const std::string& tmpl, const Record& record,
                                         bool iri_safe) {
    std::vector<TemplatePart> parts = parse_template(tmpl);
    std::vector<std::string> results = {""};
    for (const TemplatePart& part : parts) {
        if (!part.is_reference) {
            for (std::string& r : results) r += part.text;
            continue;
        }
        std::vector<std::string> values = resolve_reference(record, part.text);
        if (values.empty()) return {};  // a missing placeholder kills the term
        std::vector<std::string> next;
        next.reserve(results.size() * values.size());
        for (const std::string& prefix : results) {
            for (const std::string& v : values) {
                next.push_back(prefix + (iri_safe ? iri_encode(v) : v));
            }
        }
        results = std::move(next);
    }
    return results;
}

namespace {

Iri cast_iri(const std::string& value, const std::optional<Iri>& base) {
    try {
        return resolve_iri(value, base);
    } catch (const RdfError& e) {
        throw TermGenError("IRI cast failed", e.what());
    }
}

std::optional<std::string> evaluate_language(const TermMap& lang_map, const Record& record,
                                             const BlankNodeFactory& bnf,
                                             const std::optional<Iri>& base) {
    std::vector<RdfTerm> terms = generate_terms(lang_map, record, bnf, base);
    if (terms.empty()) return std::nullopt;
    const auto* lit = std::get_if<Literal>(&terms.front());
    std::string tag = lit ? lit->lexical() : term_to_nquads(terms.front());
    if (!is_language_tag_shaped(tag)) {
        throw TermGenError("invalid language tag", "'" + tag + "'");
    }
    return tag;
}

}  // namespace

std::vector<RdfTerm> generate_terms(const TermMap& tm, const Record& record,
                                    const BlankNodeFactory& bnf,
                                    const std::optional<Iri>& base) {
    if (!tm.term_type) {
        throw TermGenError("unnormalized term map", tm.id);
    }
    TermType tt = *tm.term_type;

    if (tm.kind == TermKind::Constant) {
        return {*tm.constant};
    }
    if (tm.kind == TermKind::None) {
        return {RdfTerm(bnf.for_record(record.ordinal))};
    }

    std::vector<std::string> values;
    if (tm.kind == TermKind::Template) {
        values = expand_template(tm.expr, record, tt == TermType::Iri);
    } else {  // Reference (Column is folded in by normalize)
        values = resolve_reference(record, tm.expr);
    }
    if (values.empty()) return {};

    std::vector<RdfTerm> out;
    out.reserve(values.size());
    for (const std::string& value : values) {
        switch (tt) {
            case TermType::Iri: out.emplace_back(cast_iri(value, base)); break;
            case TermType::BlankNode: out.emplace_back(bnf.from_value(value)); break;
            case TermType::Literal: {
                if (tm.datatype) {
                    out.emplace_back(make_literal(value, *tm.datatype));
                } else if (tm.language_map) {
                    auto tag = evaluate_language(*tm.language_map, record, bnf, base);
                    out.emplace_back(make_literal(value, std::nullopt, tag));
                } else {
                    out.emplace_back(make_literal(value));
                }
                break;
            }
        }
    }
    return out;
}

}  // namespace rmlforge
