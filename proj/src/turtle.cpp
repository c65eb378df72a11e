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

#include "rmlforge/turtle.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rmlforge/vocab.hpp"

namespace rmlforge {

namespace {

bool has_scheme(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (std::size_t i = 1; i < s.size(); ++i) {
        char c = s[i];
        if (c == ':') return true;
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' &&
            c != '.') {
            return false;
        }
    }
    return false;
}

std::string strip_fragment(std::string s) {
    auto pos = s.find('#');
    if (pos != std::string::npos) s.erase(pos);
    return s;
}

}  // namespace

Iri resolve_iri(std::string_view reference, const std::optional<Iri>& base) {
    if (has_scheme(reference)) return Iri(std::string(reference));
    if (!base) {
        throw RdfError("relative IRI <" + std::string(reference) + "> with no base");
    }
    const std::string& b = base->value();
    if (reference.empty()) return Iri(strip_fragment(b));
    if (reference[0] == '#') {
        return Iri(strip_fragment(b) + std::string(reference));
    }
    auto scheme_end = b.find(':');
    if (reference.substr(0, 2) == "//") {
        return Iri(b.substr(0, scheme_end + 1) + std::string(reference));
    }
    // Authority part: scheme://host, else just the scheme.
    std::size_t path_start;
    if (b.compare(scheme_end + 1, 2, "//") == 0) {
        path_start = b.find('/', scheme_end + 3);
        if (path_start == std::string::npos) path_start = b.size();
    } else {
        path_start = scheme_end + 1;
    }
    if (reference[0] == '/') {
        return Iri(b.substr(0, path_start) + std::string(reference));
    }
    std::string path = strip_fragment(b);
    auto last_slash = path.rfind('/');
    if (last_slash == std::string::npos || last_slash < path_start) {
        return Iri(path + "/" + std::string(reference));
    }
    return Iri(path.substr(0, last_slash + 1) + std::string(reference));
}

namespace {

class TurtleReader {
public:
    TurtleReader(std::string_view text, std::optional<Iri> base)
        : src_(text), base_(std::move(base)) {}

    Graph parse() {
        skip_ws();
        while (!eof()) {
            if (peek() == '@') {
                directive();
            } else {
                statement();
            }
            skip_ws();
        }
        return std::move(graph_);
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line_, col_, msg);
    }

    bool eof() const { return pos_ >= src_.size(); }
    char peek() const { return eof() ? '\0' : src_[pos_]; }
    char peek2() const { return pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0'; }

    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        if (eof() || peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        advance();
    }

    void directive() {
        advance();  // '@'
        std::string name;
        while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) {
            name += advance();
        }
        skip_ws();
        if (name == "prefix") {
            std::string prefix = pname_prefix();
            expect(':');
            skip_ws();
            Iri ns = iriref();
            prefixes_[prefix] = ns;
            graph_.set_prefix(prefix, ns);
            skip_ws();
            expect('.');
        } else if (name == "base") {
            base_ = iriref();
            skip_ws();
            expect('.');
        } else {
            fail("unknown directive @" + name);
        }
    }

    std::string pname_prefix() {
        std::string out;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
                c == '.') {
                out += advance();
            } else {
                break;
            }
        }
        return out;
    }

    Iri iriref() {
        expect('<');
        std::string raw;
        while (!eof() && peek() != '>') {
            char c = advance();
            if (c == ' ' || c == '\n' || c == '\t' || c == '\r' || c == '<') {
                fail("illegal character inside IRI");
            }
            raw += c;
        }
        expect('>');
        try {
            return resolve_iri(raw, base_);
        } catch (const RdfError& e) {
            fail(e.what());
        }
    }

    void statement() {
        Resource subject = parse_subject();
        skip_ws();
        predicate_object_list(subject);
        skip_ws();
        expect('.');
    }

    Resource parse_subject() {
        char c = peek();
        if (c == '<') return iriref();
        if (c == '_') return bnode_label();
        if (c == '[') return anon_bnode();
        auto [iri, was_a] = prefixed_or_keyword(false);
        (void)was_a;
        return iri;
    }

    BlankNode bnode_label() {
        expect('_');
        expect(':');
        std::string label;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                label += advance();
            } else {
                break;
            }
        }
        if (label.empty()) fail("empty blank node label");
        return BlankNode(label);
    }

    BlankNode anon_bnode() {
        expect('[');
        BlankNode node(fresh_label());
        skip_ws();
        if (peek() != ']') {
            predicate_object_list(node);
            skip_ws();
        }
        expect(']');
        return node;
    }

    std::string fresh_label() { return "genid" + std::to_string(anon_counter_++); }

    // Returns the term and whether it was the bare keyword 'a'.
    std::pair<Iri, bool> prefixed_or_keyword(bool verb_position) {
        std::string prefix;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
                c == '.') {
                prefix += advance();
            } else {
                break;
            }
        }
        if (eof() || peek() != ':') {
            if (verb_position && prefix == "a") {
                return {Iri(std::string(vocab::RDF_TYPE)), true};
            }
            if (prefix == "true" || prefix == "false" ||
                (!prefix.empty() && std::isdigit(static_cast<unsigned char>(prefix[0])))) {
                fail("numeric and boolean shorthand are outside the supported subset");
            }
            fail("expected ':' in prefixed name after '" + prefix + "'");
        }
        advance();  // ':'
        std::string local;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
                c == '.' || c == '%') {
                local += advance();
            } else {
                break;
            }
        }
        // A trailing '.' belongs to the statement, not the local name.
        while (!local.empty() && local.back() == '.') {
            local.pop_back();
            unread();
        }
        auto it = prefixes_.find(prefix);
        if (it == prefixes_.end()) {
            fail("undefined prefix '" + prefix + ":'");
        }
        return {Iri(it->second.value() + local), false};
    }

    void unread() {
        --pos_;
        --col_;  // local names never span lines
    }

    Iri verb() {
        if (peek() == '<') return iriref();
        return prefixed_or_keyword(true).first;
    }

    void predicate_object_list(const Resource& subject) {
        while (true) {
            Iri predicate = verb();
            skip_ws();
            object_list(subject, predicate);
            skip_ws();
            if (peek() == ';') {
                advance();
                skip_ws();
                // Tolerate a trailing ';' before '.' or ']'.
                if (peek() == '.' || peek() == ']') return;
                continue;
            }
            return;
        }
    }

    void object_list(const Resource& subject, const Iri& predicate) {
        while (true) {
            RdfTerm object = parse_object();
            graph_.insert(make_triple(subject, predicate, object));
            skip_ws();
            if (peek() == ',') {
                advance();
                skip_ws();
                continue;
            }
            return;
        }
    }

    RdfTerm parse_object() {
        char c = peek();
        if (c == '<') return iriref();
        if (c == '_') return bnode_label();
        if (c == '[') return anon_bnode();
        if (c == '"' || c == '\'') return literal();
        if (c == '(') fail("collections are outside the supported subset");
        return prefixed_or_keyword(false).first;
    }

    Literal literal() {
        char quote = advance();
        if (peek() == quote && peek2() == quote) {
            fail("long (triple-quoted) strings are outside the supported subset");
        }
        std::string lex;
        while (true) {
            if (eof()) fail("unterminated string literal");
            char c = advance();
            if (c == quote) break;
            if (c == '\n') fail("newline in single-quoted string");
            if (c == '\\') {
                lex += escape_sequence();
            } else {
                lex += c;
            }
        }
        if (peek() == '@') {
            advance();
            std::string tag;
            while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                              peek() == '-')) {
                tag += advance();
            }
            if (tag.empty()) fail("empty language tag");
            return make_literal(lex, std::nullopt, tag);
        }
        if (peek() == '^') {
            advance();
            expect('^');
            Iri dt = peek() == '<' ? iriref() : prefixed_or_keyword(false).first;
            if (dt.value() == vocab::RDF_LANG_STRING) {
                fail("rdf:langString literal requires a language tag, not ^^");
            }
            return make_literal(lex, dt, std::nullopt);
        }
        return make_literal(lex);
    }

    std::string escape_sequence() {
        if (eof()) fail("dangling escape");
        char c = advance();
        switch (c) {
            case 't': return "\t";
            case 'b': return "\b";
            case 'n': return "\n";
            case 'r': return "\r";
            case 'f': return "\f";
            case '"': return "\"";
            case '\'': return "'";
            case '\\': return "\\";
            case 'u': return utf8_of(hex_code(4));
            case 'U': return utf8_of(hex_code(8));
            default: fail(std::string("unknown escape \\") + c);
        }
    }

    unsigned long hex_code(int digits) {
        unsigned long v = 0;
        for (int i = 0; i < digits; ++i) {
            if (eof()) fail("truncated \\u escape");
            char c = advance();
            v <<= 4;
            if (c >= '0' && c <= '9') {
                v |= static_cast<unsigned long>(c - '0');
            } else if (c >= 'a' && c <= 'f') {
                v |= static_cast<unsigned long>(c - 'a' + 10);
            } else if (c >= 'A' && c <= 'F') {
                v |= static_cast<unsigned long>(c - 'A' + 10);
            } else {
                fail("invalid hex digit in \\u escape");
            }
        }
        return v;
    }

    static std::string utf8_of(unsigned long cp) {
        std::string out;
        if (cp < 0x80) {
            out += static_cast<char>(cp);
        } else if (cp < 0x800) {
            out += static_cast<char>(0xC0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            out += static_cast<char>(0xE0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (cp >> 18));
            out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        }
        return out;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    std::optional<Iri> base_;
    std::map<std::string, Iri> prefixes_;
    Graph graph_;
    int anon_counter_ = 0;
};

}  // namespace

Graph parse_turtle(std::string_view text, std::optional<Iri> base) {
    return TurtleReader(text, std::move(base)).parse();
}

Graph parse_turtle_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SourceError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string abs = std::filesystem::absolute(path).generic_string();
    return parse_turtle(buf.str(), Iri("file://" + abs));
}

}  // namespace rmlforge
