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

#include "rmlforge/xml.hpp"

#include <cctype>
#include <cstdlib>

#include "rmlforge/errors.hpp"

namespace rmlforge {

std::optional<std::string> XmlNode::attribute(std::string_view name) const {
    for (const auto& [k, v] : attributes) {
        if (k == name) return v;
    }
    return std::nullopt;
}

std::string XmlNode::string_value() const {
    std::string out = text;
    for (const XmlNode& child : children) out += child.string_value();
    return out;
}

namespace {

bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' ||
           c == '-' || c == '.';
}

class XmlReader {
public:
    explicit XmlReader(std::string_view src) : src_(src) {}

    XmlDocument parse() {
        skip_prolog();
        if (eof() || peek() != '<') fail("expected root element");
        XmlDocument doc;
        doc.root = element();
        skip_misc();
        if (!eof()) fail("content after root element");
        return doc;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line_, col_, msg);
    }

    bool eof() const { return pos_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }
    bool starts_with(std::string_view s) const {
        return src_.compare(pos_, s.size(), s) == 0;
    }

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

    void advance_n(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) advance();
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    void skip_prolog() {
        while (true) {
            skip_ws();
            if (starts_with("<?")) {
                skip_until("?>");
            } else if (starts_with("<!--")) {
                skip_until("-->");
            } else if (starts_with("<!DOCTYPE")) {
                skip_until(">");
            } else {
                return;
            }
        }
    }

    void skip_misc() {
        while (true) {
            skip_ws();
            if (starts_with("<!--")) {
                skip_until("-->");
            } else if (starts_with("<?")) {
                skip_until("?>");
            } else {
                return;
            }
        }
    }

    void skip_until(std::string_view end) {
        while (!eof() && !starts_with(end)) advance();
        if (eof()) fail("unterminated '" + std::string(end.substr(0, 2)) + "...' section");
        advance_n(end.size());
    }

    std::string name() {
        if (eof() || !is_name_start(peek())) fail("expected name");
        std::string out;
        while (!eof() && is_name_char(peek())) out += advance();
        return out;
    }

    std::string entity() {
        // at '&'
        advance();
        std::string ent;
        while (!eof() && peek() != ';') {
            ent += advance();
            if (ent.size() > 10) fail("unterminated entity reference");
        }
        if (eof()) fail("unterminated entity reference");
        advance();  // ';'
        if (ent == "amp") return "&";
        if (ent == "lt") return "<";
        if (ent == "gt") return ">";
        if (ent == "quot") return "\"";
        if (ent == "apos") return "'";
        if (!ent.empty() && ent[0] == '#') {
            unsigned long cp = 0;
            if (ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X')) {
                cp = std::strtoul(ent.c_str() + 2, nullptr, 16);
            } else {
                cp = std::strtoul(ent.c_str() + 1, nullptr, 10);
            }
            return utf8_of(cp);
        }
        fail("unknown entity &" + ent + ";");
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

    std::string attribute_value() {
        char quote = peek();
        if (quote != '"' && quote != '\'') fail("expected quoted attribute value");
        advance();
        std::string out;
        while (!eof() && peek() != quote) {
            if (peek() == '&') {
                out += entity();
            } else if (peek() == '<') {
                fail("'<' in attribute value");
            } else {
                out += advance();
            }
        }
        if (eof()) fail("unterminated attribute value");
        advance();
        return out;
    }

    XmlNode element() {
        advance();  // '<'
        XmlNode node;
        node.name = name();
        while (true) {
            skip_ws();
            if (eof()) fail("unterminated start tag <" + node.name);
            if (peek() == '/') {
                advance();
                if (peek() != '>') fail("expected '>' after '/'");
                advance();
                return node;  // self-closing
            }
            if (peek() == '>') {
                advance();
                break;
            }
            std::string attr = name();
            skip_ws();
            if (peek() != '=') fail("expected '=' after attribute name");
            advance();
            skip_ws();
            node.attributes.emplace_back(attr, attribute_value());
        }
        content(node);
        return node;
    }

    void content(XmlNode& node) {
        while (true) {
            if (eof()) fail("missing </" + node.name + ">");
            if (starts_with("</")) {
                advance_n(2);
                std::string closing = name();
                if (closing != node.name) {
                    fail("mismatched closing tag </" + closing + ">, expected </" +
                         node.name + ">");
                }
                skip_ws();
                if (peek() != '>') fail("expected '>' in closing tag");
                advance();
                return;
            }
            if (starts_with("<!--")) {
                skip_until("-->");
                continue;
            }
            if (starts_with("<![CDATA[")) {
                advance_n(9);
                while (!eof() && !starts_with("]]>")) node.text += advance();
                if (eof()) fail("unterminated CDATA section");
                advance_n(3);
                continue;
            }
            if (starts_with("<?")) {
                skip_until("?>");
                continue;
            }
            if (peek() == '<') {
                node.children.push_back(element());
                continue;
            }
            if (peek() == '&') {
                node.text += entity();
                continue;
            }
            node.text += advance();
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace

XmlDocument parse_xml(std::string_view content) { return XmlReader(content).parse(); }

}  // namespace rmlforge
