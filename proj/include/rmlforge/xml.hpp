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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rmlforge {

// Small XML document model: elements, attributes, character data. Enough to
// iterate the hierarchical sources the mapping rules address; namespaces
// are not interpreted (names stay as written).

struct XmlNode {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<XmlNode> children;
    std::string text;  // character data directly inside this element

    std::optional<std::string> attribute(std::string_view name) const;

    /// Concatenated text of this element and its descendants.
    std::string string_value() const;
};

struct XmlDocument {
    XmlNode root;
};

/// Parses a standalone XML document (UTF-8). Supports elements, attributes,
/// self-closing tags, comments, CDATA, processing instructions and the five
/// predefined entities plus numeric character references.
/// Throws ParseError with line/column.
XmlDocument parse_xml(std::string_view content);

}  // namespace rmlforge
