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

#include "rmlforge/source.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include <httplib.h>

namespace rmlforge {

namespace {

// ---- expression subsets ----------------------------------------------------

bool valid_csv_reference(const std::string& expr) {
    if (expr.empty()) return false;
    if (expr.front() == ' ' || expr.back() == ' ') return false;
    for (char c : expr) {
        switch (c) {
            case '[':
            case ']':
            case '{':
            case '}':
            case '@':
            case '$':
            case '/':
            case '\\':
            case '\n':
            case '\r':
            case '\t': return false;
            default: break;
        }
    }
    return true;
}

bool valid_step_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' &&
            c != '.' && c != ':') {
            return false;
        }
    }
    return true;
}

struct XPathExpr {
    bool absolute = false;
    std::vector<std::string> steps;          // element child steps
    std::optional<std::string> attribute;    // trailing @name
};

std::optional<XPathExpr> parse_xpath(const std::string& expr) {
    if (expr.empty()) return std::nullopt;
    XPathExpr out;
    std::size_t pos = 0;
    if (expr[0] == '/') {
        out.absolute = true;
        pos = 1;
        if (pos >= expr.size()) return std::nullopt;  // bare "/"
    }
    while (pos <= expr.size()) {
        std::size_t slash = expr.find('/', pos);
        std::string step =
            slash == std::string::npos ? expr.substr(pos) : expr.substr(pos, slash - pos);
        bool last = slash == std::string::npos;
        if (step.empty()) return std::nullopt;
        if (step[0] == '@') {
            if (!last) return std::nullopt;  // attribute must be the final step
            std::string name = step.substr(1);
            if (!valid_step_name(name)) return std::nullopt;
            out.attribute = name;
        } else {
            if (!valid_step_name(step)) return std::nullopt;
            out.steps.push_back(step);
        }
        if (last) break;
        pos = slash + 1;
    }
    if (out.steps.empty() && !out.attribute) return std::nullopt;
    return out;
}

struct JsonStep {
    enum Kind { Field, Index, Wildcard } kind = Field;
    std::string field;
    std::size_t index = 0;
};

std::optional<std::vector<JsonStep>> parse_jsonpath(const std::string& expr) {
    if (expr.empty()) return std::nullopt;
    std::vector<JsonStep> steps;
    std::size_t pos = 0;
    bool rooted = false;
    if (expr[0] == '$') {
        rooted = true;
        pos = 1;
    }
    auto read_name = [&]() -> std::optional<std::string> {
        std::string name;
        while (pos < expr.size() && expr[pos] != '.' && expr[pos] != '[') {
            char c = expr[pos];
            if (c == ']' || c == '$' || std::isspace(static_cast<unsigned char>(c))) {
                return std::nullopt;
            }
            name += c;
            ++pos;
        }
        if (name.empty()) return std::nullopt;
        return name;
    };
    bool first = true;
    while (pos < expr.size()) {
        char c = expr[pos];
        if (c == '.') {
            ++pos;
            auto name = read_name();
            if (!name) return std::nullopt;
            steps.push_back({JsonStep::Field, *name, 0});
        } else if (c == '[') {
            ++pos;
            auto close = expr.find(']', pos);
            if (close == std::string::npos) return std::nullopt;
            std::string inner = expr.substr(pos, close - pos);
            pos = close + 1;
            if (inner == "*") {
                steps.push_back({JsonStep::Wildcard, "", 0});
            } else if (!inner.empty() &&
                       std::all_of(inner.begin(), inner.end(), [](unsigned char d) {
                           return std::isdigit(d);
                       })) {
                steps.push_back({JsonStep::Index, "", std::stoul(inner)});
            } else {
                return std::nullopt;
            }
        } else {
            // Bare leading field name ("name" == "$.name").
            if (!first || rooted) return std::nullopt;
            auto name = read_name();
            if (!name) return std::nullopt;
            steps.push_back({JsonStep::Field, *name, 0});
        }
        first = false;
    }
    if (!rooted && steps.empty()) return std::nullopt;
    return steps;  // "$" alone means the record itself
}

// ---- evaluation -------------------------------------------------------------

std::vector<const XmlNode*> xpath_child_walk(std::vector<const XmlNode*> current,
                                             const std::vector<std::string>& steps,
                                             std::size_t start) {
    for (std::size_t i = start; i < steps.size(); ++i) {
        std::vector<const XmlNode*> next;
        for (const XmlNode* node : current) {
            for (const XmlNode& child : node->children) {
                if (child.name == steps[i]) next.push_back(&child);
            }
        }
        current = std::move(next);
        if (current.empty()) break;
    }
    return current;
}

std::vector<const XmlNode*> eval_xpath_nodes(const XmlDocument& doc,
                                             const XmlNode* context,
                                             const XPathExpr& x) {
    if (x.absolute) {
        if (x.steps.empty()) return {};  // "/@attr" is meaningless
        if (doc.root.name != x.steps[0]) return {};
        return xpath_child_walk({&doc.root}, x.steps, 1);
    }
    std::vector<const XmlNode*> result = xpath_child_walk({context}, x.steps, 0);
    // A leading step naming the context element itself addresses the
    // iteration unit ("country" on a <country> record).
    if (result.empty() && !x.steps.empty() && context && context->name == x.steps[0]) {
        result = xpath_child_walk({context}, x.steps, 1);
    }
    return result;
}

std::vector<std::string> eval_xpath_values(const XmlDocument& doc, const XmlNode* context,
                                           const XPathExpr& x) {
    std::vector<const XmlNode*> nodes =
        x.steps.empty() ? std::vector<const XmlNode*>{context}
                        : eval_xpath_nodes(doc, context, x);
    std::vector<std::string> out;
    for (const XmlNode* node : nodes) {
        if (x.attribute) {
            if (auto v = node->attribute(*x.attribute)) out.push_back(*v);
        } else {
            out.push_back(node->string_value());
        }
    }
    return out;
}

std::vector<const nlohmann::json*> eval_jsonpath(const nlohmann::json& root,
                                                 const std::vector<JsonStep>& steps) {
    std::vector<const nlohmann::json*> current = {&root};
    for (const JsonStep& step : steps) {
        std::vector<const nlohmann::json*> next;
        for (const nlohmann::json* v : current) {
            switch (step.kind) {
                case JsonStep::Field:
                    if (v->is_object() && v->contains(step.field)) {
                        next.push_back(&(*v)[step.field]);
                    }
                    break;
                case JsonStep::Index:
                    if (v->is_array() && step.index < v->size()) {
                        next.push_back(&(*v)[step.index]);
                    }
                    break;
                case JsonStep::Wildcard:
                    if (v->is_array()) {
                        for (const auto& item : *v) next.push_back(&item);
                    }
                    break;
            }
        }
        current = std::move(next);
        if (current.empty()) break;
    }
    return current;
}

std::optional<std::string> json_scalar_to_string(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number() || v.is_boolean()) return v.dump();
    return std::nullopt;  // null, object, array: no value
}

std::vector<std::string> json_values(const std::vector<const nlohmann::json*>& hits) {
    std::vector<std::string> out;
    for (const nlohmann::json* v : hits) {
        if (auto s = json_scalar_to_string(*v)) {
            out.push_back(*s);
        } else if (v->is_array()) {
            for (const auto& item : *v) {
                if (auto s = json_scalar_to_string(item)) out.push_back(*s);
            }
        }
    }
    return out;
}

// ---- source opening ---------------------------------------------------------

bool is_url(const std::string& s) {
    return s.rfind("http://", 0) == 0 || s.rfind("https://", 0) == 0 ||
           s.rfind("ftp://", 0) == 0;
}

std::string url_basename(const std::string& url) {
    auto q = url.find_first_of("?#");
    std::string trimmed = q == std::string::npos ? url : url.substr(0, q);
    auto slash = trimmed.rfind('/');
    return slash == std::string::npos ? trimmed : trimmed.substr(slash + 1);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SourceError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path resolve_locator(const std::string& source,
                                      const EngineConfig& cfg) {
    std::filesystem::path p(source);
    if (p.is_absolute()) return p;
    std::vector<std::filesystem::path> candidates;
    if (!cfg.tables_dir.empty()) candidates.push_back(cfg.tables_dir / p);
    if (!cfg.data_dir.empty()) candidates.push_back(cfg.data_dir / p);
    candidates.push_back(p);
    for (const auto& c : candidates) {
        if (std::filesystem::exists(c)) return c;
    }
    throw SourceError("source file not found: " + source);
}

std::string load_source_bytes(const std::string& source, const EngineConfig& cfg,
                              std::string& key) {
    if (is_url(source)) {
        if (cfg.allow_fetch) {
            key = source;
            return fetch_url(source);
        }
        if (cfg.mirror_dir.empty()) {
            throw SourceError("URL source " + source +
                              " needs --allow-fetch or a mirror directory");
        }
        std::filesystem::path mirrored = cfg.mirror_dir / url_basename(source);
        if (!std::filesystem::exists(mirrored)) {
            throw SourceError("URL source " + source + " has no mirror file at " +
                              mirrored.string());
        }
        key = mirrored.generic_string();
        return read_file(mirrored);
    }
    std::filesystem::path path = resolve_locator(source, cfg);
    key = path.generic_string();
    return read_file(path);
}

}  // namespace

const CsvTable* RecordStream::csv() const {
    if (records_.empty() || formulation_ != Formulation::Csv) return nullptr;
    return records_.front().csv_table.get();
}

std::string fetch_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw SourceError("malformed URL: " + url);
    std::string scheme = url.substr(0, scheme_end);
    if (scheme != "http") {
        throw SourceError("only http:// fetching is supported, got " + scheme + "://");
    }
    std::string rest = url.substr(scheme_end + 3);
    auto slash = rest.find('/');
    std::string host_port = slash == std::string::npos ? rest : rest.substr(0, slash);
    std::string path = slash == std::string::npos ? "/" : rest.substr(slash);
    std::string host = host_port;
    int port = 80;
    if (auto colon = host_port.find(':'); colon != std::string::npos) {
        host = host_port.substr(0, colon);
        port = std::stoi(host_port.substr(colon + 1));
    }
    httplib::Client client(host, port);
    auto res = client.Get(path);
    if (!res || res->status != 200) {
        throw SourceError("fetch failed for " + url +
                          (res ? " (HTTP " + std::to_string(res->status) + ")"
                               : " (no response)"));
    }
    return res->body;
}

RecordStream open_source(const LogicalSource& ls, const EngineConfig& cfg) {
    std::string source = ls.table_name ? *ls.table_name + ".csv" : ls.source;
    std::string key;
    std::string bytes = load_source_bytes(source, cfg, key);

    std::vector<Record> records;
    switch (ls.formulation) {
        case Formulation::Csv: {
            // The per-row iteration is implied; an iterator, if present, is
            // ignored for tabular sources.
            auto table = std::make_shared<CsvTable>(parse_csv(bytes, cfg.csv_delimiter));
            for (std::size_t r = 0; r < table->rows.size(); ++r) {
                Record rec;
                rec.formulation = Formulation::Csv;
                rec.ordinal = r;
                rec.csv_table = table;
                rec.csv_row = r;
                records.push_back(std::move(rec));
            }
            break;
        }
        case Formulation::XPath: {
            if (!ls.iterator) {
                throw SourceError("XML source " + source + " requires an rml:iterator");
            }
            auto x = parse_xpath(*ls.iterator);
            if (!x || x->attribute) {
                throw SourceError("invalid XPath iterator '" + *ls.iterator + "'");
            }
            std::shared_ptr<const XmlDocument> doc;
            try {
                doc = std::make_shared<XmlDocument>(parse_xml(bytes));
            } catch (const ParseError& e) {
                throw SourceError("malformed XML in " + source + ": " + e.what());
            }
            std::vector<const XmlNode*> nodes =
                x->absolute ? eval_xpath_nodes(*doc, nullptr, *x)
                            : xpath_child_walk({&doc->root}, x->steps, 0);
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                Record rec;
                rec.formulation = Formulation::XPath;
                rec.ordinal = i;
                rec.xml_document = doc;
                rec.xml_node = nodes[i];
                records.push_back(std::move(rec));
            }
            break;
        }
        case Formulation::JsonPath: {
            if (!ls.iterator) {
                throw SourceError("JSON source " + source + " requires an rml:iterator");
            }
            auto steps = parse_jsonpath(*ls.iterator);
            if (!steps) {
                throw SourceError("invalid JSONPath iterator '" + *ls.iterator + "'");
            }
            nlohmann::json doc;
            try {
                doc = nlohmann::json::parse(bytes);
            } catch (const nlohmann::json::parse_error& e) {
                throw SourceError("malformed JSON in " + source + ": " + e.what());
            }
            std::vector<const nlohmann::json*> hits = eval_jsonpath(doc, *steps);
            for (std::size_t i = 0; i < hits.size(); ++i) {
                Record rec;
                rec.formulation = Formulation::JsonPath;
                rec.ordinal = i;
                rec.json = std::make_shared<const nlohmann::json>(*hits[i]);
                records.push_back(std::move(rec));
            }
            break;
        }
    }
    std::string stream_key = key + "|" + ls.iterator.value_or("");
    return RecordStream(std::move(stream_key), ls.formulation, std::move(records));
}

std::vector<std::string> resolve_reference(const Record& record, const std::string& expr) {
    switch (record.formulation) {
        case Formulation::Csv: {
            if (!valid_csv_reference(expr)) {
                throw SourceError("invalid CSV reference '" + expr + "'");
            }
            int idx = record.csv_table->column_index(expr);
            if (idx < 0) {
                throw SourceError("unknown column '" + expr + "'");
            }
            const std::string& value = record.csv_table->rows[record.csv_row][idx];
            if (value.empty()) return {};  // empty cell: no value
            return {value};
        }
        case Formulation::XPath: {
            auto x = parse_xpath(expr);
            if (!x) throw SourceError("invalid XPath reference '" + expr + "'");
            return eval_xpath_values(*record.xml_document, record.xml_node, *x);
        }
        case Formulation::JsonPath: {
            auto steps = parse_jsonpath(expr);
            if (!steps) throw SourceError("invalid JSONPath reference '" + expr + "'");
            return json_values(eval_jsonpath(*record.json, *steps));
        }
    }
    return {};
}

bool supported_expression(Formulation formulation, const std::string& expr) {
    switch (formulation) {
        case Formulation::Csv: return valid_csv_reference(expr);
        case Formulation::XPath: return parse_xpath(expr).has_value();
        case Formulation::JsonPath: return parse_jsonpath(expr).has_value();
    }
    return false;
}

}  // namespace rmlforge
