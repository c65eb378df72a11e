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
#include <string>
#include <vector>

#include <json.hpp>

#include "rmlforge/config.hpp"
#include "rmlforge/csv.hpp"
#include "rmlforge/mapping.hpp"
#include "rmlforge/xml.hpp"

namespace rmlforge {

/// One iteration unit of a logical source: a CSV row, an XML element, or a
/// JSON value. The backing document is kept alive through shared ownership.
struct Record {
    Formulation formulation = Formulation::Csv;
    std::size_t ordinal = 0;

    std::shared_ptr<const CsvTable> csv_table;
    std::size_t csv_row = 0;

    std::shared_ptr<const XmlDocument> xml_document;
    const XmlNode* xml_node = nullptr;

    std::shared_ptr<const nlohmann::json> json;
};

/// The records of one opened source, in iteration order. Ordinals are
/// 0-based and strictly increasing; re-opening the same source yields the
/// identical sequence.
class RecordStream {
public:
    RecordStream() = default;
    RecordStream(std::string key, Formulation formulation, std::vector<Record> records)
        : key_(std::move(key)), formulation_(formulation), records_(std::move(records)) {}

    const std::string& key() const { return key_; }
    Formulation formulation() const { return formulation_; }
    const std::vector<Record>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }

    /// Cursor-style access; the stream starts positioned before the first
    /// record.
    const Record* next() {
        if (cursor_ >= records_.size()) return nullptr;
        return &records_[cursor_++];
    }
    void rewind() { cursor_ = 0; }

    /// Header of the backing CSV table, when this is a CSV stream.
    const CsvTable* csv() const;

private:
    std::string key_;
    Formulation formulation_ = Formulation::Csv;
    std::vector<Record> records_;
    std::size_t cursor_ = 0;
};

/// Opens a logical source: resolves the locator (tables dir, data dir,
/// mirror dir or fetch), parses the file, and applies the iterator.
/// Throws SourceError for unreadable or malformed inputs and for missing
/// iterators on hierarchical sources.
RecordStream open_source(const LogicalSource& ls, const EngineConfig& cfg);

/// Values of a reference expression within one record; empty when the
/// reference is missing or null in this record. XML element references
/// yield text content, '@name' the attribute value.
std::vector<std::string> resolve_reference(const Record& record, const std::string& expr);

/// HTTP GET helper used for --allow-fetch sources and --fetch-schemas.
std::string fetch_url(const std::string& url);

}  // namespace rmlforge
