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

#include "rmlforge/csv.hpp"

#include "rmlforge/errors.hpp"

namespace rmlforge {

int CsvTable::column_index(std::string_view column) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == column) return static_cast<int>(i);
    }
    return -1;
}

CsvTable parse_csv(std::string_view content, char delimiter) {
    // Strip a UTF-8 BOM if present.
    if (content.size() >= 3 && content.substr(0, 3) == "\xEF\xBB\xBF") {
        content.remove_prefix(3);
    }

    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;

    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(record));
        record.clear();
    };

    std::size_t i = 0;
    const std::size_t n = content.size();
    while (i < n) {
        char c = content[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < n && content[i + 1] == '"') {
                    field += '"';
                    i += 2;
                    continue;
                }
                in_quotes = false;
                ++i;
                continue;
            }
            field += c;
            ++i;
            continue;
        }
        if (c == '"' && !field_started && field.empty()) {
            in_quotes = true;
            field_started = true;
            ++i;
            continue;
        }
        if (c == delimiter) {
            end_field();
            ++i;
            continue;
        }
        if (c == '\r' && i + 1 < n && content[i + 1] == '\n') {
            end_record();
            i += 2;
            continue;
        }
        if (c == '\n') {
            end_record();
            ++i;
            continue;
        }
        field += c;
        field_started = true;
        ++i;
    }
    if (in_quotes) throw SourceError("malformed CSV: unterminated quoted field");
    // Final record without a trailing newline.
    if (field_started || !field.empty() || !record.empty()) end_record();

    if (records.empty()) throw SourceError("malformed CSV: missing header row");

    CsvTable table;
    table.header = std::move(records.front());
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != table.header.size()) {
            throw SourceError("malformed CSV: row " + std::to_string(r + 1) + " has " +
                              std::to_string(records[r].size()) + " fields, expected " +
                              std::to_string(table.header.size()));
        }
        table.rows.push_back(std::move(records[r]));
    }
    return table;
}

}  // namespace rmlforge
