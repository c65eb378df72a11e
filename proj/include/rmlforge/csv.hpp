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

#include <string>
#include <string_view>
#include <vector>

namespace rmlforge {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Index of `column` in the header, or -1.
    int column_index(std::string_view column) const;
};

/// RFC 4180 reader: quoted fields, "" escapes, CR LF or LF row ends.
/// The first record is the header. Rows whose field count differs from the
/// header are rejected (SourceError), as are unterminated quotes.
CsvTable parse_csv(std::string_view content, char delimiter = ',');

}  // namespace rmlforge
