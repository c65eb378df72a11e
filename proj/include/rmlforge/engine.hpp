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

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rmlforge/config.hpp"
#include "rmlforge/source.hpp"
#include "rmlforge/term_gen.hpp"

namespace rmlforge {

struct GenerationReport {
    std::size_t quads_emitted = 0;
    std::map<std::string, std::size_t> records_read;  // stream key -> count
    std::map<std::string, std::size_t> skipped;       // reason -> count

    std::size_t total_skipped() const;
    std::string summary() const;
};

/// Executes a normalized mapping document: subjects, classes,
/// predicate-object pairs, referencing-object-map joins and named graphs.
/// Parent record streams are opened once and cached per (source, iterator).
class TripleEngine {
public:
    TripleEngine(const MappingDocument& doc, EngineConfig cfg);

    /// All triples maps, union-merged. Per-record term errors are counted
    /// in the report; source and structural errors throw.
    std::pair<Dataset, GenerationReport> generate();

    /// Quads of a single triples map (by document index).
    std::vector<Quad> execute_triples_map(std::size_t tm_index, GenerationReport& report);

    /// Parent subject terms joined for one child record. Equality join on
    /// the conditions; condition-free maps pair by ordinal over the same
    /// source and cross-product over distinct sources.
    std::vector<RdfTerm> execute_join(const ReferencingObjectMap& rom,
                                      const Record& child_record,
                                      const LogicalSource& child_source,
                                      GenerationReport& report);

private:
    struct ParentTable {
        const RecordStream* stream = nullptr;
        std::vector<std::vector<RdfTerm>> subjects;  // per record
    };

    RecordStream& stream_for(const LogicalSource& ls);
    ParentTable& parent_table(std::size_t tm_index, GenerationReport& report);
    std::vector<Resource> subject_resources(const TriplesMap& tm, const Record& record,
                                            GenerationReport& report);
    std::vector<Iri> graph_terms(const std::vector<TermMap>& graph_maps,
                                 const Record& record, std::size_t tm_index,
                                 GenerationReport& report);
    void validate_csv_columns(const TriplesMap& tm, const RecordStream& stream) const;

    const MappingDocument& doc_;
    EngineConfig cfg_;
    std::vector<BlankNodeFactory> bnode_factories_;
    std::map<std::string, std::unique_ptr<RecordStream>> streams_;
    std::map<std::size_t, ParentTable> parents_;
    std::map<std::string, std::multimap<std::string, std::size_t>> join_indexes_;
};

/// One-shot convenience: structure-checks, executes every triples map and
/// returns the deduplicated dataset (dedup per cfg) with its report.
std::pair<Dataset, GenerationReport> generate_dataset(const MappingDocument& doc,
                                                      const EngineConfig& cfg);

}  // namespace rmlforge
