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

#include "rmlforge/engine.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "rmlforge/vocab.hpp"

namespace rmlforge {

std::size_t GenerationReport::total_skipped() const {
    std::size_t n = 0;
    for (const auto& [reason, count] : skipped) n += count;
    return n;
}

std::string GenerationReport::summary() const {
    std::ostringstream out;
    out << "quads emitted: " << quads_emitted << "\n";
    for (const auto& [key, count] : records_read) {
        out << "records read: " << count << " from " << key << "\n";
    }
    for (const auto& [reason, count] : skipped) {
        out << "skipped terms: " << count << " (" << reason << ")\n";
    }
    return out.str();
}

namespace {

// Combines per-condition value lists into lookup keys. Every combination of
// one value per condition forms a key; an empty list yields no key (null
// never joins, as in SQL).
std::vector<std::string> key_combinations(const std::vector<std::vector<std::string>>& parts) {
    std::vector<std::string> keys = {""};
    for (const auto& values : parts) {
        if (values.empty()) return {};
        std::vector<std::string> next;
        next.reserve(keys.size() * values.size());
        for (const std::string& k : keys) {
            for (const std::string& v : values) {
                next.push_back(k + "\x1F" + v);
            }
        }
        keys = std::move(next);
    }
    return keys;
}

void collect_termmap_references(const TermMap& tm, std::vector<std::string>& out) {
    if (tm.kind == TermKind::Reference || tm.kind == TermKind::Column) {
        out.push_back(tm.expr);
    } else if (tm.kind == TermKind::Template) {
        for (const TemplatePart& p : parse_template(tm.expr)) {
            if (p.is_reference) out.push_back(p.text);
        }
    }
    if (tm.language_map) collect_termmap_references(*tm.language_map, out);
}

std::vector<std::string> collect_references(const TriplesMap& tm) {
    std::vector<std::string> refs;
    collect_termmap_references(tm.subject_map, refs);
    for (const TermMap& gm : tm.graph_maps) collect_termmap_references(gm, refs);
    for (const PredicateObjectMap& pom : tm.predicate_object_maps) {
        for (const TermMap& pm : pom.predicate_maps) collect_termmap_references(pm, refs);
        for (const TermMap& gm : pom.graph_maps) collect_termmap_references(gm, refs);
        for (const ObjectMap& om : pom.object_maps) {
            if (const auto* term_map = std::get_if<TermMap>(&om)) {
                collect_termmap_references(*term_map, refs);
            } else {
                for (const auto& [child, parent] :
                     std::get<ReferencingObjectMap>(om).join_conditions) {
                    refs.push_back(child);
                }
            }
        }
    }
    return refs;
}

}  // namespace

TripleEngine::TripleEngine(const MappingDocument& doc, EngineConfig cfg)
    : doc_(doc), cfg_(std::move(cfg)) {
    std::uint64_t seed = cfg_.bnode_seed;
    if (cfg_.random_bnodes && seed == 0) {
        seed = std::random_device{}();
        seed = (seed << 32) | std::random_device{}();
    }
    for (std::size_t i = 0; i < doc_.triples_maps.size(); ++i) {
        bnode_factories_.push_back(cfg_.random_bnodes
                                       ? BlankNodeFactory::randomized(i, seed)
                                       : BlankNodeFactory::deterministic(i));
    }
}

RecordStream& TripleEngine::stream_for(const LogicalSource& ls) {
    std::string cache_key = (ls.table_name ? *ls.table_name + ".csv" : ls.source) + "|" +
                            ls.iterator.value_or("") + "|" + to_string(ls.formulation);
    auto it = streams_.find(cache_key);
    if (it == streams_.end()) {
        it = streams_
                 .emplace(cache_key,
                          std::make_unique<RecordStream>(open_source(ls, cfg_)))
                 .first;
    }
    return *it->second;
}

void TripleEngine::validate_csv_columns(const TriplesMap& tm,
                                        const RecordStream& stream) const {
    const CsvTable* table = stream.csv();
    if (!table) return;
    for (const std::string& ref : collect_references(tm)) {
        if (table->column_index(ref) < 0) {
            throw SourceError("triples map " + tm.id + ": unknown column '" + ref +
                              "' in " + stream.key());
        }
    }
}

std::vector<Resource> TripleEngine::subject_resources(const TriplesMap& tm,
                                                      const Record& record,
                                                      GenerationReport& report) {
    std::size_t tm_index = 0;
    for (; tm_index < doc_.triples_maps.size(); ++tm_index) {
        if (&doc_.triples_maps[tm_index] == &tm) break;
    }
    std::vector<Resource> out;
    try {
        for (const RdfTerm& t : generate_terms(tm.subject_map, record,
                                               bnode_factories_[tm_index], cfg_.base)) {
            if (const auto* iri = std::get_if<Iri>(&t)) {
                out.push_back(*iri);
            } else if (const auto* bn = std::get_if<BlankNode>(&t)) {
                out.push_back(*bn);
            } else {
                throw TermGenError("literal subject", tm.subject_map.id);
            }
        }
    } catch (const TermGenError& e) {
        ++report.skipped[e.reason];
        return {};
    }
    return out;
}

std::vector<Iri> TripleEngine::graph_terms(const std::vector<TermMap>& graph_maps,
                                           const Record& record, std::size_t tm_index,
                                           GenerationReport& report) {
    std::vector<Iri> out;
    for (const TermMap& gm : graph_maps) {
        try {
            for (const RdfTerm& t :
                 generate_terms(gm, record, bnode_factories_[tm_index], cfg_.base)) {
                const auto* iri = std::get_if<Iri>(&t);
                if (!iri) throw TermGenError("non-IRI graph", gm.id);
                // rr:defaultGraph names the default graph explicitly.
                if (iri->value() == vocab::RR_DEFAULT_GRAPH) continue;
                out.push_back(*iri);
            }
        } catch (const TermGenError& e) {
            ++report.skipped[e.reason];
        }
    }
    return out;
}

TripleEngine::ParentTable& TripleEngine::parent_table(std::size_t tm_index,
                                                      GenerationReport& report) {
    auto it = parents_.find(tm_index);
    if (it != parents_.end()) return it->second;

    const TriplesMap& parent = doc_.triples_maps[tm_index];
    RecordStream& stream = stream_for(parent.logical_source);
    ParentTable table;
    table.stream = &stream;
    for (const Record& rec : stream.records()) {
        table.subjects.push_back([&]() -> std::vector<RdfTerm> {
            try {
                return generate_terms(parent.subject_map, rec,
                                      bnode_factories_[tm_index], cfg_.base);
            } catch (const TermGenError& e) {
                ++report.skipped[e.reason];
                return {};
            }
        }());
    }
    return parents_.emplace(tm_index, std::move(table)).first->second;
}

std::vector<RdfTerm> TripleEngine::execute_join(const ReferencingObjectMap& rom,
                                                const Record& child_record,
                                                const LogicalSource& child_source,
                                                GenerationReport& report) {
    if (rom.parent_index < 0) {
        throw MappingError(rom.id + ": unresolved parent triples map");
    }
    std::size_t parent_index = static_cast<std::size_t>(rom.parent_index);
    ParentTable& parent = parent_table(parent_index, report);
    const std::vector<Record>& parent_records = parent.stream->records();

    std::vector<RdfTerm> out;
    auto emit_parent = [&](std::size_t record_index) {
        for (const RdfTerm& t : parent.subjects[record_index]) out.push_back(t);
    };

    if (rom.join_conditions.empty()) {
        // Same logical source: pair with the same-ordinal record. Distinct
        // sources: cross product.
        bool same_source = stream_for(child_source).key() == parent.stream->key();
        if (same_source) {
            if (child_record.ordinal < parent_records.size()) {
                emit_parent(child_record.ordinal);
            }
        } else {
            for (std::size_t i = 0; i < parent_records.size(); ++i) emit_parent(i);
        }
        return out;
    }

    // Hash join: parent keys indexed once per referencing object map.
    auto index_it = join_indexes_.find(rom.id);
    if (index_it == join_indexes_.end()) {
        std::multimap<std::string, std::size_t> index;
        for (std::size_t i = 0; i < parent_records.size(); ++i) {
            std::vector<std::vector<std::string>> parts;
            for (const auto& [child_expr, parent_expr] : rom.join_conditions) {
                parts.push_back(resolve_reference(parent_records[i], parent_expr));
            }
            for (const std::string& key : key_combinations(parts)) {
                index.emplace(key, i);
            }
        }
        index_it = join_indexes_.emplace(rom.id, std::move(index)).first;
    }

    std::vector<std::vector<std::string>> child_parts;
    for (const auto& [child_expr, parent_expr] : rom.join_conditions) {
        child_parts.push_back(resolve_reference(child_record, child_expr));
    }
    std::set<std::size_t> matches;
    for (const std::string& key : key_combinations(child_parts)) {
        auto [lo, hi] = index_it->second.equal_range(key);
        for (auto it = lo; it != hi; ++it) matches.insert(it->second);
    }
    for (std::size_t i : matches) emit_parent(i);
    return out;
}

std::vector<Quad> TripleEngine::execute_triples_map(std::size_t tm_index,
                                                    GenerationReport& report) {
    const TriplesMap& tm = doc_.triples_maps[tm_index];
    RecordStream& stream = stream_for(tm.logical_source);
    validate_csv_columns(tm, stream);
    report.records_read[stream.key()] = stream.size();

    static const Iri rdf_type{std::string(vocab::RDF_TYPE)};
    std::vector<Quad> quads;

    auto emit = [&](const Resource& s, const Iri& p, const RdfTerm& o,
                    const std::vector<Iri>& graphs) {
        if (graphs.empty()) {
            quads.push_back(Quad{s, p, o, std::nullopt});
        } else {
            for (const Iri& g : graphs) quads.push_back(Quad{s, p, o, g});
        }
    };

    for (const Record& record : stream.records()) {
        std::vector<Resource> subjects = subject_resources(tm, record, report);
        if (subjects.empty()) continue;

        std::vector<Iri> subject_graphs =
            graph_terms(tm.graph_maps, record, tm_index, report);

        for (const Resource& s : subjects) {
            for (const Iri& cls : tm.classes) {
                emit(s, rdf_type, cls, subject_graphs);
            }
            for (const PredicateObjectMap& pom : tm.predicate_object_maps) {
                // Quads land in every graph named by either the subject map
                // or the predicate-object map; default graph when neither
                // names one.
                std::vector<Iri> graphs = subject_graphs;
                for (Iri& g : graph_terms(pom.graph_maps, record, tm_index, report)) {
                    if (std::find(graphs.begin(), graphs.end(), g) == graphs.end()) {
                        graphs.push_back(std::move(g));
                    }
                }

                std::vector<Iri> predicates;
                for (const TermMap& pm : pom.predicate_maps) {
                    try {
                        for (const RdfTerm& t : generate_terms(
                                 pm, record, bnode_factories_[tm_index], cfg_.base)) {
                            predicates.push_back(std::get<Iri>(t));
                        }
                    } catch (const TermGenError& e) {
                        ++report.skipped[e.reason];
                    }
                }

                std::vector<RdfTerm> objects;
                for (const ObjectMap& om : pom.object_maps) {
                    if (const auto* term_map = std::get_if<TermMap>(&om)) {
                        try {
                            for (RdfTerm& t : generate_terms(
                                     *term_map, record, bnode_factories_[tm_index],
                                     cfg_.base)) {
                                objects.push_back(std::move(t));
                            }
                        } catch (const TermGenError& e) {
                            ++report.skipped[e.reason];
                        }
                    } else {
                        const auto& rom = std::get<ReferencingObjectMap>(om);
                        for (RdfTerm& t :
                             execute_join(rom, record, tm.logical_source, report)) {
                            objects.push_back(std::move(t));
                        }
                    }
                }

                for (const Iri& p : predicates) {
                    for (const RdfTerm& o : objects) {
                        emit(s, p, o, graphs);
                    }
                }
            }
        }
    }
    return quads;
}

std::pair<Dataset, GenerationReport> TripleEngine::generate() {
    std::vector<StructuralError> errors = check_structure(doc_);
    if (!errors.empty()) {
        std::string msg = "mapping document fails structure checks:";
        for (const StructuralError& e : errors) {
            msg += "\n  " + e.where + ": " + e.message;
        }
        throw MappingError(msg);
    }

    Dataset ds(cfg_.dedup);
    GenerationReport report;
    for (std::size_t i = 0; i < doc_.triples_maps.size(); ++i) {
        for (Quad& q : execute_triples_map(i, report)) {
            ds.insert(std::move(q));
        }
    }
    report.quads_emitted = ds.size();
    return {std::move(ds), std::move(report)};
}

std::pair<Dataset, GenerationReport> generate_dataset(const MappingDocument& doc,
                                                      const EngineConfig& cfg) {
    return TripleEngine(doc, cfg).generate();
}

}  // namespace rmlforge
