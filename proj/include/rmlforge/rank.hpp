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
#include <vector>

#include "rmlforge/validate.hpp"

namespace rmlforge {

/// The rules of one triples map plus every violation touching them.
/// Score: per-involvement count, summed over member term maps.
struct RuleCluster {
    std::string triples_map;
    std::vector<std::string> members;  // term map ids belonging to this map
    std::vector<Violation> violations;
    long score = 0;
};

struct VocabularyScore {
    Iri term;
    long score = 0;
};

/// Clusters ordered by descending score (ties: triples map id), plus the
/// secondary per-vocabulary-term table.
struct RankedReport {
    std::vector<RuleCluster> clusters;
    std::vector<VocabularyScore> vocabulary_terms;
    long total_score = 0;
    std::size_t total_violations = 0;
};

/// One cluster per triples map, document order, zero-violation clusters
/// included. Throws MappingError when a violation references a triples map
/// or term map outside the document.
std::vector<RuleCluster> cluster_rules(const MappingDocument& doc,
                                       const std::vector<Violation>& violations);

/// Fills in each cluster's score: the number of violation involvements of
/// its member maps (a violation involving two members counts twice).
std::vector<RuleCluster> score_clusters(std::vector<RuleCluster> clusters);

/// Orders scored clusters descending, ties broken by triples map id, and
/// tallies the vocabulary-term table.
RankedReport rank_report(std::vector<RuleCluster> clusters);

std::string rank_to_json(const RankedReport& report);
std::string rank_to_table(const RankedReport& report);

}  // namespace rmlforge
