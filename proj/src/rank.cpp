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

#include "rmlforge/rank.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

namespace rmlforge {

namespace {

void collect_member_ids(const TermMap& tm, std::vector<std::string>& out) {
    out.push_back(tm.id);
    if (tm.language_map) collect_member_ids(*tm.language_map, out);
}

std::vector<std::string> member_ids(const TriplesMap& tm) {
    std::vector<std::string> out;
    collect_member_ids(tm.subject_map, out);
    for (const TermMap& gm : tm.graph_maps) collect_member_ids(gm, out);
    for (const PredicateObjectMap& pom : tm.predicate_object_maps) {
        for (const TermMap& pm : pom.predicate_maps) collect_member_ids(pm, out);
        for (const TermMap& gm : pom.graph_maps) collect_member_ids(gm, out);
        for (const ObjectMap& om : pom.object_maps) {
            if (const auto* term_map = std::get_if<TermMap>(&om)) {
                collect_member_ids(*term_map, out);
            } else {
                out.push_back(std::get<ReferencingObjectMap>(om).id);
            }
        }
    }
    return out;
}

}  // namespace

std::vector<RuleCluster> cluster_rules(const MappingDocument& doc,
                                       const std::vector<Violation>& violations) {
    std::vector<RuleCluster> clusters;
    std::map<std::string, std::size_t> index;
    for (const TriplesMap& tm : doc.triples_maps) {
        RuleCluster c;
        c.triples_map = tm.id;
        c.members = member_ids(tm);
        index[tm.id] = clusters.size();
        clusters.push_back(std::move(c));
    }

    for (const Violation& v : violations) {
        auto it = index.find(v.triples_map);
        if (it == index.end()) {
            throw MappingError("violation references unknown triples map '" +
                               v.triples_map + "'");
        }
        RuleCluster& cluster = clusters[it->second];
        for (const std::string& involved : v.involved) {
            if (std::find(cluster.members.begin(), cluster.members.end(), involved) ==
                cluster.members.end()) {
                throw MappingError("violation references unknown term map '" + involved +
                                   "' in cluster " + cluster.triples_map);
            }
        }
        cluster.violations.push_back(v);
    }
    return clusters;
}

std::vector<RuleCluster> score_clusters(std::vector<RuleCluster> clusters) {
    for (RuleCluster& cluster : clusters) {
        long score = 0;
        for (const std::string& member : cluster.members) {
            for (const Violation& v : cluster.violations) {
                score += static_cast<long>(
                    std::count(v.involved.begin(), v.involved.end(), member));
            }
        }
        cluster.score = score;
    }
    return clusters;
}

RankedReport rank_report(std::vector<RuleCluster> clusters) {
    std::stable_sort(clusters.begin(), clusters.end(),
                     [](const RuleCluster& a, const RuleCluster& b) {
                         if (a.score != b.score) return a.score > b.score;
                         return a.triples_map < b.triples_map;
                     });
    RankedReport report;
    std::map<Iri, long> term_scores;
    for (const RuleCluster& c : clusters) {
        report.total_score += c.score;
        report.total_violations += c.violations.size();
        for (const Violation& v : c.violations) {
            for (const Iri& term : v.mentioned) ++term_scores[term];
        }
    }
    report.clusters = std::move(clusters);
    for (const auto& [term, score] : term_scores) {
        report.vocabulary_terms.push_back({term, score});
    }
    std::stable_sort(report.vocabulary_terms.begin(), report.vocabulary_terms.end(),
                     [](const VocabularyScore& a, const VocabularyScore& b) {
                         if (a.score != b.score) return a.score > b.score;
                         return a.term < b.term;
                     });
    return report;
}

std::string rank_to_json(const RankedReport& report) {
    nlohmann::json out;
    out["clusters"] = nlohmann::json::array();
    for (const RuleCluster& c : report.clusters) {
        nlohmann::json violations = nlohmann::json::array();
        for (const Violation& v : c.violations) {
            violations.push_back({{"level", to_string(v.level)},
                                  {"kind", to_string(v.kind)},
                                  {"locus", v.locus},
                                  {"predicate", v.predicate.value()},
                                  {"expected", v.expected},
                                  {"found", v.found}});
        }
        out["clusters"].push_back({{"triples_map", c.triples_map},
                                   {"score", c.score},
                                   {"violations", std::move(violations)}});
    }
    out["vocabulary_terms"] = nlohmann::json::array();
    for (const VocabularyScore& vs : report.vocabulary_terms) {
        out["vocabulary_terms"].push_back({{"term", vs.term.value()},
                                           {"score", vs.score}});
    }
    return out.dump(2);
}

std::string rank_to_table(const RankedReport& report) {
    std::ostringstream out;
    out << "rank  score  violations  triples map\n";
    std::size_t rank = 1;
    for (const RuleCluster& c : report.clusters) {
        out << std::left << std::setw(6) << rank++ << std::setw(7) << c.score
            << std::setw(12) << c.violations.size() << c.triples_map << "\n";
    }
    if (!report.vocabulary_terms.empty()) {
        out << "\nscore  vocabulary term\n";
        for (const VocabularyScore& vs : report.vocabulary_terms) {
            out << std::left << std::setw(7) << vs.score << "<" << vs.term.value()
                << ">\n";
        }
    }
    out << "\ntotal score " << report.total_score << ", total violations "
        << report.total_violations << "\n";
    return out.str();
}

}  // namespace rmlforge
