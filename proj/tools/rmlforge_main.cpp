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

// rmlforge command line: generate (mapping -> N-Quads), validate (rules or
// triples against vocabulary schemas), rank (cluster and order rule
// inconsistencies).
//
// Exit codes: 0 no violations and no errors, 1 violations found,
// 2 operational error. stdout carries only the machine-readable payload;
// diagnostics go to stderr.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rmlforge/engine.hpp"
#include "rmlforge/rank.hpp"
#include "rmlforge/turtle.hpp"
#include "rmlforge/validate.hpp"

namespace {

using namespace rmlforge;

struct CommonOptions {
    std::string mapping_path;
    std::string config_path;
    std::string dialect = "rml";
    std::string base;
    std::string tables_dir;
    std::string mirror_dir;
    std::string data_dir;
    bool allow_fetch = false;
    bool random_bnodes = false;
    bool no_dedup = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("-m,--mapping", opt.mapping_path, "Mapping document (Turtle)")
        ->required();
    cmd->add_option("-c,--config", opt.config_path,
                    "Config file (key = value; RMLFORGE_CONFIG sets the default)");
    cmd->add_option("--dialect", opt.dialect, "Mapping dialect: r2rml or rml")
        ->check(CLI::IsMember({"r2rml", "rml"}));
    cmd->add_option("--base", opt.base, "Base IRI for relative generated terms");
    cmd->add_option("--tables-dir", opt.tables_dir, "Directory of rr:tableName CSVs");
    cmd->add_option("--mirror-dir", opt.mirror_dir, "Local mirror for URL sources");
    cmd->add_option("--data-dir", opt.data_dir,
                    "Base directory for relative file sources (default: mapping dir)");
    cmd->add_flag("--allow-fetch", opt.allow_fetch, "Fetch http:// sources");
    cmd->add_flag("--random-bnodes", opt.random_bnodes,
                  "Random blank node labels instead of deterministic ones");
    cmd->add_flag("--no-dedup", opt.no_dedup, "Keep duplicate quads");
}

EngineConfig build_config(const CommonOptions& opt) {
    EngineConfig cfg;
    std::string config_path = opt.config_path;
    if (config_path.empty()) {
        if (const char* env = std::getenv("RMLFORGE_CONFIG"); env && *env) {
            config_path = env;
        }
    }
    if (!config_path.empty()) apply_config_file(cfg, config_path);

    // Flags override config file values.
    if (!opt.tables_dir.empty()) cfg.tables_dir = opt.tables_dir;
    if (!opt.mirror_dir.empty()) cfg.mirror_dir = opt.mirror_dir;
    if (!opt.data_dir.empty()) cfg.data_dir = opt.data_dir;
    if (opt.allow_fetch) cfg.allow_fetch = true;
    if (opt.random_bnodes) cfg.random_bnodes = true;
    if (opt.no_dedup) cfg.dedup = false;
    if (!opt.base.empty()) cfg.base = Iri(opt.base);
    if (cfg.data_dir.empty()) {
        cfg.data_dir = std::filesystem::path(opt.mapping_path).parent_path();
    }
    return cfg;
}

MappingDocument load_document(const CommonOptions& opt) {
    Graph graph = parse_turtle_file(opt.mapping_path);
    Dialect dialect = opt.dialect == "r2rml" ? Dialect::R2rml : Dialect::Rml;
    MappingDocument doc = normalize(load_mapping(graph, dialect));
    for (const std::string& w : doc.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    return doc;
}

void write_payload(const std::string& out_path, const std::string& payload) {
    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write output file: " + out_path);
    out << payload;
}

SchemaIndex load_schemas(const std::vector<std::string>& schema_paths,
                         bool fetch_schemas, const MappingDocument* doc) {
    std::vector<Graph> graphs;
    for (const std::string& path : schema_paths) {
        graphs.push_back(parse_turtle_file(path));
    }
    if (fetch_schemas && doc) {
        // Dereference the namespace of every constant predicate.
        std::set<std::string> namespaces;
        for (const TriplesMap& tm : doc->triples_maps) {
            for (const PredicateObjectMap& pom : tm.predicate_object_maps) {
                for (const TermMap& pm : pom.predicate_maps) {
                    if (pm.kind != TermKind::Constant || !pm.constant) continue;
                    const auto* iri = std::get_if<Iri>(&*pm.constant);
                    if (!iri) continue;
                    auto cut = iri->value().find_last_of("#/");
                    if (cut != std::string::npos) {
                        namespaces.insert(iri->value().substr(0, cut + 1));
                    }
                }
            }
        }
        for (const std::string& ns : namespaces) {
            try {
                graphs.push_back(parse_turtle(fetch_url(ns)));
            } catch (const std::exception& e) {
                std::cerr << "warning: schema fetch failed for " << ns << ": "
                          << e.what() << "\n";
            }
        }
    }
    return load_schema(graphs);
}

int structural_errors(const MappingDocument& doc) {
    std::vector<StructuralError> errors = check_structure(doc);
    for (const StructuralError& e : errors) {
        std::cerr << "error: " << e.where << ": " << e.message << "\n";
    }
    return static_cast<int>(errors.size());
}

int cmd_generate(const CommonOptions& opt, const std::string& out_path,
                 const std::string& format) {
    EngineConfig cfg = build_config(opt);
    MappingDocument doc = load_document(opt);
    auto [dataset, report] = generate_dataset(doc, cfg);

    std::string payload;
    if (format == "ntriples") {
        std::size_t dropped = 0;
        payload = serialize_ntriples(dataset, &dropped);
        if (dropped > 0) {
            std::cerr << "warning: " << dropped
                      << " quads lost their graph name in N-Triples output\n";
        }
    } else {
        payload = serialize_nquads(dataset);
    }
    write_payload(out_path, payload);
    std::cerr << report.summary();
    return 0;
}

int cmd_validate(const CommonOptions& opt, const std::vector<std::string>& schema_paths,
                 const std::string& level, const std::string& dataset_path,
                 bool fetch_schemas, const std::string& out_path) {
    EngineConfig cfg = build_config(opt);
    MappingDocument doc = load_document(opt);
    if (int n = structural_errors(doc); n > 0) return 2;
    SchemaIndex schema = load_schemas(schema_paths, fetch_schemas, &doc);

    std::vector<Violation> violations;
    if (level == "rules") {
        RuleValidation result = validate_rules(doc, schema);
        for (const Advisory& a : result.advisories) {
            std::cerr << "advisory: " << a.locus << ": " << a.message << "\n";
        }
        violations = std::move(result.violations);
    } else {
        Dataset dataset(cfg.dedup);
        if (!dataset_path.empty()) {
            Graph parsed = parse_turtle_file(dataset_path);
            dataset = Dataset(cfg.dedup);
            for (const Quad& q : parsed.quads()) dataset.insert(q);
        } else {
            dataset = generate_dataset(doc, cfg).first;
        }
        violations = validate_triples(dataset, schema);
    }
    write_payload(out_path, violations_to_json(violations) + "\n");
    return violations.empty() ? 0 : 1;
}

int cmd_rank(const CommonOptions& opt, const std::vector<std::string>& schema_paths,
             bool fetch_schemas, const std::string& out_path) {
    EngineConfig cfg = build_config(opt);
    (void)cfg;
    MappingDocument doc = load_document(opt);
    if (int n = structural_errors(doc); n > 0) return 2;
    SchemaIndex schema = load_schemas(schema_paths, fetch_schemas, &doc);

    RuleValidation result = validate_rules(doc, schema);
    for (const Advisory& a : result.advisories) {
        std::cerr << "advisory: " << a.locus << ": " << a.message << "\n";
    }
    RankedReport report =
        rank_report(score_clusters(cluster_rules(doc, result.violations)));
    write_payload(out_path, rank_to_json(report) + "\n");
    std::cerr << rank_to_table(report);
    return result.violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rmlforge: R2RML/RML knowledge graph generation and rule validation"};
    app.require_subcommand(1);

    CommonOptions gen_opt, val_opt, rank_opt;
    std::string gen_out, gen_format = "nquads";
    std::string val_out, val_level = "rules", val_dataset;
    std::vector<std::string> val_schemas, rank_schemas;
    bool val_fetch_schemas = false, rank_fetch_schemas = false;
    std::string rank_out;

    CLI::App* generate = app.add_subcommand("generate", "Generate RDF from a mapping");
    add_common(generate, gen_opt);
    generate->add_option("-o,--output", gen_out, "Output file ('-' = stdout)");
    generate->add_option("--format", gen_format, "nquads or ntriples")
        ->check(CLI::IsMember({"nquads", "ntriples"}));

    CLI::App* validate = app.add_subcommand("validate", "Validate rules or triples");
    add_common(validate, val_opt);
    validate->add_option("-s,--schema", val_schemas, "Vocabulary schema file (Turtle)")
        ->required();
    validate->add_option("--level", val_level, "rules or triples")
        ->check(CLI::IsMember({"rules", "triples"}));
    validate->add_option("-d,--dataset", val_dataset,
                         "Dataset to validate at level=triples (default: generate "
                         "from the mapping)");
    validate->add_option("-o,--output", val_out, "Report file ('-' = stdout)");
    validate->add_flag("--fetch-schemas", val_fetch_schemas,
                       "Also dereference predicate namespaces over HTTP");

    CLI::App* rank = app.add_subcommand("rank", "Rank rule inconsistency clusters");
    add_common(rank, rank_opt);
    rank->add_option("-s,--schema", rank_schemas, "Vocabulary schema file (Turtle)")
        ->required();
    rank->add_option("-o,--output", rank_out, "Report file ('-' = stdout)");
    rank->add_flag("--fetch-schemas", rank_fetch_schemas,
                   "Also dereference predicate namespaces over HTTP");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            return app.exit(e);
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (generate->parsed()) return cmd_generate(gen_opt, gen_out, gen_format);
        if (validate->parsed()) {
            return cmd_validate(val_opt, val_schemas, val_level, val_dataset,
                                val_fetch_schemas, val_out);
        }
        return cmd_rank(rank_opt, rank_schemas, rank_fetch_schemas, rank_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
