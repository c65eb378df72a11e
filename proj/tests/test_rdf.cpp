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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rmlforge/rdf.hpp"
#include "rmlforge/turtle.hpp"
#include "rmlforge/vocab.hpp"
#include "testutil.hpp"

using namespace rmlforge;

TEST_CASE("Iri validation") {
    CHECK(Iri("http://ex.com/a").value() == "http://ex.com/a");
    // The engine accepts odd-but-delimited schemes; templates in the wild
    // contain things like "http:://ex.com/...".
    CHECK_NOTHROW(Iri("http:://ex.com/person/Sandi_Morris"));
    CHECK_THROWS_AS(Iri(""), RdfError);
    CHECK_THROWS_AS(Iri("no-scheme-delimiter"), RdfError);
    CHECK_THROWS_AS(Iri("http://ex.com/with space"), RdfError);
    CHECK_THROWS_AS(Iri("http://ex.com/<angle>"), RdfError);
}

TEST_CASE("BlankNode label validation") {
    CHECK(BlankNode("b0_1").label() == "b0_1");
    CHECK_THROWS_AS(BlankNode(""), RdfError);
    CHECK_THROWS_AS(BlankNode("has space"), RdfError);
    CHECK_THROWS_AS(BlankNode("dash-ed"), RdfError);
}

TEST_CASE("make_literal defaults") {
    SUBCASE("language tag implies rdf:langString and lowercases") {
        Literal lit = make_literal("Morris", std::nullopt, "en-US");
        CHECK(lit.language() == "en-us");
        CHECK(lit.datatype().value() == vocab::RDF_LANG_STRING);
        CHECK(term_to_nquads(RdfTerm(lit)) == "\"Morris\"@en-us");
    }
    SUBCASE("explicit datatype is kept, even when the value looks wrong") {
        Literal lit = make_literal("4.90", Iri("http://www.w3.org/2001/XMLSchema#positiveInteger"));
        CHECK(!lit.language());
        CHECK(term_to_nquads(RdfTerm(lit)) ==
              "\"4.90\"^^<http://www.w3.org/2001/XMLSchema#positiveInteger>");
    }
    SUBCASE("no datatype, no language: plain string") {
        Literal lit = make_literal("x");
        CHECK(lit.datatype().value() == vocab::XSD_STRING);
        CHECK(term_to_nquads(RdfTerm(lit)) == "\"x\"");
    }
    SUBCASE("datatype plus language is an error") {
        CHECK_THROWS_AS(
            make_literal("x", Iri("http://www.w3.org/2001/XMLSchema#int"), "en"),
            RdfError);
    }
    SUBCASE("exactly one of language / explicit datatype / default string") {
        Literal tagged = make_literal("a", std::nullopt, "en");
        Literal typed = make_literal("a", Iri("http://www.w3.org/2001/XMLSchema#int"));
        Literal plain = make_literal("a");
        CHECK(tagged.language().has_value());
        CHECK(!typed.language().has_value());
        CHECK(typed.datatype().value() != vocab::XSD_STRING);
        CHECK(plain.datatype().value() == vocab::XSD_STRING);
    }
}

TEST_CASE("dataset insertion is idempotent") {
    Dataset ds;
    Quad q = make_triple(Iri("http://ex.com/s"), Iri("http://ex.com/p"),
                         make_literal("o"));
    CHECK(ds.insert(q));
    CHECK(!ds.insert(q));
    CHECK(ds.size() == 1);
}

TEST_CASE("dataset without dedup keeps duplicates") {
    Dataset ds(false);
    Quad q = make_triple(Iri("http://ex.com/s"), Iri("http://ex.com/p"),
                         make_literal("o"));
    ds.insert(q);
    ds.insert(q);
    CHECK(ds.size() == 2);
}

TEST_CASE("parse_turtle: single triple with base") {
    Graph g = parse_turtle("<#s> <#p> <#o> .", Iri("http://ex.com/"));
    REQUIRE(g.size() == 1);
    const Quad& q = g.quads().front();
    CHECK(std::get<Iri>(q.subject).value() == "http://ex.com/#s");
    CHECK(q.predicate.value() == "http://ex.com/#p");
    CHECK(std::get<Iri>(q.object).value() == "http://ex.com/#o");
}

TEST_CASE("parse_turtle: logical source snippet yields two triples") {
    const char* text =
        "@prefix rml: <http://semweb.mmlab.be/ns/rml#> .\n"
        "<#Countries>    rml:logicalSource <#CountriesXML> .\n"
        "<#CountriesXML> rml:source <http://rml.io/data/semWebSer/countries.xml> .\n";
    Graph g = parse_turtle(text, Iri("http://ex.com/m"));
    CHECK(g.size() == 2);
    Iri countries("http://ex.com/m#Countries");
    auto sources = g.objects_of(countries, Iri("http://semweb.mmlab.be/ns/rml#logicalSource"));
    REQUIRE(sources.size() == 1);
    CHECK(std::get<Iri>(sources[0]).value() == "http://ex.com/m#CountriesXML");
}

TEST_CASE("parse_turtle: object list with language and datatype") {
    const char* text =
        "@prefix ex: <http://ex.com/ns#> .\n"
        "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
        "ex:a ex:p \"x\"@en-us, \"y\"^^xsd:int .\n";
    Graph g = parse_turtle(text);
    REQUIRE(g.size() == 2);
    CHECK(g.quads()[0].subject == g.quads()[1].subject);
    CHECK(g.quads()[0].predicate == g.quads()[1].predicate);
    std::set<std::string> objects;
    for (const Quad& q : g.quads()) objects.insert(term_to_nquads(q.object));
    CHECK(objects ==
          std::set<std::string>{"\"x\"@en-us",
                                "\"y\"^^<http://www.w3.org/2001/XMLSchema#int>"});
}

TEST_CASE("parse_turtle: 'a' keyword, semicolons, anon blank nodes") {
    const char* text =
        "@prefix ex: <http://ex.com/ns#> .\n"
        "ex:s a ex:T ;\n"
        "     ex:p [ ex:q \"v\" ] .\n";
    Graph g = parse_turtle(text);
    CHECK(g.size() == 3);
    bool has_type = false;
    for (const Quad& q : g.quads()) {
        if (q.predicate.value() == vocab::RDF_TYPE) has_type = true;
    }
    CHECK(has_type);
}

TEST_CASE("parse_turtle: blank node labels and comments") {
    const char* text =
        "@prefix ex: <http://ex.com/ns#> .\n"
        "# a comment line\n"
        "_:b1 ex:p _:b2 . # trailing comment\n";
    Graph g = parse_turtle(text);
    REQUIRE(g.size() == 1);
    CHECK(std::get<BlankNode>(g.quads()[0].subject).label() == "b1");
}

TEST_CASE("parse_turtle error positions") {
    SUBCASE("syntax error carries line and column") {
        try {
            parse_turtle("<http://ex.com/s> <http://ex.com/p> .", std::nullopt);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 1);
            CHECK(std::string(e.what()).find("line 1") != std::string::npos);
        }
    }
    SUBCASE("undefined prefix") {
        CHECK_THROWS_AS(parse_turtle("ex:a ex:b ex:c ."), ParseError);
    }
    SUBCASE("relative IRI with no base") {
        CHECK_THROWS_AS(parse_turtle("<#s> <#p> <#o> ."), ParseError);
    }
    SUBCASE("collections are rejected") {
        CHECK_THROWS_AS(
            parse_turtle("<http://e/s> <http://e/p> (\"a\" \"b\") ."), ParseError);
    }
}

TEST_CASE("serialize_nquads basics") {
    SUBCASE("empty dataset gives empty string") {
        CHECK(serialize_nquads(Dataset()) == "");
    }
    SUBCASE("one default-graph triple: one line, three terms, dot-terminated") {
        Dataset ds;
        ds.insert(make_triple(Iri("http://e/s"), Iri("http://e/p"), Iri("http://e/o")));
        CHECK(serialize_nquads(ds) == "<http://e/s> <http://e/p> <http://e/o> .\n");
    }
    SUBCASE("named graph goes last, sorted first") {
        Dataset ds;
        ds.insert(Quad{Iri("http://e/s"), Iri("http://e/p"), Iri("http://e/o"),
                       Iri("http://e/g")});
        ds.insert(make_triple(Iri("http://e/s"), Iri("http://e/p"), Iri("http://e/a")));
        std::string nq = serialize_nquads(ds);
        CHECK(nq ==
              "<http://e/s> <http://e/p> <http://e/a> .\n"
              "<http://e/s> <http://e/p> <http://e/o> <http://e/g> .\n");
    }
    SUBCASE("string escaping") {
        Dataset ds;
        ds.insert(make_triple(Iri("http://e/s"), Iri("http://e/p"),
                              make_literal("a\"b\\c\nd")));
        CHECK(serialize_nquads(ds) ==
              "<http://e/s> <http://e/p> \"a\\\"b\\\\c\\nd\" .\n");
    }
    SUBCASE("ntriples drops graphs and reports it") {
        Dataset ds;
        ds.insert(Quad{Iri("http://e/s"), Iri("http://e/p"), Iri("http://e/o"),
                       Iri("http://e/g")});
        std::size_t dropped = 0;
        std::string nt = serialize_ntriples(ds, &dropped);
        CHECK(dropped == 1);
        CHECK(nt == "<http://e/s> <http://e/p> <http://e/o> .\n");
    }
}

TEST_CASE("round-trip: parse(serialize(D)) is isomorphic to D") {
    // Label-stable datasets only; serialization keeps explicit labels.
    std::mt19937 rng(7);
    for (int iteration = 0; iteration < 25; ++iteration) {
        Dataset ds;
        int quads = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < quads; ++i) {
            Resource s = (rng() % 3 == 0)
                             ? Resource(BlankNode("b" + std::to_string(rng() % 3)))
                             : Resource(Iri("http://e/s" + std::to_string(rng() % 4)));
            Iri p("http://e/p" + std::to_string(rng() % 3));
            RdfTerm o;
            switch (rng() % 4) {
                case 0: o = Iri("http://e/o" + std::to_string(rng() % 4)); break;
                case 1: o = BlankNode("b" + std::to_string(rng() % 3)); break;
                case 2: o = make_literal("value " + std::to_string(rng() % 5)); break;
                default: o = make_literal("tag", std::nullopt, "en"); break;
            }
            ds.insert(make_triple(s, p, o));
        }
        std::string nq = serialize_nquads(ds);
        Graph back = parse_turtle(nq);  // N-Triples is Turtle-compatible
        CHECK(testutil::isomorphic(ds, back));
    }
}

TEST_CASE("isomorphism oracle distinguishes unequal graphs") {
    Dataset a, b;
    a.insert(make_triple(BlankNode("x"), Iri("http://e/p"), make_literal("1")));
    b.insert(make_triple(BlankNode("y"), Iri("http://e/p"), make_literal("2")));
    CHECK(!testutil::isomorphic(a, b));

    Dataset c;
    c.insert(make_triple(BlankNode("z"), Iri("http://e/p"), make_literal("1")));
    CHECK(testutil::isomorphic(a, c));
}

TEST_CASE("language tag shape") {
    CHECK(is_language_tag_shaped("en"));
    CHECK(is_language_tag_shaped("en-us"));
    CHECK(is_language_tag_shaped("en-uk"));
    CHECK(!is_language_tag_shaped(""));
    CHECK(!is_language_tag_shaped("-en"));
    CHECK(!is_language_tag_shaped("en-"));
    CHECK(!is_language_tag_shaped("1en"));
    CHECK(!is_language_tag_shaped("waytoolongsubtag"));
}
