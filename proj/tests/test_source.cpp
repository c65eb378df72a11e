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

#include "rmlforge/csv.hpp"
#include "rmlforge/source.hpp"
#include "rmlforge/xml.hpp"
#include "testutil.hpp"

using namespace rmlforge;

namespace {

EngineConfig fixture_config() {
    EngineConfig cfg;
    cfg.tables_dir = testutil::fixtures_dir() / "data";
    cfg.data_dir = testutil::fixtures_dir() / "data";
    cfg.mirror_dir = testutil::fixtures_dir() / "data";
    return cfg;
}

LogicalSource table_source(const std::string& name) {
    LogicalSource ls;
    ls.table_name = name;
    ls.formulation = Formulation::Csv;
    return ls;
}

LogicalSource xml_source() {
    LogicalSource ls;
    ls.source = "countries.xml";
    ls.formulation = Formulation::XPath;
    ls.iterator = "/countries/country";
    return ls;
}

}  // namespace

TEST_CASE("csv parsing") {
    SUBCASE("quoted fields and empty cells") {
        CsvTable t = parse_csv("a,b\n\"x,y\",\"he said \"\"hi\"\"\"\nplain,\n");
        REQUIRE(t.rows.size() == 2);
        CHECK(t.rows[0][0] == "x,y");
        CHECK(t.rows[0][1] == "he said \"hi\"");
        CHECK(t.rows[1][1] == "");
    }
    SUBCASE("crlf line endings") {
        CsvTable t = parse_csv("a,b\r\n1,2\r\n");
        REQUIRE(t.rows.size() == 1);
        CHECK(t.rows[0][1] == "2");
    }
    SUBCASE("field count mismatch is malformed") {
        CHECK_THROWS_AS(parse_csv("a,b\n1,2,3\n"), SourceError);
    }
    SUBCASE("unterminated quote is malformed") {
        CHECK_THROWS_AS(parse_csv("a,b\n\"open,2\n"), SourceError);
    }
}

TEST_CASE("xml parsing") {
    XmlDocument doc = parse_xml(testutil::read_file(testutil::fixture("data/countries.xml")));
    CHECK(doc.root.name == "countries");
    REQUIRE(doc.root.children.size() == 4);
    CHECK(doc.root.children[0].name == "country");
    CHECK(doc.root.children[0].string_value() == "Great Britain");
    CHECK(doc.root.children[0].attribute("country_language") == "en-uk");

    SUBCASE("entities and self-closing tags") {
        XmlDocument d = parse_xml("<r a=\"x &amp; y\"><e/>&lt;tag&gt;</r>");
        CHECK(d.root.attribute("a") == "x & y");
        CHECK(d.root.text == "<tag>");
        CHECK(d.root.children.size() == 1);
    }
    SUBCASE("mismatched closing tag") {
        CHECK_THROWS_AS(parse_xml("<a><b></a>"), ParseError);
    }
}

TEST_CASE("open_source: table-backed CSV yields one record per row") {
    RecordStream stream = open_source(table_source("poleVaulters"), fixture_config());
    CHECK(stream.size() == 4);
    std::size_t expected_ordinal = 0;
    for (const Record& r : stream.records()) {
        CHECK(r.ordinal == expected_ordinal++);
    }
    // Header row is consumed, not a record.
    CHECK(resolve_reference(stream.records()[0], "surname") ==
          std::vector<std::string>{"Sidorova"});
}

TEST_CASE("open_source: XML with iterator yields element records") {
    RecordStream stream = open_source(xml_source(), fixture_config());
    CHECK(stream.size() == 4);
    CHECK(stream.records()[0].xml_node->name == "country");
}

TEST_CASE("open_source: empty JSON array iterator yields empty stream") {
    testutil::TempDir tmp;
    testutil::write_file(tmp.path() / "items.json", "{\"items\":[]}\n");
    EngineConfig cfg;
    cfg.data_dir = tmp.path();
    LogicalSource ls;
    ls.source = "items.json";
    ls.formulation = Formulation::JsonPath;
    ls.iterator = "$.items[*]";
    RecordStream stream = open_source(ls, cfg);
    CHECK(stream.size() == 0);
    CHECK(stream.next() == nullptr);
}

TEST_CASE("open_source: JSON records resolve fields and numbers") {
    testutil::TempDir tmp;
    testutil::write_file(tmp.path() / "items.json",
                         "{\"items\":[{\"name\":\"a\",\"n\":4},"
                         "{\"name\":\"b\",\"n\":4.5,\"tags\":[\"x\",\"y\"]}]}\n");
    EngineConfig cfg;
    cfg.data_dir = tmp.path();
    LogicalSource ls;
    ls.source = "items.json";
    ls.formulation = Formulation::JsonPath;
    ls.iterator = "$.items[*]";
    RecordStream stream = open_source(ls, cfg);
    REQUIRE(stream.size() == 2);
    CHECK(resolve_reference(stream.records()[0], "name") ==
          std::vector<std::string>{"a"});
    CHECK(resolve_reference(stream.records()[0], "n") == std::vector<std::string>{"4"});
    CHECK(resolve_reference(stream.records()[1], "n") == std::vector<std::string>{"4.5"});
    // Arrays fan out scalar elements.
    CHECK(resolve_reference(stream.records()[1], "tags") ==
          std::vector<std::string>{"x", "y"});
    CHECK(resolve_reference(stream.records()[1], "tags[1]") ==
          std::vector<std::string>{"y"});
    // Missing field: no value.
    CHECK(resolve_reference(stream.records()[0], "tags").empty());
}

TEST_CASE("open_source errors") {
    SUBCASE("file not found") {
        LogicalSource ls;
        ls.source = "no_such_file.csv";
        CHECK_THROWS_AS(open_source(ls, fixture_config()), SourceError);
    }
    SUBCASE("malformed csv") {
        testutil::TempDir tmp;
        testutil::write_file(tmp.path() / "bad.csv", "a,b\n1\n");
        EngineConfig cfg;
        cfg.data_dir = tmp.path();
        LogicalSource ls;
        ls.source = "bad.csv";
        CHECK_THROWS_AS(open_source(ls, cfg), SourceError);
    }
    SUBCASE("invalid iterator for the formulation") {
        LogicalSource ls = xml_source();
        ls.iterator = "//bad//";
        CHECK_THROWS_AS(open_source(ls, fixture_config()), SourceError);
    }
    SUBCASE("missing iterator on hierarchical source") {
        LogicalSource ls = xml_source();
        ls.iterator.reset();
        CHECK_THROWS_AS(open_source(ls, fixture_config()), SourceError);
    }
}

TEST_CASE("URL sources resolve through the mirror directory") {
    LogicalSource ls;
    ls.source = "http://rml.io/data/semWebSer/countries.xml";
    ls.formulation = Formulation::XPath;
    ls.iterator = "/countries/country";
    RecordStream stream = open_source(ls, fixture_config());
    CHECK(stream.size() == 4);

    SUBCASE("missing mirror file") {
        LogicalSource missing = ls;
        missing.source = "http://rml.io/data/other.xml";
        CHECK_THROWS_AS(open_source(missing, fixture_config()), SourceError);
    }
    SUBCASE("no mirror dir and no fetch") {
        EngineConfig cfg = fixture_config();
        cfg.mirror_dir.clear();
        CHECK_THROWS_AS(open_source(ls, cfg), SourceError);
    }
}

TEST_CASE("resolve_reference on csv records") {
    RecordStream stream = open_source(table_source("poleVaulters"), fixture_config());
    const std::vector<Record>& rows = stream.records();
    // Row 2 of the table is ordinal 1.
    CHECK(resolve_reference(rows[1], "surname") == std::vector<std::string>{"Morris"});
    SUBCASE("empty cell resolves to no value") {
        CHECK(resolve_reference(rows[3], "notes").empty());
    }
    SUBCASE("quoted cell keeps its comma") {
        CHECK(resolve_reference(rows[0], "notes") == std::vector<std::string>{"WL,PB"});
    }
    SUBCASE("nonexistent column is an error, not an empty value") {
        CHECK_THROWS_AS(resolve_reference(rows[0], "surnme"), SourceError);
    }
}

TEST_CASE("resolve_reference on xml records") {
    RecordStream stream = open_source(xml_source(), fixture_config());
    const std::vector<Record>& records = stream.records();
    CHECK(resolve_reference(records[0], "@country_language") ==
          std::vector<std::string>{"en-uk"});
    // A leading step naming the record element reads the element itself.
    CHECK(resolve_reference(records[1], "country") ==
          std::vector<std::string>{"Greece"});
    SUBCASE("missing attribute gives no value") {
        testutil::TempDir tmp;
        testutil::write_file(tmp.path() / "c.xml",
                             "<countries><country>NoLang</country></countries>");
        EngineConfig cfg;
        cfg.data_dir = tmp.path();
        LogicalSource ls = xml_source();
        ls.source = "c.xml";
        RecordStream s = open_source(ls, cfg);
        REQUIRE(s.size() == 1);
        CHECK(resolve_reference(s.records()[0], "@country_language").empty());
    }
    SUBCASE("values never leak across iteration units") {
        // Each record sees only its own attribute.
        std::vector<std::string> tags;
        for (const Record& r : records) {
            for (const std::string& v : resolve_reference(r, "@country_language")) {
                tags.push_back(v);
            }
        }
        CHECK(tags == std::vector<std::string>{"en-uk", "el", "ru", "en-us"});
    }
}

TEST_CASE("streams are repeatable") {
    EngineConfig cfg = fixture_config();
    for (int trial = 0; trial < 2; ++trial) {
        RecordStream a = open_source(xml_source(), cfg);
        RecordStream b = open_source(xml_source(), cfg);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(resolve_reference(a.records()[i], "country") ==
                  resolve_reference(b.records()[i], "country"));
            CHECK(a.records()[i].ordinal == b.records()[i].ordinal);
        }
    }
}

TEST_CASE("supported_expression") {
    CHECK(supported_expression(Formulation::Csv, "name"));
    CHECK(supported_expression(Formulation::Csv, "country name"));
    CHECK(!supported_expression(Formulation::Csv, "a[0]"));
    CHECK(!supported_expression(Formulation::Csv, ""));
    CHECK(!supported_expression(Formulation::Csv, "a/b"));

    CHECK(supported_expression(Formulation::XPath, "/countries/country"));
    CHECK(supported_expression(Formulation::XPath, "country"));
    CHECK(supported_expression(Formulation::XPath, "@country_language"));
    CHECK(supported_expression(Formulation::XPath, "a/b/@c"));
    CHECK(!supported_expression(Formulation::XPath, "//x"));
    CHECK(!supported_expression(Formulation::XPath, "a/@b/c"));
    CHECK(!supported_expression(Formulation::XPath, ""));

    CHECK(supported_expression(Formulation::JsonPath, "$.items[*]"));
    CHECK(supported_expression(Formulation::JsonPath, "name"));
    CHECK(supported_expression(Formulation::JsonPath, "$.a.b[0].c"));
    CHECK(!supported_expression(Formulation::JsonPath, "$..x"));
    CHECK(!supported_expression(Formulation::JsonPath, "a[x]"));
    CHECK(!supported_expression(Formulation::JsonPath, ""));
}

TEST_CASE("config file parsing") {
    testutil::TempDir tmp;
    testutil::write_file(tmp.path() / "rmlforge.conf",
                         "# fixture config\n"
                         "tables_dir = /tmp/tables\n"
                         "allow_fetch = false\n"
                         "csv_delimiter = \";\"\n"
                         "base = \"http://ex.com/base/\"\n");
    EngineConfig cfg;
    apply_config_file(cfg, tmp.path() / "rmlforge.conf");
    CHECK(cfg.tables_dir == "/tmp/tables");
    CHECK(!cfg.allow_fetch);
    CHECK(cfg.csv_delimiter == ';');
    REQUIRE(cfg.base);
    CHECK(cfg.base->value() == "http://ex.com/base/");

    SUBCASE("unknown keys are rejected") {
        testutil::write_file(tmp.path() / "bad.conf", "tables = x\n");
        EngineConfig c;
        CHECK_THROWS_AS(apply_config_file(c, tmp.path() / "bad.conf"), ConfigError);
    }
}

TEST_CASE("custom csv delimiter") {
    testutil::TempDir tmp;
    testutil::write_file(tmp.path() / "semi.csv", "a;b\n1;2\n");
    EngineConfig cfg;
    cfg.data_dir = tmp.path();
    cfg.csv_delimiter = ';';
    LogicalSource ls;
    ls.source = "semi.csv";
    RecordStream stream = open_source(ls, cfg);
    REQUIRE(stream.size() == 1);
    CHECK(resolve_reference(stream.records()[0], "b") == std::vector<std::string>{"2"});
}
