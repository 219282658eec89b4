#include "ismt/stp.hpp"

#include <string>

#include "doctest.h"
#include "ismt/errors.hpp"
#include "support/micro_instances.hpp"

using namespace ismt;

namespace {

const std::string kMinimalDoc =
    "33D32945 STP File, STP Format Version 1.0\n"
    "SECTION Graph\n"
    "Nodes 3\n"
    "Edges 3\n"
    "E 1 2 1\n"
    "E 1 3 2\n"
    "E 2 3 2\n"
    "END\n"
    "SECTION Terminals\n"
    "Terminals 1\n"
    "T 1\n"
    "END\n"
    "EOF\n";

std::string data_path(const std::string& file) {
    return std::string(ISMT_TEST_DATA_DIR) + "/" + file;
}

}  // namespace

TEST_CASE("parse_stp accepts the documented grammar") {
    const ParsedStp p = parse_stp(kMinimalDoc);
    CHECK(p.graph.n == 3);
    CHECK(p.graph.edges.size() == 3);
    CHECK(p.terminals == std::vector<int>{0});
    CHECK(p.warnings.empty());
    CHECK(p.graph.edges[1].u == 0);
    CHECK(p.graph.edges[1].v == 2);
    CHECK(p.graph.edges[1].weight == 2.0);
}

TEST_CASE("parse_stp error reporting") {
    SUBCASE("bad magic") {
        CHECK_THROWS_AS(parse_stp("99D99999 STP File\nEOF\n"), ParseError);
    }
    SUBCASE("edge count mismatch is reported at the END line") {
        const std::string doc =
            "33D32945\n"
            "SECTION Graph\n"
            "Nodes 3\n"
            "Edges 3\n"
            "E 1 2 1\n"
            "E 1 3 2\n"
            "END\n"
            "SECTION Terminals\nTerminals 1\nT 1\nEND\nEOF\n";
        try {
            parse_stp(doc);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 7);
            CHECK(std::string(e.what()).find("mismatch") != std::string::npos);
        }
    }
    SUBCASE("vertex id out of range") {
        std::string doc = kMinimalDoc;
        doc.replace(doc.find("E 2 3 2"), 7, "E 2 9 2");
        CHECK_THROWS_AS(parse_stp(doc), ParseError);
    }
    SUBCASE("malformed number") {
        std::string doc = kMinimalDoc;
        doc.replace(doc.find("E 2 3 2"), 7, "E 2 3 x");
        CHECK_THROWS_AS(parse_stp(doc), ParseError);
    }
    SUBCASE("self loop") {
        std::string doc = kMinimalDoc;
        doc.replace(doc.find("E 2 3 2"), 7, "E 2 2 2");
        CHECK_THROWS_AS(parse_stp(doc), ParseError);
    }
    SUBCASE("missing EOF") {
        std::string doc = kMinimalDoc.substr(0, kMinimalDoc.size() - 4);
        CHECK_THROWS_AS(parse_stp(doc), ParseError);
    }
    SUBCASE("duplicate section") {
        std::string doc = kMinimalDoc;
        doc.insert(doc.find("EOF"), "SECTION Terminals\nTerminals 1\nT 1\nEND\n");
        CHECK_THROWS_AS(parse_stp(doc), ParseError);
    }
}

TEST_CASE("unknown sections are skipped with a warning") {
    std::string doc = kMinimalDoc;
    doc.insert(doc.find("EOF"), "SECTION Coordinates\nDD 1 0 0\nDD 2 1 0\nEND\n");
    const ParsedStp p = parse_stp(doc);
    REQUIRE(p.warnings.size() == 1);
    CHECK(p.warnings[0].find("Coordinates") != std::string::npos);
    CHECK(p.graph.n == 3);
}

TEST_CASE("write_stp emits the complete edge list") {
    const std::string a = write_stp(ismt::testing::instance_a());
    std::size_t e_lines = 0;
    std::size_t t_lines = 0;
    for (std::size_t pos = 0; pos < a.size(); ++pos) {
        if (a.compare(pos, 2, "E ") == 0 && (pos == 0 || a[pos - 1] == '\n')) ++e_lines;
        if (a.compare(pos, 2, "T ") == 0 && (pos == 0 || a[pos - 1] == '\n')) ++t_lines;
    }
    CHECK(e_lines == 6);
    CHECK(t_lines == 2);
    const std::string b = write_stp(ismt::testing::instance_b());
    CHECK(b.find("Edges 3") != std::string::npos);
    CHECK(b.find("Terminals 1") != std::string::npos);
}

TEST_CASE("parse and write round-trip") {
    SUBCASE("write o parse is the identity on committed data") {
        for (const char* file : {"instance_a.stp", "instance_b.stp", "instance_c.stp"}) {
            const ParsedStp p = parse_stp_file(data_path(file));
            const Instance inst = instance_from_parsed(p, false);
            const std::string text = write_stp(inst);
            const ParsedStp again = parse_stp(text);
            CHECK(again.graph.n == p.graph.n);
            CHECK(again.terminals == p.terminals);
            CHECK(again.name == p.name);
            CHECK(write_stp(instance_from_parsed(again, false)) == text);
        }
    }
    SUBCASE("parse inverts write bit for bit") {
        const Instance original = ismt::testing::instance_c();
        const ParsedStp p = parse_stp(write_stp(original));
        const Instance back = instance_from_parsed(p, false);
        CHECK(back.graph == original.graph);
        CHECK(back.terminals == original.terminals);
        CHECK(back.name == original.name);
    }
    SUBCASE("messy spacing and sections normalize in one pass") {
        const std::string messy =
            "33D32945   STP File\r\n"
            "\n"
            "SECTION Unknown\nfoo bar\nEND\n"
            "SECTION Graph\n"
            "Nodes 3\n"
            "Edges 3\n"
            "E 2 3 2\n"
            "E   1   3   2\n"
            "E 1 2 1\n"
            "END\n"
            "SECTION Terminals\nTerminals 1\nT 1\nEND\n"
            "EOF\n";
        const ParsedStp p = parse_stp(messy);
        const std::string once = write_stp(instance_from_parsed(p, false));
        const std::string twice = write_stp(instance_from_parsed(parse_stp(once), false));
        CHECK(once == twice);
    }
}

TEST_CASE("instance_from_parsed") {
    SUBCASE("metric completes directly") {
        const ParsedStp p = parse_stp(kMinimalDoc);
        const Instance inst = instance_from_parsed(p, false);
        CHECK(inst.graph.size() == 3);
        CHECK(inst.graph.weight(1, 2) == 2.0);
        CHECK(inst.terminals == std::vector<int>{0});
    }
    SUBCASE("triangle violation needs metricize") {
        std::string doc = kMinimalDoc;
        doc.replace(doc.find("E 2 3 2"), 7, "E 2 3 9");
        const ParsedStp p = parse_stp(doc);
        CHECK_THROWS_AS(instance_from_parsed(p, false), Error);
        const Instance fixed = instance_from_parsed(p, true);
        CHECK(fixed.graph.weight(1, 2) == 3.0);  // via vertex 0
        CHECK(validate_metric(fixed.graph).empty());
    }
    SUBCASE("incomplete graph needs metricize") {
        const std::string doc =
            "33D32945\nSECTION Graph\nNodes 3\nEdges 2\nE 1 2 1\nE 2 3 1\nEND\n"
            "SECTION Terminals\nTerminals 1\nT 2\nEND\nEOF\n";
        const ParsedStp p = parse_stp(doc);
        CHECK_FALSE(is_complete(p.graph));
        CHECK_THROWS_AS(instance_from_parsed(p, false), Error);
        const Instance fixed = instance_from_parsed(p, true);
        CHECK(fixed.graph.weight(0, 2) == 2.0);
    }
}

TEST_CASE("format_weight round-trips") {
    for (double w : {1.0, 0.5, 1.2, 3.0000000000000004, 1e-9, 123456.789}) {
        const std::string s = format_weight(w);
        const std::string doc = "33D32945\nSECTION Graph\nNodes 2\nEdges 1\nE 1 2 " + s +
                                "\nEND\nSECTION Terminals\nTerminals 1\nT 1\nEND\nEOF\n";
        CHECK(parse_stp(doc).graph.edges[0].weight == w);
    }
}
