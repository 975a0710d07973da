#include "doctest.h"

#include <string>
#include <vector>

#include "proxinerve/errors.hpp"
#include "proxinerve/report.hpp"
#include "support/fixtures.hpp"

using namespace proxinerve;

namespace {

Tessellation grid3() {
    std::vector<Point> sites;
    for (int gy = 0; gy < 3; ++gy)
        for (int gx = 0; gx < 3; ++gx)
            sites.push_back({gx + 0.5, gy + 0.5});
    return build_tessellation(sites, Rect{0, 0, 3, 3});
}

} // namespace

TEST_CASE("full pipeline report for the 3x3 grid") {
    const auto r = build_report(grid3(), DescriptorSpec::side_count());

    CHECK(r.schema == 1);
    CHECK(r.bbox.x1 == 3.0);
    CHECK(r.sites.size() == 9);
    CHECK(r.cells.size() == 9);
    CHECK(r.features.size() == 9);
    CHECK(r.adjacency.size() == 12);
    CHECK(r.degree_histogram ==
          std::vector<std::pair<std::size_t, std::size_t>>{
              {2, 4}, {3, 4}, {4, 1}});

    REQUIRE(r.mncs.size() == 1);
    CHECK(r.mncs[0].nucleus == 4);
    CHECK(r.mncs[0].degree == 4);
    CHECK(r.mncs[0].members == std::vector<int>{1, 3, 4, 5, 7});

    REQUIRE(r.lemma_checks.size() == 1);
    CHECK(r.lemma_checks[0].truth == "holds");
    CHECK(r.lemma_checks[0].nucleus == 4);
    REQUIRE(r.spoke_checks.size() == 1);
    CHECK(r.spoke_checks[0].truth == "holds");
    CHECK(r.spoke_checks[0].note == "6 spoke pairs verified");
    REQUIRE(r.homotopy_checks.size() == 1);
    CHECK(r.homotopy_checks[0].complex_euler == 1);
    CHECK(r.homotopy_checks[0].cone_over_nucleus);
    CHECK(r.homotopy_checks[0].union_connected);
    CHECK(r.homotopy_checks[0].union_euler == 1);
    CHECK(r.homotopy_checks[0].boundary_loops == 1);
    CHECK(r.homotopy_checks[0].passes);
    CHECK(r.descriptive_check.truth == "holds");
    CHECK(r.axioms.empty());
    CHECK(all_checks_pass(r));
}

TEST_CASE("emitted text is canonical and byte-stable") {
    const auto r1 = build_report(grid3(), DescriptorSpec::side_count());
    const auto r2 = build_report(grid3(), DescriptorSpec::side_count());
    const std::string a = emit_report(r1);
    const std::string b = emit_report(r2);
    CHECK(a == b);
    CHECK(a.substr(0, 16) == "{\n  \"schema\": 1,");
    CHECK(a.back() == '\n');
    CHECK(a.find('\r') == std::string::npos);
    CHECK(a.find("\"degree_histogram\": [\n    [2, 4],\n    [3, 4],\n    "
                 "[4, 1]\n  ]") != std::string::npos);
    CHECK(a.find("\"members\": [1, 3, 4, 5, 7]") != std::string::npos);
}

TEST_CASE("emit, parse, emit is the identity on emitted text") {
    for (const auto& f :
         {testing::twin_hexagon_mesh(), testing::mixed_side_count_mesh()}) {
        const auto t = build_tessellation(f.sites, f.box);
        const auto r = build_report(t, DescriptorSpec::side_count());
        const std::string once = emit_report(r);
        const std::string twice = emit_report(parse_report(once));
        CHECK(once == twice);
    }
    const auto r = build_report(grid3(), DescriptorSpec::side_count());
    const std::string once = emit_report(r);
    CHECK(emit_report(parse_report(once)) == once);
}

TEST_CASE("fixture meshes land in the expected theorem states") {
    {
        const auto f = testing::twin_hexagon_mesh();
        const auto r =
            build_report(build_tessellation(f.sites, f.box),
                         DescriptorSpec::side_count());
        CHECK(r.mncs.size() == 2);
        CHECK(r.descriptive_check.truth == "holds");
        CHECK(all_checks_pass(r));
    }
    {
        const auto f = testing::mixed_side_count_mesh();
        const auto r =
            build_report(build_tessellation(f.sites, f.box),
                         DescriptorSpec::side_count());
        CHECK(r.mncs.size() == 2);
        CHECK(r.descriptive_check.truth == "precondition_unmet");
        CHECK(all_checks_pass(r));
    }
}

TEST_CASE("single-cell mesh report keeps empty sections parseable") {
    const auto t = build_tessellation({{1.0, 1.0}}, Rect{0, 0, 2, 2});
    const auto r = build_report(t, DescriptorSpec::side_count());
    CHECK(r.adjacency.empty());
    CHECK(r.degree_histogram ==
          std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
    CHECK(r.homotopy_checks.at(0).passes);
    const std::string text = emit_report(r);
    CHECK(text.find("\"adjacency\": [],") != std::string::npos);
    CHECK(emit_report(parse_report(text)) == text);
}

TEST_CASE("parse rejects wrong schema versions and malformed text") {
    const auto r = build_report(grid3(), DescriptorSpec::side_count());
    std::string text = emit_report(r);

    std::string wrong = text;
    wrong.replace(wrong.find("\"schema\": 1"), 11, "\"schema\": 999");
    CHECK_THROWS_AS(parse_report(wrong), SchemaVersionMismatch);

    CHECK_THROWS_AS(parse_report("{"), ParseError);
    CHECK_THROWS_AS(parse_report("[]"), ParseError);
    CHECK_THROWS_AS(parse_report("{\"schema\": 1}"), ParseError);
    CHECK_THROWS_AS(parse_report("{\"no_schema\": true}"), ParseError);

    std::string bad_truth = text;
    const auto pos = bad_truth.find("\"truth\": \"holds\"");
    REQUIRE(pos != std::string::npos);
    bad_truth.replace(pos, 16, "\"truth\": \"maybe\"");
    CHECK_THROWS_AS(parse_report(bad_truth), ParseError);
}

TEST_CASE("parse errors carry the offending position") {
    try {
        parse_report("{\"schema\": 1, oops}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("15") != std::string::npos);
    }
}

TEST_CASE("binary64 values survive the round trip bit for bit") {
    AnalysisReport r;
    r.bbox = {0.1, 1.0 / 3.0, 1e300, 3.0};
    r.sites = {{0.1 + 0.2, 4.9406564584124654e-324},
               {-0.0, 123456789.123456789}};
    r.descriptive_check = {"descriptive_nerve_theorem", -1, "holds", ""};
    const auto back = parse_report(emit_report(r));
    CHECK(back.bbox.x0 == 0.1);
    CHECK(back.bbox.y0 == 1.0 / 3.0);
    CHECK(back.bbox.x1 == 1e300);
    CHECK(back.sites[0].x == 0.1 + 0.2);
    CHECK(back.sites[0].y == 4.9406564584124654e-324);
    CHECK(back.sites[1].y == 123456789.123456789);
}

TEST_CASE("number and string canonicalization") {
    CHECK(canonical_number(0.5) == "0.5");
    CHECK(canonical_number(1.0) == "1");
    CHECK(canonical_number(-2.0) == "-2");
    CHECK(canonical_number(0.1) == "0.10000000000000001");
    CHECK_THROWS_AS(canonical_number(std::nan("")), ConfigError);
    CHECK_THROWS_AS(canonical_number(1.0 / 0.0), ConfigError);

    CHECK(json_quote("plain") == "\"plain\"");
    CHECK(json_quote("a\"b\\c") == "\"a\\\"b\\\\c\"");
    CHECK(json_quote("line\nbreak\ttab") == "\"line\\nbreak\\ttab\"");
    CHECK(json_quote(std::string(1, '\x01')) == "\"\\u0001\"");

    CHECK(truth_name(Truth::precondition_unmet) == "precondition_unmet");
    CHECK(truth_from_name("fails") == Truth::fails);
    CHECK_THROWS_AS(truth_from_name("bogus"), ParseError);
}
