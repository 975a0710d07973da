#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "proxinerve/axioms.hpp"
#include "proxinerve/errors.hpp"
#include "proxinerve/proximity.hpp"

using namespace proxinerve;

namespace {

Element point_at(double x, double y) {
    Element e;
    e.shape = Point{x, y};
    return e;
}

Configuration alias_pair() {
    Configuration c;
    c.name = "alias";
    c.spec = DescriptorSpec::parse("x:1e-9,y:1e-9");
    c.A.elements.push_back(point_at(4.0, 4.0));
    c.B.elements.push_back(point_at(4.0 + 5e-10, 4.0));
    c.C.elements.push_back(point_at(8.0, 1.0));
    c.A = c.A.described();
    c.B = c.B.described();
    c.C = c.C.described();
    return c;
}

Configuration find_config(const std::vector<Configuration>& pool,
                          const std::string& name) {
    const auto it = std::find_if(
        pool.begin(), pool.end(),
        [&](const Configuration& c) { return c.name == name; });
    REQUIRE(it != pool.end());
    return *it;
}

std::string replace_once(std::string text, const std::string& from,
                         const std::string& to) {
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    return text.replace(pos, from.size(), to);
}

} // namespace

TEST_CASE("axiom registry lists each law once") {
    const auto& ids = axiom_registry();
    CHECK(ids.size() == 29);
    CHECK(ids.front() == "P0");
    CHECK(ids.back() == "Thm3.2");
    const std::set<std::string> unique(ids.begin(), ids.end());
    CHECK(unique.size() == ids.size());
    for (const char* expected : {"P5", "dP2", "snN3", "snN6", "dsnP6",
                                 "Prop2.1", "Prop2.2", "Prop2.3"})
        CHECK(unique.count(expected) == 1);
    CHECK(unique.count("dsnP3") == 0);
}

TEST_CASE("configuration generation is deterministic") {
    const auto a = generate_configurations(123, 60);
    const auto b = generate_configurations(123, 60);
    REQUIRE(a.size() == 60);
    REQUIRE(b.size() == 60);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(serialize_configuration(a[i]) == serialize_configuration(b[i]));

    const auto other = generate_configurations(7, 60);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (serialize_configuration(a[i]) != serialize_configuration(other[i]))
            differs = true;
    CHECK(differs);
}

TEST_CASE("generation starts with the forced corpus then random flavors") {
    const auto head = generate_configurations(0, 3);
    REQUIRE(head.size() == 3);
    CHECK(head[0].name == "forced-empty-sets");
    CHECK(head[1].name == "forced-corner-contact");
    CHECK(head[2].name == "forced-edge-contact");

    const auto pool = generate_configurations(0, 40);
    REQUIRE(pool.size() == 40);
    for (const char* name :
         {"forced-full-space", "forced-singleton-outside", "forced-twin-points",
          "forced-family-interior-guard", "forced-family-no-interior",
          "forced-sine-axis", "forced-grid-mesh", "forced-superset"}) {
        INFO(name);
        CHECK(std::any_of(pool.begin(), pool.end(), [&](const Configuration& c) {
            return c.name == name;
        }));
    }
    CHECK(pool[16].name == "random-0-overlap");
    CHECK(pool[17].name == "random-1-disjoint");
}

TEST_CASE("every registered law passes on the generated pool") {
    const auto reports = run_full_suite(0, 200);
    const auto& ids = axiom_registry();
    REQUIRE(reports.size() == ids.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const AxiomReport& r = reports[i];
        CHECK(r.id == ids[i]);
        CHECK(r.trials == 200);
        INFO("axiom " << r.id << ": "
                      << (r.failures.empty()
                              ? std::string("ok")
                              : r.failures[0].config_name + ": " +
                                    r.failures[0].detail));
        if (!r.informational)
            CHECK(r.failures.empty());
        CHECK(r.passed());
    }
    CHECK(suite_passes(reports));
}

TEST_CASE("informational point identity laws report sub-tolerance aliases") {
    const Configuration c = alias_pair();

    const AxiomReport p5 = check_axiom("P5", {c});
    CHECK(p5.informational);
    REQUIRE(p5.failures.size() == 1);
    CHECK(p5.failures[0].config_name == "alias");
    CHECK(p5.passed());

    const AxiomReport dp5 = check_axiom("dP5", {c});
    CHECK(dp5.informational);
    CHECK(dp5.failures.size() == 1);
    CHECK(dp5.passed());

    CHECK(check_axiom("snN6", {c}).failures.empty());
    CHECK(check_axiom("dsnP6", {c}).failures.empty());
    CHECK(check_axiom("Prop2.1", {c}).failures.empty());

    Configuration twins = alias_pair();
    twins.B = twins.A;
    CHECK(check_axiom("P5", {twins}).failures.empty());
    CHECK(check_axiom("dP5", {twins}).failures.empty());
}

TEST_CASE("descriptively matched but spatially separated singletons") {
    Configuration c;
    c.name = "loose-descriptions";
    c.spec = DescriptorSpec::parse("x:1e-3,y:1e-3");
    c.A.elements.push_back(point_at(4.0, 4.0));
    c.B.elements.push_back(point_at(4.0005, 4.0));
    c.C.elements.push_back(point_at(9.0, 9.0));
    c.A = c.A.described();
    c.B = c.B.described();
    c.C = c.C.described();
    for (const std::string id : {"snN6", "dsnP6", "Prop2.1", "Prop2.2", "dP1"}) {
        INFO(id);
        CHECK(check_axiom(id, {c}).failures.empty());
    }
}

TEST_CASE("unknown law ids are rejected") {
    CHECK_THROWS_AS(check_axiom("Thm9.9", {}), UnknownAxiom);
    CHECK_THROWS_AS(check_axiom("p0", {}), UnknownAxiom);
}

TEST_CASE("configuration serialization round trips byte for byte") {
    const auto pool = generate_configurations(7, 40);
    for (const Configuration& c : pool) {
        INFO(c.name);
        const std::string once = serialize_configuration(c);
        const Configuration back = parse_configuration(once);
        CHECK(serialize_configuration(back) == once);
        CHECK(back.name == c.name);
        CHECK(back.spec.to_string() == c.spec.to_string());
        CHECK(back.A.elements.size() == c.A.elements.size());
        CHECK(back.family.size() == c.family.size());
        CHECK(back.mesh_sites.size() == c.mesh_sites.size());
    }
}

TEST_CASE("configuration parsing rejects broken input") {
    Configuration twins;
    twins.name = "twins";
    twins.spec = DescriptorSpec::parse("x:1e-9,y:1e-9");
    twins.A.elements.push_back(point_at(4.0, 4.0));
    twins.B.elements.push_back(point_at(4.0, 4.0));
    twins.C.elements.push_back(point_at(6.5, 4.0));
    const std::string good = serialize_configuration(twins);
    CHECK(parse_configuration(good).name == "twins");

    CHECK_THROWS_AS(parse_configuration("{ nope"), ParseError);
    CHECK_THROWS_AS(
        parse_configuration(replace_once(good, "\"kind\": \"point\"",
                                         "\"kind\": \"blob\"")),
        ParseError);
    CHECK_THROWS_AS(
        parse_configuration(replace_once(good, "\"spec\": \"x:1e-09,y:1e-09\"",
                                         "\"spec\": \"side_count\"")),
        ConfigError);
    CHECK_THROWS_AS(
        parse_configuration(replace_once(good, "[4, 4]", "[40, 4]")),
        ConfigError);
}

TEST_CASE("suite reports emit canonically and replay their failures") {
    const Configuration c = alias_pair();
    const std::vector<AxiomReport> reports{check_axiom("P5", {c}),
                                           check_axiom("P0", {c})};
    const std::string text = emit_suite_report(reports, 99, 1);
    CHECK(text.find("\"schema\": 1") != std::string::npos);
    CHECK(text.back() == '\n');

    const auto parsed = parse_suite_report(text);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].id == "P5");
    CHECK(parsed[0].informational);
    REQUIRE(parsed[0].failures.size() == 1);
    CHECK(parsed[1].id == "P0");
    CHECK(parsed[1].failures.empty());
    CHECK(emit_suite_report(parsed, 99, 1) == text);

    const auto replayed = replay_failures(text);
    REQUIRE(replayed.size() == 1);
    CHECK(replayed[0].id == "P5");
    CHECK(replayed[0].trials == 1);
    CHECK(replayed[0].failures.size() == 1);

    CHECK_THROWS_AS(
        parse_suite_report(replace_once(text, "\"schema\": 1", "\"schema\": 2")),
        SchemaVersionMismatch);
    CHECK_THROWS_AS(parse_suite_report("[1, 2"), ParseError);
}

TEST_CASE("sine wave samples stay on the axis at tolerance") {
    const auto roots = sine_wave_axis_roots();
    REQUIRE(roots.size() == 14);
    const double pi = std::acos(-1.0);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const double expected = 5.0 / (static_cast<double>(15 - i) * pi);
        INFO("root " << i);
        CHECK(std::abs(roots[i] - expected) <= 1e-9);
        CHECK(std::abs(std::sin(5.0 / roots[i])) <= 1e-9);
        if (i > 0)
            CHECK(roots[i] > roots[i - 1]);
    }

    const Configuration cfg = sine_wave_axis_config();
    REQUIRE(cfg.A.elements.size() == 14);
    REQUIRE(cfg.B.elements.size() == 14);
    const ProximityContext ctx{cfg.space, {}};
    CHECK(strongly_near(cfg.A, cfg.B, ctx).holds());
    CHECK(descriptively_near(cfg.A, cfg.B, cfg.spec).holds());
    CHECK_FALSE(near(cfg.A, cfg.C, ctx).holds());

    for (const std::string& id : axiom_registry()) {
        const AxiomReport r = check_axiom(id, {cfg});
        INFO("axiom " << id);
        if (!r.informational)
            CHECK(r.failures.empty());
        CHECK(r.passed());
    }
}

TEST_CASE("mesh configuration exercises the spoke law") {
    const auto pool = generate_configurations(0, 16);
    const Configuration mesh = find_config(pool, "forced-grid-mesh");
    REQUIRE(mesh.mesh_sites.size() == 9);
    for (const std::string id : {"Thm3.2", "P2", "snN2", "snN4", "Prop2.2"}) {
        INFO(id);
        CHECK(check_axiom(id, {mesh}).failures.empty());
    }
}
