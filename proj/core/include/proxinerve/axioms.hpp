#ifndef PROXINERVE_AXIOMS_HPP
#define PROXINERVE_AXIOMS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "proxinerve/description.hpp"
#include "proxinerve/geometry.hpp"
#include "proxinerve/proximity.hpp"

namespace proxinerve {

/**
 * One finite test model for the relation laws: three described region sets
 * in a shared space, an optional family for the union law over collections,
 * and an optional site list for the spoke checks on a real mesh.
 *
 * Invariant: every element lies inside `space` and every element description
 * carries every feature named by `spec`, so descriptive relations are total
 * on the configuration.
 */
struct Configuration {
    std::string name;
    Rect space{0.0, 0.0, 10.0, 10.0};
    DescriptorSpec spec = DescriptorSpec::side_count();
    RegionSet A, B, C;
    std::vector<RegionSet> family;
    std::vector<Point> mesh_sites;
};

struct AxiomFailure {
    std::string config_name;
    std::string detail;
    std::string config_json;  // canonical serialization of the configuration
};

struct AxiomReport {
    std::string id;
    std::size_t trials = 0;  // configurations examined, vacuous ones included
    std::vector<AxiomFailure> failures;
    bool informational = false;
    std::string note;  // what was checked, with any scoping spelled out

    bool passed() const { return informational || failures.empty(); }
};

/** Check ids in canonical order: nearness laws, their descriptive forms,
    strong contact laws, descriptive strong contact laws, the three
    propositions, and the spoke theorem. */
const std::vector<std::string>& axiom_registry();

/** Deterministic pool: a fixed battery of handcrafted configurations first,
    then seeded random ones cycling through the generator flavors. */
std::vector<Configuration> generate_configurations(std::uint64_t seed,
                                                   std::size_t n);

/** Runs one law over the pool.  Throws UnknownAxiom for ids outside the
    registry. */
AxiomReport check_axiom(const std::string& id,
                        const std::vector<Configuration>& configs);

/** Every registry law over one generated pool. */
std::vector<AxiomReport> run_full_suite(std::uint64_t seed, std::size_t n);

/** True when every non-informational law reports zero failures. */
bool suite_passes(const std::vector<AxiomReport>& reports);

/** The caveat printed with every suite: finite sampling refutes, never proves. */
std::string suite_header();

/** Roots of sin(5/x) on [0.1, 1], located by bisection on sign changes. */
std::vector<double> sine_wave_axis_roots();

/** Point-set contact pair along those roots; part of every generated pool. */
Configuration sine_wave_axis_config();

std::string serialize_configuration(const Configuration& c);

/** Inverse of serialize_configuration; validates the configuration
    invariant.  Throws ParseError on malformed text, ConfigError on a
    configuration that violates the invariant, and InvalidPolygon when a
    vertex list does not describe a convex polygon. */
Configuration parse_configuration(const std::string& text);

/** Canonical JSON for a whole suite run, failures embedded with their
    configurations so a run can be replayed from the file alone. */
std::string emit_suite_report(const std::vector<AxiomReport>& reports,
                              std::uint64_t seed, std::size_t trials);

/** Throws SchemaVersionMismatch on a different schema, ParseError on
    malformed text.  Each failure's config_json is re-serialized in
    canonical form. */
std::vector<AxiomReport> parse_suite_report(const std::string& text);

/** Re-checks every recorded failure against its embedded configuration;
    one report per law that had failures, empty failure lists meaning the
    recorded counterexamples no longer reproduce. */
std::vector<AxiomReport> replay_failures(const std::string& report_text);

} // namespace proxinerve

#endif
