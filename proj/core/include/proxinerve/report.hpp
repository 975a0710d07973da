#ifndef PROXINERVE_REPORT_HPP
#define PROXINERVE_REPORT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "proxinerve/description.hpp"
#include "proxinerve/geometry.hpp"
#include "proxinerve/proximity.hpp"
#include "proxinerve/voronoi.hpp"

namespace proxinerve {

inline constexpr int kReportSchemaVersion = 1;

struct CellRecord {
    int id = 0;
    bool touches_boundary = false;
    std::vector<Point> vertices;
};

struct AdjacencyRecord {
    int a = 0;
    int b = 0;
    Segment witness;
};

struct ClusterRecord {
    int nucleus = 0;
    std::size_t degree = 0;
    std::vector<int> members;
};

/** One verification outcome; nucleus is -1 for mesh-wide checks. */
struct CheckRecord {
    std::string check;
    int nucleus = -1;
    std::string truth;
    std::string note;
};

struct HomotopyRecord {
    int nucleus = 0;
    long long complex_euler = 0;
    bool cone_over_nucleus = false;
    bool union_connected = false;
    long long union_euler = 0;
    std::size_t boundary_loops = 0;
    bool passes = false;
};

struct AxiomSummaryRecord {
    std::string id;
    std::size_t trials = 0;
    std::size_t failures = 0;
    bool informational = false;
    std::string note;
};

/**
 * Everything one mesh analysis produces, in serializable form: the mesh
 * itself (bbox, sites, cells, adjacency, feature table), the degree
 * histogram, the maximal nucleus clusters, and every verification verdict.
 * The axioms section is empty unless an axiom suite ran.
 */
struct AnalysisReport {
    int schema = kReportSchemaVersion;
    Rect bbox{0.0, 0.0, 0.0, 0.0};
    std::vector<Point> sites;
    std::vector<CellRecord> cells;
    std::vector<AdjacencyRecord> adjacency;
    std::vector<FeatureVector> features;
    std::vector<std::pair<std::size_t, std::size_t>> degree_histogram;
    std::vector<ClusterRecord> mncs;
    std::vector<CheckRecord> lemma_checks;
    std::vector<CheckRecord> spoke_checks;
    std::vector<HomotopyRecord> homotopy_checks;
    CheckRecord descriptive_check;
    std::vector<AxiomSummaryRecord> axioms;
};

/** Full pipeline: clusters, nerves, and every verification on one mesh. */
AnalysisReport build_report(const Tessellation& t, const DescriptorSpec& spec,
                            const Tolerances& tol = {});

/**
 * True when every nerve check holds and the descriptive theorem did not
 * fail outright; an unmet precondition is not a failure.
 */
bool all_checks_pass(const AnalysisReport& r);

/**
 * Canonical text form: fixed key order, two-space indent, floats with 17
 * significant digits, LF line endings, trailing newline. Identical
 * structures emit identical bytes.
 */
std::string emit_report(const AnalysisReport& r);

/**
 * Inverse of emit_report up to float formatting. Rejects documents whose
 * schema version differs and malformed JSON with the offending position.
 */
AnalysisReport parse_report(const std::string& text);

std::string truth_name(Truth t);
Truth truth_from_name(const std::string& name);

/** The exact number formatting emit_report uses; rejects non-finite input. */
std::string canonical_number(double v);

/** JSON string literal with standard escapes. */
std::string json_quote(const std::string& s);

} // namespace proxinerve

#endif
