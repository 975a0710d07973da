#include "proxinerve/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "json.hpp"
#include "proxinerve/clusters.hpp"
#include "proxinerve/errors.hpp"
#include "proxinerve/nerve.hpp"

namespace proxinerve {

namespace {

using Json = nlohmann::ordered_json;

void append_point(std::string& out, Point p) {
    out += '[';
    out += canonical_number(p.x);
    out += ", ";
    out += canonical_number(p.y);
    out += ']';
}

void append_point_rows(std::string& out, const std::vector<Point>& pts,
                       const std::string& indent) {
    if (pts.empty()) {
        out += "[]";
        return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out += indent + "  ";
        append_point(out, pts[i]);
        out += i + 1 < pts.size() ? ",\n" : "\n";
    }
    out += indent + "]";
}

void append_int_row(std::string& out, const std::vector<int>& xs) {
    out += '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += std::to_string(xs[i]);
        if (i + 1 < xs.size())
            out += ", ";
    }
    out += ']';
}

Point point_from(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("expected a two-number point, got " + j.dump());
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Point> points_from(const Json& j) {
    std::vector<Point> pts;
    for (const Json& e : j)
        pts.push_back(point_from(e));
    return pts;
}

CheckRecord check_from(const Json& j, const std::string& name, int nucleus) {
    CheckRecord c;
    c.check = name;
    c.nucleus = nucleus;
    c.truth = j.at("truth").get<std::string>();
    truth_from_name(c.truth);
    c.note = j.at("note").get<std::string>();
    return c;
}

} // namespace

std::string truth_name(Truth t) {
    switch (t) {
    case Truth::holds:
        return "holds";
    case Truth::fails:
        return "fails";
    case Truth::precondition_unmet:
        return "precondition_unmet";
    }
    throw ConfigError("unrepresentable truth value");
}

Truth truth_from_name(const std::string& name) {
    if (name == "holds")
        return Truth::holds;
    if (name == "fails")
        return Truth::fails;
    if (name == "precondition_unmet")
        return Truth::precondition_unmet;
    throw ParseError("unknown truth value \"" + name + "\"");
}

std::string canonical_number(double v) {
    if (!std::isfinite(v))
        throw ConfigError("non-finite number cannot appear in a report");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\r':
            out += "\\r";
            break;
        case '\t':
            out += "\\t";
            break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    out += '"';
    return out;
}

AnalysisReport build_report(const Tessellation& t, const DescriptorSpec& spec,
                            const Tolerances& tol) {
    AnalysisReport r;
    r.bbox = t.bbox;
    for (const Site& s : t.sites)
        r.sites.push_back(s.position);
    for (const Cell& c : t.cells) {
        r.cells.push_back({c.site, c.touches_boundary, c.polygon.vertices()});
        r.features.push_back(describe_cell(c));
    }
    for (const AdjacencyEdge& e : t.edges)
        r.adjacency.push_back({e.a, e.b, e.witness});

    std::map<std::size_t, std::size_t> histogram;
    for (const Cell& c : t.cells)
        ++histogram[t.degree(c.site)];
    r.degree_histogram.assign(histogram.begin(), histogram.end());

    std::vector<Nerve> nerves;
    for (const Cluster& c : maximal_nucleus_clusters(t)) {
        r.mncs.push_back({c.nucleus, c.degree(), c.members});
        nerves.push_back(build_nerve(c, t, tol));
    }
    for (const Nerve& nv : nerves) {
        const int nucleus = nv.cluster.nucleus;
        const ProximityVerdict lemma = verify_nerve_lemma(nv, t, tol);
        r.lemma_checks.push_back(
            {"nerve_lemma", nucleus, truth_name(lemma.truth), lemma.note});

        const auto pair_verdicts = verify_spoke_theorem(nv, t, spec, tol);
        CheckRecord spoke{"spoke_theorem", nucleus, truth_name(Truth::holds),
                          std::to_string(pair_verdicts.size()) +
                              " spoke pairs verified"};
        for (const ProximityVerdict& v : pair_verdicts) {
            if (!v.holds()) {
                spoke.truth = truth_name(v.truth);
                spoke.note = v.note;
                break;
            }
        }
        r.spoke_checks.push_back(spoke);

        const HomotopyReport h = homotopy_type_proxy(nv, t, tol);
        r.homotopy_checks.push_back({nucleus, h.complex_euler,
                                     h.cone_over_nucleus, h.union_connected,
                                     h.union_euler, h.boundary_loops,
                                     h.passes()});
    }
    const ProximityVerdict d = verify_descriptive_nerve_theorem(nerves, t, spec);
    r.descriptive_check = {"descriptive_nerve_theorem", -1, truth_name(d.truth),
                           d.note};
    return r;
}

bool all_checks_pass(const AnalysisReport& r) {
    for (const CheckRecord& c : r.lemma_checks)
        if (c.truth != "holds")
            return false;
    for (const CheckRecord& c : r.spoke_checks)
        if (c.truth != "holds")
            return false;
    for (const HomotopyRecord& h : r.homotopy_checks)
        if (!h.passes)
            return false;
    if (r.descriptive_check.truth == "fails")
        return false;
    for (const AxiomSummaryRecord& a : r.axioms)
        if (!a.informational && a.failures > 0)
            return false;
    return true;
}

std::string emit_report(const AnalysisReport& r) {
    std::string o;
    o += "{\n";
    o += "  \"schema\": " + std::to_string(r.schema) + ",\n";

    o += "  \"bbox\": [" + canonical_number(r.bbox.x0) + ", " +
         canonical_number(r.bbox.y0) + ", " + canonical_number(r.bbox.x1) +
         ", " + canonical_number(r.bbox.y1) + "],\n";

    o += "  \"sites\": ";
    append_point_rows(o, r.sites, "  ");
    o += ",\n";

    o += "  \"cells\": [";
    for (std::size_t i = 0; i < r.cells.size(); ++i) {
        const CellRecord& c = r.cells[i];
        o += i == 0 ? "\n" : ",\n";
        o += "    {\n";
        o += "      \"id\": " + std::to_string(c.id) + ",\n";
        o += std::string("      \"touches_boundary\": ") +
             (c.touches_boundary ? "true" : "false") + ",\n";
        o += "      \"vertices\": ";
        append_point_rows(o, c.vertices, "      ");
        o += "\n    }";
    }
    o += r.cells.empty() ? "],\n" : "\n  ],\n";

    o += "  \"adjacency\": [";
    for (std::size_t i = 0; i < r.adjacency.size(); ++i) {
        const AdjacencyRecord& e = r.adjacency[i];
        o += i == 0 ? "\n" : ",\n";
        o += "    {\n";
        o += "      \"a\": " + std::to_string(e.a) + ",\n";
        o += "      \"b\": " + std::to_string(e.b) + ",\n";
        o += "      \"witness\": [";
        append_point(o, e.witness.a);
        o += ", ";
        append_point(o, e.witness.b);
        o += "]\n    }";
    }
    o += r.adjacency.empty() ? "],\n" : "\n  ],\n";

    o += "  \"features\": [";
    for (std::size_t i = 0; i < r.features.size(); ++i) {
        o += i == 0 ? "\n" : ",\n";
        o += "    {\n";
        o += "      \"id\": " +
             std::to_string(i < r.cells.size() ? r.cells[i].id
                                               : static_cast<int>(i)) +
             ",\n";
        const auto& entries = r.features[i].entries;
        for (std::size_t k = 0; k < entries.size(); ++k) {
            o += "      " + json_quote(entries[k].first) + ": " +
                 canonical_number(entries[k].second);
            o += k + 1 < entries.size() ? ",\n" : "\n";
        }
        o += "    }";
    }
    o += r.features.empty() ? "],\n" : "\n  ],\n";

    o += "  \"degree_histogram\": [";
    for (std::size_t i = 0; i < r.degree_histogram.size(); ++i) {
        o += i == 0 ? "\n" : ",\n";
        o += "    [" + std::to_string(r.degree_histogram[i].first) + ", " +
             std::to_string(r.degree_histogram[i].second) + "]";
    }
    o += r.degree_histogram.empty() ? "],\n" : "\n  ],\n";

    o += "  \"mncs\": [";
    for (std::size_t i = 0; i < r.mncs.size(); ++i) {
        const ClusterRecord& m = r.mncs[i];
        o += i == 0 ? "\n" : ",\n";
        o += "    {\n";
        o += "      \"nucleus\": " + std::to_string(m.nucleus) + ",\n";
        o += "      \"degree\": " + std::to_string(m.degree) + ",\n";
        o += "      \"members\": ";
        append_int_row(o, m.members);
        o += "\n    }";
    }
    o += r.mncs.empty() ? "],\n" : "\n  ],\n";

    o += "  \"checks\": {\n";
    const auto emit_check_list = [&o](const char* key,
                                      const std::vector<CheckRecord>& list,
                                      bool trailing_comma) {
        o += std::string("    \"") + key + "\": [";
        for (std::size_t i = 0; i < list.size(); ++i) {
            o += i == 0 ? "\n" : ",\n";
            o += "      {\n";
            o += "        \"nucleus\": " + std::to_string(list[i].nucleus) +
                 ",\n";
            o += "        \"truth\": " + json_quote(list[i].truth) + ",\n";
            o += "        \"note\": " + json_quote(list[i].note) + "\n";
            o += "      }";
        }
        o += list.empty() ? "]" : "\n    ]";
        o += trailing_comma ? ",\n" : "\n";
    };
    emit_check_list("nerve_lemma", r.lemma_checks, true);
    emit_check_list("spoke_theorem", r.spoke_checks, true);

    o += "    \"homotopy_proxy\": [";
    for (std::size_t i = 0; i < r.homotopy_checks.size(); ++i) {
        const HomotopyRecord& h = r.homotopy_checks[i];
        o += i == 0 ? "\n" : ",\n";
        o += "      {\n";
        o += "        \"nucleus\": " + std::to_string(h.nucleus) + ",\n";
        o += "        \"complex_euler\": " + std::to_string(h.complex_euler) +
             ",\n";
        o += std::string("        \"cone_over_nucleus\": ") +
             (h.cone_over_nucleus ? "true" : "false") + ",\n";
        o += std::string("        \"union_connected\": ") +
             (h.union_connected ? "true" : "false") + ",\n";
        o += "        \"union_euler\": " + std::to_string(h.union_euler) +
             ",\n";
        o += "        \"boundary_loops\": " +
             std::to_string(h.boundary_loops) + ",\n";
        o += std::string("        \"passes\": ") +
             (h.passes ? "true" : "false") + "\n";
        o += "      }";
    }
    o += r.homotopy_checks.empty() ? "],\n" : "\n    ],\n";

    o += "    \"descriptive_nerve_theorem\": {\n";
    o += "      \"truth\": " + json_quote(r.descriptive_check.truth) + ",\n";
    o += "      \"note\": " + json_quote(r.descriptive_check.note) + "\n";
    o += "    }\n";
    o += "  },\n";

    o += "  \"axioms\": [";
    for (std::size_t i = 0; i < r.axioms.size(); ++i) {
        const AxiomSummaryRecord& a = r.axioms[i];
        o += i == 0 ? "\n" : ",\n";
        o += "    {\n";
        o += "      \"id\": " + json_quote(a.id) + ",\n";
        o += "      \"trials\": " + std::to_string(a.trials) + ",\n";
        o += "      \"failures\": " + std::to_string(a.failures) + ",\n";
        o += std::string("      \"informational\": ") +
             (a.informational ? "true" : "false") + ",\n";
        o += "      \"note\": " + json_quote(a.note) + "\n";
        o += "    }";
    }
    o += r.axioms.empty() ? "]\n" : "\n  ]\n";

    o += "}\n";
    return o;
}

AnalysisReport parse_report(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed report JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("report JSON must be an object");
    if (!j.contains("schema") || !j["schema"].is_number_integer())
        throw ParseError("report JSON lacks an integer schema field");
    if (j["schema"].get<int>() != kReportSchemaVersion)
        throw SchemaVersionMismatch(
            "report schema " + j["schema"].dump() + " unsupported; expected " +
            std::to_string(kReportSchemaVersion));

    try {
        AnalysisReport r;
        r.schema = j["schema"].get<int>();
        const Json& bb = j.at("bbox");
        if (!bb.is_array() || bb.size() != 4)
            throw ParseError("bbox must be a four-number array");
        r.bbox = {bb[0].get<double>(), bb[1].get<double>(),
                  bb[2].get<double>(), bb[3].get<double>()};
        r.sites = points_from(j.at("sites"));
        for (const Json& c : j.at("cells"))
            r.cells.push_back({c.at("id").get<int>(),
                               c.at("touches_boundary").get<bool>(),
                               points_from(c.at("vertices"))});
        for (const Json& e : j.at("adjacency")) {
            const Json& w = e.at("witness");
            if (!w.is_array() || w.size() != 2)
                throw ParseError("adjacency witness must hold two points");
            r.adjacency.push_back(
                {e.at("a").get<int>(), e.at("b").get<int>(),
                 Segment{point_from(w[0]), point_from(w[1])}});
        }
        std::size_t row = 0;
        for (const Json& f : j.at("features")) {
            FeatureVector fv;
            for (const auto& [key, value] : f.items()) {
                if (key == "id") {
                    if (row >= r.cells.size() ||
                        value.get<int>() != r.cells[row].id)
                        throw ParseError("feature table misaligned with cells");
                    continue;
                }
                fv.entries.emplace_back(key, value.get<double>());
            }
            r.features.push_back(std::move(fv));
            ++row;
        }
        for (const Json& h : j.at("degree_histogram")) {
            if (!h.is_array() || h.size() != 2)
                throw ParseError("degree histogram entries are pairs");
            r.degree_histogram.emplace_back(h[0].get<std::size_t>(),
                                            h[1].get<std::size_t>());
        }
        for (const Json& m : j.at("mncs"))
            r.mncs.push_back({m.at("nucleus").get<int>(),
                              m.at("degree").get<std::size_t>(),
                              m.at("members").get<std::vector<int>>()});
        const Json& checks = j.at("checks");
        for (const Json& c : checks.at("nerve_lemma"))
            r.lemma_checks.push_back(
                check_from(c, "nerve_lemma", c.at("nucleus").get<int>()));
        for (const Json& c : checks.at("spoke_theorem"))
            r.spoke_checks.push_back(
                check_from(c, "spoke_theorem", c.at("nucleus").get<int>()));
        for (const Json& h : checks.at("homotopy_proxy"))
            r.homotopy_checks.push_back(
                {h.at("nucleus").get<int>(),
                 h.at("complex_euler").get<long long>(),
                 h.at("cone_over_nucleus").get<bool>(),
                 h.at("union_connected").get<bool>(),
                 h.at("union_euler").get<long long>(),
                 h.at("boundary_loops").get<std::size_t>(),
                 h.at("passes").get<bool>()});
        r.descriptive_check = check_from(checks.at("descriptive_nerve_theorem"),
                                         "descriptive_nerve_theorem", -1);
        for (const Json& a : j.at("axioms"))
            r.axioms.push_back({a.at("id").get<std::string>(),
                                a.at("trials").get<std::size_t>(),
                                a.at("failures").get<std::size_t>(),
                                a.at("informational").get<bool>(),
                                a.at("note").get<std::string>()});
        return r;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("report JSON structure: ") + e.what());
    }
}

} // namespace proxinerve
