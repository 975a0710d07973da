#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "proxinerve/axioms.hpp"
#include "proxinerve/clusters.hpp"
#include "proxinerve/errors.hpp"
#include "proxinerve/nerve.hpp"
#include "proxinerve/report.hpp"
#include "proxinerve/rng.hpp"
#include "proxinerve/svg.hpp"
#include "proxinerve/voronoi.hpp"

using namespace proxinerve;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

std::optional<double> parse_double(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);
    if (text.empty())
        return std::nullopt;
    double value{};
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        return std::nullopt;
    return value;
}

Rect parse_bbox(const std::string& text) {
    std::vector<double> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string_view field(text.data() + start,
                                     (comma == std::string::npos ? text.size()
                                                                 : comma) -
                                         start);
        const auto v = parse_double(field);
        if (!v)
            throw ConfigError("--bbox expects four comma-separated numbers, got '" +
                              text + "'");
        parts.push_back(*v);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (parts.size() != 4)
        throw ConfigError("--bbox expects four comma-separated numbers, got '" +
                          text + "'");
    const Rect box{parts[0], parts[1], parts[2], parts[3]};
    if (box.degenerate(1e-9))
        throw ConfigError("--bbox describes a degenerate box: '" + text + "'");
    return box;
}

double eps_override_from_env() {
    const char* raw = std::getenv("PROXINERVE_EPS");
    if (!raw)
        return 0.0;
    const auto v = parse_double(raw);
    if (!v || *v <= 0.0)
        throw ConfigError(
            "PROXINERVE_EPS must be a positive number, got '" +
            std::string(raw) + "'");
    return *v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path + ": cannot open for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError(path + ": cannot open for writing");
    out << content;
    if (!out)
        throw ParseError(path + ": write failed");
}

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<Point> sites_from_json(const std::string& path,
                                   const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::ordered_json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.is_array())
        throw ParseError(path + ": expected a top-level array of [x, y] pairs");
    std::vector<Point> sites;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& entry = j[i];
        if (!entry.is_array() || entry.size() != 2 ||
            !entry[0].is_number() || !entry[1].is_number()) {
            std::ostringstream msg;
            msg << path << ": entry " << i << " is not an [x, y] pair";
            throw ParseError(msg.str());
        }
        sites.push_back({entry[0].get<double>(), entry[1].get<double>()});
    }
    return sites;
}

std::vector<Point> sites_from_csv(const std::string& path,
                                  const std::string& text) {
    std::vector<Point> sites;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const std::size_t comma = line.find(',');
        std::ostringstream at;
        at << path << ":" << line_no << ": ";
        if (comma == std::string::npos)
            throw ParseError(at.str() + "expected 'x,y'");
        const auto x = parse_double(std::string_view(line).substr(0, comma));
        const auto y = parse_double(std::string_view(line).substr(comma + 1));
        if (!x || !y) {
            if (line_no == 1 && sites.empty())
                continue;
            throw ParseError(at.str() + "expected two numeric fields, got '" +
                             line + "'");
        }
        sites.push_back({*x, *y});
    }
    return sites;
}

std::vector<Point> parse_sites(const std::string& path) {
    const std::string text = read_file(path);
    std::vector<Point> sites = has_suffix(path, ".json")
                                   ? sites_from_json(path, text)
                                   : sites_from_csv(path, text);
    if (sites.empty())
        throw ParseError(path + ":1: no sites found");
    return sites;
}

int run_generate(std::uint64_t seed, std::size_t count,
                 const std::string& bbox_text, const std::string& out_path) {
    const Rect box = parse_bbox(bbox_text);
    Rng rng(seed);
    std::vector<Point> sites;
    std::size_t attempts = 0;
    const std::size_t cap = 1000 + 100 * count;
    while (sites.size() < count && attempts < cap) {
        ++attempts;
        const Point p{rng.uniform(box.x0, box.x1), rng.uniform(box.y0, box.y1)};
        const bool clear = std::none_of(
            sites.begin(), sites.end(),
            [&](const Point& q) { return distance(p, q) <= 1e-9; });
        if (clear)
            sites.push_back(p);
    }
    if (sites.size() < count)
        throw ConfigError("could not place " + std::to_string(count) +
                          " distinct sites in the given bbox");
    std::ostringstream out;
    out << "x,y\n";
    for (const Point& p : sites)
        out << canonical_number(p.x) << "," << canonical_number(p.y) << "\n";
    write_output(out_path, out.str());
    return kExitOk;
}

int run_mesh(const std::string& sites_path, const std::string& bbox_text,
             const std::string& spec_text, const std::string& out_path,
             const std::string& format) {
    const std::vector<Point> sites = parse_sites(sites_path);
    const Rect box = parse_bbox(bbox_text);
    const Tolerances tol =
        Tolerances::for_diagonal(box.diagonal(), eps_override_from_env());
    const DescriptorSpec spec = DescriptorSpec::parse(spec_text);
    const Tessellation t = build_tessellation(sites, box, tol);
    if (format == "svg") {
        std::vector<Nerve> nerves;
        for (const Cluster& c : maximal_nucleus_clusters(t))
            nerves.push_back(build_nerve(c, t, tol));
        write_output(out_path, render_svg(t, nerves));
        return kExitOk;
    }
    const AnalysisReport r = build_report(t, spec, tol);
    write_output(out_path, emit_report(r));
    return all_checks_pass(r) ? kExitOk : kExitCheckFailed;
}

int run_check_axioms(std::uint64_t seed, std::size_t trials,
                     const std::string& out_path,
                     const std::string& replay_path) {
    if (!replay_path.empty()) {
        const auto replayed = replay_failures(read_file(replay_path));
        const std::size_t total = std::accumulate(
            replayed.begin(), replayed.end(), std::size_t{0},
            [](std::size_t acc, const AxiomReport& r) { return acc + r.trials; });
        write_output(out_path, emit_suite_report(replayed, seed, total));
        return suite_passes(replayed) ? kExitOk : kExitCheckFailed;
    }
    const auto reports = run_full_suite(seed, trials);
    write_output(out_path, emit_suite_report(reports, seed, trials));
    return suite_passes(reports) ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "proxinerve: bounded Voronoi tessellations, proximity relations, "
        "maximal nucleus clusters, and nerve verification"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::size_t count = 50;
    std::size_t trials = 1000;
    std::string bbox_text = "0,0,1,1";
    std::string sites_path;
    std::string out_path;
    std::string replay_path;
    std::string spec_text = "side_count";
    std::string format;

    CLI::App* gen = app.add_subcommand(
        "generate", "Write a deterministic random sites file (CSV)");
    gen->add_option("--seed", seed, "Random seed")->capture_default_str();
    gen->add_option("--count", count, "Number of sites")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gen->add_option("--bbox", bbox_text, "Bounding box as x0,y0,x1,y1")
        ->capture_default_str();
    gen->add_option("--out", out_path, "Output path (stdout when omitted)");

    CLI::App* an = app.add_subcommand(
        "analyze",
        "Tessellate, find clusters and nerves, verify, emit the JSON report");
    an->add_option("--sites", sites_path, "Sites file, CSV 'x,y' or JSON [[x,y],...]")
        ->required();
    an->add_option("--bbox", bbox_text, "Bounding box as x0,y0,x1,y1")
        ->capture_default_str();
    an->add_option("--spec", spec_text,
                   "Descriptor spec, e.g. side_count or side_count,area:1e-3")
        ->capture_default_str();
    an->add_option("--out", out_path, "Output path (stdout when omitted)");
    an->add_option("--format", format, "Output kind: json (default) or svg")
        ->check(CLI::IsMember({"json", "svg"}));

    CLI::App* rd = app.add_subcommand(
        "render", "Draw the tessellation, clusters, and spokes as SVG");
    rd->add_option("--sites", sites_path, "Sites file, CSV 'x,y' or JSON [[x,y],...]")
        ->required();
    rd->add_option("--bbox", bbox_text, "Bounding box as x0,y0,x1,y1")
        ->capture_default_str();
    rd->add_option("--spec", spec_text,
                   "Descriptor spec used when --format json is requested")
        ->capture_default_str();
    rd->add_option("--out", out_path, "Output path (stdout when omitted)");
    rd->add_option("--format", format, "Output kind: svg (default) or json")
        ->check(CLI::IsMember({"json", "svg"}));

    CLI::App* ck = app.add_subcommand(
        "check-axioms",
        "Run every proximity law over a generated configuration pool");
    ck->add_option("--seed", seed, "Pool seed")->capture_default_str();
    ck->add_option("--trials", trials, "Configurations in the pool")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ck->add_option("--out", out_path, "Output path (stdout when omitted)");
    ck->add_option("--replay", replay_path,
                   "Re-check the failures recorded in a previous suite report; "
                   "exit 0 when they no longer fail");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return run_generate(seed, count, bbox_text, out_path);
        if (an->parsed())
            return run_mesh(sites_path, bbox_text, spec_text, out_path,
                            format.empty() ? "json" : format);
        if (rd->parsed())
            return run_mesh(sites_path, bbox_text, spec_text, out_path,
                            format.empty() ? "svg" : format);
        if (ck->parsed())
            return run_check_axioms(seed, trials, out_path, replay_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
