#include "proxinerve/description.hpp"

#include <cmath>
#include <sstream>

#include "proxinerve/errors.hpp"

namespace proxinerve {

namespace {

constexpr double kDefaultRealTol = 1e-6;

bool entry_matches(const FeatureVector& u, const FeatureVector& v,
                   const DescriptorSpec::Entry& f) {
    const double a = u.at(f.name);
    const double b = v.at(f.name);
    if (f.name == "side_count")
        return a == b;
    return std::abs(a - b) <= f.tol;
}

} // namespace

bool FeatureVector::has(const std::string& name) const {
    for (const auto& [n, _] : entries)
        if (n == name)
            return true;
    return false;
}

double FeatureVector::at(const std::string& name) const {
    for (const auto& [n, value] : entries)
        if (n == name)
            return value;
    throw ArityMismatch("feature '" + name + "' absent from vector");
}

DescriptorSpec DescriptorSpec::side_count() {
    return {{{"side_count", 0.0}}};
}

DescriptorSpec DescriptorSpec::parse(const std::string& text) {
    DescriptorSpec spec;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            throw ConfigError("empty feature in descriptor spec '" + text + "'");
        Entry e;
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            e.name = item;
            e.tol = e.name == "side_count" ? 0.0 : kDefaultRealTol;
        } else {
            e.name = item.substr(0, colon);
            try {
                std::size_t used = 0;
                e.tol = std::stod(item.substr(colon + 1), &used);
                if (used != item.size() - colon - 1)
                    throw std::invalid_argument("trailing junk");
            } catch (const std::exception&) {
                throw ConfigError("bad tolerance in descriptor spec item '" + item + "'");
            }
            if (!(e.tol >= 0.0) || !std::isfinite(e.tol))
                throw ConfigError("tolerance must be finite and nonnegative in '" + item + "'");
            if (e.name == "side_count")
                e.tol = 0.0;
        }
        if (e.name.empty())
            throw ConfigError("empty feature name in descriptor spec '" + text + "'");
        spec.features.push_back(std::move(e));
    }
    if (spec.features.empty())
        throw ConfigError("descriptor spec selects no features");
    return spec;
}

std::string DescriptorSpec::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < features.size(); ++i) {
        if (i)
            out << ',';
        out << features[i].name;
        if (features[i].name != "side_count")
            out << ':' << features[i].tol;
    }
    return out.str();
}

FeatureVector describe_cell(const Cell& c) {
    const Point m = c.polygon.centroid();
    return {{{"centroid_x", m.x},
             {"centroid_y", m.y},
             {"area", c.polygon.area()},
             {"diameter", c.polygon.diameter()},
             {"side_count", static_cast<double>(c.polygon.size())}}};
}

FeatureVector describe_point(Point p) {
    return {{{"x", p.x}, {"y", p.y}}};
}

bool features_match(const FeatureVector& u, const FeatureVector& v,
                    const DescriptorSpec& spec) {
    for (const auto& f : spec.features)
        if (!entry_matches(u, v, f))
            return false;
    return true;
}

std::vector<std::size_t> descriptive_intersection(
    const std::vector<FeatureVector>& A, const std::vector<FeatureVector>& B,
    const DescriptorSpec& spec) {
    return descriptive_intersection_all({A, B}, spec);
}

std::vector<std::size_t> descriptive_intersection_all(
    const std::vector<std::vector<FeatureVector>>& families,
    const DescriptorSpec& spec) {
    std::vector<const FeatureVector*> all;
    for (const auto& family : families)
        for (const auto& fv : family)
            all.push_back(&fv);

    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool in_every = true;
        for (const auto& family : families) {
            bool in_this = false;
            for (const auto& fv : family) {
                if (features_match(*all[i], fv, spec)) {
                    in_this = true;
                    break;
                }
            }
            if (!in_this) {
                in_every = false;
                break;
            }
        }
        if (in_every)
            out.push_back(i);
    }
    return out;
}

} // namespace proxinerve
