#ifndef PROXINERVE_ERRORS_HPP
#define PROXINERVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace proxinerve {

struct InvalidPolygon : std::runtime_error {
    explicit InvalidPolygon(const std::string& what) : std::runtime_error(what) {}
};

struct DuplicateSite : std::runtime_error {
    explicit DuplicateSite(const std::string& what) : std::runtime_error(what) {}
};

struct SiteOutsideBox : std::runtime_error {
    explicit SiteOutsideBox(const std::string& what) : std::runtime_error(what) {}
};

struct ArityMismatch : std::runtime_error {
    explicit ArityMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct MissingDescription : std::runtime_error {
    explicit MissingDescription(const std::string& what) : std::runtime_error(what) {}
};

struct CellNotInTessellation : std::runtime_error {
    explicit CellNotInTessellation(const std::string& what) : std::runtime_error(what) {}
};

struct ClusterTooLarge : std::runtime_error {
    explicit ClusterTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct DescriptiveClusterHasNoSpokes : std::runtime_error {
    explicit DescriptiveClusterHasNoSpokes(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownAxiom : std::runtime_error {
    explicit UnknownAxiom(const std::string& what) : std::runtime_error(what) {}
};

struct SchemaVersionMismatch : std::runtime_error {
    explicit SchemaVersionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace proxinerve

#endif
