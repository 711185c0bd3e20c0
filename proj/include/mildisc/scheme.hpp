#pragma once

#include "mildisc/partition.hpp"

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mildisc {

enum class Algorithm { mil, modified_mil, equal_width, equal_frequency, mdlp };

std::string_view to_string(Algorithm algorithm) noexcept;
/// Accepts the tags produced by `to_string` ("mil", "modified-mil", ...).
Algorithm parse_algorithm(std::string_view tag);

/// One labeled interval [lower, upper). The last region of a scheme has
/// upper = +inf.
struct Region {
    double lower = 0.0;
    double upper = 0.0;
    int label = 1;
    std::size_t total_cts = 0;  // training values that fell inside
    std::size_t span = 1;       // initial subintervals merged into it
    std::optional<double> midpoint;

    bool operator==(const Region&) const = default;
};

struct AttributeScheme {
    std::string attr_name;
    Algorithm algorithm = Algorithm::mil;
    std::optional<MilParams> mil_params;
    std::optional<std::size_t> bins;
    double d_min = 0.0;
    double d_max = 0.0;
    /// Upper bound on the region count: n for the MIL family, the bin count
    /// for binning baselines, the number of distinct values for MDLP.
    std::size_t subintervals = 1;
    std::vector<Region> regions;

    std::vector<double> lower_bounds() const;
    std::size_t total_cts() const noexcept;

    bool operator==(const AttributeScheme&) const = default;
};

/// Label of the region holding `value`. Values below d_min and missing
/// values map to label 1; anything past the last lower bound maps to the
/// last label.
int apply_scheme(const AttributeScheme& scheme, double value) noexcept;

/// Midpoints of each region's finite extent: (lower + min(upper, d_max)) / 2.
struct RegionRepresentative {
    int region_label = 1;
    double midpoint = 0.0;
};

std::vector<RegionRepresentative> region_representatives(std::span<const Region> regions,
                                                         const InitialPartition& part);

/// Contiguity, ordering and count checks. Returns an empty string when the
/// scheme is well formed, otherwise the first violation found.
std::string check_scheme(const AttributeScheme& scheme);

/// Scheme file: every fitted attribute of one dataset plus its class attribute.
struct SchemeFile {
    std::string dataset;
    std::string class_attribute;
    std::vector<AttributeScheme> schemes;

    bool operator==(const SchemeFile&) const = default;
};

void write_scheme_file(const SchemeFile& file, std::ostream& out);
SchemeFile read_scheme_file(std::istream& in);
SchemeFile load_scheme_file(const std::string& path);

} // namespace mildisc
