#pragma once

// Minimum Information Loss discretization of a single continuous column.
//
// The pipeline makes four scans of the attribute's data:
//   1. min/max over the column             -> InitialPartition
//   2. imputation + subinterval histogram   -> CtsProfile
//   3. greedy merge over the n counts       -> regions
//   4. label every cell                     -> discretized column
// Scans 1, 2 and 4 read the column; scan 3 reads only the O(n) profile.

#include "mildisc/partition.hpp"
#include "mildisc/scheme.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace mildisc {

/// Builds the uniform grid with n = c * s clamped to [1, max(1, m - 1)].
InitialPartition init_partition(std::span<const double> values, std::size_t class_count, const MilParams& params);
InitialPartition init_partition(ColumnScan& column, std::size_t class_count, const MilParams& params);

/// Replaces every missing cell by replace_val with g_val keyed on (seed, attribute, row).
std::vector<double> impute_missing(std::span<const double> values, const InitialPartition& part,
                                   std::uint64_t seed, std::size_t attribute = 0);

/// Histogram over the partition. Throws ErrorKind::domain for values outside
/// [d_min, d_max] and ErrorKind::contract for missing cells.
CtsProfile compute_cts(std::span<const double> values, const InitialPartition& part);

/// Greedy left-to-right merge: a region keeps absorbing the next subinterval
/// while Tot_CTS < ceil(span * (m/n) / k).
std::vector<Region> merge_mil(const CtsProfile& cts, const InitialPartition& part, const MilParams& params);

/// Consecutive subintervals [first, last] (0-based) forming one region.
struct Segment {
    std::size_t first = 0;
    std::size_t last = 0;
    std::size_t total = 0;
};

/// Region bounds from segments; the last region is open-ended.
std::vector<Region> regions_from_segments(std::span<const Segment> segments, const InitialPartition& part);

/// Scan bookkeeping for the composed pipeline.
struct ScanLog {
    std::size_t column = 0;
    std::size_t profile = 0;
    std::size_t total() const noexcept { return column + profile; }
};

struct AttributeResult {
    AttributeScheme scheme;
    std::vector<int> labels;
    InitialPartition partition;
    CtsProfile cts;
    ScanLog scans;
};

enum class MergeRule { mil, modified_mil };

/// Full single-attribute pipeline. `attribute` keys the imputation stream.
AttributeResult discretize_attribute(ColumnScan& column, std::size_t class_count, const MilParams& params,
                                     MergeRule rule = MergeRule::mil, std::string attr_name = {},
                                     std::size_t attribute = 0);
AttributeResult discretize_attribute(std::span<const double> values, std::size_t class_count,
                                     const MilParams& params, std::string attr_name = {},
                                     std::size_t attribute = 0);

} // namespace mildisc
