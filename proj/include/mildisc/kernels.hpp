#pragma once

// Column kernels behind the discretizers. `kernels::` holds the OpenMP
// versions used by the library; `serial::` holds plain-loop references with
// identical results, kept for tests and the benchmark.

#include "mildisc/partition.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace mildisc {

struct ColumnStats {
    double d_min = 0.0;
    double d_max = 0.0;
    std::size_t missing = 0;
    std::size_t present = 0;
};

/// Counts plus the number of cells that fell outside [d_min, d_max].
struct BinCounts {
    std::vector<std::size_t> counts;
    std::size_t out_of_range = 0;
};

/// Result of labeling a column against sorted region lower bounds.
struct LabeledColumn {
    std::vector<int> labels;
    std::size_t missing = 0;
};

namespace serial {

ColumnStats column_stats(std::span<const double> values);

/// Subinterval histogram. Missing cells are replaced on the fly by
/// `imputed_value(part, key, row)`.
BinCounts subinterval_counts(std::span<const double> values, const InitialPartition& part, ImputeKey key);

/// Maps each cell to bin_labels[subinterval_of(value)], imputing missing
/// cells the same way as `subinterval_counts`.
std::vector<int> label_by_subinterval(std::span<const double> values, const InitialPartition& part,
                                      std::span<const int> bin_labels, ImputeKey key);

/// Generic region lookup: label i+1 for lowers[i] <= v < lowers[i+1], label 1
/// below lowers[0] and for missing cells.
LabeledColumn label_by_bounds(std::span<const double> values, std::span<const double> lowers);

} // namespace serial

namespace kernels {

/// Columns shorter than this are processed without spawning threads.
inline constexpr std::size_t parallel_threshold = std::size_t{1} << 14;

ColumnStats column_stats(std::span<const double> values);
BinCounts subinterval_counts(std::span<const double> values, const InitialPartition& part, ImputeKey key);
std::vector<int> label_by_subinterval(std::span<const double> values, const InitialPartition& part,
                                      std::span<const int> bin_labels, ImputeKey key);
LabeledColumn label_by_bounds(std::span<const double> values, std::span<const double> lowers);

} // namespace kernels

/// Index of the region containing v given sorted lower bounds (0-based).
std::size_t region_index(std::span<const double> lowers, double v) noexcept;

} // namespace mildisc
