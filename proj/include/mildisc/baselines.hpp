#pragma once

#include "mildisc/partition.hpp"
#include "mildisc/scheme.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace mildisc {

// Reference discretizers. Missing cells are imputed exactly as the MIL
// pipeline does (same formula, same keyed stream), so comparisons between
// algorithms differ only in how they place cut points.

AttributeScheme equal_width(std::span<const double> values, std::size_t bins, ImputeKey key = {});

/// Cuts at the midpoint between the two sorted values straddling each i/bins
/// quantile. A quantile that falls inside a run of equal values adds no cut.
AttributeScheme equal_frequency(std::span<const double> values, std::size_t bins, ImputeKey key = {});

/// Fayyad-Irani entropy discretization with the MDL stopping rule. Only
/// boundary points (adjacent distinct values whose class sets differ) are
/// considered as cuts.
AttributeScheme mdlp(std::span<const double> values, std::span<const int> class_labels, ImputeKey key = {});

/// Cut points MDLP accepts on an already complete column, ascending.
std::vector<double> mdlp_cuts(std::span<const double> values, std::span<const int> class_labels);

/// Copy of the column with missing cells imputed (range taken from the
/// non-missing cells, m = column length).
std::vector<double> impute_for_baseline(std::span<const double> values, ImputeKey key);

} // namespace mildisc
