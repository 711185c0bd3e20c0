#pragma once

// Modified MIL: the MIL small-region rule plus a similarity rule that also
// merges neighbours whose raw counts lie within a [0.75, 1.25] band.

#include "mildisc/mil.hpp"

#include <vector>

namespace mildisc {

enum class MergeStepKind { small, similar, finalize };

struct MergeStep {
    MergeStepKind kind;
    std::size_t subinterval;  // 0-based subinterval absorbed, or the last one of the finalized region
};

struct ModifiedMergeState {
    std::size_t current_region_start = 0;
    std::size_t tot_cts = 0;
    std::size_t ts_multiple = 1;  // ts = ts_multiple * m / n
    bool last_small_merge = false;
};

/// 0.75 * next <= current <= 1.25 * next, evaluated on integers.
constexpr bool within_similarity_band(std::size_t current, std::size_t next) noexcept {
    return 3 * next <= 4 * current && 4 * current <= 5 * next;
}

/// Small merges grow TS by m/n and set last_small_merge; similarity merges
/// leave TS alone and are blocked while last_small_merge is set. Regions
/// carry their midpoints. `trace`, when given, receives every decision.
std::vector<Region> merge_modified(const CtsProfile& cts, const InitialPartition& part, const MilParams& params,
                                   std::vector<MergeStep>* trace = nullptr);

AttributeResult discretize_attribute_modified(std::span<const double> values, std::size_t class_count,
                                              const MilParams& params, std::string attr_name = {},
                                              std::size_t attribute = 0);

} // namespace mildisc
