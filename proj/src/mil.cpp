#include "mildisc/mil.hpp"

#include "mildisc/dataset.hpp"
#include "mildisc/error.hpp"
#include "mildisc/kernels.hpp"
#include "mildisc/modified_mil.hpp"

#include <algorithm>
#include <limits>

namespace mildisc {

namespace {

InitialPartition partition_from_stats(const ColumnStats& stats, std::size_t m, std::size_t class_count,
                                      const MilParams& params) {
    params.validate();
    if (class_count == 0) fail(ErrorKind::parameter, "class count must be >= 1");
    if (stats.present == 0) fail(ErrorKind::all_missing, "column has no non-missing values");
    InitialPartition part;
    part.d_min = stats.d_min;
    part.d_max = stats.d_max;
    part.m = m;
    const std::size_t wanted = static_cast<std::size_t>(params.c) * class_count;
    const std::size_t cap = std::max<std::size_t>(1, m - 1);  // keep n < m
    part.n = std::clamp<std::size_t>(wanted, 1, cap);
    part.h = (part.d_max - part.d_min) / static_cast<double>(part.n);
    part.ts_base = static_cast<double>(m) / static_cast<double>(part.n);
    return part;
}

void check_profile(const CtsProfile& cts, const InitialPartition& part) {
    if (cts.counts.size() != part.n)
        fail(ErrorKind::contract, "profile has " + std::to_string(cts.counts.size()) + " counts for " +
                                      std::to_string(part.n) + " subintervals");
}

} // namespace

InitialPartition init_partition(ColumnScan& column, std::size_t class_count, const MilParams& params) {
    const auto values = column.scan();
    return partition_from_stats(kernels::column_stats(values), values.size(), class_count, params);
}

InitialPartition init_partition(std::span<const double> values, std::size_t class_count, const MilParams& params) {
    ColumnScan column(values);
    return init_partition(column, class_count, params);
}

std::vector<double> impute_missing(std::span<const double> values, const InitialPartition& part,
                                   std::uint64_t seed, std::size_t attribute) {
    std::vector<double> out(values.begin(), values.end());
    const ImputeKey key{seed, attribute};
    for (std::size_t r = 0; r < out.size(); ++r) {
        if (is_missing(out[r])) out[r] = imputed_value(part, key, r);
    }
    return out;
}

CtsProfile compute_cts(std::span<const double> values, const InitialPartition& part) {
    for (double v : values) {
        if (is_missing(v)) fail(ErrorKind::contract, "compute_cts needs an imputed column");
    }
    auto bins = kernels::subinterval_counts(values, part, ImputeKey{});
    if (bins.out_of_range)
        fail(ErrorKind::domain, std::to_string(bins.out_of_range) + " value(s) outside [d_min, d_max]");
    return CtsProfile{std::move(bins.counts)};
}

std::vector<Region> regions_from_segments(std::span<const Segment> segments, const InitialPartition& part) {
    std::vector<Region> regions;
    regions.reserve(segments.size());
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const auto& seg = segments[i];
        Region r;
        r.lower = part.boundary(seg.first);
        r.upper = i + 1 == segments.size() ? std::numeric_limits<double>::infinity() : part.boundary(seg.last + 1);
        r.label = static_cast<int>(i) + 1;
        r.total_cts = seg.total;
        r.span = seg.last - seg.first + 1;
        regions.push_back(r);
    }
    return regions;
}

namespace detail {

std::vector<Segment> mil_segments(const CtsProfile& cts, const InitialPartition& part, const MilParams& params) {
    check_profile(cts, part);
    const auto& counts = cts.counts;
    if (part.h <= 0.0) return {Segment{0, part.n - 1, cts.total()}};

    std::vector<Segment> segments;
    Segment cur{0, 0, counts[0]};
    std::size_t ts_multiple = 1;
    while (cur.last + 1 < part.n) {
        if (part.below_threshold(cur.total, ts_multiple, params.k)) {
            ++cur.last;
            cur.total += counts[cur.last];
            ++ts_multiple;
        } else {
            segments.push_back(cur);
            const std::size_t next = cur.last + 1;
            cur = Segment{next, next, counts[next]};
            ts_multiple = 1;
        }
    }
    segments.push_back(cur);  // trailing region takes the final label either way
    return segments;
}

std::vector<Segment> modified_segments(const CtsProfile& cts, const InitialPartition& part, const MilParams& params,
                                       std::vector<MergeStep>* trace) {
    check_profile(cts, part);
    const auto& counts = cts.counts;
    if (part.h <= 0.0) return {Segment{0, part.n - 1, cts.total()}};

    std::vector<Segment> segments;
    ModifiedMergeState state{0, counts[0], 1, false};
    std::size_t i = 0;  // last subinterval of the current region
    auto log = [&](MergeStepKind kind, std::size_t at) {
        if (trace) trace->push_back({kind, at});
    };
    while (i + 1 < part.n) {
        if (part.below_threshold(state.tot_cts, state.ts_multiple, params.k)) {
            ++i;
            state.tot_cts += counts[i];
            ++state.ts_multiple;
            state.last_small_merge = true;
            log(MergeStepKind::small, i);
        } else if (!state.last_small_merge && within_similarity_band(counts[i], counts[i + 1])) {
            ++i;
            state.tot_cts += counts[i];
            log(MergeStepKind::similar, i);
        } else {
            segments.push_back({state.current_region_start, i, state.tot_cts});
            log(MergeStepKind::finalize, i);
            ++i;
            state = ModifiedMergeState{i, counts[i], 1, false};
        }
    }
    segments.push_back({state.current_region_start, i, state.tot_cts});
    log(MergeStepKind::finalize, i);
    return segments;
}

std::vector<int> bin_labels(std::span<const Segment> segments, std::size_t n) {
    std::vector<int> labels(n, 1);
    for (std::size_t s = 0; s < segments.size(); ++s) {
        for (std::size_t j = segments[s].first; j <= segments[s].last; ++j) labels[j] = static_cast<int>(s) + 1;
    }
    return labels;
}

} // namespace detail

std::vector<Region> merge_mil(const CtsProfile& cts, const InitialPartition& part, const MilParams& params) {
    const auto segments = detail::mil_segments(cts, part, params);
    return regions_from_segments(segments, part);
}

std::vector<Region> merge_modified(const CtsProfile& cts, const InitialPartition& part, const MilParams& params,
                                   std::vector<MergeStep>* trace) {
    const auto segments = detail::modified_segments(cts, part, params, trace);
    auto regions = regions_from_segments(segments, part);
    const auto reps = region_representatives(regions, part);
    for (std::size_t i = 0; i < regions.size(); ++i) regions[i].midpoint = reps[i].midpoint;
    return regions;
}

AttributeResult discretize_attribute(ColumnScan& column, std::size_t class_count, const MilParams& params,
                                     MergeRule rule, std::string attr_name, std::size_t attribute) {
    AttributeResult out;
    const std::size_t before = column.passes();

    out.partition = init_partition(column, class_count, params);
    const InitialPartition& part = out.partition;
    const ImputeKey key{params.seed, attribute};

    auto bins = kernels::subinterval_counts(column.scan(), part, key);
    if (bins.out_of_range)
        fail(ErrorKind::contract, "imputed training column left values outside [d_min, d_max]");
    out.cts.counts = std::move(bins.counts);

    const auto segments = rule == MergeRule::mil ? detail::mil_segments(out.cts, part, params)
                                                 : detail::modified_segments(out.cts, part, params, nullptr);
    ++out.scans.profile;

    const auto table = detail::bin_labels(segments, part.n);
    out.labels = kernels::label_by_subinterval(column.scan(), part, table, key);
    out.scans.column = column.passes() - before;

    auto& scheme = out.scheme;
    scheme.attr_name = std::move(attr_name);
    scheme.algorithm = rule == MergeRule::mil ? Algorithm::mil : Algorithm::modified_mil;
    scheme.mil_params = params;
    scheme.d_min = part.d_min;
    scheme.d_max = part.d_max;
    scheme.subintervals = part.n;
    scheme.regions = regions_from_segments(segments, part);
    if (rule == MergeRule::modified_mil) {
        const auto reps = region_representatives(scheme.regions, part);
        for (std::size_t i = 0; i < reps.size(); ++i) scheme.regions[i].midpoint = reps[i].midpoint;
    }
    return out;
}

AttributeResult discretize_attribute(std::span<const double> values, std::size_t class_count,
                                     const MilParams& params, std::string attr_name, std::size_t attribute) {
    ColumnScan column(values);
    return discretize_attribute(column, class_count, params, MergeRule::mil, std::move(attr_name), attribute);
}

AttributeResult discretize_attribute_modified(std::span<const double> values, std::size_t class_count,
                                              const MilParams& params, std::string attr_name,
                                              std::size_t attribute) {
    ColumnScan column(values);
    return discretize_attribute(column, class_count, params, MergeRule::modified_mil, std::move(attr_name),
                                attribute);
}

} // namespace mildisc
