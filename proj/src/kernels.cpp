#include "mildisc/kernels.hpp"

#include "mildisc/dataset.hpp"
#include "mildisc/error.hpp"
#include "mildisc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mildisc {

std::size_t InitialPartition::subinterval_of(double v) const noexcept {
    if (n <= 1 || h <= 0.0 || v >= boundary(n - 1)) return n - 1;
    if (v < d_min) return 0;
    auto j = static_cast<std::size_t>(std::min((v - d_min) / h, static_cast<double>(n - 1)));
    // the quotient can land one off near a boundary; settle against the
    // boundaries themselves so counting and region lookup agree exactly
    while (j > 0 && v < boundary(j)) --j;
    while (j + 1 < n && v >= boundary(j + 1)) ++j;
    return j;
}

std::size_t CtsProfile::total() const noexcept {
    std::size_t sum = 0;
    for (auto c : counts) sum += c;
    return sum;
}

void MilParams::validate() const {
    if (c < 1) fail(ErrorKind::parameter, "c must be >= 1");
    if (k < 1) fail(ErrorKind::parameter, "k must be >= 1");
}

double replacement_value(const InitialPartition& part, double g_val) noexcept {
    return part.d_min + ((part.d_max - part.d_min) / static_cast<double>(part.m)) * g_val;
}

double draw_g(const InitialPartition& part, ImputeKey key, std::size_t row) noexcept {
    const double m = static_cast<double>(part.m);
    const double u = unit_open(mix_key(key.seed, key.attribute, row));
    const double g = 1.0 + (m - 1.0) * u;
    return std::clamp(g, std::nextafter(1.0, m), std::nextafter(m, 1.0));
}

std::size_t region_index(std::span<const double> lowers, double v) noexcept {
    const auto it = std::upper_bound(lowers.begin(), lowers.end(), v);
    return it == lowers.begin() ? 0 : static_cast<std::size_t>(it - lowers.begin()) - 1;
}

namespace {

inline double cell_value(std::span<const double> values, std::size_t r, const InitialPartition& part,
                         ImputeKey key) noexcept {
    const double v = values[r];
    return is_missing(v) ? imputed_value(part, key, r) : v;
}

void check_labels(const InitialPartition& part, std::span<const int> bin_labels) {
    if (bin_labels.size() != part.n)
        fail(ErrorKind::contract, "label table has " + std::to_string(bin_labels.size()) + " entries for " +
                                      std::to_string(part.n) + " subintervals");
}

} // namespace

namespace serial {

ColumnStats column_stats(std::span<const double> values) {
    ColumnStats s;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double v : values) {
        if (is_missing(v)) {
            ++s.missing;
            continue;
        }
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    s.present = values.size() - s.missing;
    if (s.present) {
        s.d_min = lo;
        s.d_max = hi;
    }
    return s;
}

BinCounts subinterval_counts(std::span<const double> values, const InitialPartition& part, ImputeKey key) {
    BinCounts out;
    out.counts.assign(part.n, 0);
    for (std::size_t r = 0; r < values.size(); ++r) {
        const double v = cell_value(values, r, part, key);
        if (!part.covers(v)) {
            ++out.out_of_range;
            continue;
        }
        ++out.counts[part.subinterval_of(v)];
    }
    return out;
}

std::vector<int> label_by_subinterval(std::span<const double> values, const InitialPartition& part,
                                      std::span<const int> bin_labels, ImputeKey key) {
    check_labels(part, bin_labels);
    std::vector<int> out(values.size());
    for (std::size_t r = 0; r < values.size(); ++r)
        out[r] = bin_labels[part.subinterval_of(cell_value(values, r, part, key))];
    return out;
}

LabeledColumn label_by_bounds(std::span<const double> values, std::span<const double> lowers) {
    LabeledColumn out;
    out.labels.resize(values.size());
    for (std::size_t r = 0; r < values.size(); ++r) {
        if (is_missing(values[r])) {
            out.labels[r] = 1;
            ++out.missing;
        } else {
            out.labels[r] = static_cast<int>(region_index(lowers, values[r])) + 1;
        }
    }
    return out;
}

} // namespace serial

namespace kernels {

ColumnStats column_stats(std::span<const double> values) {
    const std::ptrdiff_t size = static_cast<std::ptrdiff_t>(values.size());
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    std::size_t missing = 0;
#pragma omp parallel for reduction(min : lo) reduction(max : hi) reduction(+ : missing) \
    if (values.size() >= parallel_threshold) schedule(static)
    for (std::ptrdiff_t r = 0; r < size; ++r) {
        const double v = values[static_cast<std::size_t>(r)];
        if (is_missing(v)) {
            ++missing;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    ColumnStats s;
    s.missing = missing;
    s.present = values.size() - missing;
    if (s.present) {
        s.d_min = lo;
        s.d_max = hi;
    }
    return s;
}

BinCounts subinterval_counts(std::span<const double> values, const InitialPartition& part, ImputeKey key) {
    if (values.size() < parallel_threshold) return serial::subinterval_counts(values, part, key);
    BinCounts out;
    out.counts.assign(part.n, 0);
    std::size_t out_of_range = 0;
    const std::ptrdiff_t size = static_cast<std::ptrdiff_t>(values.size());
#pragma omp parallel reduction(+ : out_of_range)
    {
        // integer histograms merge exactly, so thread count never changes the result
        std::vector<std::size_t> local(part.n, 0);
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t r = 0; r < size; ++r) {
            const double v = cell_value(values, static_cast<std::size_t>(r), part, key);
            if (part.covers(v)) ++local[part.subinterval_of(v)];
            else ++out_of_range;
        }
#pragma omp critical(mildisc_histogram_merge)
        for (std::size_t j = 0; j < part.n; ++j) out.counts[j] += local[j];
    }
    out.out_of_range = out_of_range;
    return out;
}

std::vector<int> label_by_subinterval(std::span<const double> values, const InitialPartition& part,
                                      std::span<const int> bin_labels, ImputeKey key) {
    check_labels(part, bin_labels);
    std::vector<int> out(values.size());
    const std::ptrdiff_t size = static_cast<std::ptrdiff_t>(values.size());
#pragma omp parallel for if (values.size() >= parallel_threshold) schedule(static)
    for (std::ptrdiff_t r = 0; r < size; ++r) {
        const auto i = static_cast<std::size_t>(r);
        out[i] = bin_labels[part.subinterval_of(cell_value(values, i, part, key))];
    }
    return out;
}

LabeledColumn label_by_bounds(std::span<const double> values, std::span<const double> lowers) {
    LabeledColumn out;
    out.labels.resize(values.size());
    std::size_t missing = 0;
    const std::ptrdiff_t size = static_cast<std::ptrdiff_t>(values.size());
#pragma omp parallel for reduction(+ : missing) if (values.size() >= parallel_threshold) schedule(static)
    for (std::ptrdiff_t r = 0; r < size; ++r) {
        const auto i = static_cast<std::size_t>(r);
        if (is_missing(values[i])) {
            out.labels[i] = 1;
            ++missing;
        } else {
            out.labels[i] = static_cast<int>(region_index(lowers, values[i])) + 1;
        }
    }
    out.missing = missing;
    return out;
}

} // namespace kernels

} // namespace mildisc
