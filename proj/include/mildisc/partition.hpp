#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mildisc {

/// Tuning constants of the MIL family. `c` scales the initial subinterval
/// count (n = c * s); `k` is the divisor in the small-region test
/// Tot_CTS < ceil(TS / k). `seed` keys missing-value imputation.
struct MilParams {
    std::uint32_t c = 20;
    std::uint32_t k = 3;
    std::uint64_t seed = 0;

    void validate() const;
    bool operator==(const MilParams&) const = default;
};

/// Uniform grid over [d_min, d_max]. Subinterval j (0-based) covers
/// [d_min + j*h, d_min + (j+1)*h); d_max itself belongs to subinterval n-1.
struct InitialPartition {
    double d_min = 0.0;
    double d_max = 0.0;
    std::size_t n = 1;
    double h = 0.0;
    double ts_base = 0.0;  // m / n, informational; merge tests use exact integers
    std::size_t m = 0;

    /// Left edge of subinterval j; boundary(n) is d_max.
    double boundary(std::size_t j) const noexcept {
        return j >= n ? d_max : d_min + static_cast<double>(j) * h;
    }

    /// 0-based subinterval holding v. Values below d_min clamp to 0 and
    /// values above d_max clamp to n-1; callers that must reject them check
    /// `covers` first.
    std::size_t subinterval_of(double v) const noexcept;

    bool covers(double v) const noexcept { return v >= d_min && v <= d_max; }

    /// Exact form of Tot_CTS < ceil(ts_multiple * (m/n) / k).
    bool below_threshold(std::size_t tot_cts, std::size_t ts_multiple, std::uint32_t k) const noexcept {
        const std::uint64_t denom = static_cast<std::uint64_t>(n) * k;
        const std::uint64_t ceil_ts = (static_cast<std::uint64_t>(ts_multiple) * m + denom - 1) / denom;
        return tot_cts < ceil_ts;
    }
};

/// Per-subinterval frequencies (CTS). Sum equals m for a training column.
struct CtsProfile {
    std::vector<std::size_t> counts;

    std::size_t total() const noexcept;
    bool operator==(const CtsProfile&) const = default;
};

/// Identifies the random stream used to impute one attribute's missing cells.
struct ImputeKey {
    std::uint64_t seed = 0;
    std::size_t attribute = 0;
};

/// replace_val = d_min + ((d_max - d_min) / m) * g_val.
double replacement_value(const InitialPartition& part, double g_val) noexcept;

/// g_val drawn uniformly from the open interval (1, m), keyed by (seed, attribute, row).
double draw_g(const InitialPartition& part, ImputeKey key, std::size_t row) noexcept;

inline double imputed_value(const InitialPartition& part, ImputeKey key, std::size_t row) noexcept {
    return replacement_value(part, draw_g(part, key, row));
}

/// Wraps a column and counts how often it is scanned end to end.
class ColumnScan {
public:
    explicit ColumnScan(std::span<const double> values) noexcept : values_(values) {}

    std::span<const double> scan() noexcept {
        ++passes_;
        return values_;
    }
    std::size_t size() const noexcept { return values_.size(); }
    std::size_t passes() const noexcept { return passes_; }

private:
    std::span<const double> values_;
    std::size_t passes_ = 0;
};

} // namespace mildisc
