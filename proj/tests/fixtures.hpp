#pragma once

// Worked-example columns: m = 240, s = 2, c = 20 -> n = 40, TS = 6,
// h = 0.02 over [0.10, 0.90].

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fixtures {

inline constexpr double d_min = 0.10;
inline constexpr double d_max = 0.90;
inline constexpr std::size_t n = 40;
inline constexpr std::size_t m = 240;

/// Column realizing `counts` exactly. Subinterval 0 holds 0.10, subinterval
/// n-1 holds 0.90, `pinned` values go to their (0-based) subinterval, and
/// the rest sit at subinterval centres.
inline std::vector<double> column_from_counts(const std::vector<std::size_t>& counts,
                                              const std::vector<std::pair<double, std::size_t>>& pinned) {
    if (counts.size() != n || std::accumulate(counts.begin(), counts.end(), std::size_t{0}) != m)
        throw std::logic_error("fixture counts must cover 40 subintervals and sum to 240");
    std::vector<std::vector<double>> bins(n);
    bins[0].push_back(d_min);
    bins[n - 1].push_back(d_max);
    for (const auto& [v, j] : pinned) bins[j].push_back(v);
    std::vector<double> col;
    for (std::size_t j = 0; j < n; ++j) {
        if (bins[j].size() > counts[j]) throw std::logic_error("too many pinned values in one subinterval");
        while (bins[j].size() < counts[j]) bins[j].push_back(d_min + (static_cast<double>(j) + 0.5) * 0.02);
        col.insert(col.end(), bins[j].begin(), bins[j].end());
    }
    return col;
}

/// Tail of 6s with the remainder in the final subinterval.
inline std::vector<std::size_t> with_tail(std::vector<std::size_t> head) {
    std::size_t used = std::accumulate(head.begin(), head.end(), std::size_t{0});
    while (head.size() + 1 < n) {
        head.push_back(6);
        used += 6;
    }
    head.push_back(m - used);
    return head;
}

/// CTS(I1) = 1, CTS(I1)+CTS(I2) = 4, CTS(I3) = 4, CTS(I4) = 5, CTS(I5) = 10.
inline std::vector<std::size_t> worked_counts() { return with_tail({1, 3, 4, 5, 10}); }

/// As above but CTS(I5) = 5 keeps the similarity chain going, so 0.18 (the
/// left edge of I5) lands in region 2; CTS(I6) = 20 stops it.
inline std::vector<std::size_t> worked_chain_counts() { return with_tail({1, 3, 4, 5, 5, 20}); }

/// Worked-example values that fit those counts: 0.131 in I2, 0.15 in I3, 0.18 in I5.
inline std::vector<double> worked_column(const std::vector<std::size_t>& counts) {
    return column_from_counts(counts, {{0.131, 1}, {0.15, 2}, {0.18, 4}});
}

} // namespace fixtures
