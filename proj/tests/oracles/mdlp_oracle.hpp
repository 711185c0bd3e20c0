#pragma once

// Entropy/MDL recursion over grouped distinct values, coded apart from the
// library's sorted-row scan.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <vector>

namespace oracle {

struct Group {
    double value;
    std::vector<std::size_t> counts;  // per class index
};

inline double ent(const std::vector<std::size_t>& counts, std::size_t total) {
    double e = 0.0;
    for (std::size_t c : counts) {
        if (!c) continue;
        const double p = static_cast<double>(c) / static_cast<double>(total);
        e -= p * std::log2(p);
    }
    return e;
}

inline std::size_t kinds(const std::vector<std::size_t>& counts) {
    std::size_t k = 0;
    for (std::size_t c : counts) k += c ? 1 : 0;
    return k;
}

inline int pure_class(const Group& g) {
    int found = -1;
    for (std::size_t c = 0; c < g.counts.size(); ++c) {
        if (!g.counts[c]) continue;
        if (found >= 0) return -2;
        found = static_cast<int>(c);
    }
    return found;
}

inline void mdlp_rec(const std::vector<Group>& g, std::size_t lo, std::size_t hi, std::size_t classes,
                     std::vector<double>& cuts) {
    std::vector<std::size_t> all(classes, 0);
    std::size_t n = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        for (std::size_t c = 0; c < classes; ++c) all[c] += g[i].counts[c];
    }
    for (auto x : all) n += x;
    if (n < 2 || ent(all, n) == 0.0) return;

    double best = INFINITY;
    std::size_t at = 0;
    for (std::size_t cut = lo + 1; cut < hi; ++cut) {  // between groups cut-1 and cut
        const int a = pure_class(g[cut - 1]), b = pure_class(g[cut]);
        if (a >= 0 && a == b) continue;  // not a boundary point
        std::vector<std::size_t> left(classes, 0), right(classes, 0);
        std::size_t nl = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            auto& side = i < cut ? left : right;
            for (std::size_t c = 0; c < classes; ++c) side[c] += g[i].counts[c];
        }
        for (auto x : left) nl += x;
        const double e = (static_cast<double>(nl) * ent(left, nl) +
                          static_cast<double>(n - nl) * ent(right, n - nl)) /
                         static_cast<double>(n);
        if (e < best) {
            best = e;
            at = cut;
        }
    }
    if (at == 0) return;

    std::vector<std::size_t> left(classes, 0), right(classes, 0);
    std::size_t nl = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        auto& side = i < at ? left : right;
        for (std::size_t c = 0; c < classes; ++c) side[c] += g[i].counts[c];
    }
    for (auto x : left) nl += x;
    const double e0 = ent(all, n), e1 = ent(left, nl), e2 = ent(right, n - nl);
    const double k = static_cast<double>(kinds(all)), k1 = static_cast<double>(kinds(left)),
                 k2 = static_cast<double>(kinds(right));
    const double delta = std::log2(std::pow(3.0, k) - 2.0) - (k * e0 - k1 * e1 - k2 * e2);
    const double N = static_cast<double>(n);
    if (!(e0 - best > (std::log2(N - 1.0) + delta) / N)) return;
    cuts.push_back((g[at - 1].value + g[at].value) / 2.0);
    mdlp_rec(g, lo, at, classes, cuts);
    mdlp_rec(g, at, hi, classes, cuts);
}

/// labels are 1-based class codes.
inline std::vector<double> mdlp(const std::vector<double>& values, const std::vector<int>& labels) {
    std::size_t classes = 0;
    for (int l : labels) classes = std::max(classes, static_cast<std::size_t>(l));
    std::map<double, std::vector<std::size_t>> by_value;
    for (std::size_t i = 0; i < values.size(); ++i) {
        auto& v = by_value[values[i]];
        v.resize(classes, 0);
        ++v[static_cast<std::size_t>(labels[i] - 1)];
    }
    std::vector<Group> groups;
    for (auto& [v, counts] : by_value) groups.push_back({v, counts});
    std::vector<double> cuts;
    mdlp_rec(groups, 0, groups.size(), classes, cuts);
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

} // namespace oracle
