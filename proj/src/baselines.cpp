#include "mildisc/baselines.hpp"

#include "mildisc/dataset.hpp"
#include "mildisc/error.hpp"
#include "mildisc/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace mildisc {

std::vector<double> impute_for_baseline(std::span<const double> values, ImputeKey key) {
    const auto stats = kernels::column_stats(values);
    if (stats.present == 0) fail(ErrorKind::all_missing, "column has no non-missing values");
    std::vector<double> out(values.begin(), values.end());
    if (stats.missing == 0) return out;
    InitialPartition part;
    part.d_min = stats.d_min;
    part.d_max = stats.d_max;
    part.m = values.size();
    for (std::size_t r = 0; r < out.size(); ++r) {
        if (is_missing(out[r])) out[r] = imputed_value(part, key, r);
    }
    return out;
}

namespace {

AttributeScheme scheme_from_cuts(Algorithm algorithm, std::span<const double> complete, std::span<const double> cuts,
                                 std::size_t max_regions) {
    const auto stats = kernels::column_stats(complete);
    AttributeScheme s;
    s.algorithm = algorithm;
    s.d_min = stats.d_min;
    s.d_max = stats.d_max;
    s.subintervals = max_regions;
    std::vector<double> lowers{stats.d_min};
    for (double c : cuts) {
        if (c > lowers.back()) lowers.push_back(c);
    }
    for (std::size_t i = 0; i < lowers.size(); ++i) {
        Region r;
        r.lower = lowers[i];
        r.upper = i + 1 < lowers.size() ? lowers[i + 1] : std::numeric_limits<double>::infinity();
        r.label = static_cast<int>(i) + 1;
        s.regions.push_back(r);
    }
    for (int label : kernels::label_by_bounds(complete, lowers).labels) ++s.regions[label - 1].total_cts;
    return s;
}

void check_bins(std::size_t bins) {
    if (bins == 0) fail(ErrorKind::parameter, "bins must be >= 1");
}

double entropy(std::span<const std::size_t> counts, std::size_t total) {
    if (total == 0) return 0.0;
    double h = 0.0;
    for (auto c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    return h;
}

std::size_t distinct_classes(std::span<const std::size_t> counts) {
    return static_cast<std::size_t>(std::count_if(counts.begin(), counts.end(), [](auto c) { return c > 0; }));
}

struct Labeled {
    double value;
    std::size_t cls;  // dense 0-based
};

class MdlpSplitter {
public:
    MdlpSplitter(std::vector<Labeled> data, std::size_t classes) : data_(std::move(data)), classes_(classes) {
        // block purity: class of a run of equal values, or npos when mixed
        block_class_.resize(data_.size());
        std::size_t start = 0;
        while (start < data_.size()) {
            std::size_t end = start;
            std::size_t cls = data_[start].cls;
            while (end < data_.size() && data_[end].value == data_[start].value) {
                if (data_[end].cls != cls) cls = npos;
                ++end;
            }
            for (std::size_t i = start; i < end; ++i) block_class_[i] = cls;
            start = end;
        }
    }

    std::vector<double> run() {
        split(0, data_.size());
        std::sort(cuts_.begin(), cuts_.end());
        return cuts_;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    void split(std::size_t lo, std::size_t hi) {
        const std::size_t total = hi - lo;
        if (total < 2) return;
        std::vector<std::size_t> all(classes_, 0);
        for (std::size_t i = lo; i < hi; ++i) ++all[data_[i].cls];
        const double ent = entropy(all, total);
        if (ent == 0.0) return;

        std::vector<std::size_t> left(classes_, 0), right(classes_);
        double best_e = std::numeric_limits<double>::infinity();
        std::size_t best = npos;
        for (std::size_t i = lo; i + 1 < hi; ++i) {
            ++left[data_[i].cls];
            if (!(data_[i].value < data_[i + 1].value)) continue;
            if (block_class_[i] != npos && block_class_[i] == block_class_[i + 1]) continue;
            const std::size_t nl = i + 1 - lo;
            for (std::size_t c = 0; c < classes_; ++c) right[c] = all[c] - left[c];
            const double e = (static_cast<double>(nl) * entropy(left, nl) +
                              static_cast<double>(total - nl) * entropy(right, total - nl)) /
                             static_cast<double>(total);
            if (e < best_e) {
                best_e = e;
                best = i;
            }
        }
        if (best == npos) return;

        std::fill(left.begin(), left.end(), 0);
        for (std::size_t i = lo; i <= best; ++i) ++left[data_[i].cls];
        for (std::size_t c = 0; c < classes_; ++c) right[c] = all[c] - left[c];
        const std::size_t nl = best + 1 - lo;
        const double ent1 = entropy(left, nl);
        const double ent2 = entropy(right, total - nl);
        const auto k = static_cast<double>(distinct_classes(all));
        const auto k1 = static_cast<double>(distinct_classes(left));
        const auto k2 = static_cast<double>(distinct_classes(right));
        const double gain = ent - best_e;
        const double delta = std::log2(std::pow(3.0, k) - 2.0) - (k * ent - k1 * ent1 - k2 * ent2);
        const double n = static_cast<double>(total);
        if (!(gain > (std::log2(n - 1.0) + delta) / n)) return;

        cuts_.push_back((data_[best].value + data_[best + 1].value) / 2.0);
        split(lo, best + 1);
        split(best + 1, hi);
    }

    std::vector<Labeled> data_;
    std::size_t classes_;
    std::vector<std::size_t> block_class_;
    std::vector<double> cuts_;
};

} // namespace

AttributeScheme equal_width(std::span<const double> values, std::size_t bins, ImputeKey key) {
    check_bins(bins);
    const auto complete = impute_for_baseline(values, key);
    const auto stats = kernels::column_stats(complete);
    const double width = (stats.d_max - stats.d_min) / static_cast<double>(bins);
    std::vector<double> cuts;
    if (width > 0.0) {
        for (std::size_t i = 1; i < bins; ++i) cuts.push_back(stats.d_min + static_cast<double>(i) * width);
    }
    auto s = scheme_from_cuts(Algorithm::equal_width, complete, cuts, bins);
    s.bins = bins;
    return s;
}

AttributeScheme equal_frequency(std::span<const double> values, std::size_t bins, ImputeKey key) {
    check_bins(bins);
    auto sorted = impute_for_baseline(values, key);
    const std::vector<double> complete = sorted;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size();
    std::vector<double> cuts;
    for (std::size_t i = 1; i < bins; ++i) {
        const std::size_t p = i * m / bins;
        if (p == 0 || p >= m) continue;
        const double below = sorted[p - 1];
        const double above = sorted[p];
        if (!(below < above)) continue;
        double cut = below + (above - below) / 2.0;
        if (!(below < cut)) cut = above;
        if (cuts.empty() || cut > cuts.back()) cuts.push_back(cut);
    }
    auto s = scheme_from_cuts(Algorithm::equal_frequency, complete, cuts, bins);
    s.bins = bins;
    return s;
}

std::vector<double> mdlp_cuts(std::span<const double> values, std::span<const int> class_labels) {
    if (values.size() != class_labels.size())
        fail(ErrorKind::parameter, "values and class labels differ in length (" + std::to_string(values.size()) +
                                       " vs " + std::to_string(class_labels.size()) + ")");
    std::map<int, std::size_t> dense;
    for (int c : class_labels) dense.emplace(c, 0);
    std::size_t next = 0;
    for (auto& [code, idx] : dense) idx = next++;
    std::vector<Labeled> data(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (is_missing(values[i])) fail(ErrorKind::contract, "mdlp needs an imputed column");
        data[i] = {values[i], dense.at(class_labels[i])};
    }
    std::stable_sort(data.begin(), data.end(), [](const Labeled& a, const Labeled& b) { return a.value < b.value; });
    return MdlpSplitter(std::move(data), dense.size()).run();
}

AttributeScheme mdlp(std::span<const double> values, std::span<const int> class_labels, ImputeKey key) {
    if (values.size() != class_labels.size())
        fail(ErrorKind::parameter, "values and class labels differ in length");
    const auto complete = impute_for_baseline(values, key);
    const auto cuts = mdlp_cuts(complete, class_labels);
    auto sorted = complete;
    std::sort(sorted.begin(), sorted.end());
    const auto distinct = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    return scheme_from_cuts(Algorithm::mdlp, complete, cuts, distinct);
}

} // namespace mildisc
