#include "mildisc/tree.hpp"

#include "mildisc/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace mildisc {

namespace {

// Missing nominal cells become code 0, a value of their own.
int code_of_cell(double v) { return is_missing(v) ? 0 : static_cast<int>(v); }

double entropy_of(const std::map<int, std::size_t>& counts, std::size_t total) {
    double h = 0.0;
    for (const auto& [cls, n] : counts) {
        if (n == 0) continue;
        const double p = static_cast<double>(n) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    return h;
}

int majority_class(const std::map<int, std::size_t>& counts) {
    int best = 0;
    std::size_t best_n = 0;
    for (const auto& [cls, n] : counts) {  // ascending code, so ties keep the smaller one
        if (n > best_n) {
            best = cls;
            best_n = n;
        }
    }
    return best;
}

class Builder {
public:
    explicit Builder(const Dataset& data) : data_(data), classes_(data.class_codes()) {
        for (std::size_t a = 0; a < data.attribute_count(); ++a) {
            if (a == data.class_index()) continue;
            if (data.attribute(a).is_continuous())
                fail(ErrorKind::contract, "attribute '" + data.attribute(a).name +
                                              "' is continuous; discretize before training the tree");
            candidates_.push_back(a);
        }
    }

    std::vector<TreeModel::Node> build() {
        std::vector<std::size_t> rows(data_.rows());
        std::iota(rows.begin(), rows.end(), std::size_t{0});
        std::vector<char> used(data_.attribute_count(), 0);
        grow(rows, used);
        return std::move(nodes_);
    }

private:
    struct Candidate {
        std::size_t attribute;
        double gain;
        double ratio;
    };

    std::size_t grow(const std::vector<std::size_t>& rows, std::vector<char>& used) {
        const std::size_t index = nodes_.size();
        nodes_.emplace_back();
        std::map<int, std::size_t> class_counts;
        for (auto r : rows) ++class_counts[classes_[r]];
        nodes_[index].majority = majority_class(class_counts);
        if (class_counts.size() <= 1 || rows.size() < 2) return index;

        const double base = entropy_of(class_counts, rows.size());
        std::vector<Candidate> cands;
        for (std::size_t a : candidates_) {
            if (used[a]) continue;
            std::map<int, std::map<int, std::size_t>> by_value;
            for (auto r : rows) ++by_value[code_of_cell(data_.cell(r, a))][classes_[r]];
            if (by_value.size() < 2) continue;
            double remainder = 0.0, split_info = 0.0;
            for (const auto& [value, counts] : by_value) {
                std::size_t n = 0;
                for (const auto& [c, k] : counts) n += k;
                const double p = static_cast<double>(n) / static_cast<double>(rows.size());
                remainder += p * entropy_of(counts, n);
                split_info -= p * std::log2(p);
            }
            const double gain = std::max(0.0, base - remainder);
            cands.push_back({a, gain, split_info > 0.0 ? gain / split_info : 0.0});
        }
        if (cands.empty()) return index;

        double mean_gain = 0.0;
        for (const auto& c : cands) mean_gain += c.gain;
        mean_gain /= static_cast<double>(cands.size());
        constexpr double tol = 1e-12;
        const Candidate* best = nullptr;
        for (const auto& c : cands) {
            if (c.gain + tol < mean_gain) continue;
            if (!best || c.ratio > best->ratio + tol) best = &c;
        }
        const std::size_t attr = best->attribute;

        std::map<int, std::vector<std::size_t>> partitions;
        for (auto r : rows) partitions[code_of_cell(data_.cell(r, attr))].push_back(r);
        nodes_[index].attribute = static_cast<int>(attr);
        used[attr] = 1;
        for (const auto& [value, subset] : partitions) {
            const std::size_t child = grow(subset, used);
            nodes_[index].children.emplace_back(value, child);
        }
        used[attr] = 0;
        return index;
    }

    const Dataset& data_;
    std::vector<int> classes_;
    std::vector<std::size_t> candidates_;
    std::vector<TreeModel::Node> nodes_;
};

} // namespace

TreeModel::TreeModel(std::vector<Node> nodes, std::size_t arity) : nodes_(std::move(nodes)), arity_(arity) {
    if (nodes_.empty()) fail(ErrorKind::contract, "tree needs at least a root");
}

int TreeModel::predict(std::span<const double> row) const {
    if (row.size() != arity_)
        fail(ErrorKind::contract, "row has " + std::to_string(row.size()) + " cells, model expects " +
                                      std::to_string(arity_));
    std::size_t at = 0;
    while (nodes_[at].attribute >= 0) {
        const auto& node = nodes_[at];
        const int value = code_of_cell(row[static_cast<std::size_t>(node.attribute)]);
        const auto it = std::lower_bound(node.children.begin(), node.children.end(), value,
                                         [](const auto& child, int v) { return child.first < v; });
        if (it == node.children.end() || it->first != value) return node.majority;
        at = it->second;
    }
    return nodes_[at].majority;
}

std::size_t TreeModel::depth() const {
    std::vector<std::size_t> level(nodes_.size(), 0);
    std::size_t deepest = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {  // children always follow their parent
        deepest = std::max(deepest, level[i]);
        for (const auto& [v, child] : nodes_[i].children) level[child] = level[i] + 1;
    }
    return deepest;
}

std::size_t TreeModel::leaf_count() const {
    return static_cast<std::size_t>(
        std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.attribute < 0; }));
}

TreeModel train_tree(const Dataset& train) {
    Builder builder(train);
    return TreeModel(builder.build(), train.attribute_count());
}

int predict(const TreeModel& model, std::span<const double> row) { return model.predict(row); }

double accuracy(const TreeModel& model, const Dataset& test) {
    if (test.rows() == 0) fail(ErrorKind::parameter, "empty test set");
    const auto truth = test.class_codes();
    std::size_t correct = 0;
    for (std::size_t r = 0; r < test.rows(); ++r) {
        if (model.predict(test.row(r)) == truth[r]) ++correct;
    }
    return 100.0 * static_cast<double>(correct) / static_cast<double>(test.rows());
}

} // namespace mildisc
