#pragma once

#include "mildisc/dataset.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace mildisc {

/// Multiway decision tree over nominal attributes. Nodes live in a flat
/// arena; node 0 is the root.
class TreeModel {
public:
    struct Node {
        int attribute = -1;  // -1 for a leaf
        int majority = 1;    // leaf class, and fallback for unseen branch values
        std::vector<std::pair<int, std::size_t>> children;  // (value code, node index), sorted by code
    };

    TreeModel(std::vector<Node> nodes, std::size_t arity);

    int predict(std::span<const double> row) const;

    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    std::size_t depth() const;
    std::size_t leaf_count() const;
    std::size_t arity() const noexcept { return arity_; }

private:
    std::vector<Node> nodes_;
    std::size_t arity_;
};

/// Greedy top-down induction by gain ratio, unpruned. Among attributes with at
/// least two values at a node, candidates must reach the average information
/// gain (the usual C4.5 guard against tiny splits); the highest gain ratio
/// wins, ties going to the lower attribute index. A node becomes a leaf when
/// it is pure, has fewer than 2 rows, or no attribute can split it. Missing
/// nominal cells are treated as their own value. Throws ErrorKind::contract
/// if a continuous attribute is present.
TreeModel train_tree(const Dataset& train);

/// Throws ErrorKind::contract on arity mismatch.
int predict(const TreeModel& model, std::span<const double> row);

/// Percentage of rows whose class is predicted correctly.
double accuracy(const TreeModel& model, const Dataset& test);

} // namespace mildisc
