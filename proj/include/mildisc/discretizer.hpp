#pragma once

#include "mildisc/dataset.hpp"
#include "mildisc/partition.hpp"
#include "mildisc/scheme.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace mildisc {

/// Algorithm choice plus its parameters.
struct DiscretizerConfig {
    Algorithm algorithm = Algorithm::modified_mil;
    MilParams mil;
    std::size_t bins = 10;  // equal-width / equal-frequency only

    /// Short column label for reports, e.g. "modified-mil" or "equal-width(10)".
    std::string label() const;
    void validate() const;
};

struct FittedAttribute {
    AttributeScheme scheme;
    std::vector<int> labels;  // training column, missing cells imputed
};

/// Fits one continuous column. `attribute` keys the imputation stream.
FittedAttribute fit_attribute(std::span<const double> values, std::span<const int> class_codes,
                              std::size_t class_count, const DiscretizerConfig& config, std::size_t attribute,
                              std::string name);

struct DiscretizedDataset {
    std::vector<AttributeScheme> schemes;  // one per continuous attribute, in column order
    Dataset dataset;
};

/// Fits and applies a scheme to every continuous attribute. Nominal and class
/// columns are left as they are. Attributes are processed in parallel.
DiscretizedDataset discretize_dataset(const Dataset& dataset, const DiscretizerConfig& config);

/// MIL with the given parameters.
DiscretizedDataset discretize_dataset(const Dataset& dataset, const MilParams& params);

struct AppliedDataset {
    Dataset dataset;
    std::size_t missing_mapped = 0;  // missing cells sent to label 1
};

/// Applies fitted schemes to (unseen) data by attribute name. Never refits.
/// Throws ErrorKind::schema listing every scheme attribute that is absent or
/// not continuous.
AppliedDataset apply_schemes(const Dataset& dataset, std::span<const AttributeScheme> schemes);

/// Attribute spec for a discretized column with `regions` labels "1".."R".
AttributeSpec discretized_spec(const std::string& name, std::size_t regions);

} // namespace mildisc
