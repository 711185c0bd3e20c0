#include "mildisc/discretizer.hpp"

#include "mildisc/baselines.hpp"
#include "mildisc/error.hpp"
#include "mildisc/kernels.hpp"
#include "mildisc/mil.hpp"
#include "mildisc/modified_mil.hpp"
#include "mildisc/parallel.hpp"

#include <algorithm>

namespace mildisc {

std::string DiscretizerConfig::label() const {
    std::string out(to_string(algorithm));
    if (algorithm == Algorithm::equal_width || algorithm == Algorithm::equal_frequency)
        out += "(" + std::to_string(bins) + ")";
    return out;
}

void DiscretizerConfig::validate() const {
    if (algorithm == Algorithm::mil || algorithm == Algorithm::modified_mil) mil.validate();
    if ((algorithm == Algorithm::equal_width || algorithm == Algorithm::equal_frequency) && bins == 0)
        fail(ErrorKind::parameter, "bins must be >= 1");
}

AttributeSpec discretized_spec(const std::string& name, std::size_t regions) {
    AttributeSpec spec;
    spec.name = name;
    spec.kind = AttributeKind::nominal;
    for (std::size_t i = 1; i <= regions; ++i) spec.values.push_back(std::to_string(i));
    return spec;
}

FittedAttribute fit_attribute(std::span<const double> values, std::span<const int> class_codes,
                              std::size_t class_count, const DiscretizerConfig& config, std::size_t attribute,
                              std::string name) {
    config.validate();
    const ImputeKey key{config.mil.seed, attribute};
    FittedAttribute out;
    switch (config.algorithm) {
    case Algorithm::mil:
    case Algorithm::modified_mil: {
        ColumnScan column(values);
        const auto rule = config.algorithm == Algorithm::mil ? MergeRule::mil : MergeRule::modified_mil;
        auto result = discretize_attribute(column, class_count, config.mil, rule, name, attribute);
        out.scheme = std::move(result.scheme);
        out.labels = std::move(result.labels);
        return out;
    }
    case Algorithm::equal_width: out.scheme = equal_width(values, config.bins, key); break;
    case Algorithm::equal_frequency: out.scheme = equal_frequency(values, config.bins, key); break;
    case Algorithm::mdlp: out.scheme = mdlp(values, class_codes, key); break;
    }
    out.scheme.attr_name = std::move(name);
    const auto complete = impute_for_baseline(values, key);
    out.labels = kernels::label_by_bounds(complete, out.scheme.lower_bounds()).labels;
    return out;
}

DiscretizedDataset discretize_dataset(const Dataset& dataset, const DiscretizerConfig& config) {
    config.validate();
    std::vector<std::size_t> continuous;
    for (std::size_t a = 0; a < dataset.attribute_count(); ++a) {
        if (dataset.attribute(a).is_continuous()) continuous.push_back(a);
    }
    const auto codes = dataset.class_codes();
    std::vector<FittedAttribute> fitted(continuous.size());
    parallel_for(continuous.size(), [&](std::size_t i) {
        const std::size_t a = continuous[i];
        fitted[i] = fit_attribute(dataset.column(a), codes, dataset.class_count(), config, a,
                                  dataset.attribute(a).name);
    });

    std::vector<AttributeSpec> attrs = dataset.attributes();
    std::vector<std::vector<double>> columns(dataset.attribute_count());
    for (std::size_t a = 0; a < dataset.attribute_count(); ++a) {
        const auto col = dataset.column(a);
        columns[a].assign(col.begin(), col.end());
    }
    DiscretizedDataset out{{}, dataset};
    for (std::size_t i = 0; i < continuous.size(); ++i) {
        const std::size_t a = continuous[i];
        attrs[a] = discretized_spec(attrs[a].name, fitted[i].scheme.regions.size());
        columns[a].assign(fitted[i].labels.begin(), fitted[i].labels.end());
        out.schemes.push_back(std::move(fitted[i].scheme));
    }
    out.dataset = Dataset(dataset.name(), std::move(attrs), std::move(columns), dataset.dropped_rows());
    return out;
}

DiscretizedDataset discretize_dataset(const Dataset& dataset, const MilParams& params) {
    DiscretizerConfig config;
    config.algorithm = Algorithm::mil;
    config.mil = params;
    return discretize_dataset(dataset, config);
}

AppliedDataset apply_schemes(const Dataset& dataset, std::span<const AttributeScheme> schemes) {
    std::vector<std::size_t> target(schemes.size());
    std::string problems;
    for (std::size_t i = 0; i < schemes.size(); ++i) {
        const auto& name = schemes[i].attr_name;
        const auto& attrs = dataset.attributes();
        const auto it = std::find_if(attrs.begin(), attrs.end(), [&](const auto& s) { return s.name == name; });
        if (it == attrs.end()) {
            problems += "\n  missing attribute '" + name + "'";
        } else if (!it->is_continuous()) {
            problems += "\n  attribute '" + name + "' is " + to_string(it->kind) + ", scheme expects continuous";
        } else {
            target[i] = static_cast<std::size_t>(it - attrs.begin());
        }
    }
    for (std::size_t a = 0; a < dataset.attribute_count(); ++a) {
        const auto& spec = dataset.attribute(a);
        if (!spec.is_continuous()) continue;
        const bool covered = std::any_of(schemes.begin(), schemes.end(),
                                         [&](const auto& s) { return s.attr_name == spec.name; });
        if (!covered) problems += "\n  continuous attribute '" + spec.name + "' has no scheme";
    }
    if (!problems.empty()) fail(ErrorKind::schema, "scheme/data mismatch:" + problems);

    std::vector<LabeledColumn> labeled(schemes.size());
    parallel_for(schemes.size(), [&](std::size_t i) {
        labeled[i] = kernels::label_by_bounds(dataset.column(target[i]), schemes[i].lower_bounds());
    });

    std::vector<AttributeSpec> attrs = dataset.attributes();
    std::vector<std::vector<double>> columns(dataset.attribute_count());
    for (std::size_t a = 0; a < dataset.attribute_count(); ++a) {
        const auto col = dataset.column(a);
        columns[a].assign(col.begin(), col.end());
    }
    AppliedDataset out{dataset, 0};
    for (std::size_t i = 0; i < schemes.size(); ++i) {
        const std::size_t a = target[i];
        attrs[a] = discretized_spec(attrs[a].name, schemes[i].regions.size());
        columns[a].assign(labeled[i].labels.begin(), labeled[i].labels.end());
        out.missing_mapped += labeled[i].missing;
    }
    out.dataset = Dataset(dataset.name(), std::move(attrs), std::move(columns), dataset.dropped_rows());
    return out;
}

} // namespace mildisc
