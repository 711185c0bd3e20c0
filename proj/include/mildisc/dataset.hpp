#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mildisc {

enum class AttributeKind { continuous, nominal, class_label };

const char* to_string(AttributeKind kind) noexcept;

/// Missing cells are stored as quiet NaN.
inline constexpr double missing_value = std::numeric_limits<double>::quiet_NaN();
inline bool is_missing(double cell) noexcept { return std::isnan(cell); }

/// Column description. Nominal and class attributes carry their value
/// dictionary; the code of `values[i]` is `i + 1`.
struct AttributeSpec {
    std::string name;
    AttributeKind kind = AttributeKind::continuous;
    std::vector<std::string> values;

    bool is_continuous() const noexcept { return kind == AttributeKind::continuous; }
    std::size_t code_count() const noexcept { return values.size(); }
    /// 0 if the value is not in the dictionary.
    int code_of(std::string_view value) const;
    const std::string& value_of(int code) const;

    bool operator==(const AttributeSpec&) const = default;
};

/// Column-major table with exactly one class attribute. Immutable once built.
class Dataset {
public:
    Dataset(std::string name, std::vector<AttributeSpec> attributes,
            std::vector<std::vector<double>> columns, std::size_t dropped_rows = 0);

    const std::string& name() const noexcept { return name_; }
    const std::vector<AttributeSpec>& attributes() const noexcept { return attributes_; }
    const AttributeSpec& attribute(std::size_t i) const { return attributes_.at(i); }
    std::size_t attribute_count() const noexcept { return attributes_.size(); }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t class_index() const noexcept { return class_index_; }
    /// Number of distinct class values (s).
    std::size_t class_count() const noexcept { return attributes_[class_index_].code_count(); }
    /// Rows discarded at ingestion because their class cell was missing.
    std::size_t dropped_rows() const noexcept { return dropped_rows_; }

    std::span<const double> column(std::size_t attr) const { return columns_.at(attr); }
    double cell(std::size_t row, std::size_t attr) const { return columns_.at(attr).at(row); }
    std::vector<double> row(std::size_t r) const;
    std::vector<int> class_codes() const;

    /// Rows in the given order (duplicates allowed).
    Dataset select_rows(std::span<const std::size_t> rows) const;
    /// Copy with one column replaced.
    Dataset with_column(std::size_t attr, AttributeSpec spec, std::vector<double> values) const;

    bool operator==(const Dataset& other) const;

private:
    std::string name_;
    std::vector<AttributeSpec> attributes_;
    std::vector<std::vector<double>> columns_;
    std::size_t rows_ = 0;
    std::size_t class_index_ = 0;
    std::size_t dropped_rows_ = 0;
};

/// Column kinds forced by the caller. Columns absent from `kinds` are
/// inferred; the class column defaults to the last one.
struct SchemaHint {
    std::map<std::size_t, AttributeKind> kinds;
    std::optional<std::size_t> class_index;
};

Dataset parse_csv(std::istream& source, const SchemaHint& hint = {}, std::string name = "csv");
Dataset parse_arff(std::istream& source);
/// Dispatches on extension (.arff, otherwise CSV).
Dataset load_dataset(const std::string& path, const SchemaHint& hint = {});

void write_csv(const Dataset& dataset, std::ostream& out);
/// Hint that reproduces `dataset`'s column kinds when its CSV is re-parsed.
SchemaHint schema_of(const Dataset& dataset);

struct AttributeStats {
    double d_min = 0.0;
    double d_max = 0.0;
    std::size_t missing_count = 0;
};

AttributeStats attribute_stats(const Dataset& dataset, std::size_t attr_index);

struct SplitPair {
    Dataset train;
    Dataset test;
    std::uint64_t seed = 0;
    double train_fraction = 0.0;
    std::vector<std::size_t> train_rows;  // parent row indices, ascending
    std::vector<std::size_t> test_rows;
};

/// Per-class train allocation: floor(count * fraction) plus largest-remainder
/// top-up until the total reaches round(m * fraction). Indexed by class code - 1.
std::vector<std::size_t> stratified_allocation(std::span<const std::size_t> class_sizes,
                                               double train_fraction);

SplitPair stratified_split(const Dataset& dataset, double train_fraction, std::uint64_t seed);

} // namespace mildisc
