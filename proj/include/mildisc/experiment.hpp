#pragma once

#include "mildisc/dataset.hpp"
#include "mildisc/discretizer.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mildisc {

struct ManifestEntry {
    std::string name;
    std::string path;  // resolved against the manifest's directory
    std::optional<std::size_t> class_index;
    std::optional<std::size_t> expected_m;
    std::optional<std::size_t> expected_s;
    /// Default runs subsample larger files to this many rows (stratified).
    std::optional<std::size_t> max_rows;
};

struct Manifest {
    std::vector<ManifestEntry> datasets;

    const ManifestEntry& find(const std::string& name) const;
};

Manifest load_manifest(const std::string& path);

/// Loads an entry; with `full == false` and `max_rows` set, keeps a stratified
/// subsample of max_rows rows (fixed seed).
Dataset load_entry(const ManifestEntry& entry, bool full = false);

struct ExperimentConfig {
    std::size_t runs = 50;
    double train_fraction = 0.30;
    std::uint64_t master_seed = 1;
    DiscretizerConfig discretizer;

    void validate() const;
};

/// Split seed and imputation seed of run r; pure functions of (master_seed, r).
std::uint64_t run_split_seed(std::uint64_t master_seed, std::size_t run) noexcept;
std::uint64_t run_impute_seed(std::uint64_t master_seed, std::size_t run) noexcept;

struct EvalRow {
    std::string dataset;
    std::string discretizer;
    double mean_acc = 0.0;
    double sd = 0.0;  // population standard deviation
    std::size_t runs = 0;
    std::vector<double> per_run_accuracies;
    std::optional<std::string> error;
};

/// One discretize-train-test cycle on a given split: schemes are fitted on the
/// train half only, then applied to both halves.
double evaluate_split(const SplitPair& split, const DiscretizerConfig& discretizer);

/// Repeated stratified splits; runs execute in parallel and are keyed by run
/// index, so the row is identical for any thread count.
EvalRow run_experiment(const Dataset& dataset, const ExperimentConfig& config);

struct EvalReport {
    std::size_t runs = 0;
    double train_fraction = 0.0;
    std::uint64_t master_seed = 0;
    std::vector<std::string> datasets;
    std::vector<std::string> discretizers;
    std::vector<EvalRow> rows;  // dataset-major

    const EvalRow* cell(const std::string& dataset, const std::string& discretizer) const;
};

struct CompareOptions {
    std::size_t runs = 50;
    double train_fraction = 0.30;
    std::uint64_t master_seed = 1;
    bool full = false;
    std::vector<std::string> only;  // dataset names to keep; empty keeps all
};

/// Every manifest dataset against every discretizer. A dataset that fails to
/// load, or a cell whose runs fail, records the error in its rows and the
/// remaining cells are still computed.
EvalReport compare(const Manifest& manifest, std::span<const DiscretizerConfig> discretizers,
                   const CompareOptions& options);

/// Aligned text table, rows = datasets, columns = discretizers, cells "acc ± s.d.".
std::string render_table(const EvalReport& report);
/// Machine-readable report with per-run accuracies. No timestamps or host data.
std::string report_json(const EvalReport& report);

double mean_of(std::span<const double> xs) noexcept;
double population_sd(std::span<const double> xs) noexcept;

} // namespace mildisc
