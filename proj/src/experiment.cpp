#include "mildisc/experiment.hpp"

#include "mildisc/error.hpp"
#include "mildisc/parallel.hpp"
#include "mildisc/rng.hpp"
#include "mildisc/tree.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

namespace mildisc {

using nlohmann::ordered_json;

const ManifestEntry& Manifest::find(const std::string& name) const {
    for (const auto& e : datasets) {
        if (e.name == name) return e;
    }
    fail(ErrorKind::parameter, "dataset '" + name + "' is not in the manifest");
}

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::io, "cannot open manifest '" + path + "'");
    const auto base = std::filesystem::path(path).parent_path();
    Manifest manifest;
    try {
        const auto doc = nlohmann::json::parse(in);
        for (const auto& j : doc.at("datasets")) {
            ManifestEntry e;
            e.name = j.at("name").get<std::string>();
            const std::filesystem::path p = j.at("path").get<std::string>();
            e.path = (p.is_absolute() ? p : base / p).lexically_normal().string();
            auto opt = [&](const char* key) -> std::optional<std::size_t> {
                if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
                return j.at(key).get<std::size_t>();
            };
            e.class_index = opt("class_index");
            e.expected_m = opt("expected_m");
            e.expected_s = opt("expected_s");
            e.max_rows = opt("max_rows");
            manifest.datasets.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::structural, "manifest '" + path + "': " + e.what());
    }
    return manifest;
}

Dataset load_entry(const ManifestEntry& entry, bool full) {
    SchemaHint hint;
    hint.class_index = entry.class_index;
    Dataset data = load_dataset(entry.path, hint);
    if (full || !entry.max_rows || data.rows() <= *entry.max_rows) return data;
    const double fraction = static_cast<double>(*entry.max_rows) / static_cast<double>(data.rows());
    return stratified_split(data, fraction, 0).train;
}

void ExperimentConfig::validate() const {
    if (runs < 1) fail(ErrorKind::parameter, "runs must be >= 1");
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        fail(ErrorKind::parameter, "train fraction must lie in (0, 1)");
    discretizer.validate();
}

std::uint64_t run_split_seed(std::uint64_t master_seed, std::size_t run) noexcept {
    return mix_key(master_seed, run, 1);
}

std::uint64_t run_impute_seed(std::uint64_t master_seed, std::size_t run) noexcept {
    return mix_key(master_seed, run, 2);
}

double mean_of(std::span<const double> xs) noexcept {
    if (xs.empty()) return 0.0;
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double population_sd(std::span<const double> xs) noexcept {
    if (xs.empty()) return 0.0;
    const double mu = mean_of(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - mu) * (x - mu);
    return std::sqrt(ss / static_cast<double>(xs.size()));
}

double evaluate_split(const SplitPair& split, const DiscretizerConfig& discretizer) {
    const auto fitted = discretize_dataset(split.train, discretizer);
    // leakage guard: every scheme's range must come from the train rows alone
    for (const auto& scheme : fitted.schemes) {
        const auto& attrs = split.train.attributes();
        for (std::size_t a = 0; a < attrs.size(); ++a) {
            if (attrs[a].name != scheme.attr_name || !attrs[a].is_continuous()) continue;
            const auto stats = attribute_stats(split.train, a);
            if (stats.d_min != scheme.d_min || stats.d_max != scheme.d_max)
                fail(ErrorKind::contract, "scheme for '" + scheme.attr_name + "' was not fitted on the train split");
        }
    }
    const auto test = apply_schemes(split.test, fitted.schemes);
    const auto model = train_tree(fitted.dataset);
    return accuracy(model, test.dataset);
}

EvalRow run_experiment(const Dataset& dataset, const ExperimentConfig& config) {
    config.validate();
    if (dataset.class_count() < 2)
        fail(ErrorKind::contract, "dataset '" + dataset.name() + "' has fewer than 2 class values");
    EvalRow row;
    row.dataset = dataset.name();
    row.discretizer = config.discretizer.label();
    row.runs = config.runs;
    row.per_run_accuracies.assign(config.runs, 0.0);
    struct Failure {
        ErrorKind kind = ErrorKind::contract;
        std::string message;
    };
    std::vector<std::optional<Failure>> failures(config.runs);
    parallel_for(config.runs, [&](std::size_t r) {
        try {
            const auto split = stratified_split(dataset, config.train_fraction, run_split_seed(config.master_seed, r));
            auto disc = config.discretizer;
            disc.mil.seed = run_impute_seed(config.master_seed, r);
            row.per_run_accuracies[r] = evaluate_split(split, disc);
        } catch (const Error& e) {
            failures[r] = Failure{e.kind(), e.what()};
        } catch (const std::exception& e) {
            failures[r] = Failure{ErrorKind::contract, e.what()};
        }
    });
    for (std::size_t r = 0; r < failures.size(); ++r) {
        if (failures[r]) throw Error(failures[r]->kind, "run " + std::to_string(r + 1) + ": " + failures[r]->message);
    }
    row.mean_acc = mean_of(row.per_run_accuracies);
    row.sd = population_sd(row.per_run_accuracies);
    return row;
}

const EvalRow* EvalReport::cell(const std::string& dataset, const std::string& discretizer) const {
    for (const auto& r : rows) {
        if (r.dataset == dataset && r.discretizer == discretizer) return &r;
    }
    return nullptr;
}

EvalReport compare(const Manifest& manifest, std::span<const DiscretizerConfig> discretizers,
                   const CompareOptions& options) {
    if (discretizers.empty()) fail(ErrorKind::parameter, "no discretizers requested");
    EvalReport report;
    report.runs = options.runs;
    report.train_fraction = options.train_fraction;
    report.master_seed = options.master_seed;
    for (const auto& d : discretizers) report.discretizers.push_back(d.label());

    for (const auto& entry : manifest.datasets) {
        if (!options.only.empty() &&
            std::find(options.only.begin(), options.only.end(), entry.name) == options.only.end())
            continue;
        report.datasets.push_back(entry.name);
        std::optional<Dataset> data;
        std::string load_error;
        try {
            data = load_entry(entry, options.full);
        } catch (const std::exception& e) {
            load_error = e.what();
        }
        for (const auto& d : discretizers) {
            EvalRow row;
            row.dataset = entry.name;
            row.discretizer = d.label();
            row.runs = options.runs;
            if (!data) {
                row.error = load_error;
            } else {
                try {
                    ExperimentConfig config{options.runs, options.train_fraction, options.master_seed, d};
                    auto computed = run_experiment(*data, config);
                    computed.dataset = entry.name;
                    row = std::move(computed);
                } catch (const std::exception& e) {
                    row.error = e.what();
                }
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

namespace {

std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char ch : s) {
        if ((ch & 0xC0) != 0x80) ++w;  // count UTF-8 lead bytes only
    }
    return w;
}

std::string pad(const std::string& s, std::size_t width) {
    return s + std::string(width > display_width(s) ? width - display_width(s) : 0, ' ');
}

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string render_table(const EvalReport& report) {
    std::ostringstream out;
    out << "Accuracy (%) over " << report.runs << " runs, train fraction " << fixed2(report.train_fraction)
        << ", seed " << report.master_seed << "\n"
        << "acc = mean test accuracy, s.d. = population standard deviation\n"
        << "classifier: unpruned gain-ratio decision tree (C4.5-style surrogate, not WEKA J48)\n\n";

    std::vector<std::vector<std::string>> grid;
    grid.push_back({"Problem"});
    for (const auto& d : report.discretizers) grid.back().push_back(d + " (acc ± s.d.)");
    for (const auto& name : report.datasets) {
        std::vector<std::string> line{name};
        for (const auto& d : report.discretizers) {
            const auto* row = report.cell(name, d);
            if (!row) line.push_back("-");
            else if (row->error) line.push_back("error");
            else line.push_back(fixed2(row->mean_acc) + " ± " + fixed2(row->sd));
        }
        grid.push_back(std::move(line));
    }
    std::vector<std::size_t> widths(grid.front().size(), 0);
    for (const auto& line : grid) {
        for (std::size_t c = 0; c < line.size(); ++c) widths[c] = std::max(widths[c], display_width(line[c]));
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t c = 0; c < grid[i].size(); ++c) {
            if (c) out << "  ";
            out << (c + 1 == grid[i].size() ? grid[i][c] : pad(grid[i][c], widths[c]));
        }
        out << '\n';
        if (i == 0) {
            std::size_t total = 0;
            for (auto w : widths) total += w;
            out << std::string(total + 2 * (widths.size() - 1), '-') << '\n';
        }
    }
    bool any_error = false;
    for (const auto& row : report.rows) {
        if (!row.error) continue;
        if (!any_error) out << "\nerrors:\n";
        any_error = true;
        out << "  " << row.dataset << " / " << row.discretizer << ": " << *row.error << '\n';
    }
    return out.str();
}

std::string report_json(const EvalReport& report) {
    ordered_json doc;
    doc["classifier"] = "unpruned gain-ratio decision tree (C4.5-style surrogate, not WEKA J48)";
    doc["sd"] = "population";
    doc["runs"] = report.runs;
    doc["train_fraction"] = report.train_fraction;
    doc["master_seed"] = report.master_seed;
    doc["datasets"] = report.datasets;
    doc["discretizers"] = report.discretizers;
    ordered_json rows = ordered_json::array();
    for (const auto& r : report.rows) {
        ordered_json j;
        j["dataset"] = r.dataset;
        j["discretizer"] = r.discretizer;
        if (r.error) {
            j["error"] = *r.error;
        } else {
            j["mean_acc"] = r.mean_acc;
            j["sd"] = r.sd;
            j["runs"] = r.runs;
            j["per_run_accuracies"] = r.per_run_accuracies;
        }
        rows.push_back(std::move(j));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

} // namespace mildisc
