#include "cli.hpp"

#include "mildisc/dataset.hpp"
#include "mildisc/discretizer.hpp"
#include "mildisc/error.hpp"
#include "mildisc/experiment.hpp"
#include "mildisc/parallel.hpp"
#include "mildisc/scheme.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace mildisc::cli {

namespace {

struct Options {
    std::string input;
    std::string out;
    std::string schemes;
    std::string manifest;
    std::string dataset;
    std::string report;
    std::string text;
    std::string emit;
    std::string algo = "modified-mil";
    std::vector<std::string> algos{"modified-mil", "mil", "mdlp"};
    std::vector<std::string> only;
    std::uint32_t c = 20;
    std::uint32_t k = 3;
    std::size_t bins = 10;
    std::uint64_t seed = 1;
    std::size_t runs = 50;
    double train_fraction = 0.30;
    int threads = 0;
    long class_index = -1;
    bool full = false;
};

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::parameter: return usage;
    case ErrorKind::io:
    case ErrorKind::structural:
    case ErrorKind::empty_dataset:
    case ErrorKind::unusable_dataset:
    case ErrorKind::unsupported_feature: return io_or_parse;
    default: return contract;
    }
}

std::string sibling(const std::string& input, const std::string& suffix) {
    std::filesystem::path p(input);
    return (p.parent_path() / (p.stem().string() + suffix)).string();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(ErrorKind::io, "cannot write '" + path + "'");
    f << content;
    if (!f) fail(ErrorKind::io, "write to '" + path + "' failed");
}

DiscretizerConfig discretizer_from(const std::string& tag, const Options& o) {
    DiscretizerConfig d;
    d.algorithm = parse_algorithm(tag);
    d.mil.c = o.c;
    d.mil.k = o.k;
    d.mil.seed = o.seed;
    d.bins = o.bins;
    d.validate();
    return d;
}

SchemaHint hint_from(const Options& o) {
    SchemaHint hint;
    if (o.class_index >= 0) hint.class_index = static_cast<std::size_t>(o.class_index);
    return hint;
}

std::string label_range(const AttributeScheme& s) {
    return s.regions.size() == 1 ? "1" : "1.." + std::to_string(s.regions.size());
}

int cmd_discretize(const Options& o, std::ostream& out) {
    const auto config = discretizer_from(o.algo, o);
    const Dataset data = load_dataset(o.input, hint_from(o));
    const auto result = discretize_dataset(data, config);

    const std::string csv_path = o.out.empty() ? sibling(o.input, ".discretized.csv") : o.out;
    const std::string scheme_path = o.schemes.empty() ? sibling(o.input, ".schemes.json") : o.schemes;
    std::ostringstream csv;
    write_csv(result.dataset, csv);
    write_file(csv_path, csv.str());
    std::ostringstream js;
    write_scheme_file({data.name(), data.attribute(data.class_index()).name, result.schemes}, js);
    write_file(scheme_path, js.str());

    out << "dataset " << data.name() << ": m=" << data.rows() << " s=" << data.class_count();
    if (data.dropped_rows()) out << " (dropped " << data.dropped_rows() << " rows with missing class)";
    out << "\nalgorithm " << config.label() << "\n";
    for (const auto& s : result.schemes)
        out << "  " << s.attr_name << ": NS=" << s.regions.size() << " labels " << label_range(s) << "\n";
    out << "wrote " << csv_path << "\nwrote " << scheme_path << "\n";
    return ok;
}

int cmd_apply(const Options& o, std::ostream& out) {
    const auto file = load_scheme_file(o.schemes);
    Dataset data = load_dataset(o.input, hint_from(o));
    if (!file.class_attribute.empty() && data.attribute(data.class_index()).name != file.class_attribute) {
        const auto& attrs = data.attributes();
        const auto it = std::find_if(attrs.begin(), attrs.end(),
                                     [&](const auto& a) { return a.name == file.class_attribute; });
        if (it == attrs.end())
            fail(ErrorKind::schema, "class attribute '" + file.class_attribute + "' not found in " + o.input);
        SchemaHint hint;
        hint.class_index = static_cast<std::size_t>(it - attrs.begin());
        data = load_dataset(o.input, hint);
    }
    const auto applied = apply_schemes(data, file.schemes);
    const std::string csv_path = o.out.empty() ? sibling(o.input, ".applied.csv") : o.out;
    std::ostringstream csv;
    write_csv(applied.dataset, csv);
    write_file(csv_path, csv.str());
    out << "applied " << file.schemes.size() << " scheme(s) to " << data.rows() << " rows";
    if (applied.missing_mapped) out << "; " << applied.missing_mapped << " missing cell(s) mapped to label 1";
    out << "\nwrote " << csv_path << "\n";
    return ok;
}

void emit_report(const EvalReport& report, const Options& o, std::ostream& out) {
    const auto table = render_table(report);
    out << table;
    if (!o.text.empty()) write_file(o.text, table);
    if (!o.report.empty()) {
        write_file(o.report, report_json(report));
        out << "wrote " << o.report << "\n";
    }
}

int cmd_evaluate(const Options& o, std::ostream& out) {
    const auto config = discretizer_from(o.algo, o);
    EvalReport report;
    report.runs = o.runs;
    report.train_fraction = o.train_fraction;
    report.master_seed = o.seed;
    report.discretizers = {config.label()};
    std::optional<Dataset> data;
    std::string name;
    if (!o.manifest.empty()) {
        if (o.dataset.empty()) fail(ErrorKind::parameter, "--manifest needs --dataset");
        const auto manifest = load_manifest(o.manifest);
        const auto& entry = manifest.find(o.dataset);
        data = load_entry(entry, o.full);
        name = entry.name;
    } else {
        if (o.input.empty()) fail(ErrorKind::parameter, "evaluate needs an input file or --manifest/--dataset");
        data = load_dataset(o.input, hint_from(o));
        name = data->name();
    }
    auto row = run_experiment(*data, ExperimentConfig{o.runs, o.train_fraction, o.seed, config});
    row.dataset = name;
    report.datasets = {name};
    report.rows = {row};
    emit_report(report, o, out);
    return ok;
}

int cmd_compare(const Options& o, std::ostream& out) {
    std::vector<DiscretizerConfig> configs;
    for (const auto& tag : o.algos) configs.push_back(discretizer_from(tag, o));
    if (configs.empty()) fail(ErrorKind::parameter, "--algos is empty");
    const auto manifest = load_manifest(o.manifest);
    CompareOptions options{o.runs, o.train_fraction, o.seed, o.full, o.only};
    emit_report(compare(manifest, configs, options), o, out);
    return ok;
}

int cmd_inspect(const Options& o, std::ostream& out) {
    const auto file = load_scheme_file(o.input);
    out << "dataset " << file.dataset << ", class attribute " << file.class_attribute << "\n";
    for (const auto& s : file.schemes) {
        out << s.attr_name << " [" << to_string(s.algorithm) << "] d_min=" << s.d_min << " d_max=" << s.d_max
            << " regions=" << s.regions.size() << " of " << s.subintervals << "\n";
        for (const auto& r : s.regions) {
            out << "  " << r.label << ": [" << r.lower << ", " << r.upper << ") count=" << r.total_cts;
            if (r.midpoint) out << " midpoint=" << *r.midpoint;
            out << "\n";
        }
    }
    if (!o.emit.empty()) {
        std::ostringstream js;
        write_scheme_file(file, js);
        write_file(o.emit, js.str());
    }
    return ok;
}

void add_discretizer_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--c", o.c, "initial subintervals per class value (n = c*s)")->check(CLI::Range(1u, 1000000u));
    cmd->add_option("--k", o.k, "divisor of the small-region threshold ceil(TS/k)")->check(CLI::Range(1u, 1000000u));
    cmd->add_option("--bins", o.bins, "bin count for equal-width / equal-frequency")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 30));
    cmd->add_option("--seed", o.seed, "seed for imputation and splits");
}

void add_eval_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--runs", o.runs, "repeated random splits")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
    cmd->add_option("--train-fraction", o.train_fraction, "share of rows used for training")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--report", o.report, "write the JSON report here");
    cmd->add_option("--text", o.text, "write the text table here");
    cmd->add_flag("--full", o.full, "do not subsample large datasets");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Supervised discretization with MIL, modified MIL and baseline discretizers"};
    app.require_subcommand(1);
    app.add_option("--threads", o.threads, "OpenMP threads (default: runtime choice)");

    auto* disc = app.add_subcommand("discretize", "fit schemes and discretize a dataset");
    disc->add_option("input", o.input, "CSV or ARFF file")->required();
    disc->add_option("--algo", o.algo, "mil | modified-mil | equal-width | equal-frequency | mdlp");
    disc->add_option("-o,--out", o.out, "discretized CSV (default: <input>.discretized.csv)");
    disc->add_option("--schemes", o.schemes, "scheme file (default: <input>.schemes.json)");
    disc->add_option("--class-index", o.class_index, "0-based class column (default: last)");
    add_discretizer_flags(disc, o);

    auto* apply = app.add_subcommand("apply", "discretize unseen data with a saved scheme file");
    apply->add_option("input", o.input, "CSV or ARFF file")->required();
    apply->add_option("--schemes", o.schemes, "scheme file")->required();
    apply->add_option("-o,--out", o.out, "output CSV (default: <input>.applied.csv)");
    apply->add_option("--class-index", o.class_index, "0-based class column (default: from scheme file)");

    auto* eval = app.add_subcommand("evaluate", "repeated-split accuracy of one discretizer on one dataset");
    eval->add_option("input", o.input, "CSV or ARFF file (or use --manifest/--dataset)");
    eval->add_option("--manifest", o.manifest, "dataset manifest (JSON)");
    eval->add_option("--dataset", o.dataset, "manifest entry name");
    eval->add_option("--algo", o.algo, "discretizer");
    eval->add_option("--class-index", o.class_index, "0-based class column (default: last)");
    add_discretizer_flags(eval, o);
    add_eval_flags(eval, o);

    auto* cmp = app.add_subcommand("compare", "datasets x discretizers accuracy table");
    cmp->add_option("--manifest", o.manifest, "dataset manifest (JSON)")->required();
    cmp->add_option("--algos", o.algos, "comma-separated discretizers")->delimiter(',');
    cmp->add_option("--datasets", o.only, "restrict to these manifest entries")->delimiter(',');
    add_discretizer_flags(cmp, o);
    add_eval_flags(cmp, o);

    auto* insp = app.add_subcommand("inspect", "print a scheme file");
    insp->add_option("schemes", o.input, "scheme file")->required();
    insp->add_option("--emit", o.emit, "re-emit the parsed schemes to this file");

    std::vector<std::string> argv_store{"mildisc"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        set_threads(o.threads);
        if (disc->parsed()) return cmd_discretize(o, out);
        if (apply->parsed()) return cmd_apply(o, out);
        if (eval->parsed()) return cmd_evaluate(o, out);
        if (cmp->parsed()) return cmd_compare(o, out);
        if (insp->parsed()) return cmd_inspect(o, out);
    } catch (const Error& e) {
        err << "mildisc: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "mildisc: " << e.what() << "\n";
        return contract;
    }
    return usage;
}

} // namespace mildisc::cli
