#include "fastlex/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <fmt/ostream.h>

#include "fastlex/csv.hpp"
#include "fastlex/harness_ga.hpp"
#include "fastlex/harness_gradient.hpp"
#include "fastlex/shuffling.hpp"
#include "fastlex/stats.hpp"
#include "fastlex/telemetry.hpp"

namespace fastlex::cli {

namespace fs = std::filesystem;

namespace {

// Keys written to config_echo that are not flags.
constexpr std::string_view kEchoOnlyKeys[] = { "subcommand", "method" };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string trim(std::string_view text)
{
    auto first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        return {};
    }
    auto last = text.find_last_not_of(" \t");
    return std::string(text.substr(first, last - first + 1));
}

std::string read_file(const fs::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(fmt::format("cannot read {}", path.string()));
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error(fmt::format("cannot write {}", path.string()));
    }
    out << content;
}

// Options shared by the experiment subcommands.
struct CommonOptions {
    std::string shuffle = "uniform";
    std::string bias;
    std::string init;
    std::uint64_t seed = 0;
    std::size_t runs = 0;
    std::size_t pop_size = 0;
    std::size_t generations = 0;
    std::string out = "results";
    bool reset_weights = false;
    std::size_t jobs = 1;
    std::string config;

    CLI::Option* bias_opt = nullptr;
    CLI::Option* init_opt = nullptr;
};

void add_common(CLI::App& cmd, CommonOptions& o, std::size_t runs, std::size_t pop, std::size_t generations)
{
    o.runs = runs;
    o.pop_size = pop;
    o.generations = generations;
    cmd.add_option("--shuffle", o.shuffle, "uniform | weighted | ranked")
        ->check(CLI::IsMember({ "uniform", "weighted", "ranked" }))
        ->capture_default_str();
    o.bias_opt = cmd.add_option("--bias", o.bias, "zeros | nonzeros")->check(CLI::IsMember({ "zeros", "nonzeros" }));
    o.init_opt = cmd.add_option("--init", o.init, "min | max")->check(CLI::IsMember({ "min", "max" }));
    cmd.add_option("--seed", o.seed, "master seed")->capture_default_str();
    cmd.add_option("--runs", o.runs, "independent runs")->check(CLI::PositiveNumber)->capture_default_str();
    cmd.add_option("--pop-size", o.pop_size, "population size")->check(CLI::PositiveNumber)->capture_default_str();
    cmd.add_option("--generations", o.generations, "generations (epochs for gradient)")->capture_default_str();
    cmd.add_option("--out", o.out, "output directory")->capture_default_str();
    cmd.add_flag("--reset-weights-each-generation", o.reset_weights, "re-initialise case weights every generation");
    cmd.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    cmd.add_option("--config", o.config, "key = value file; explicit flags take precedence");
}

struct ResolvedPolicy {
    ShufflePolicy shuffle = ShufflePolicy::uniform();
    InitPolicy init = InitPolicy::DefaultMax;
};

ResolvedPolicy resolve_policy(const CommonOptions& o)
{
    auto kind = *parse_shuffle(o.shuffle);
    bool has_bias = o.bias_opt->count() > 0;
    bool has_init = o.init_opt->count() > 0;
    if (kind == ShuffleKind::Uniform) {
        if (has_bias || has_init) {
            throw UsageError("--bias and --init only apply to --shuffle weighted|ranked");
        }
        return {};
    }
    if (!has_bias || !has_init) {
        throw UsageError(fmt::format("--shuffle {} requires --bias and --init", o.shuffle));
    }
    return { ShufflePolicy::make(kind, parse_bias(o.bias)), *parse_init(o.init) };
}

void append_policy_echo(std::string& echo, const ResolvedPolicy& policy)
{
    echo += fmt::format("shuffle={}\n", to_string(policy.shuffle.kind()));
    if (!policy.shuffle.is_uniform()) {
        echo += fmt::format("bias={}\ninit={}\n", to_string(*policy.shuffle.bias()), to_string(policy.init));
    }
}

struct GaOptions {
    CommonOptions common;
    std::size_t cases = 64;
    std::size_t hard_cases = 16;
    double hard_rate = 0.05;
    double easy_rate = 0.5;
    std::optional<double> mutation_rate;
    bool dump_weights = false;
    std::size_t eval_threads = 1;
    bool no_cache = false;
};

void add_ga_options(CLI::App& cmd, GaOptions& o)
{
    add_common(cmd, o.common, 50, 100, 100);
    cmd.add_option("--cases", o.cases, "training cases (genome length)")->check(CLI::PositiveNumber)->capture_default_str();
    cmd.add_option("--hard-cases", o.hard_cases, "cases with the hard rate")->capture_default_str();
    cmd.add_option("--hard-rate", o.hard_rate, "initial match / pass rate of hard cases")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd.add_option("--easy-rate", o.easy_rate, "initial match / pass rate of the other cases")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd.add_option("--mutation-rate", o.mutation_rate, "per-bit flip probability (default 1/cases)")
        ->check(CLI::Range(0.0, 1.0));
    cmd.add_flag("--dump-weights", o.dump_weights, "write per-generation case weights");
    cmd.add_option("--eval-threads", o.eval_threads, "threads per case evaluation")->check(CLI::PositiveNumber);
    cmd.add_flag("--no-cache", o.no_cache, "disable the per-generation evaluation cache");
}

int run_ga(const GaOptions& o, ga::ProblemKind kind, std::ostream& out)
{
    auto policy = resolve_policy(o.common);
    ga::RunConfig config;
    config.runs = o.common.runs;
    config.population_size = o.common.pop_size;
    config.max_generations = o.common.generations;
    config.shuffle = policy.shuffle;
    config.init = policy.init;
    config.mutation_rate = o.mutation_rate;
    config.seed = o.common.seed;
    config.reset_weights_each_generation = o.common.reset_weights;
    config.jobs = o.common.jobs;
    config.evaluator.threads = o.eval_threads;
    config.evaluator.cache = !o.no_cache;
    config.problem = kind;
    config.difficulty = { o.cases, o.hard_cases, o.hard_rate, o.easy_rate };
    config.validate();

    auto result = ga::run_experiment(config, o.dump_weights);

    fs::path dir(o.common.out);
    fs::create_directories(dir);
    auto rows = result.all_rows();
    std::ostringstream generations;
    write_generations_csv(generations, rows);
    write_file(dir / "generations.csv", generations.str());
    write_file(dir / "summary.csv",
        fmt::format("{}\n{},{},{},{}\n", ga::kSummaryHeader, config.method_name(), result.success_count, config.runs,
            result.mean_evaluations_overall));
    if (o.dump_weights) {
        for (const auto& run : result.runs) {
            std::string csv = "generation,case_id,weight\n";
            for (std::size_t g = 0; g < run.weight_history.size(); ++g) {
                const auto& w = run.weight_history[g];
                for (std::size_t i = 0; i < w.size(); ++i) {
                    csv += fmt::format("{},{},{}\n", run.generations[g].generation, i, w[i]);
                }
            }
            write_file(dir / fmt::format("weights_run{:03}.csv", run.run_id), csv);
        }
    }

    std::string echo = fmt::format("subcommand={}\nmethod={}\n", kind == ga::ProblemKind::Bitstring ? "ga" : "synthetic",
        config.method_name());
    append_policy_echo(echo, policy);
    echo += fmt::format("seed={}\nruns={}\npop-size={}\ngenerations={}\ncases={}\nhard-cases={}\nhard-rate={}\n"
                        "easy-rate={}\nmutation-rate={}\nreset-weights-each-generation={}\njobs={}\neval-threads={}\n"
                        "no-cache={}\n",
        config.seed, config.runs, config.population_size, config.max_generations, o.cases, o.hard_cases, o.hard_rate,
        o.easy_rate, config.resolved_mutation_rate(), o.common.reset_weights, config.jobs, o.eval_threads, o.no_cache);
    write_file(dir / "config_echo", echo);

    fmt::print(out, "{} runs={} successes={} mean_evaluations={} out={}\n", config.method_name(), config.runs,
        result.success_count, result.mean_evaluations_overall, dir.string());
    return kExitOk;
}

struct GradientOptions {
    CommonOptions common;
    std::size_t cases = 2000;
    std::size_t test_cases = 1000;
    double spread = 0.7;
    double learning_rate = 0.05;
    std::size_t eval_threads = 1;
};

void add_gradient_options(CLI::App& cmd, GradientOptions& o)
{
    add_common(cmd, o.common, 1, 4, 200);
    cmd.add_option("--cases", o.cases, "training cases")->check(CLI::PositiveNumber)->capture_default_str();
    cmd.add_option("--test-cases", o.test_cases, "held-out cases")->capture_default_str();
    cmd.add_option("--spread", o.spread, "blob standard deviation")->check(CLI::PositiveNumber)->capture_default_str();
    cmd.add_option("--learning-rate", o.learning_rate, "SGD step size")->capture_default_str();
    cmd.add_option("--eval-threads", o.eval_threads, "threads per case evaluation")->check(CLI::PositiveNumber);
}

std::string epochs_csv(const gradient::GradientRunResult& run)
{
    std::string csv = fmt::format("{}\n", gradient::kEpochsHeader);
    for (const auto& e : run.epochs) {
        csv += fmt::format("{},{},{},{}\n", e.epoch, e.evaluations, e.pool_final_size, e.parent_train_acc);
    }
    return csv;
}

int run_gradient(const GradientOptions& o, std::ostream& out)
{
    auto policy = resolve_policy(o.common);
    gradient::GradientConfig config;
    config.population_size = o.common.pop_size;
    config.epochs = o.common.generations;
    config.n_cases = o.cases;
    config.n_test_cases = o.test_cases;
    config.spread = o.spread;
    config.learning_rate = o.learning_rate;
    config.shuffle = policy.shuffle;
    config.init = policy.init;
    config.seed = o.common.seed;
    config.reset_weights_each_epoch = o.common.reset_weights;
    config.jobs = o.common.jobs;
    config.evaluator.threads = o.eval_threads;
    config.validate();

    fs::path dir(o.common.out);
    fs::create_directories(dir);
    std::string summary = "method,run_id,train_acc,test_acc,mean_evaluations\n";
    for (std::uint64_t r = 0; r < o.common.runs; ++r) {
        auto run = gradient::run_gradient_experiment(config, r);
        auto run_dir = o.common.runs == 1 ? dir : dir / fmt::format("run_{:03}", r);
        fs::create_directories(run_dir);
        write_file(run_dir / "epochs.csv", epochs_csv(run));

        double mean_evaluations = 0.0;
        for (const auto& e : run.epochs) {
            mean_evaluations += static_cast<double>(e.evaluations);
        }
        if (!run.epochs.empty()) {
            mean_evaluations /= static_cast<double>(run.epochs.size());
        }
        summary += fmt::format(
            "{},{},{},{},{}\n", config.method_name(), r, run.train_accuracy, run.test_accuracy, mean_evaluations);
        fmt::print(out, "{} run={} epochs={} train_acc={:.4f} test_acc={:.4f} mean_evaluations={:.2f}\n",
            config.method_name(), r, config.epochs, run.train_accuracy, run.test_accuracy, mean_evaluations);
    }
    write_file(dir / "gradient_summary.csv", summary);

    std::string echo = fmt::format("subcommand=gradient\nmethod={}\n", config.method_name());
    append_policy_echo(echo, policy);
    echo += fmt::format("seed={}\nruns={}\npop-size={}\ngenerations={}\ncases={}\ntest-cases={}\nspread={}\n"
                        "learning-rate={}\nreset-weights-each-generation={}\njobs={}\neval-threads={}\n",
        config.seed, o.common.runs, config.population_size, config.epochs, config.n_cases, config.n_test_cases,
        config.spread, config.learning_rate, config.reset_weights_each_epoch, config.jobs, o.eval_threads);
    write_file(dir / "config_echo", echo);
    return kExitOk;
}

struct AuditOptions {
    std::string shuffle = "uniform";
    std::size_t cases = 3;
    std::size_t draws = 100000;
    std::vector<double> weights;
    std::uint64_t seed = 0;
    std::string out;
};

int run_audit(const AuditOptions& o, std::ostream& out)
{
    auto kind = *parse_shuffle(o.shuffle);
    std::vector<double> weights = o.weights;
    if (weights.empty()) {
        // Distinct descending weights: case 0 holds rank 1.
        for (std::size_t i = 0; i < o.cases; ++i) {
            weights.push_back(static_cast<double>(o.cases - i));
        }
    }
    if (weights.size() != o.cases) {
        throw UsageError(fmt::format("--weights has {} entries for {} cases", weights.size(), o.cases));
    }
    RandomSource rng(o.seed);
    std::vector<std::vector<std::uint64_t>> counts(o.cases, std::vector<std::uint64_t>(o.cases, 0));
    for (std::size_t d = 0; d < o.draws; ++d) {
        std::vector<CaseId> order;
        switch (kind) {
        case ShuffleKind::Uniform:
            order = uniform_shuffle(o.cases, rng);
            break;
        case ShuffleKind::Weighted:
            order = weighted_shuffle(weights, rng);
            break;
        case ShuffleKind::Ranked:
            order = ranked_shuffle(weights, rng);
            break;
        }
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            ++counts[pos][order[pos]];
        }
    }
    auto frequency = [&](std::size_t pos, std::size_t c) {
        return static_cast<double>(counts[pos][c]) / static_cast<double>(o.draws);
    };
    std::vector<std::string> first;
    for (std::size_t c = 0; c < o.cases; ++c) {
        first.push_back(fmt::format("{:.4f}", frequency(0, c)));
    }
    fmt::print(out, "{} shuffle, {} cases, {} draws\nfirst-position frequencies: {}\n", o.shuffle, o.cases, o.draws,
        fmt::join(first, " "));
    if (!o.out.empty()) {
        fs::create_directories(o.out);
        std::string csv = "position,case_id,frequency\n";
        for (std::size_t pos = 0; pos < o.cases; ++pos) {
            for (std::size_t c = 0; c < o.cases; ++c) {
                csv += fmt::format("{},{},{}\n", pos, c, frequency(pos, c));
            }
        }
        write_file(fs::path(o.out) / "shuffle_audit.csv", csv);
    }
    return kExitOk;
}

struct ReportOptions {
    std::vector<std::string> inputs;
    std::string out = "report";
    std::size_t window = 20;
    std::size_t last_k = 50;
};

struct LabelledSeries {
    std::string method;
    std::vector<std::uint64_t> x;
    std::vector<double> y;
};

std::string method_label(const fs::path& path)
{
    auto echo = path.parent_path() / "config_echo";
    if (fs::exists(echo)) {
        auto values = parse_config_text(read_file(echo));
        if (auto it = values.find("method"); it != values.end()) {
            return it->second;
        }
    }
    auto parent = path.parent_path().filename().string();
    return parent.empty() ? path.stem().string() : parent;
}

LabelledSeries load_series(const std::string& spec)
{
    LabelledSeries series;
    fs::path path;
    if (auto eq = spec.find('='); eq != std::string::npos) {
        series.method = spec.substr(0, eq);
        path = spec.substr(eq + 1);
    } else {
        path = spec;
    }
    if (series.method.empty()) {
        series.method = method_label(path);
    }
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error(fmt::format("cannot read {}", path.string()));
    }
    auto table = csv::read(in);
    auto has = [&](std::string_view name) {
        return std::find(table.header.begin(), table.header.end(), name) != table.header.end();
    };
    if (has("generation")) {
        std::vector<stats::RunPoint> points;
        auto run = table.column("run_id");
        auto gen = table.column("generation");
        auto total = table.column("evaluations_total");
        for (const auto& row : table.rows) {
            points.push_back({ std::stoull(row[run]), std::stoull(row[gen]), std::stod(row[total]) });
        }
        for (const auto& p : stats::aggregate_active_runs(points)) {
            series.x.push_back(p.step);
            series.y.push_back(p.mean);
        }
    } else if (has("epoch")) {
        auto epoch = table.column("epoch");
        auto evals = table.column("evaluations");
        for (const auto& row : table.rows) {
            series.x.push_back(std::stoull(row[epoch]));
            series.y.push_back(std::stod(row[evals]));
        }
    } else {
        throw ConfigError(fmt::format("{} is neither generations.csv nor epochs.csv", path.string()));
    }
    return series;
}

int run_report(const ReportOptions& o, std::ostream& out)
{
    std::vector<LabelledSeries> all;
    for (const auto& input : o.inputs) {
        all.push_back(load_series(input));
    }
    fs::path dir(o.out);
    fs::create_directories(dir);

    std::string raw = "method,x,y\n";
    std::string smoothed = "method,x,y\n";
    std::string aligned = "method,x,y\n";
    std::vector<std::vector<double>> smoothed_series;
    for (const auto& s : all) {
        auto sm = stats::moving_average(s.y, o.window);
        for (std::size_t i = 0; i < s.y.size(); ++i) {
            raw += fmt::format("{},{},{}\n", s.method, s.x[i], s.y[i]);
            smoothed += fmt::format("{},{},{}\n", s.method, s.x[i], sm[i]);
        }
        smoothed_series.push_back(std::move(sm));
    }
    auto tails = stats::align_last_k(smoothed_series, o.last_k);
    for (std::size_t k = 0; k < all.size(); ++k) {
        for (std::size_t j = 0; j < tails[k].values.size(); ++j) {
            aligned += fmt::format("{},{},{}\n", all[k].method, tails[k].offset + j, tails[k].values[j]);
        }
    }
    write_file(dir / "plotdata_raw.csv", raw);
    write_file(dir / "plotdata_smoothed.csv", smoothed);
    write_file(dir / "plotdata_aligned.csv", aligned);
    fmt::print(out, "report: {} series -> {}\n", all.size(), dir.string());
    return kExitOk;
}

} // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text)
{
    std::map<std::string, std::string> values;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        auto stripped = trim(line);
        if (stripped.empty()) {
            continue;
        }
        auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(fmt::format("config line {}: expected key = value", number));
        }
        auto key = trim(std::string_view(stripped).substr(0, eq));
        auto value = trim(std::string_view(stripped).substr(eq + 1));
        if (key.rfind("--", 0) == 0) {
            key.erase(0, 2);
        }
        if (key.empty()) {
            throw ConfigError(fmt::format("config line {}: empty key", number));
        }
        values[key] = value;
    }
    return values;
}

std::vector<std::string> expand_config(std::span<const std::string> args)
{
    std::vector<std::string> expanded(args.begin(), args.end());
    std::optional<std::string> config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            config_path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
        }
    }
    if (!config_path) {
        return expanded;
    }
    auto subcommand = std::find_if(expanded.begin(), expanded.end(), [](const std::string& a) { return !a.starts_with("-"); });
    if (subcommand == expanded.end()) {
        return expanded;
    }

    auto given = [&](const std::string& key) {
        auto flag = "--" + key;
        return std::any_of(args.begin(), args.end(),
            [&](const std::string& a) { return a == flag || a.starts_with(flag + "="); });
    };
    std::vector<std::string> injected;
    for (const auto& [key, value] : parse_config_text(read_file(*config_path))) {
        if (std::find(std::begin(kEchoOnlyKeys), std::end(kEchoOnlyKeys), key) != std::end(kEchoOnlyKeys)) {
            continue;
        }
        if (key == "config" || given(key)) {
            continue;
        }
        if (value == "true" || value == "false") {
            if (value == "true") {
                injected.push_back("--" + key);
            }
            continue;
        }
        injected.push_back("--" + key);
        injected.push_back(value);
    }
    expanded.insert(subcommand + 1, injected.begin(), injected.end());
    return expanded;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app { "Lexicase and fast lexicase selection experiments", "fastlex" };
    app.require_subcommand(1);

    GaOptions ga_opts;
    auto* ga_cmd = app.add_subcommand("ga", "bitstring GA with lexicase parent selection");
    add_ga_options(*ga_cmd, ga_opts);

    GaOptions synth_opts;
    auto* synth_cmd = app.add_subcommand("synthetic", "selection over resampled synthetic error matrices");
    add_ga_options(*synth_cmd, synth_opts);

    GradientOptions grad_opts;
    auto* grad_cmd = app.add_subcommand("gradient", "gradient lexicase with a toy linear learner");
    add_gradient_options(*grad_cmd, grad_opts);

    double p_hat = 0.0;
    double p0 = 0.0;
    std::uint64_t n = 0;
    auto* z_cmd = app.add_subcommand("ztest", "left-tailed one-proportion z-test");
    z_cmd->add_option("--p-hat", p_hat, "observed proportion")->required();
    z_cmd->add_option("--p0", p0, "baseline proportion")->required();
    z_cmd->add_option("--n", n, "sample size")->required();

    AuditOptions audit;
    auto* audit_cmd = app.add_subcommand("shuffle-audit", "empirical case-order distribution of a shuffle");
    audit_cmd->add_option("--shuffle", audit.shuffle, "uniform | weighted | ranked")
        ->check(CLI::IsMember({ "uniform", "weighted", "ranked" }))
        ->capture_default_str();
    audit_cmd->add_option("--cases", audit.cases, "number of cases")->check(CLI::PositiveNumber)->capture_default_str();
    audit_cmd->add_option("--draws", audit.draws, "shuffles drawn")->check(CLI::PositiveNumber)->capture_default_str();
    audit_cmd->add_option("--weights", audit.weights, "case weights (default: cases..1)")->delimiter(',');
    audit_cmd->add_option("--seed", audit.seed, "seed")->capture_default_str();
    audit_cmd->add_option("--out", audit.out, "directory for shuffle_audit.csv");

    ReportOptions report;
    auto* report_cmd = app.add_subcommand("report", "plot data from generations.csv / epochs.csv files");
    report_cmd->add_option("--input", report.inputs, "[label=]path, repeatable")->required();
    report_cmd->add_option("--out", report.out, "output directory")->capture_default_str();
    report_cmd->add_option("--window", report.window, "moving-average window")->capture_default_str();
    report_cmd->add_option("--last-k", report.last_k, "points kept for the end-aligned view")->capture_default_str();

    try {
        auto expanded = expand_config(args);
        std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const ConfigError& e) {
        fmt::print(err, "usage error: {}\n", e.what());
        return kExitUsage;
    }

    try {
        if (ga_cmd->parsed()) {
            return run_ga(ga_opts, ga::ProblemKind::Bitstring, out);
        }
        if (synth_cmd->parsed()) {
            return run_ga(synth_opts, ga::ProblemKind::Synthetic, out);
        }
        if (grad_cmd->parsed()) {
            return run_gradient(grad_opts, out);
        }
        if (z_cmd->parsed()) {
            auto result = stats::one_proportion_ztest_left(p_hat, p0, n);
            fmt::print(out, "z={:.6f} p={:.6f}\n", result.z_statistic, result.p_value);
            return kExitOk;
        }
        if (audit_cmd->parsed()) {
            return run_audit(audit, out);
        }
        if (report_cmd->parsed()) {
            return run_report(report, out);
        }
    } catch (const UsageError& e) {
        fmt::print(err, "usage error: {}\n", e.what());
        return kExitUsage;
    } catch (const ConfigError& e) {
        fmt::print(err, "configuration error: {}\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kExitRuntime;
    }
    return kExitUsage;
}

} // namespace fastlex::cli
