#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "bench.hpp"
#include "mlcseg/complexity.hpp"
#include "mlcseg/error.hpp"
#include "mlcseg/io.hpp"
#include "mlcseg/pareto.hpp"

namespace mlcseg::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
    // gen / bench
    std::size_t rows = 15;
    std::size_t cols = 15;
    Intensity max_value = 10;
    std::size_t count = 1;
    std::uint64_t seed = 0;
    bool exclusive_upper = false;

    // decompose / pareto / oracle
    std::string in;
    std::string out;
    std::string rule = "kali";
    bool optimize_seq = false;
    std::size_t exact_k_bound = kDefaultExactBound;
    std::size_t max_phases = 0;
    Intensity max_dt = 8;
    std::size_t max_dc = 4;
    double max_nodes = OracleLimits{}.max_nodes;

    // bench
    std::string mode = "rules";
    Intensity l_min = 3;
    Intensity l_max = 16;
    std::size_t reps = 1000;
    std::size_t threads = 0;
    std::vector<std::string> rules{"min", "first", "last", "kali"};
};

const std::vector<std::string> kRuleNames{"min", "first", "last", "kali"};

Rule rule_named(const std::string& name) {
    const auto r = parse_rule(name);
    if (!r) throw std::invalid_argument("unknown rule '" + name + "'");
    return *r;
}

void print_point(std::ostream& out, const ObjectiveVector& y) { out << y.dt << ' ' << y.dc << ' ' << y.su << '\n'; }

void print_points(std::ostream& out, const ResultsDocument& doc) {
    for (const auto& s : doc.solutions) print_point(out, s.objectives);
}

// Writes to the named file, or to `fallback` when the name is empty.
template <class Write>
void emit(const std::string& path, std::ostream& fallback, Write write) {
    if (path.empty()) {
        write(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    write(file);
    file.flush();
    if (!file) throw IoError("failed writing '" + path + "'");
}

int cmd_gen(const Options& o, std::ostream& out) {
    GeneratorSpec spec;
    spec.rows = o.rows;
    spec.cols = o.cols;
    spec.max_value = o.max_value;
    spec.seed = o.seed;
    spec.count = o.count;
    spec.exclusive_upper = o.exclusive_upper;

    std::error_code ec;
    fs::create_directories(o.out, ec);
    if (ec) throw IoError("cannot create directory '" + o.out + "': " + ec.message());

    const int width = std::max<int>(4, static_cast<int>(std::to_string(o.count == 0 ? 0 : o.count - 1).size()));
    for (std::size_t k = 0; k < o.count; ++k) {
        std::ostringstream name;
        name << "matrix_" << std::setw(width) << std::setfill('0') << k << ".txt";
        const fs::path path = fs::path(o.out) / name.str();
        write_matrix(random_matrix(spec, k), path);
        out << path.string() << '\n';
    }
    return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
    const IntensityMatrix a = read_matrix(o.in);
    Decomposition d = engel_decompose(a, rule_named(o.rule));
    if (o.optimize_seq) d = optimize_sequence(d, o.exact_k_bound);
    print_point(out, evaluate(d));
    if (!o.out.empty()) write_results(make_results(a, std::vector<Decomposition>{d}, ResultStats{}), o.out);
    return kExitOk;
}

int cmd_pareto(const Options& o, std::ostream& out, std::ostream& err) {
    const IntensityMatrix a = read_matrix(o.in);
    SolverConfig config;
    config.exact_k_bound = o.exact_k_bound;
    config.max_phases = o.max_phases;
    const SearchResult result = two_phase(a, config);

    ResultStats stats;
    stats.pe = result.archive.size();
    stats.phases = result.stats.phases;
    stats.neighbors = result.stats.neighbors;
    stats.wall_seconds = result.stats.wall_seconds;
    const ResultsDocument doc = make_results(a, result.archive, stats);
    print_points(out, doc);
    err << "pe " << *stats.pe << ", phases " << *stats.phases << ", neighbors " << *stats.neighbors << ", "
        << *stats.wall_seconds << " s\n";
    if (!o.out.empty()) write_results(doc, o.out);
    return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const IntensityMatrix a = read_matrix(o.in);
    OracleLimits limits;
    limits.max_dt = o.max_dt;
    limits.max_dc = o.max_dc;
    limits.max_nodes = o.max_nodes;
    const auto front = exact_front(a, limits);

    std::vector<Decomposition> witnesses;
    witnesses.reserve(front.size());
    for (const auto& p : front) witnesses.push_back(p.witness);
    ResultStats stats;
    stats.pe = front.size();
    const ResultsDocument doc = make_results(a, witnesses, stats);
    print_points(out, doc);
    if (!o.out.empty()) write_results(doc, o.out);
    return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
    BenchConfig config;
    config.rows = o.rows;
    config.cols = o.cols;
    config.l_min = o.l_min;
    config.l_max = o.l_max;
    config.reps = o.reps;
    config.seed = o.seed;
    config.threads = o.threads;
    config.exclusive_upper = o.exclusive_upper;
    config.exact_k_bound = o.exact_k_bound;
    config.rules.clear();
    for (const auto& name : o.rules) config.rules.push_back(rule_named(name));
    check_config(config);

    if (o.mode == "rules") {
        const auto rows = bench_rules(config);
        emit(o.out, out, [&](std::ostream& s) { write_rules_csv(s, rows); });
    } else {
        const auto rows = bench_ppls(config, [&](Intensity level, std::size_t index, const PplsInstance& r) {
            err << "L=" << level << " #" << index << ": pe " << r.pe << ", phases " << r.phases << ", " << r.seconds
                << " s\n";
        });
        emit(o.out, out, [&](std::ostream& s) { write_ppls_csv(s, rows); });
    }
    return kExitOk;
}

std::vector<char*> argv_of(std::vector<std::string>& args) {
    std::vector<char*> argv;
    argv.reserve(args.size());
    for (auto& a : args) argv.push_back(a.data());
    return argv;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Multileaf collimator segmentation: greedy decomposition, Pareto local search and an exact oracle"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "Write random intensity matrices");
    gen->add_option("--rows", o.rows, "Rows per matrix")->check(CLI::PositiveNumber);
    gen->add_option("--cols", o.cols, "Columns per matrix")->check(CLI::PositiveNumber);
    gen->add_option("--max-value", o.max_value, "Largest entry L")->check(CLI::NonNegativeNumber);
    gen->add_option("--count", o.count, "Number of matrices");
    gen->add_option("--seed", o.seed, "Generator seed");
    gen->add_flag("--exclusive-upper", o.exclusive_upper, "Draw entries from 0..L-1");
    gen->add_option("--out", o.out, "Output directory")->required();

    auto* decompose = app.add_subcommand("decompose", "Greedy decomposition with one interval rule");
    decompose->add_option("--in", o.in, "Matrix file")->required();
    decompose->add_option("--rule", o.rule, "Interval rule")->check(CLI::IsMember(kRuleNames));
    decompose->add_flag("--optimize-seq", o.optimize_seq, "Reorder segments to minimize leaf travel");
    decompose->add_option("--exact-k-bound", o.exact_k_bound, "Largest K sequenced exactly")
        ->check(CLI::Range(std::size_t{0}, kMaxExactBound));
    decompose->add_option("--out", o.out, "Results file");

    auto* pareto = app.add_subcommand("pareto", "Two-phase Pareto local search");
    pareto->add_option("--in", o.in, "Matrix file")->required();
    pareto->add_option("--exact-k-bound", o.exact_k_bound, "Largest K sequenced exactly")
        ->check(CLI::Range(std::size_t{0}, kMaxExactBound));
    pareto->add_option("--max-phases", o.max_phases, "Phase cap, 0 for none");
    pareto->add_option("--out", o.out, "Results file");

    auto* oracle = app.add_subcommand("oracle", "Exact bounded Pareto front of a small matrix");
    oracle->add_option("--in", o.in, "Matrix file")->required();
    oracle->add_option("--max-dt", o.max_dt, "Largest beam-on time searched")->check(CLI::NonNegativeNumber);
    oracle->add_option("--max-dc", o.max_dc, "Largest segment count searched");
    oracle->add_option("--max-nodes", o.max_nodes, "Refuse above this search-size estimate");
    oracle->add_option("--out", o.out, "Results file");

    auto* bench = app.add_subcommand("bench", "Benchmark sweep over random instances, CSV output");
    bench->add_option("--mode", o.mode, "rules or 2ppls")->check(CLI::IsMember({"rules", "2ppls"}));
    bench->add_option("--l-min", o.l_min, "Smallest L")->check(CLI::NonNegativeNumber);
    bench->add_option("--l-max", o.l_max, "Largest L")->check(CLI::NonNegativeNumber);
    bench->add_option("--reps", o.reps, "Matrices per L")->check(CLI::PositiveNumber);
    bench->add_option("--rows", o.rows, "Rows per matrix")->check(CLI::PositiveNumber);
    bench->add_option("--cols", o.cols, "Columns per matrix")->check(CLI::PositiveNumber);
    bench->add_option("--seed", o.seed, "Base seed");
    bench->add_option("--threads", o.threads, "Worker threads, 0 for all cores");
    bench->add_option("--rule", o.rules, "Rules for mode rules (comma separated)")
        ->delimiter(',')
        ->check(CLI::IsMember(kRuleNames));
    bench->add_flag("--exclusive-upper", o.exclusive_upper, "Draw entries from 0..L-1");
    bench->add_option("--exact-k-bound", o.exact_k_bound, "Largest K sequenced exactly")
        ->check(CLI::Range(std::size_t{0}, kMaxExactBound));
    bench->add_option("--out", o.out, "CSV file (default stdout)");

    std::vector<std::string> owned = args;
    if (owned.empty()) owned.emplace_back("mlcseg");
    std::vector<char*> argv = argv_of(owned);
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(o, out);
        if (decompose->parsed()) return cmd_decompose(o, out);
        if (pareto->parsed()) return cmd_pareto(o, out, err);
        if (oracle->parsed()) return cmd_oracle(o, out);
        return cmd_bench(o, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const RefusalError& e) {
        err << "refused: " << e.what() << '\n';
        return kExitRefusal;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace mlcseg::cli
