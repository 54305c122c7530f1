#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "commands.hpp"
#include "mlcseg/io.hpp"

namespace fs = std::filesystem;
using mlcseg::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "mlcseg");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("mlcseg_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name, const std::string& content = {}) const {
        const fs::path p = path_ / name;
        if (!content.empty()) std::ofstream(p) << content;
        return p.string();
    }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

// Drops the given zero-based columns from every CSV line.
std::string without_columns(const std::string& csv, const std::vector<std::size_t>& drop) {
    std::string out;
    for (const auto& line : lines(csv)) {
        std::istringstream cells(line);
        std::size_t k = 0;
        for (std::string cell; std::getline(cells, cell, ','); ++k) {
            if (std::find(drop.begin(), drop.end(), k) == drop.end()) out += cell + ",";
        }
        out += "\n";
    }
    return out;
}

}  // namespace

TEST_CASE("gen writes the requested files deterministically") {
    TempDir tmp;
    const auto a = (tmp.path() / "a").string();
    const auto b = (tmp.path() / "b").string();
    const auto args = [](const std::string& dir) {
        return std::vector<std::string>{"gen", "--rows", "15", "--cols", "15", "--max-value", "10",
                                        "--count", "12", "--seed", "42", "--out", dir};
    };
    const Result r1 = invoke(args(a));
    REQUIRE(r1.code == 0);
    CHECK(lines(r1.out).size() == 12);
    REQUIRE(invoke(args(b)).code == 0);
    for (const auto& entry : fs::directory_iterator(a)) {
        CHECK(slurp(entry.path()) == slurp(fs::path(b) / entry.path().filename()));
    }

    SUBCASE("max value 0 gives zero matrices") {
        const auto z = (tmp.path() / "z").string();
        REQUIRE(invoke({"gen", "--rows", "3", "--cols", "2", "--max-value", "0", "--count", "2", "--out", z}).code == 0);
        CHECK(slurp(fs::path(z) / "matrix_0000.txt") == "3 2\n0 0\n0 0\n0 0\n");
    }
}

TEST_CASE("decompose reports dt dc su") {
    TempDir tmp;
    const auto in = tmp.file("c.txt", "2 3\n3 2 3\n2 5 1\n");
    for (const char* rule : {"min", "first", "last", "kali"}) {
        const Result r = invoke({"decompose", "--in", in, "--rule", rule});
        REQUIRE(r.code == 0);
        CHECK(r.out.rfind("5 ", 0) == 0);
    }

    const auto out = tmp.file("r.jsonl");
    REQUIRE(invoke({"decompose", "--in", in, "--rule", "last", "--out", out}).code == 0);
    const auto doc = mlcseg::read_results(out);
    CHECK(doc.rows == 2);
    CHECK(doc.solutions.size() == 1);
}

TEST_CASE("optimize-seq never increases the reported su") {
    TempDir tmp;
    const auto dir = (tmp.path() / "m").string();
    REQUIRE(invoke({"gen", "--rows", "8", "--cols", "8", "--count", "10", "--seed", "3", "--out", dir}).code == 0);
    auto su = [](const std::string& summary) {
        std::istringstream s(summary);
        long dt = 0, dc = 0, value = 0;
        s >> dt >> dc >> value;
        return value;
    };
    for (const auto& entry : fs::directory_iterator(dir)) {
        for (const char* rule : {"min", "first", "last", "kali"}) {
            const Result plain = invoke({"decompose", "--in", entry.path().string(), "--rule", rule});
            const Result seq = invoke({"decompose", "--in", entry.path().string(), "--rule", rule, "--optimize-seq"});
            REQUIRE(plain.code == 0);
            REQUIRE(seq.code == 0);
            CHECK(su(seq.out) <= su(plain.out));
        }
    }
}

TEST_CASE("pareto and oracle on small matrices") {
    TempDir tmp;
    const auto conflict = tmp.file("c.txt", "2 3\n3 2 3\n2 5 1\n");
    const auto walk = tmp.file("w.txt", "2 3\n8 5 6\n5 3 6\n");

    const Result p = invoke({"pareto", "--in", conflict});
    REQUIRE(p.code == 0);
    CHECK(p.out == "5 4 4\n6 3 4\n8 4 3\n");
    CHECK(invoke({"pareto", "--in", conflict}).out == p.out);

    const auto results = tmp.file("w.jsonl");
    const Result w = invoke({"pareto", "--in", walk, "--out", results});
    REQUIRE(w.code == 0);
    CHECK(w.out.find("14 3 3\n") != std::string::npos);
    const auto doc = mlcseg::read_results(results);
    REQUIRE(doc.stats.pe.has_value());
    CHECK(*doc.stats.pe == doc.solutions.size());

    const Result single = invoke({"oracle", "--in", tmp.file("s.txt", "1 1\n7\n")});
    REQUIRE(single.code == 0);
    CHECK(single.out == "7 1 0\n");

    const Result o = invoke({"oracle", "--in", conflict, "--max-dt", "8", "--max-dc", "4"});
    REQUIRE(o.code == 0);
    CHECK(lines(o.out).size() == 3);
}

TEST_CASE("exit codes") {
    TempDir tmp;
    const auto dir = (tmp.path() / "big").string();
    REQUIRE(invoke({"gen", "--out", dir}).code == 0);
    const auto big = (fs::path(dir) / "matrix_0000.txt").string();

    const Result refusal = invoke({"oracle", "--in", big});
    CHECK(refusal.code == mlcseg::cli::kExitRefusal);
    CHECK(refusal.err.find("estimated") != std::string::npos);

    CHECK(invoke({"decompose", "--in", (tmp.path() / "missing.txt").string()}).code == mlcseg::cli::kExitIo);
    const Result parse = invoke({"decompose", "--in", tmp.file("bad.txt", "2 2\n1 x\n1 1\n")});
    CHECK(parse.code == mlcseg::cli::kExitParse);
    CHECK(parse.err.find("line 2, column 3") != std::string::npos);

    CHECK(invoke({}).code == mlcseg::cli::kExitUsage);
    CHECK(invoke({"decompose", "--in", big, "--rule", "best"}).code == mlcseg::cli::kExitUsage);
    CHECK(invoke({"bench", "--l-min", "5", "--l-max", "4"}).code == mlcseg::cli::kExitUsage);
    CHECK(invoke({"--help"}).code == mlcseg::cli::kExitOk);
}

TEST_CASE("bench rules CSV") {
    const std::vector<std::string> args{"bench", "--mode", "rules", "--l-min", "2", "--l-max", "4", "--reps", "25",
                                        "--rows", "6", "--cols", "6", "--seed", "9", "--rule", "kali,last"};
    const Result r = invoke(args);
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 1 + 3 * 2);
    CHECK(rows[0] == "mode,L,rule,reps,mean_dc,mean_su,mean_su_opt");
    CHECK(rows[1].rfind("rules,2,kali,25,", 0) == 0);
    CHECK(rows[2].rfind("rules,2,last,25,", 0) == 0);
    CHECK(invoke(args).out == r.out);
    CHECK(r.out.find('\r') == std::string::npos);

    SUBCASE("thread count does not change the output") {
        auto threaded = args;
        threaded.insert(threaded.end(), {"--threads", "3"});
        CHECK(invoke(threaded).out == r.out);
    }
}

TEST_CASE("bench 2ppls CSV is reproducible apart from wall time") {
    const std::vector<std::string> args{"bench", "--mode", "2ppls", "--l-min", "3", "--l-max", "4", "--reps", "3",
                                        "--rows", "5", "--cols", "5", "--seed", "4"};
    const Result r = invoke(args);
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].rfind("mode,L,reps,pe_mean,pe_min,pe_max,phases_mean,phases_min,phases_max,time_s_mean", 0) == 0);
    CHECK(rows[0].find("dtopt_su_vs_last_seq_pct_inst") != std::string::npos);
    CHECK(rows[1].rfind("2ppls,3,3,", 0) == 0);
    // Columns 9-11 are wall-time statistics.
    CHECK(without_columns(invoke(args).out, {9, 10, 11}) == without_columns(r.out, {9, 10, 11}));
}

TEST_CASE("summaries and improvement percentages") {
    using mlcseg::cli::PplsInstance;
    CHECK(mlcseg::cli::improvement_percent(200, 150) == doctest::Approx(25.0));
    CHECK(mlcseg::cli::improvement_percent(0, 0) == 0.0);

    PplsInstance x;
    x.pe = 1;
    x.phases = 2;
    x.kali = {10, 5, 100};
    x.last = {10, 6, 50};
    x.best_dc = x.best_dc_dt_optimal = 5;
    x.best_su = x.best_su_dt_optimal = 50;
    PplsInstance y = x;
    y.pe = 3;
    y.phases = 4;
    y.kali.su = 300;
    y.best_su = y.best_su_dt_optimal = 150;
    y.best_dc = 6;

    const auto row = mlcseg::cli::summarize(7, {x, y});
    CHECK(row.pe.mean == doctest::Approx(2.0));
    CHECK(row.pe.min == 1.0);
    CHECK(row.phases.max == 4.0);
    CHECK(row.su_kali.per_instance == doctest::Approx(50.0));
    CHECK(row.su_kali.of_means == doctest::Approx(50.0));
    // Per instance: 0% and -200%; of means: (100 - 200) / 100.
    CHECK(row.su_last.per_instance == doctest::Approx(-100.0));
    CHECK(row.su_last.of_means == doctest::Approx(-100.0));
    CHECK(row.dc_violations == 1);
}
