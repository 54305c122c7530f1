#include "mlcseg/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "mlcseg/error.hpp"
#include "mlcseg/pareto.hpp"

namespace mlcseg {

namespace {

using Kind = ParseError::Kind;

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
        if (k == line.size()) break;
        const std::size_t start = k;
        while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
        out.push_back({line.substr(start, k - start), start + 1});
    }
    return out;
}

// Parses a nonnegative decimal integer; the error kind depends on why it fails.
Intensity parse_entry(const Token& tok, std::size_t line) {
    Intensity v = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(Kind::NonInteger, line, tok.column, "'" + std::string(tok.text) + "' is not an integer");
    }
    if (v < 0) {
        throw ParseError(Kind::NegativeEntry, line, tok.column, "entry " + std::string(tok.text) + " is negative");
    }
    return v;
}

nlohmann::ordered_json optional_json(const auto& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

}  // namespace

IntensityMatrix parse_matrix(std::istream& in) {
    std::vector<std::vector<Intensity>> rows;
    std::size_t m = 0;
    std::size_t n = 0;
    bool have_header = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (!have_header) {
            if (tokens.size() != 2) {
                throw ParseError(Kind::MalformedHeader, lineno, tokens.front().column,
                                 "expected header 'rows cols'");
            }
            for (const Token& t : tokens) {
                std::size_t v = 0;
                const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
                if (ec != std::errc() || ptr != t.text.data() + t.text.size() || v == 0) {
                    throw ParseError(Kind::MalformedHeader, lineno, t.column,
                                     "dimension '" + std::string(t.text) + "' is not a positive integer");
                }
                (have_header ? n : m) = v;
                have_header = true;
            }
            continue;
        }
        if (rows.size() == m) {
            throw ParseError(Kind::TrailingData, lineno, tokens.front().column, "data after the last matrix row");
        }
        if (tokens.size() != n) {
            const std::size_t col = tokens.size() > n ? tokens[n].column : line.size() + 1;
            throw ParseError(Kind::RaggedRow, lineno, col,
                             "expected " + std::to_string(n) + " entries, found " + std::to_string(tokens.size()));
        }
        std::vector<Intensity> row;
        row.reserve(n);
        for (const Token& t : tokens) row.push_back(parse_entry(t, lineno));
        rows.push_back(std::move(row));
    }
    if (!have_header) throw ParseError(Kind::MalformedHeader, lineno + 1, 1, "missing header");
    if (rows.size() != m) {
        throw ParseError(Kind::MissingRow, lineno + 1, 1,
                         "expected " + std::to_string(m) + " rows, found " + std::to_string(rows.size()));
    }
    return IntensityMatrix::from_rows(rows);
}

IntensityMatrix read_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open matrix file " + path.string());
    return parse_matrix(in);
}

void write_matrix(std::ostream& out, const IntensityMatrix& a) {
    out << a.rows() << ' ' << a.cols() << '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a(i, j);
        out << '\n';
    }
}

void write_matrix(const IntensityMatrix& a, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    write_matrix(out, a);
    if (!out) throw IoError("failed writing " + path.string());
}

ResultsDocument make_results(const IntensityMatrix& a, const std::vector<Decomposition>& solutions,
                             ResultStats stats) {
    ResultsDocument doc;
    doc.rows = a.rows();
    doc.cols = a.cols();
    for (const Decomposition& d : solutions) doc.solutions.push_back({evaluate(d), d});
    std::stable_sort(doc.solutions.begin(), doc.solutions.end(),
                     [](const ResultSolution& x, const ResultSolution& y) { return x.objectives < y.objectives; });
    doc.stats = std::move(stats);
    return doc;
}

ResultsDocument make_results(const IntensityMatrix& a, const ParetoArchive& archive, ResultStats stats) {
    std::vector<Decomposition> solutions;
    for (const auto& e : archive.entries()) solutions.push_back(e.solution);
    return make_results(a, solutions, std::move(stats));
}

void write_results(std::ostream& out, const ResultsDocument& doc) {
    using nlohmann::ordered_json;
    ordered_json instance;
    instance["record"] = "instance";
    instance["rows"] = doc.rows;
    instance["cols"] = doc.cols;
    out << instance.dump() << '\n';

    for (const ResultSolution& s : doc.solutions) {
        ordered_json rec;
        rec["record"] = "solution";
        rec["dt"] = s.objectives.dt;
        rec["dc"] = s.objectives.dc;
        rec["su"] = s.objectives.su;
        rec["k"] = s.decomposition.size();
        ordered_json terms = ordered_json::array();
        for (const Term& t : s.decomposition.terms) {
            ordered_json term;
            term["u"] = t.coefficient;
            ordered_json left = ordered_json::array();
            ordered_json right = ordered_json::array();
            for (const RowInterval& iv : t.segment.intervals()) {
                left.push_back(iv.left);
                right.push_back(iv.right);
            }
            term["l"] = std::move(left);
            term["r"] = std::move(right);
            terms.push_back(std::move(term));
        }
        rec["terms"] = std::move(terms);
        out << rec.dump() << '\n';
    }

    ordered_json stats;
    stats["record"] = "stats";
    stats["pe"] = optional_json(doc.stats.pe);
    stats["phases"] = optional_json(doc.stats.phases);
    stats["neighbors"] = optional_json(doc.stats.neighbors);
    stats["wall_seconds"] = optional_json(doc.stats.wall_seconds);
    out << stats.dump() << '\n';
}

void write_results(const ResultsDocument& doc, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    write_results(out, doc);
    if (!out) throw IoError("failed writing " + path.string());
}

ResultsDocument parse_results(std::istream& in) {
    ResultsDocument doc;
    bool have_instance = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            const auto kind = j.at("record").get<std::string>();
            if (kind == "instance") {
                doc.rows = j.at("rows").get<std::size_t>();
                doc.cols = j.at("cols").get<std::size_t>();
                have_instance = true;
            } else if (kind == "solution") {
                ResultSolution s;
                s.objectives = {j.at("dt").get<Intensity>(), j.at("dc").get<Intensity>(), j.at("su").get<Intensity>()};
                for (const auto& t : j.at("terms")) {
                    const auto left = t.at("l").get<std::vector<int>>();
                    const auto right = t.at("r").get<std::vector<int>>();
                    s.decomposition.terms.push_back({t.at("u").get<Intensity>(), Segment(left, right)});
                }
                if (j.at("k").get<std::size_t>() != s.decomposition.size()) {
                    throw ParseError(Kind::MalformedRecord, lineno, 1, "k does not match the number of terms");
                }
                doc.solutions.push_back(std::move(s));
            } else if (kind == "stats") {
                doc.stats.pe = optional_from<std::size_t>(j, "pe");
                doc.stats.phases = optional_from<std::size_t>(j, "phases");
                doc.stats.neighbors = optional_from<std::size_t>(j, "neighbors");
                doc.stats.wall_seconds = optional_from<double>(j, "wall_seconds");
            } else {
                throw ParseError(Kind::MalformedRecord, lineno, 1, "unknown record type '" + kind + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(Kind::MalformedRecord, lineno, 1, e.what());
        }
    }
    if (!have_instance) throw ParseError(Kind::MalformedRecord, lineno + 1, 1, "missing instance record");
    return doc;
}

ResultsDocument read_results(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open results file " + path.string());
    return parse_results(in);
}

}  // namespace mlcseg
