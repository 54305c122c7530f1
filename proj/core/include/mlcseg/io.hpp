#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mlcseg/decomposition.hpp"
#include "mlcseg/matrix.hpp"

namespace mlcseg {

class ParetoArchive;

// Matrix file: header line "m n", then m lines of n nonnegative integers
// separated by blanks. Parse failures throw ParseError with 1-based line and
// column; unreadable files throw IoError.
IntensityMatrix parse_matrix(std::istream& in);
IntensityMatrix read_matrix(const std::filesystem::path& path);
void write_matrix(std::ostream& out, const IntensityMatrix& a);
void write_matrix(const IntensityMatrix& a, const std::filesystem::path& path);

// Absent values are written as JSON null.
struct ResultStats {
    std::optional<std::size_t> pe;
    std::optional<std::size_t> phases;
    std::optional<std::size_t> neighbors;
    std::optional<double> wall_seconds;

    friend bool operator==(const ResultStats&, const ResultStats&) = default;
};

struct ResultSolution {
    ObjectiveVector objectives;
    Decomposition decomposition;

    friend bool operator==(const ResultSolution&, const ResultSolution&) = default;
};

// Results file, one JSON object per line:
//   {"record":"instance","rows":m,"cols":n}
//   {"record":"solution","dt":..,"dc":..,"su":..,"k":K,"terms":[{"u":..,"l":[..],"r":[..]},..]}  (zero or more)
//   {"record":"stats","pe":..,"phases":..,"neighbors":..,"wall_seconds":..}
// Keys appear in exactly this order. Solutions are sorted by (dt, dc, su).
struct ResultsDocument {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<ResultSolution> solutions;
    ResultStats stats;

    friend bool operator==(const ResultsDocument&, const ResultsDocument&) = default;
};

ResultsDocument make_results(const IntensityMatrix& a, const ParetoArchive& archive, ResultStats stats);
ResultsDocument make_results(const IntensityMatrix& a, const std::vector<Decomposition>& solutions, ResultStats stats);

void write_results(std::ostream& out, const ResultsDocument& doc);
void write_results(const ResultsDocument& doc, const std::filesystem::path& path);
ResultsDocument parse_results(std::istream& in);
ResultsDocument read_results(const std::filesystem::path& path);

}  // namespace mlcseg
