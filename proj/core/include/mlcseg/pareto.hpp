#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "mlcseg/decomposition.hpp"
#include "mlcseg/engel.hpp"
#include "mlcseg/matrix.hpp"
#include "mlcseg/neighborhood.hpp"
#include "mlcseg/sequencing.hpp"

namespace mlcseg {

// y1 <= y2 componentwise and y1 != y2.
bool dominates(const ObjectiveVector& y1, const ObjectiveVector& y2) noexcept;
// y1 <= y2 componentwise (equality allowed).
bool weakly_dominates(const ObjectiveVector& y1, const ObjectiveVector& y2) noexcept;

// Mutually non-dominated solutions, one per objective vector, kept in
// insertion order.
class ParetoArchive {
public:
    struct Entry {
        ObjectiveVector objectives;
        Decomposition solution;
    };

    // Rejects y if an archived point weakly dominates it (the incumbent wins
    // ties); otherwise drops every entry y dominates and appends (y, d).
    bool add(Decomposition d, const ObjectiveVector& y);
    bool add(Decomposition d) {
        const ObjectiveVector y = evaluate(d);
        return add(std::move(d), y);
    }

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    std::vector<ObjectiveVector> points() const;
    // Entries sorted lexicographically by objective vector.
    std::vector<Entry> sorted_entries() const;

private:
    std::vector<Entry> entries_;
};

struct SolverConfig {
    std::size_t exact_k_bound = kDefaultExactBound;
    // Stop after this many local-search phases; 0 = run to a Pareto local optimum.
    std::size_t max_phases = 0;
    Rule first_rule = Rule::Kali;
    Rule second_rule = Rule::Last;
    NeighborhoodOptions neighborhood;
};

struct RunStats {
    std::size_t phases = 0;
    std::size_t neighbors = 0;
    double wall_seconds = 0.0;
};

struct SearchResult {
    ParetoArchive archive;
    RunStats stats;
};

// Calls visit for every neighbor of the given decomposition.
using NeighborFn = std::function<void(const Decomposition&, const NeighborVisitor&)>;

// Pareto local search from `initial` until a phase adds nothing new.
SearchResult pls(const IntensityMatrix& a, const std::vector<Decomposition>& initial, const NeighborFn& neighbors,
                 std::size_t max_phases = 0);

// Greedy + sequenced solutions for the two starting rules. One is dropped only
// if the other strictly dominates it or both decompositions are identical.
std::vector<Decomposition> initial_population(const IntensityMatrix& a, const SolverConfig& config = {});

// Initial population, Pareto local search with the full neighborhood, then a
// final sequence optimization of every archived solution.
SearchResult two_phase(const IntensityMatrix& a, const SolverConfig& config = {});

}  // namespace mlcseg
