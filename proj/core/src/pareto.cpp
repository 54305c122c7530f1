#include "mlcseg/pareto.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace mlcseg {

bool weakly_dominates(const ObjectiveVector& y1, const ObjectiveVector& y2) noexcept {
    return y1.dt <= y2.dt && y1.dc <= y2.dc && y1.su <= y2.su;
}

bool dominates(const ObjectiveVector& y1, const ObjectiveVector& y2) noexcept {
    return weakly_dominates(y1, y2) && y1 != y2;
}

bool ParetoArchive::add(Decomposition d, const ObjectiveVector& y) {
    for (const Entry& e : entries_) {
        if (weakly_dominates(e.objectives, y)) return false;
    }
    std::erase_if(entries_, [&](const Entry& e) { return dominates(y, e.objectives); });
    entries_.push_back({y, std::move(d)});
    return true;
}

std::vector<ObjectiveVector> ParetoArchive::points() const {
    std::vector<ObjectiveVector> out;
    out.reserve(entries_.size());
    for (const Entry& e : entries_) out.push_back(e.objectives);
    return out;
}

std::vector<ParetoArchive::Entry> ParetoArchive::sorted_entries() const {
    std::vector<Entry> out = entries_;
    std::sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) { return x.objectives < y.objectives; });
    return out;
}

SearchResult pls(const IntensityMatrix& a, const std::vector<Decomposition>& initial, const NeighborFn& neighbors,
                 std::size_t max_phases) {
    const auto start = std::chrono::steady_clock::now();
    SearchResult result;
    ParetoArchive& archive = result.archive;

    std::vector<ParetoArchive::Entry> population;
    for (const Decomposition& d : initial) {
        if (!validate(a, d)) throw std::invalid_argument("pls: initial solution does not decompose the matrix");
        const ObjectiveVector y = evaluate(d);
        archive.add(d, y);
        population.push_back({y, d});
    }

    while (!population.empty() && (max_phases == 0 || result.stats.phases < max_phases)) {
        ++result.stats.phases;
        ParetoArchive fresh;
        for (const auto& [fp, p] : population) {
            neighbors(p, [&](Decomposition&& nb) {
                ++result.stats.neighbors;
                const ObjectiveVector y = evaluate(nb);
                if (weakly_dominates(fp, y)) return;
                if (archive.add(nb, y)) fresh.add(std::move(nb), y);
            });
        }
        population = fresh.entries();
    }

    result.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<Decomposition> initial_population(const IntensityMatrix& a, const SolverConfig& config) {
    Decomposition first = optimize_sequence(engel_decompose(a, config.first_rule), config.exact_k_bound);
    Decomposition second = optimize_sequence(engel_decompose(a, config.second_rule), config.exact_k_bound);
    const ObjectiveVector y1 = evaluate(first);
    const ObjectiveVector y2 = evaluate(second);
    // Equal objective vectors keep both: each seeds a different part of the neighborhood.
    if (first == second || dominates(y1, y2)) return {std::move(first)};
    if (dominates(y2, y1)) return {std::move(second)};
    return {std::move(first), std::move(second)};
}

SearchResult two_phase(const IntensityMatrix& a, const SolverConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const NeighborFn neighbors = [&](const Decomposition& d, const NeighborVisitor& visit) {
        for_each_neighbor(a, d, visit, config.neighborhood);
    };
    SearchResult searched = pls(a, initial_population(a, config), neighbors, config.max_phases);

    SearchResult result;
    result.stats = searched.stats;
    for (const auto& e : searched.archive.entries()) {
        result.archive.add(optimize_sequence(e.solution, config.exact_k_bound));
    }
    result.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace mlcseg
