#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "mlcseg/complexity.hpp"
#include "mlcseg/pareto.hpp"
#include "oracles.hpp"

using namespace mlcseg;

namespace {

bool contains(const std::vector<ObjectiveVector>& pts, ObjectiveVector y) {
    return std::find(pts.begin(), pts.end(), y) != pts.end();
}

void check_archive(const IntensityMatrix& a, const ParetoArchive& archive) {
    const auto& e = archive.entries();
    for (std::size_t x = 0; x < e.size(); ++x) {
        REQUIRE(validate(a, e[x].solution));
        REQUIRE(evaluate(e[x].solution) == e[x].objectives);
        for (std::size_t y = 0; y < e.size(); ++y)
            if (x != y) REQUIRE_FALSE(weakly_dominates(e[x].objectives, e[y].objectives));
    }
}

}  // namespace

TEST_CASE("dominance") {
    CHECK(dominates({5, 4, 4}, {6, 4, 4}));
    CHECK_FALSE(dominates({5, 4, 4}, {6, 3, 4}));
    CHECK_FALSE(dominates({6, 3, 4}, {5, 4, 4}));
    CHECK_FALSE(dominates({5, 4, 4}, {5, 4, 4}));
    CHECK(weakly_dominates({5, 4, 4}, {5, 4, 4}));
}

TEST_CASE("archive insertion") {
    ParetoArchive archive;
    CHECK(archive.add(fixtures::conflict_d1(), {6, 4, 4}));
    CHECK(archive.add(fixtures::conflict_d1(), {5, 4, 4}));
    CHECK(archive.points() == std::vector<ObjectiveVector>{{5, 4, 4}});
    CHECK(archive.add(fixtures::conflict_d2(), {6, 3, 4}));
    CHECK(archive.size() == 2);
    CHECK_FALSE(archive.add(fixtures::conflict_d3(), {6, 3, 4}));
    CHECK(archive.size() == 2);
    CHECK(archive.entries()[1].solution == fixtures::conflict_d2());
    CHECK(archive.add(fixtures::conflict_d3()));
    CHECK(archive.sorted_entries().back().objectives == ObjectiveVector{8, 4, 3});
}

TEST_CASE("archive stays mutually non-dominated under random insertions") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<Intensity> v(0, 6);
    for (int run = 0; run < 10000; ++run) {
        ParetoArchive archive;
        std::vector<ObjectiveVector> inserted;
        for (int k = 0; k < 12; ++k) {
            const ObjectiveVector y{v(rng), v(rng), v(rng)};
            inserted.push_back(y);
            archive.add(Decomposition{}, y);
        }
        const auto pts = archive.points();
        for (std::size_t x = 0; x < pts.size(); ++x)
            for (std::size_t y = 0; y < pts.size(); ++y)
                if (x != y) REQUIRE_FALSE(weakly_dominates(pts[x], pts[y]));
        // Every inserted point is covered by something kept.
        for (const auto& y : inserted)
            REQUIRE(std::any_of(pts.begin(), pts.end(), [&](const auto& p) { return weakly_dominates(p, y); }));
    }
}

TEST_CASE("pls from a Pareto-optimal population is a fixed point") {
    const auto a = fixtures::conflict_matrix();
    const auto result = pls(a, {fixtures::conflict_d1(), fixtures::conflict_d2(), fixtures::conflict_d3()},
                            [&](const Decomposition& d, const NeighborVisitor& visit) { for_each_neighbor(a, d, visit); });
    auto pts = result.archive.points();
    std::sort(pts.begin(), pts.end());
    CHECK(pts == std::vector<ObjectiveVector>{{5, 4, 4}, {6, 3, 4}, {8, 4, 3}});
    CHECK(result.stats.phases >= 1);
    CHECK_THROWS_AS(pls(a, {fixtures::walkthrough_start()}, {}), std::invalid_argument);
}

TEST_CASE("pls on the walkthrough start") {
    const auto a = fixtures::walkthrough_matrix();
    const auto result = pls(a, {fixtures::walkthrough_start()},
                            [&](const Decomposition& d, const NeighborVisitor& visit) { for_each_neighbor(a, d, visit); });
    check_archive(a, result.archive);
    const auto pts = result.archive.points();
    CHECK(contains(pts, {9, 4, 6}));
    CHECK(contains(pts, {14, 3, 3}));
}

TEST_CASE("phase cap") {
    const auto a = fixtures::walkthrough_matrix();
    const auto nb = [&](const Decomposition& d, const NeighborVisitor& visit) { for_each_neighbor(a, d, visit); };
    CHECK(pls(a, {fixtures::walkthrough_start()}, nb, 1).stats.phases == 1);
}

TEST_CASE("initial population") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = oracle::random_matrix(rng, 5, 5, 8);
        const auto pop = initial_population(a);
        REQUIRE(pop.size() >= 1);
        REQUIRE(pop.size() <= 2);
        for (const auto& d : pop) {
            REQUIRE(validate(a, d));
            REQUIRE(evaluate(d).dt == complexity(a));
        }
        if (pop.size() == 2) {
            // Equal vectors are kept; strict dominance drops one.
            REQUIRE(pop[0] != pop[1]);
            REQUIRE_FALSE(dominates(evaluate(pop[0]), evaluate(pop[1])));
            REQUIRE_FALSE(dominates(evaluate(pop[1]), evaluate(pop[0])));
        }
    }
    // A single row with one nonzero block: both rules give the same single segment.
    CHECK(initial_population(IntensityMatrix::from_rows({{0, 3, 3, 0}})).size() == 1);
}

TEST_CASE("two_phase on the worked examples") {
    const auto a = fixtures::conflict_matrix();
    const auto r = two_phase(a);
    check_archive(a, r.archive);
    auto pts = r.archive.points();
    std::sort(pts.begin(), pts.end());
    CHECK(pts == std::vector<ObjectiveVector>{{5, 4, 4}, {6, 3, 4}, {8, 4, 3}});

    const auto b = fixtures::walkthrough_matrix();
    const auto w = two_phase(b);
    check_archive(b, w.archive);
    const auto wp = w.archive.points();
    CHECK(contains(wp, {9, 4, 6}));
    CHECK(contains(wp, {10, 4, 4}));
    CHECK(contains(wp, {14, 3, 3}));

    CHECK(two_phase(b).archive.points() == wp);
    CHECK(two_phase(IntensityMatrix(2, 2)).archive.points() == std::vector<ObjectiveVector>{{0, 0, 0}});
}

TEST_CASE("two_phase covers its initial population") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = oracle::random_matrix(rng, 4, 4, 4);
        const auto r = two_phase(a);
        check_archive(a, r.archive);
        const auto pts = r.archive.points();
        for (const auto& d : initial_population(a)) {
            const auto y = evaluate(d);
            REQUIRE(std::any_of(pts.begin(), pts.end(), [&](const auto& p) { return weakly_dominates(p, y); }));
        }
    }
}
