#include <algorithm>
#include <set>

#include "doctest.h"
#include "facemagic/formulas.hpp"
#include "facemagic/search.hpp"
#include "facemagic/transform.hpp"
#include "support.hpp"

using namespace facemagic;
using namespace facemagic::testing;

namespace {

SearchConfig config(int m, int n, PruningMode mode, int workers = 2) {
    SearchConfig cfg;
    cfg.dims = Dims::of(m, n);
    cfg.pruning = mode;
    cfg.worker_count = workers;
    return cfg;
}

} // namespace

TEST_CASE("propagation search matches the 9!-permutation oracle on 3x3") {
    const EnumerationReport rep = enumerate_all(config(3, 3, PruningMode::Pure));
    const std::vector<Labeling> oracle = brute_force_3x3();

    std::set<std::vector<int>> oracle_set;
    for (const Labeling& L : oracle) oracle_set.insert(L.labels);
    std::set<std::vector<int>> search_set;
    for (const auto& [S, sols] : rep.solutions)
        for (const Labeling& L : sols) search_set.insert(L.labels);
    CHECK(search_set == oracle_set);
    CHECK(rep.total_raw() == static_cast<long long>(oracle.size()));

    CHECK(rep.counts.at(20).orbits == 1); // the square-grid count formula at 3x3
    CHECK(rep.counts.at(19).raw == rep.counts.at(21).raw);
    CHECK(rep.counts.at(19).orbits == rep.counts.at(21).orbits);
    CHECK(rep.counts.at(19).orbits >= lower_bound_value_plus(3, 3));
}

TEST_CASE("every labeling on a 2x2 grid is magic with value 10") {
    const EnumerationReport rep = enumerate_all(config(2, 2, PruningMode::Pure));
    REQUIRE(rep.counts.size() == 1);
    CHECK(rep.counts.at(10).raw == 24);
    CHECK(rep.counts.at(10).orbits == 3);
}

TEST_CASE("mixed-parity grids admit no magic labeling") {
    const EnumerationReport rep = enumerate_all(config(2, 3, PruningMode::Pure));
    CHECK(rep.total_raw() == 0);
    CHECK_THROWS_AS(enumerate_all(config(2, 3, PruningMode::LemmaAssisted)), ValidationError);
}

TEST_CASE("3x5 counts match the formulas") {
    const EnumerationReport rep = enumerate_all(config(3, 5, PruningMode::Pure));
    CHECK(rep.counts.at(32).orbits == count_value_mid(3, 5));
    CHECK(rep.counts.at(31).raw == rep.counts.at(33).raw);
    CHECK(rep.counts.at(31).orbits == rep.counts.at(33).orbits);
    CHECK(rep.counts.at(31).orbits >= lower_bound_value_plus(3, 5));

    // orbit sizes partition the raw count
    for (const auto& [S, reps] : rep.representatives) {
        long long total = 0;
        for (const Labeling& L : reps) total += static_cast<long long>(symmetry_orbit(L).size());
        CHECK(total == rep.counts.at(S).raw);
    }
}

TEST_CASE("pure and lemma-assisted searches agree") {
    for (auto [m, n] : {std::pair{3, 3}, std::pair{3, 5}, std::pair{4, 4}}) {
        const EnumerationReport pure = enumerate_all(config(m, n, PruningMode::Pure));
        const EnumerationReport lemma = enumerate_all(config(m, n, PruningMode::LemmaAssisted));
        CHECK(pure.counts == lemma.counts);
        CHECK(pure.solutions == lemma.solutions);
        CHECK(pure.representatives == lemma.representatives);
    }
}

TEST_CASE("reports are deterministic across worker counts") {
    const EnumerationReport one = enumerate_all(config(3, 5, PruningMode::Pure, 1));
    const EnumerationReport four = enumerate_all(config(3, 5, PruningMode::Pure, 4));
    CHECK(one.same_result(four));
}

TEST_CASE("value filter restricts the sweep") {
    SearchConfig cfg = config(3, 3, PruningMode::Pure);
    cfg.value_filter = 20;
    const EnumerationReport rep = enumerate_all(cfg);
    CHECK(rep.counts.size() == 1);
    CHECK(rep.counts.at(20).raw == 8);

    cfg.value_filter = 17; // no magic labeling has this value
    CHECK(enumerate_all(cfg).counts.at(17).raw == 0);
}

TEST_CASE("node budget flags the report incomplete") {
    SearchConfig cfg = config(4, 4, PruningMode::Pure);
    cfg.node_budget = 500;
    const EnumerationReport rep = enumerate_all(cfg);
    CHECK(!rep.complete);
}

TEST_CASE("Lemma 6 trichotomy holds on every enumerated odd x odd labeling") {
    for (auto [m, n] : {std::pair{3, 3}, std::pair{3, 5}}) {
        const EnumerationReport rep = enumerate_all(config(m, n, PruningMode::Pure));
        const int mn = m * n;
        for (const auto& [S, sols] : rep.solutions) {
            for (const Labeling& L : sols) {
                auto [d1, d2] = digon_sums(L);
                CHECK(d1 == d2);
                const bool case1 = S == 2 * mn + 1 && d1 == (3 * mn + 1) / 2;
                const bool case2 = S == 2 * mn + 2 && d1 == mn + 1;
                const bool case3 = S == 2 * mn + 3 && d1 == (mn + 3) / 2;
                CHECK(static_cast<int>(case1) + static_cast<int>(case2) +
                          static_cast<int>(case3) ==
                      1);
            }
        }
    }
}

TEST_CASE("magic value 2mn+3 coincides with bicentral balance") {
    for (auto [m, n] : {std::pair{3, 3}, std::pair{3, 5}}) {
        const EnumerationReport rep = enumerate_all(config(m, n, PruningMode::Pure));
        for (const auto& [S, sols] : rep.solutions)
            for (const Labeling& L : sols)
                CHECK(is_bicentrally_balanced(L) == (S == 2 * m * n + 3));
    }
}

TEST_CASE("row-pair identities hold on every balanced enumerated labeling") {
    const EnumerationReport rep = enumerate_all(config(3, 5, PruningMode::Pure));
    for (const Labeling& L : rep.solutions.at(2 * 15 + 3)) CHECK_NOTHROW(row_pair_sums(L));
}

TEST_CASE("conjecture harness on the small grids") {
    for (auto [m, n] : {std::pair{3, 3}, std::pair{3, 5}}) {
        const ConjectureReport rep = conjecture_check(m, n);
        CHECK(rep.constructed.size() ==
              static_cast<std::size_t>(tau(m, n) + tau(n, m)));
        for (const Labeling& L : rep.enumerated_standard) CHECK(is_standard(L));
        // constructed is contained in enumerated by the soundness check inside;
        // the verdict states whether the containment is an equality
        if (rep.verdict == ConjectureVerdict::Equal) {
            CHECK(rep.enumerated_standard.size() == rep.constructed.size());
            CHECK(rep.witnesses.empty());
        } else {
            CHECK(rep.enumerated_standard.size() >
                  rep.constructed.size());
            CHECK(!rep.witnesses.empty());
        }
    }
}

TEST_CASE("equivalence-class census") {
    const CensusReport c33 = bicentral_equivalence_census(3, 3);
    REQUIRE(c33.classes.size() == 2); // hbbl and vbbl of (3,3)
    for (const CensusClass& cls : c33.classes) {
        CHECK(cls.class_size == beta(3) * 2 * beta(3) * 2);
        CHECK(cls.orbit_quotient == cls.class_size / 4);
    }

    const CensusReport c35 = bicentral_equivalence_census(3, 5);
    for (const CensusClass& cls : c35.classes) {
        CHECK(cls.class_size == beta(3) * 2 * beta(5) * 4); // 8
        CHECK(cls.orbit_quotient == cls.class_size / 4);    // 2
    }

    const CensusReport c55 = bicentral_equivalence_census(5, 5, 0, 2);
    for (const CensusClass& cls : c55.classes) {
        CHECK(cls.class_size == 16); // 1*4*1*4
        CHECK(cls.orbit_quotient == 4);
    }
}
