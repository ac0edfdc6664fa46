#include <algorithm>
#include <set>

#include "doctest.h"
#include "facemagic/labeling.hpp"
#include "support.hpp"

using namespace facemagic;
using namespace facemagic::testing;

TEST_CASE("verify the golden labelings") {
    const MagicReport fig = verify(fig2());
    CHECK(fig.is_magic);
    CHECK(*fig.S == 53);
    CHECK(fig.D1 == 14);
    CHECK(fig.D2 == 14);
    CHECK(fig.value_class == ValueClass::SPlus);

    const MagicReport t1 = verify(table1());
    CHECK(t1.is_magic);
    CHECK(*t1.S == 165);
    CHECK(t1.value_class == ValueClass::SPlus);

    const MagicReport t2 = verify(table2());
    CHECK(t2.is_magic);
    CHECK(*t2.S == 153);
    CHECK(t2.D1 == 39);
    CHECK(t2.D2 == 39);
}

TEST_CASE("the identity labeling is not magic") {
    const Dims dims = Dims::of(3, 3);
    std::vector<int> labels(9);
    for (int v = 1; v <= 9; ++v) labels[v - 1] = v;
    const MagicReport rep = verify(Labeling::make(dims, labels));
    CHECK(!rep.is_magic);
    CHECK(!rep.S.has_value());
    CHECK(rep.value_class == ValueClass::Other);
    CHECK(rep.face_sums_sample.size() >= 2);
}

TEST_CASE("verify rejects broken label arrays by name") {
    std::vector<int> labels = fig2().labels;
    labels[3] = 1; // duplicate
    CHECK_THROWS_WITH_AS(verify(Labeling{Dims::of(5, 5), labels}),
                         doctest::Contains("duplicate label 1"), ValidationError);
    labels[3] = 99;
    CHECK_THROWS_WITH_AS(verify(Labeling{Dims::of(5, 5), labels}),
                         doctest::Contains("label 99"), ValidationError);
}

TEST_CASE("digon sums") {
    CHECK(digon_sums(fig2()) == std::pair<int, int>{14, 14});
    CHECK(digon_sums(table2()) == std::pair<int, int>{39, 39});
    CHECK(digon_sums(complement(fig2())) == std::pair<int, int>{38, 38});
}

TEST_CASE("complement") {
    const Labeling fig = fig2();
    const Labeling comp = complement(fig);
    const MagicReport rep = verify(comp);
    CHECK(rep.is_magic);
    CHECK(*rep.S == 51); // 4mn+4-S
    CHECK(rep.value_class == ValueClass::SMinus);
    CHECK(comp.at(1, 1) == 25);
    CHECK(complement(complement(table1())) == table1());
}

TEST_CASE("pair-sum targets") {
    CHECK(target_pair_sum(Dims::of(5, 5), {1, 1}) == 14);
    CHECK(target_pair_sum(Dims::of(5, 5), {2, 1}) == 39);
    CHECK(target_pair_sum(Dims::of(9, 9), {5, 5}) == 42);
    CHECK_THROWS_AS(target_pair_sum(Dims::of(4, 4), {1, 1}), ValidationError);

    const PairTargets t = PairTargets::of(Dims::of(5, 5));
    CHECK(t.even_sum + t.odd_sum == 2 * 25 + 3);
}

TEST_CASE("bicentral balance of the golden labelings") {
    CHECK(is_bicentrally_balanced(fig2()));
    CHECK(fig2().at(3, 3) == 7); // quarter of the even pair target
    CHECK(is_bicentrally_balanced(table1()));
    CHECK(table1().at(5, 5) == 21); // (81 + 3) / 4
    CHECK(!is_bicentrally_balanced(complement(fig2())));
}

TEST_CASE("row pair sums of the value-53 labeling") {
    const Labeling fig = fig2();
    const std::vector<int> a = row_pair_sums(fig);
    REQUIRE(a.size() == 2);
    CHECK(a[0] == 24);
    CHECK(fig.at(2, 1) + fig.at(2, 2) == 53 - a[0]);
    CHECK(fig.at(1, 5) + fig.at(1, 4) == 53 - a[0]);
    CHECK_NOTHROW(row_pair_sums(table1()));
    CHECK_THROWS_AS(row_pair_sums(complement(fig2())), ValidationError); // not balanced
}

TEST_CASE("standardness") {
    CHECK(is_standard(table1()));
    CHECK(is_standard(fig2()));

    // swapping the outer column pair breaks the center-row monotonicity
    Labeling swapped = fig2();
    for (int j = 1; j <= 5; ++j) std::swap(swapped.at(1, j), swapped.at(5, j));
    CHECK(verify(swapped).is_magic);
    CHECK(is_bicentrally_balanced(swapped));
    CHECK(!is_standard(swapped));
}

TEST_CASE("labeling symmetries") {
    const Labeling fig = fig2();
    CHECK(apply_symmetry(Symmetry::R0, fig) == fig);
    CHECK(apply_symmetry(Symmetry::R180, fig).at(1, 1) == 13);
    CHECK(*verify(apply_symmetry(Symmetry::H, fig)).S == 53);
    for (Symmetry s : symmetry_group(fig.dims))
        CHECK(verify(apply_symmetry(s, fig)).is_magic);
}

TEST_CASE("canonical form is idempotent and orbit-constant") {
    std::mt19937 rng(20220607);
    for (int trial = 0; trial < 50; ++trial) {
        const Dims dims = trial % 2 ? Dims::of(3, 5) : Dims::of(4, 4);
        const Labeling L = random_labeling(dims, rng);
        const Labeling canon = canonical_form(L);
        CHECK(canonical_form(canon) == canon);
        for (Symmetry s : symmetry_group(dims))
            CHECK(canonical_form(apply_symmetry(s, L)) == canon);
        CHECK(std::is_permutation(canon.labels.begin(), canon.labels.end(), L.labels.begin()));
    }
}

TEST_CASE("generic orbits on the 3x5 grid have size 4") {
    std::mt19937 rng(7);
    int generic = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const Labeling L = random_labeling(Dims::of(3, 5), rng);
        if (symmetry_orbit(L).size() == 4) ++generic;
    }
    CHECK(generic == 20);
}
