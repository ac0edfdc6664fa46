#pragma once

#include <random>
#include <vector>

#include "facemagic/construct.hpp"
#include "facemagic/labeling.hpp"

namespace facemagic::testing {

// Builds a labeling from rows listed j = 1 first.
inline Labeling grid(std::vector<std::vector<int>> rows) {
    const int n = static_cast<int>(rows.size());
    const int m = static_cast<int>(rows.front().size());
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(m) * n);
    for (const auto& row : rows) labels.insert(labels.end(), row.begin(), row.end());
    return Labeling::make(Dims::of(m, n), std::move(labels));
}

// The value-53 labeling of the 5x5 projective grid.
inline Labeling fig2() {
    return grid({{1, 25, 2, 24, 3},
                 {23, 4, 22, 5, 21},
                 {6, 20, 7, 19, 8},
                 {18, 9, 17, 10, 16},
                 {11, 15, 12, 14, 13}});
}

// The standard value-165 labeling of the 9x9 projective grid.
inline Labeling table1() {
    return grid({{1, 81, 2, 77, 6, 76, 10, 72, 11},
                 {80, 3, 79, 7, 75, 8, 71, 12, 70},
                 {4, 78, 5, 74, 9, 73, 13, 69, 14},
                 {68, 15, 67, 19, 63, 20, 59, 24, 58},
                 {16, 66, 17, 62, 21, 61, 25, 57, 26},
                 {65, 18, 64, 22, 60, 23, 56, 27, 55},
                 {28, 54, 29, 50, 33, 49, 37, 45, 38},
                 {53, 30, 52, 34, 48, 35, 44, 39, 43},
                 {31, 51, 32, 47, 36, 46, 40, 42, 41}});
}

// The partial vertical alternating lexicographic labeling of the 5x5
// subgrid of the 15x5 projective grid.
inline PartialLabeling fig3() {
    PartialLabeling X{Dims::of(15, 5), Dims::of(5, 5), {}};
    for (const auto& row : std::vector<std::vector<int>>{{1, 73, 6, 68, 11},
                                                         {75, 4, 70, 9, 65},
                                                         {2, 72, 7, 67, 12},
                                                         {74, 5, 69, 10, 64},
                                                         {3, 71, 8, 66, 13}})
        X.labels.insert(X.labels.end(), row.begin(), row.end());
    return X;
}

// The value-153 labeling of the 15x5 projective grid (the 3-horizontal
// alternating connected sum example).
inline Labeling table2() {
    return grid({{1, 75, 2, 74, 3, 63, 14, 62, 15, 61, 26, 50, 27, 49, 28},
                 {73, 4, 72, 5, 71, 16, 60, 17, 59, 18, 48, 29, 47, 30, 46},
                 {6, 70, 7, 69, 8, 58, 19, 57, 20, 56, 31, 45, 32, 44, 33},
                 {68, 9, 67, 10, 66, 21, 55, 22, 54, 23, 43, 34, 42, 35, 41},
                 {11, 65, 12, 64, 13, 53, 24, 52, 25, 51, 36, 40, 37, 39, 38}});
}

inline Labeling random_labeling(const Dims& dims, std::mt19937& rng) {
    std::vector<int> labels(dims.cells());
    for (int v = 1; v <= dims.cells(); ++v) labels[v - 1] = v;
    std::shuffle(labels.begin(), labels.end(), rng);
    return Labeling::make(dims, std::move(labels));
}

// All magic labelings of the 3x3 projective grid found by scanning all 9!
// label permutations; the independent oracle for the propagation search.
std::vector<Labeling> brute_force_3x3();

// A random elementary projective labeling operation applied to L.
Labeling random_elementary_op(const Labeling& L, std::mt19937& rng);

} // namespace facemagic::testing
