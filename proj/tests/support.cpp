#include "support.hpp"

#include <algorithm>

#include "facemagic/transform.hpp"

namespace facemagic::testing {

std::vector<Labeling> brute_force_3x3() {
    const Dims dims = Dims::of(3, 3);
    const auto faces = c4_faces(dims);
    std::vector<int> labels = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::vector<Labeling> magic;
    do {
        const Labeling L{dims, labels};
        int S = 0;
        bool ok = true;
        bool first = true;
        for (const QuadFace& f : faces) {
            int sum = 0;
            for (const Vertex& v : f.v) sum += L.at(v.i, v.j);
            if (first) {
                S = sum;
                first = false;
            } else if (sum != S) {
                ok = false;
                break;
            }
        }
        if (ok) magic.push_back(L);
    } while (std::next_permutation(labels.begin(), labels.end()));
    return magic;
}

Labeling random_elementary_op(const Labeling& L, std::mt19937& rng) {
    const int m_0 = L.dims.m0(), n_0 = L.dims.n0();
    switch (rng() % 4) {
        case 0: {
            const auto perms = parity_preserving_permutations(m_0);
            return permute_column_pairs(L, perms[rng() % perms.size()]);
        }
        case 1: {
            const auto perms = parity_preserving_permutations(n_0);
            return permute_row_pairs(L, perms[rng() % perms.size()]);
        }
        case 2: {
            std::vector<std::uint8_t> alpha(m_0);
            for (auto& b : alpha) b = rng() % 2;
            return swap_columns(L, alpha);
        }
        default: {
            std::vector<std::uint8_t> delta(n_0);
            for (auto& b : delta) b = rng() % 2;
            return swap_rows(L, delta);
        }
    }
}

} // namespace facemagic::testing
