#include "facemagic/transform.hpp"

#include <algorithm>
#include <set>

namespace facemagic {

static void require_bb_magic(const Labeling& L, const char* who) {
    if (!verify(L).is_magic)
        throw ValidationError(std::string(who) + " requires a magic labeling");
    if (!is_bicentrally_balanced(L))
        throw ValidationError(std::string(who) + " requires a bicentrally balanced labeling");
}

static void require_pair_permutation(const std::vector<int>& perm, int k, const char* who) {
    if (static_cast<int>(perm.size()) != k)
        throw ValidationError(std::string(who) + ": permutation must have " + std::to_string(k) +
                              " entries");
    std::vector<std::uint8_t> seen(k + 1, 0);
    for (int pos = 1; pos <= k; ++pos) {
        const int img = perm[pos - 1];
        if (img < 1 || img > k || seen[img])
            throw ValidationError(std::string(who) + ": not a permutation of 1.." +
                                  std::to_string(k));
        seen[img] = 1;
        if ((img - pos) % 2 != 0)
            throw ValidationError(std::string(who) + ": parity violation, position " +
                                  std::to_string(pos) + " -> " + std::to_string(img));
    }
}

static void require_mask(const std::vector<std::uint8_t>& mask, int k, const char* who) {
    if (static_cast<int>(mask.size()) != k)
        throw ValidationError(std::string(who) + ": mask must have " + std::to_string(k) +
                              " entries");
    for (std::uint8_t b : mask)
        if (b > 1) throw ValidationError(std::string(who) + ": mask entries must be 0 or 1");
}

Labeling permute_column_pairs(const Labeling& L, const std::vector<int>& eta) {
    require_bb_magic(L, "permute_column_pairs");
    const int m = L.dims.m, n = L.dims.n, m_0 = L.dims.m0();
    require_pair_permutation(eta, m_0, "permute_column_pairs");
    Labeling Z = L;
    for (int i = 1; i <= m_0; ++i)
        for (int j = 1; j <= n; ++j) {
            Z.at(i, j) = L.at(eta[i - 1], j);
            Z.at(m + 1 - i, j) = L.at(m + 1 - eta[i - 1], j);
        }
    return Z;
}

Labeling permute_row_pairs(const Labeling& L, const std::vector<int>& kappa) {
    require_bb_magic(L, "permute_row_pairs");
    const int m = L.dims.m, n = L.dims.n, n_0 = L.dims.n0();
    require_pair_permutation(kappa, n_0, "permute_row_pairs");
    Labeling Z = L;
    for (int j = 1; j <= n_0; ++j)
        for (int i = 1; i <= m; ++i) {
            Z.at(i, j) = L.at(i, kappa[j - 1]);
            Z.at(i, n + 1 - j) = L.at(i, n + 1 - kappa[j - 1]);
        }
    return Z;
}

Labeling swap_columns(const Labeling& L, const std::vector<std::uint8_t>& alpha) {
    require_bb_magic(L, "swap_columns");
    const int m = L.dims.m, n = L.dims.n, m_0 = L.dims.m0();
    require_mask(alpha, m_0, "swap_columns");
    Labeling Z = L;
    for (int i = 1; i <= m_0; ++i) {
        if (!alpha[i - 1]) continue;
        for (int j = 1; j <= n; ++j) {
            Z.at(i, j) = L.at(m + 1 - i, j);
            Z.at(m + 1 - i, j) = L.at(i, j);
        }
    }
    return Z;
}

Labeling swap_rows(const Labeling& L, const std::vector<std::uint8_t>& delta) {
    require_bb_magic(L, "swap_rows");
    const int m = L.dims.m, n = L.dims.n, n_0 = L.dims.n0();
    require_mask(delta, n_0, "swap_rows");
    Labeling Z = L;
    for (int j = 1; j <= n_0; ++j) {
        if (!delta[j - 1]) continue;
        for (int i = 1; i <= m; ++i) {
            Z.at(i, j) = L.at(i, n + 1 - j);
            Z.at(i, n + 1 - j) = L.at(i, j);
        }
    }
    return Z;
}

// Sorting step of the standardization: within each parity class of the
// half-range {1..k}, route the source pair with the t-th smallest center
// value to the t-th position (largest when the class's condition is
// decreasing). Values are distinct labels, so no tie-break is needed;
// distinctness is guaranteed by the bijection invariant.
static std::vector<int> sorting_permutation(int k, int center_parity_plus,
                                            const std::vector<int>& center_vals) {
    std::vector<int> perm(k);
    for (int parity = 0; parity <= 1; ++parity) {
        std::vector<int> members;
        for (int pos = 1; pos <= k; ++pos)
            if (pos % 2 == parity) members.push_back(pos);
        if (members.empty()) continue;
        const bool increasing = (members.front() + center_parity_plus) % 2 == 0;
        std::vector<int> sources = members;
        std::sort(sources.begin(), sources.end(), [&](int a, int b) {
            return increasing ? center_vals[a - 1] < center_vals[b - 1]
                              : center_vals[a - 1] > center_vals[b - 1];
        });
        for (std::size_t t = 0; t < members.size(); ++t) perm[members[t] - 1] = sources[t];
    }
    return perm;
}

Labeling standardize(const Labeling& L) {
    require_bb_magic(L, "standardize");
    const int m = L.dims.m, n = L.dims.n;
    const int m_0 = L.dims.m0(), n_0 = L.dims.n0();
    const int ci = L.dims.m0p(), cj = L.dims.n0p();

    // Column swap mask: put the small half of each column pair on the side
    // its center-row condition wants.
    Labeling X = L;
    std::vector<std::uint8_t> alpha(m_0, 0);
    for (int i = 1; i <= m_0; ++i) {
        const int target = target_pair_sum(X.dims, Vertex{i, cj});
        const bool low = 2 * X.at(i, cj) < target;
        alpha[i - 1] = ((i + cj) % 2 == 0) ? !low : low;
    }
    X = swap_columns(X, alpha);

    // Column pair permutation sorting the center row within parity classes.
    std::vector<int> center_row(m_0);
    for (int i = 1; i <= m_0; ++i) center_row[i - 1] = X.at(i, cj);
    X = permute_column_pairs(X, sorting_permutation(m_0, cj, center_row));

    // Rows, mirrored.
    std::vector<std::uint8_t> delta(n_0, 0);
    for (int j = 1; j <= n_0; ++j) {
        const int target = target_pair_sum(X.dims, Vertex{ci, j});
        const bool low = 2 * X.at(ci, j) < target;
        delta[j - 1] = ((ci + j) % 2 == 0) ? !low : low;
    }
    X = swap_rows(X, delta);

    std::vector<int> center_col(n_0);
    for (int j = 1; j <= n_0; ++j) center_col[j - 1] = X.at(ci, j);
    X = permute_row_pairs(X, sorting_permutation(n_0, ci, center_col));
    return X;
}

bool equivalent(const Labeling& L1, const Labeling& L2) {
    if (L1.dims != L2.dims)
        throw ValidationError("equivalent: labelings have different dimensions");
    return standardize(L1) == standardize(L2);
}

std::vector<std::vector<int>> parity_preserving_permutations(int k) {
    std::vector<int> odds, evens;
    for (int pos = 1; pos <= k; ++pos) (pos % 2 ? odds : evens).push_back(pos);
    std::vector<std::vector<int>> result;
    std::vector<int> op = odds;
    do {
        std::vector<int> ep = evens;
        do {
            std::vector<int> perm(k);
            for (std::size_t t = 0; t < odds.size(); ++t) perm[odds[t] - 1] = op[t];
            for (std::size_t t = 0; t < evens.size(); ++t) perm[evens[t] - 1] = ep[t];
            result.push_back(std::move(perm));
        } while (std::next_permutation(ep.begin(), ep.end()));
    } while (std::next_permutation(op.begin(), op.end()));
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Labeling> equivalence_class(const Labeling& L) {
    require_bb_magic(L, "equivalence_class");
    const int m_0 = L.dims.m0(), n_0 = L.dims.n0();
    const auto etas = parity_preserving_permutations(m_0);
    const auto kappas = parity_preserving_permutations(n_0);

    std::set<std::vector<int>> seen;
    std::vector<Labeling> result;
    for (int amask = 0; amask < (1 << m_0); ++amask) {
        std::vector<std::uint8_t> alpha(m_0);
        for (int b = 0; b < m_0; ++b) alpha[b] = (amask >> b) & 1;
        const Labeling A = swap_columns(L, alpha);
        for (const auto& eta : etas) {
            const Labeling E = permute_column_pairs(A, eta);
            for (int dmask = 0; dmask < (1 << n_0); ++dmask) {
                std::vector<std::uint8_t> delta(n_0);
                for (int b = 0; b < n_0; ++b) delta[b] = (dmask >> b) & 1;
                const Labeling D = swap_rows(E, delta);
                for (const auto& kappa : kappas) {
                    Labeling K = permute_row_pairs(D, kappa);
                    if (seen.insert(K.labels).second) result.push_back(std::move(K));
                }
            }
        }
    }
    return result;
}

} // namespace facemagic
