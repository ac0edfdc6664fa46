#include "facemagic/construct.hpp"

#include <algorithm>
#include <numeric>

namespace facemagic {

const char* orientation_name(Orientation o) {
    return o == Orientation::Horizontal ? "horizontal" : "vertical";
}

FactorizationSequence FactorizationSequence::make(Orientation o, std::vector<int> factors) {
    if (factors.empty())
        throw ValidationError("factorization sequence must have at least one pair");
    if (factors.size() % 2 == 1) factors.push_back(1); // odd-length convention
    const int k = static_cast<int>(factors.size()) / 2;
    for (int t = 0; t < 2 * k; ++t) {
        const int f = factors[t];
        const bool trailing_g = (t == 2 * k - 1);
        if (f < 1 || (f == 1 && !trailing_g))
            throw ValidationError("factor " + std::to_string(f) +
                                  " at position " + std::to_string(t + 1) +
                                  " must exceed 1");
        if (f % 2 == 0)
            throw ValidationError("factor " + std::to_string(f) + " is even; all factors of an "
                                  "odd x odd grid are odd");
    }
    if (factors.back() == 1 && k < 2)
        throw ValidationError("odd-length sequences need at least two pairs");
    return FactorizationSequence{o, std::move(factors)};
}

int FactorizationSequence::product_f() const {
    int p = 1;
    for (std::size_t t = 0; t < factors.size(); t += 2) p *= factors[t];
    return p;
}

int FactorizationSequence::product_g() const {
    int p = 1;
    for (std::size_t t = 1; t < factors.size(); t += 2) p *= factors[t];
    return p;
}

Dims FactorizationSequence::target_dims() const {
    return orientation == Orientation::Horizontal ? Dims::of(product_f(), product_g())
                                                  : Dims::of(product_g(), product_f());
}

std::string FactorizationSequence::to_string() const {
    std::string out = orientation == Orientation::Horizontal ? "hbbl(" : "vbbl(";
    for (std::size_t t = 0; t < factors.size(); ++t) {
        if (t) out += ",";
        out += std::to_string(factors[t]);
    }
    return out + ")";
}

// Ordered factorizations of x into exactly p parts, each part > 1.
static void ordered_factorizations(int x, int p, std::vector<int>& prefix,
                                   std::vector<std::vector<int>>& out) {
    if (p == 0) {
        if (x == 1) out.push_back(prefix);
        return;
    }
    for (int d = 2; d <= x; ++d) {
        if (x % d != 0) continue;
        prefix.push_back(d);
        ordered_factorizations(x / d, p - 1, prefix, out);
        prefix.pop_back();
    }
}

static std::vector<std::vector<int>> ordered_factorizations(int x, int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    ordered_factorizations(x, p, prefix, out);
    return out;
}

std::vector<FactorizationSequence> enumerate_factorization_sequences(int m, int n,
                                                                     Orientation o) {
    if (m < 3 || n < 3 || m % 2 == 0 || n % 2 == 0)
        throw ValidationError("factorization sequences need odd dimensions >= 3");
    // Horizontal sequences factor (m, n); vertical ones factor (n, m).
    const int fx = o == Orientation::Horizontal ? m : n;
    const int gx = o == Orientation::Horizontal ? n : m;

    std::vector<FactorizationSequence> out;
    auto emit = [&](const std::vector<int>& fs, const std::vector<int>& gs, bool odd_length) {
        std::vector<int> seq;
        seq.reserve(fs.size() * 2);
        for (std::size_t t = 0; t < fs.size(); ++t) {
            seq.push_back(fs[t]);
            seq.push_back(odd_length && t + 1 == fs.size() ? 1 : gs[t]);
        }
        out.push_back(FactorizationSequence{o, std::move(seq)});
    };
    for (int k = 1;; ++k) {
        const auto even_f = ordered_factorizations(fx, k);
        const auto even_g = ordered_factorizations(gx, k);
        const auto odd_f = ordered_factorizations(fx, k + 1);
        if (even_f.empty() && odd_f.empty()) break;
        for (const auto& fs : even_f)
            for (const auto& gs : even_g) emit(fs, gs, false);
        for (const auto& fs : odd_f)
            for (const auto& gs : even_g) emit(fs, gs, true);
    }
    return out;
}

long long tau(int m, int n) {
    return static_cast<long long>(enumerate_factorization_sequences(m, n).size());
}

Labeling PartialLabeling::to_labeling() const {
    if (sub != ambient)
        throw ValidationError("partial labeling covers only a " + std::to_string(sub.m) + "x" +
                              std::to_string(sub.n) + " subgrid of the ambient grid");
    return Labeling::make(ambient, labels);
}

static void require_subgrid(int M, int N, int m, int n, const char* who) {
    for (int v : {M, N, m, n})
        if (v % 2 == 0) throw ValidationError(std::string(who) + ": all dimensions must be odd");
    if (m < 3 || n < 3) throw ValidationError(std::string(who) + ": subgrid must be at least 3x3");
    if (m > M || n > N) throw ValidationError(std::string(who) + ": subgrid exceeds ambient grid");
}

PartialLabeling hall(int M, int N, int m, int n) {
    require_subgrid(M, N, m, n, "hall");
    const int MN = M * N;
    const int m0 = (m - 1) / 2, m0p = m0 + 1, n0 = (n - 1) / 2, n0p = n0 + 1;
    PartialLabeling X{Dims::of(M, N), Dims::of(m, n), std::vector<int>(m * n, 0)};
    for (int i = 1; i <= m0p; ++i)
        for (int j = 1; j <= n0p; ++j) X.at(2 * i - 1, 2 * j - 1) = m * (j - 1) + i;
    for (int i = 1; i <= m0; ++i)
        for (int j = 1; j <= n0; ++j) X.at(2 * i, 2 * j) = m * (j - 1) + m0p + i;
    for (int i = 1; i <= m0; ++i)
        for (int j = 1; j <= n0p; ++j) X.at(2 * i, 2 * j - 1) = MN + m * (1 - j) + 1 - i;
    for (int i = 1; i <= m0p; ++i)
        for (int j = 1; j <= n0; ++j) X.at(2 * i - 1, 2 * j) = MN - m * j + m0p + 1 - i;
    return X;
}

PartialLabeling vall(int M, int N, int m, int n) {
    require_subgrid(M, N, m, n, "vall");
    const int MN = M * N;
    const int m0 = (m - 1) / 2, m0p = m0 + 1, n0 = (n - 1) / 2, n0p = n0 + 1;
    PartialLabeling Y{Dims::of(M, N), Dims::of(m, n), std::vector<int>(m * n, 0)};
    for (int i = 1; i <= m0p; ++i)
        for (int j = 1; j <= n0p; ++j) Y.at(2 * i - 1, 2 * j - 1) = n * (i - 1) + j;
    for (int i = 1; i <= m0; ++i)
        for (int j = 1; j <= n0; ++j) Y.at(2 * i, 2 * j) = n * (i - 1) + n0p + j;
    for (int i = 1; i <= m0; ++i)
        for (int j = 1; j <= n0p; ++j) Y.at(2 * i, 2 * j - 1) = MN - n * i + n0p + 1 - j;
    for (int i = 1; i <= m0p; ++i)
        for (int j = 1; j <= n0; ++j) Y.at(2 * i - 1, 2 * j) = MN + n * (1 - i) + 1 - j;
    return Y;
}

static void require_odd_r(int r, const char* who) {
    if (r < 1 || r % 2 == 0)
        throw ValidationError(std::string(who) + ": replication factor must be odd and positive, got " +
                              std::to_string(r));
}

PartialLabeling h_connected_sum(const PartialLabeling& X, int r) {
    require_odd_r(r, "h_connected_sum");
    if (r == 1) return X;
    const int m = X.sub.m, n = X.sub.n, mn = m * n, MN = X.ambient.cells();
    if (r * m > X.ambient.m)
        throw ValidationError("h_connected_sum: " + std::to_string(r) + " blocks of width " +
                              std::to_string(m) + " exceed the ambient grid");
    const int r0 = (r - 1) / 2;
    PartialLabeling Y{X.ambient, Dims::of(r * m, n), std::vector<int>(r * m * n, 0)};
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= m; ++i) {
            const int x = X.at(i, j);
            const bool odd_cell = (i + j) % 2 == 1;
            for (int k = 0; k <= r0; ++k) {
                // even blocks keep the pattern, shifted by k*mn toward the middle
                Y.at(2 * k * m + i, j) = odd_cell ? x - k * mn : x + k * mn;
                if (k >= 1) // odd blocks mirror the labels against MN
                    Y.at((2 * k - 1) * m + i, j) = odd_cell
                                                       ? MN - x + k * mn - (mn - 3) / 2
                                                       : MN - x - k * mn + (mn + 3) / 2;
            }
        }
    return Y;
}

PartialLabeling v_connected_sum(const PartialLabeling& X, int r) {
    require_odd_r(r, "v_connected_sum");
    if (r == 1) return X;
    const int m = X.sub.m, n = X.sub.n, mn = m * n, MN = X.ambient.cells();
    if (r * n > X.ambient.n)
        throw ValidationError("v_connected_sum: " + std::to_string(r) + " blocks of height " +
                              std::to_string(n) + " exceed the ambient grid");
    const int r0 = (r - 1) / 2;
    PartialLabeling Y{X.ambient, Dims::of(m, r * n), std::vector<int>(m * r * n, 0)};
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= m; ++i) {
            const int x = X.at(i, j);
            const bool odd_cell = (i + j) % 2 == 1;
            for (int k = 0; k <= r0; ++k) {
                Y.at(i, 2 * k * n + j) = odd_cell ? x - k * mn : x + k * mn;
                if (k >= 1)
                    Y.at(i, (2 * k - 1) * n + j) = odd_cell
                                                       ? MN - x + k * mn - (mn - 3) / 2
                                                       : MN - x - k * mn + (mn + 3) / 2;
            }
        }
    return Y;
}

PartialCheck is_partial_bb(const PartialLabeling& X) {
    const int M = X.ambient.m, N = X.ambient.n, MN = M * N;
    const int m = X.sub.m, n = X.sub.n, mn = m * n;
    if (m % 2 == 0 || n % 2 == 0 || M % 2 == 0 || N % 2 == 0)
        return {false, "dimensions must be odd"};

    auto fail = [](std::string msg) { return PartialCheck{false, std::move(msg)}; };

    // (1) planar face sums
    for (int j = 1; j <= n - 1; ++j)
        for (int i = 1; i <= m - 1; ++i) {
            const int sum = X.at(i, j) + X.at(i + 1, j) + X.at(i, j + 1) + X.at(i + 1, j + 1);
            if (sum != 2 * MN + 3)
                return fail("face at (" + std::to_string(i) + "," + std::to_string(j) +
                            ") sums to " + std::to_string(sum) + ", expected " +
                            std::to_string(2 * MN + 3));
        }

    // (2),(3) label sets on the two parity classes
    std::vector<int> low, high;
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= m; ++i) ((i + j) % 2 == 0 ? low : high).push_back(X.at(i, j));
    std::sort(low.begin(), low.end());
    std::sort(high.begin(), high.end());
    for (int t = 0; t < static_cast<int>(low.size()); ++t)
        if (low[t] != t + 1) return fail("even-parity labels are not {1..(mn+1)/2}");
    const int high_base = MN - (mn - 3) / 2;
    for (int t = 0; t < static_cast<int>(high.size()); ++t)
        if (high[t] != high_base + t)
            return fail("odd-parity labels are not {MN-(mn-3)/2..MN}");

    // (4),(5) antipodal pair sums
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= m; ++i) {
            const int pair = X.at(i, j) + X.at(m + 1 - i, n + 1 - j);
            const int expected = (i + j) % 2 == 0 ? (mn + 3) / 2 : 2 * MN - (mn - 3) / 2;
            if (pair != expected)
                return fail("pair sum at (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is " + std::to_string(pair) + ", expected " +
                            std::to_string(expected));
        }

    // (6) center row / column monotonicity
    const int ci = (m + 1) / 2, cj = (n + 1) / 2;
    for (int i = 1; i <= m - 2; ++i) {
        const bool increasing = (i + cj) % 2 == 0;
        if (increasing ? X.at(i, cj) >= X.at(i + 2, cj) : X.at(i, cj) <= X.at(i + 2, cj))
            return fail("center-row monotonicity fails at i=" + std::to_string(i));
    }
    for (int j = 1; j <= n - 2; ++j) {
        const bool increasing = (ci + j) % 2 == 0;
        if (increasing ? X.at(ci, j) >= X.at(ci, j + 2) : X.at(ci, j) <= X.at(ci, j + 2))
            return fail("center-column monotonicity fails at j=" + std::to_string(j));
    }
    return {};
}

Labeling hbbl(const FactorizationSequence& F) {
    if (F.orientation != Orientation::Horizontal)
        throw ValidationError("hbbl needs a horizontal sequence");
    const Dims dims = F.target_dims();
    PartialLabeling X = hall(dims.m, dims.n, F.factors[0], F.factors[1]);
    for (int t = 1; t < F.pairs(); ++t) {
        X = h_connected_sum(X, F.factors[2 * t]);
        X = v_connected_sum(X, F.factors[2 * t + 1]);
    }
    return X.to_labeling();
}

Labeling vbbl(const FactorizationSequence& F) {
    if (F.orientation != Orientation::Vertical)
        throw ValidationError("vbbl needs a vertical sequence");
    const Dims dims = F.target_dims(); // (m, n) = (product_g, product_f)
    PartialLabeling X = vall(dims.m, dims.n, F.factors[1], F.factors[0]);
    for (int t = 1; t < F.pairs(); ++t) {
        X = v_connected_sum(X, F.factors[2 * t]);
        X = h_connected_sum(X, F.factors[2 * t + 1]);
    }
    return X.to_labeling();
}

Labeling construct_labeling(const FactorizationSequence& F) {
    return F.orientation == Orientation::Horizontal ? hbbl(F) : vbbl(F);
}

} // namespace facemagic
