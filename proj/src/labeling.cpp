#include "facemagic/labeling.hpp"

#include <algorithm>

namespace facemagic {

std::optional<std::string> check_bijection(const Dims& dims, const std::vector<int>& labels) {
    const int mn = dims.cells();
    if (static_cast<int>(labels.size()) != mn)
        return "expected " + std::to_string(mn) + " labels, got " + std::to_string(labels.size());
    std::vector<std::uint8_t> seen(mn + 1, 0);
    for (int idx = 0; idx < mn; ++idx) {
        const int v = labels[idx];
        const int i = idx % dims.m + 1, j = idx / dims.m + 1;
        const std::string cell = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        if (v < 1 || v > mn)
            return "label " + std::to_string(v) + " at " + cell + " is outside 1.." +
                   std::to_string(mn);
        if (seen[v]) return "duplicate label " + std::to_string(v) + " at " + cell;
        seen[v] = 1;
    }
    return std::nullopt;
}

Labeling Labeling::make(Dims dims, std::vector<int> labels) {
    if (auto err = check_bijection(dims, labels)) throw ValidationError(*err);
    return Labeling{dims, std::move(labels)};
}

const char* value_class_name(ValueClass c) {
    switch (c) {
        case ValueClass::SMinus: return "S_minus";
        case ValueClass::SMid: return "S_mid";
        case ValueClass::SPlus: return "S_plus";
        case ValueClass::Other: return "other";
    }
    return "?";
}

static ValueClass classify(const Dims& dims, int S) {
    const int mn = dims.cells();
    if (S == 2 * mn + 1) return ValueClass::SMinus;
    if (S == 2 * mn + 2) return ValueClass::SMid;
    if (S == 2 * mn + 3) return ValueClass::SPlus;
    return ValueClass::Other;
}

MagicReport verify(const Labeling& L) {
    if (auto err = check_bijection(L.dims, L.labels)) throw ValidationError(*err);
    MagicReport rep;
    auto [d1, d2] = digon_sums(L);
    rep.D1 = d1;
    rep.D2 = d2;

    bool magic = true;
    int common = 0;
    bool first = true;
    for (const QuadFace& f : c4_faces(L.dims)) {
        int sum = 0;
        for (const Vertex& v : f.v) sum += L.at(v.i, v.j);
        if (first) {
            common = sum;
            first = false;
        } else if (sum != common) {
            magic = false;
        }
        if (rep.face_sums_sample.size() < 16 &&
            std::find(rep.face_sums_sample.begin(), rep.face_sums_sample.end(), sum) ==
                rep.face_sums_sample.end())
            rep.face_sums_sample.push_back(sum);
    }
    rep.is_magic = magic;
    if (magic) {
        rep.S = common;
        rep.value_class = classify(L.dims, common);
        rep.face_sums_sample.clear();
    }
    return rep;
}

std::pair<int, int> digon_sums(const Labeling& L) {
    const int m = L.dims.m, n = L.dims.n;
    return {L.at(1, 1) + L.at(m, n), L.at(m, 1) + L.at(1, n)};
}

Labeling complement(const Labeling& L) {
    Labeling Y = L;
    const int mn1 = L.dims.cells() + 1;
    for (int& v : Y.labels) v = mn1 - v;
    return Y;
}

PairTargets PairTargets::of(const Dims& dims) {
    if (!dims.both_odd())
        throw ValidationError("pair-sum targets are defined only for odd x odd grids");
    const int mn = dims.cells();
    return PairTargets{dims, (mn + 3) / 2, (3 * mn + 3) / 2};
}

int target_pair_sum(const Dims& dims, Vertex v) {
    const PairTargets t = PairTargets::of(dims);
    return (v.i + v.j) % 2 == 0 ? t.even_sum : t.odd_sum;
}

bool is_bicentrally_balanced(const Labeling& L) {
    const PairTargets t = PairTargets::of(L.dims);
    const int m = L.dims.m, n = L.dims.n;
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= m; ++i) {
            const int target = (i + j) % 2 == 0 ? t.even_sum : t.odd_sum;
            if (L.at(i, j) + L.at(m + 1 - i, n + 1 - j) != target) return false;
        }
    return true;
}

static void require_bicentrally_balanced_magic(const Labeling& L, const char* who) {
    MagicReport rep = verify(L);
    if (!rep.is_magic)
        throw ValidationError(std::string(who) + " requires a magic labeling");
    if (!is_bicentrally_balanced(L))
        throw ValidationError(std::string(who) + " requires a bicentrally balanced labeling");
}

std::vector<int> row_pair_sums(const Labeling& L) {
    require_bicentrally_balanced_magic(L, "row_pair_sums");
    const int m = L.dims.m, n = L.dims.n;
    const int m_0 = L.dims.m0(), n_0 = L.dims.n0();
    const int S = *verify(L).S;

    std::vector<int> a(n_0);
    for (int j = 1; j <= n_0; ++j) a[j - 1] = L.at(1, j) + L.at(1, j + 1);

    auto fail = [](int i, int j, const char* identity) {
        throw StructureViolation("row-pair identity " + std::string(identity) + " fails at i=" +
                                 std::to_string(i) + ", j=" + std::to_string(j));
    };
    for (int i = 1; i <= m_0; ++i) {
        for (int j = 1; j <= n_0; ++j) {
            const int lo = (i % 2 == 1) ? a[j - 1] : S - a[j - 1];
            const int hi = S - lo;
            if (L.at(i, j) + L.at(i, j + 1) != lo) fail(i, j, "x(i,j)+x(i,j+1)");
            if (L.at(i, n + 1 - j) + L.at(i, n - j) != hi) fail(i, j, "x(i,n+1-j)+x(i,n-j)");
            if (L.at(m + 1 - i, j) + L.at(m + 1 - i, j + 1) != lo)
                fail(i, j, "x(m+1-i,j)+x(m+1-i,j+1)");
            if (L.at(m + 1 - i, n + 1 - j) + L.at(m + 1 - i, n - j) != hi)
                fail(i, j, "x(m+1-i,n+1-j)+x(m+1-i,n-j)");
        }
    }
    return a;
}

bool is_standard(const Labeling& L) {
    require_bicentrally_balanced_magic(L, "is_standard");
    const int m = L.dims.m, n = L.dims.n;
    const int ci = L.dims.m0p(), cj = L.dims.n0p();
    for (int i = 1; i <= m - 2; ++i) {
        const bool increasing = (i + cj) % 2 == 0;
        if (increasing ? L.at(i, cj) >= L.at(i + 2, cj) : L.at(i, cj) <= L.at(i + 2, cj))
            return false;
    }
    for (int j = 1; j <= n - 2; ++j) {
        const bool increasing = (ci + j) % 2 == 0;
        if (increasing ? L.at(ci, j) >= L.at(ci, j + 2) : L.at(ci, j) <= L.at(ci, j + 2))
            return false;
    }
    return true;
}

Labeling apply_symmetry(Symmetry s, const Labeling& L) {
    if (!symmetry_legal(s, L.dims))
        throw ValidationError(std::string("symmetry ") + symmetry_name(s) +
                              " requires a square grid");
    const Symmetry inv = symmetry_inverse(s);
    Labeling out = L;
    for (int j = 1; j <= L.dims.n; ++j)
        for (int i = 1; i <= L.dims.m; ++i) {
            const Vertex src = apply_symmetry(inv, L.dims, Vertex{i, j});
            out.at(i, j) = L.at(src.i, src.j);
        }
    return out;
}

Labeling canonical_form(const Labeling& L) {
    Labeling best = L;
    for (Symmetry s : symmetry_group(L.dims)) {
        Labeling cand = apply_symmetry(s, L);
        if (cand.labels < best.labels) best = std::move(cand);
    }
    return best;
}

std::vector<Labeling> symmetry_orbit(const Labeling& L) {
    std::vector<Labeling> orbit;
    for (Symmetry s : symmetry_group(L.dims)) {
        Labeling cand = apply_symmetry(s, L);
        if (std::find(orbit.begin(), orbit.end(), cand) == orbit.end())
            orbit.push_back(std::move(cand));
    }
    return orbit;
}

} // namespace facemagic
