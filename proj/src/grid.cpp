#include "facemagic/grid.hpp"

namespace facemagic {

Dims Dims::of(int m, int n) {
    if (m < 2 || n < 2)
        throw ValidationError("grid dimensions must be at least 2, got " + std::to_string(m) +
                              "x" + std::to_string(n));
    return Dims{m, n};
}

int Dims::m0() const {
    if (m % 2 == 0) throw ValidationError("m0 is defined only for odd m");
    return (m - 1) / 2;
}

int Dims::n0() const {
    if (n % 2 == 0) throw ValidationError("n0 is defined only for odd n");
    return (n - 1) / 2;
}

const char* symmetry_name(Symmetry s) {
    switch (s) {
        case Symmetry::R0: return "R0";
        case Symmetry::R90: return "R90";
        case Symmetry::R180: return "R180";
        case Symmetry::R270: return "R270";
        case Symmetry::H: return "H";
        case Symmetry::V: return "V";
        case Symmetry::Dp: return "D+";
        case Symmetry::Dm: return "D-";
    }
    return "?";
}

Symmetry symmetry_from_name(const std::string& name) {
    for (Symmetry s : {Symmetry::R0, Symmetry::R90, Symmetry::R180, Symmetry::R270, Symmetry::H,
                       Symmetry::V, Symmetry::Dp, Symmetry::Dm})
        if (name == symmetry_name(s)) return s;
    throw ValidationError("unknown symmetry tag '" + name + "'");
}

std::vector<QuadFace> c4_faces(const Dims& dims) {
    const int m = dims.m, n = dims.n;
    std::vector<QuadFace> faces;
    faces.reserve(m * n - 1);
    // interior faces
    for (int j = 1; j <= n - 1; ++j)
        for (int i = 1; i <= m - 1; ++i)
            faces.push_back({{Vertex{i, j}, Vertex{i, j + 1}, Vertex{i + 1, j + 1}, Vertex{i + 1, j}}});
    // right-left wrap: column m glues to column 1 upside down
    for (int j = 1; j <= n - 1; ++j)
        faces.push_back({{Vertex{m, j}, Vertex{m, j + 1}, Vertex{1, n - j}, Vertex{1, n + 1 - j}}});
    // top-bottom wrap: row n glues to row 1 reversed
    for (int i = 1; i <= m - 1; ++i)
        faces.push_back({{Vertex{i, n}, Vertex{i + 1, n}, Vertex{m - i, 1}, Vertex{m + 1 - i, 1}}});
    return faces;
}

std::array<Digon, 2> digons(const Dims& dims) {
    return {Digon{Vertex{1, 1}, Vertex{dims.m, dims.n}},
            Digon{Vertex{dims.m, 1}, Vertex{1, dims.n}}};
}

std::vector<Symmetry> symmetry_group(const Dims& dims) {
    if (dims.square())
        return {Symmetry::R0, Symmetry::R90, Symmetry::R180, Symmetry::R270,
                Symmetry::H,  Symmetry::V,   Symmetry::Dp,   Symmetry::Dm};
    return {Symmetry::R0, Symmetry::R180, Symmetry::H, Symmetry::V};
}

bool symmetry_legal(Symmetry s, const Dims& dims) {
    switch (s) {
        case Symmetry::R90:
        case Symmetry::R270:
        case Symmetry::Dp:
        case Symmetry::Dm:
            return dims.square();
        default:
            return true;
    }
}

Symmetry symmetry_inverse(Symmetry s) {
    switch (s) {
        case Symmetry::R90: return Symmetry::R270;
        case Symmetry::R270: return Symmetry::R90;
        default: return s; // all others are involutions
    }
}

Vertex apply_symmetry(Symmetry s, const Dims& dims, Vertex v) {
    if (!symmetry_legal(s, dims))
        throw ValidationError(std::string("symmetry ") + symmetry_name(s) +
                              " requires a square grid");
    const int m = dims.m, n = dims.n;
    switch (s) {
        case Symmetry::R0: return v;
        case Symmetry::R180: return {m + 1 - v.i, n + 1 - v.j};
        case Symmetry::H: return {v.i, n + 1 - v.j};
        case Symmetry::V: return {m + 1 - v.i, v.j};
        case Symmetry::R90: return {v.j, m + 1 - v.i};
        case Symmetry::R270: return {n + 1 - v.j, v.i};
        case Symmetry::Dp: return {v.j, v.i};
        case Symmetry::Dm: return {m + 1 - v.j, n + 1 - v.i};
    }
    return v;
}

} // namespace facemagic
