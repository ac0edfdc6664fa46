#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "facemagic/errors.hpp"

namespace facemagic {

/// Grid dimensions of the m x n projective grid graph. Columns are indexed
/// i = 1..m, rows j = 1..n. The halved quantities m0 = (m-1)/2 and
/// m0p = m0+1 are defined only for odd dimensions; m0p (resp. n0p) is the
/// index of the center column (row).
struct Dims {
    int m = 0;
    int n = 0;

    static Dims of(int m, int n);

    int cells() const { return m * n; }
    bool square() const { return m == n; }
    bool both_odd() const { return (m % 2 == 1) && (n % 2 == 1); }
    bool both_even() const { return (m % 2 == 0) && (n % 2 == 0); }

    int m0() const;
    int n0() const;
    int m0p() const { return m0() + 1; }
    int n0p() const { return n0() + 1; }

    bool operator==(const Dims&) const = default;
};

struct Vertex {
    int i = 0; // column, 1..m
    int j = 0; // row, 1..n

    auto operator<=>(const Vertex&) const = default;
};

/// A quadrilateral face, stored in a fixed cyclic vertex order. Face sums
/// are order-independent; the order only pins serialization.
struct QuadFace {
    std::array<Vertex, 4> v;
};

/// One of the two 2-gon faces at opposite corner pairs. Digons carry no
/// magic constraint; they are kept for the digon-sum bookkeeping.
struct Digon {
    Vertex a, b;
};

enum class Symmetry { R0, R90, R180, R270, H, V, Dp, Dm };

const char* symmetry_name(Symmetry s);
Symmetry symmetry_from_name(const std::string& name); // throws ValidationError

/// All quad faces of P_{m,n}: the (m-1)(n-1) interior faces plus the two
/// boundary wrap families; mn-1 in total.
std::vector<QuadFace> c4_faces(const Dims& dims);

/// The two digons {(1,1),(m,n)} and {(m,1),(1,n)}.
std::array<Digon, 2> digons(const Dims& dims);

/// {R0, R180, H, V} for rectangular grids, the dihedral group of order 8
/// when m = n.
std::vector<Symmetry> symmetry_group(const Dims& dims);

bool symmetry_legal(Symmetry s, const Dims& dims);
Symmetry symmetry_inverse(Symmetry s);

/// Coordinate action of a symmetry on a vertex. Throws ValidationError if
/// the symmetry needs m = n and the grid is rectangular.
Vertex apply_symmetry(Symmetry s, const Dims& dims, Vertex v);

} // namespace facemagic
