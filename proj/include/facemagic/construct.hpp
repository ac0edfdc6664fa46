#pragma once

#include <string>
#include <vector>

#include "facemagic/labeling.hpp"

namespace facemagic {

enum class Orientation { Horizontal, Vertical };

const char* orientation_name(Orientation o);

/// An alternating ordered factorization (f1,g1,f2,g2,...,fk,gk). For the
/// horizontal orientation the f-entries multiply to m and the g-entries to
/// n; for the vertical orientation f multiplies to n and g to m. Every
/// entry exceeds 1 except that the trailing g may be 1 (the encoding of an
/// odd-length sequence), which requires at least two pairs.
struct FactorizationSequence {
    Orientation orientation = Orientation::Horizontal;
    std::vector<int> factors;

    static FactorizationSequence make(Orientation o, std::vector<int> factors);

    int pairs() const { return static_cast<int>(factors.size()) / 2; }
    int product_f() const;
    int product_g() const;
    /// Dimensions of the grid the sequence constructs a labeling for.
    Dims target_dims() const;
    std::string to_string() const;

    bool operator==(const FactorizationSequence&) const = default;
};

/// All (m,n)-projective factorization sequences (horizontal orientation) or
/// (n,m)-sequences (vertical), in a deterministic order, no duplicates.
std::vector<FactorizationSequence> enumerate_factorization_sequences(
    int m, int n, Orientation o = Orientation::Horizontal);

/// tau(m,n) = number of distinct (m,n)-projective factorization sequences.
long long tau(int m, int n);

/// A labeling of an m x n subgrid embedded in an ambient M x N projective
/// grid. Labels are drawn from the prescribed split of {1..MN}: low labels
/// on even-parity cells, top labels on odd-parity cells.
struct PartialLabeling {
    Dims ambient;
    Dims sub;
    std::vector<int> labels; // row-major over the subgrid

    int at(int i, int j) const { return labels[(j - 1) * sub.m + (i - 1)]; }
    int& at(int i, int j) { return labels[(j - 1) * sub.m + (i - 1)]; }

    /// Conversion once the subgrid fills the ambient grid.
    Labeling to_labeling() const;

    bool operator==(const PartialLabeling&) const = default;
};

/// Partial horizontal alternating lexicographic labeling on the m x n
/// subgrid of the M x N projective grid.
PartialLabeling hall(int M, int N, int m, int n);

/// Vertical analogue.
PartialLabeling vall(int M, int N, int m, int n);

/// r-horizontal alternating connected sum: replicates X into r column
/// blocks with alternating offsets, producing an rm x n partial labeling.
/// r must be odd and r*m <= M; r = 1 is the identity (used only by the
/// odd-length sequence convention).
PartialLabeling h_connected_sum(const PartialLabeling& X, int r);

/// Row analogue producing m x rn.
PartialLabeling v_connected_sum(const PartialLabeling& X, int r);

struct PartialCheck {
    bool ok = true;
    std::string violation; // first failing condition when !ok

    explicit operator bool() const { return ok; }
};

/// Checks the six defining conditions of a partial bicentrally balanced
/// labeling: planar face sums 2MN+3, the two label-set conditions, the two
/// antipodal pair-sum conditions, and the center row/column monotonicity.
PartialCheck is_partial_bb(const PartialLabeling& X);

/// Horizontal bicentrally balanced labeling of a factorization sequence:
/// HALL base case, then alternating horizontal/vertical connected sums.
/// The result is a standard bicentrally balanced magic labeling with
/// S = 2mn+3.
Labeling hbbl(const FactorizationSequence& F);

/// Vertical analogue starting from VALL.
Labeling vbbl(const FactorizationSequence& F);

/// Dispatch on F.orientation.
Labeling construct_labeling(const FactorizationSequence& F);

} // namespace facemagic
