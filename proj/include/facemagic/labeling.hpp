#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facemagic/grid.hpp"

namespace facemagic {

/// A total assignment of the labels {1..mn} to the vertex grid, stored
/// row-major: entry (i,j) lives at index (j-1)*m + (i-1).
struct Labeling {
    Dims dims;
    std::vector<int> labels;

    /// Validating constructor; throws ValidationError naming a duplicated
    /// or out-of-range label.
    static Labeling make(Dims dims, std::vector<int> labels);

    int at(int i, int j) const { return labels[(j - 1) * dims.m + (i - 1)]; }
    int& at(int i, int j) { return labels[(j - 1) * dims.m + (i - 1)]; }

    bool operator==(const Labeling&) const = default;
};

/// Returns an error message if `labels` is not a bijection onto {1..m*n},
/// otherwise nullopt.
std::optional<std::string> check_bijection(const Dims& dims, const std::vector<int>& labels);

enum class ValueClass { SMinus, SMid, SPlus, Other };

const char* value_class_name(ValueClass c);

struct MagicReport {
    bool is_magic = false;
    std::optional<int> S;    // common face sum, present iff is_magic
    int D1 = 0;              // x(1,1) + x(m,n)
    int D2 = 0;              // x(m,1) + x(1,n)
    ValueClass value_class = ValueClass::Other;
    std::vector<int> face_sums_sample; // on failure, up to 16 distinct sums seen
};

/// Checks all mn-1 quad-face sums. The bijection invariant is re-checked
/// first and reported via ValidationError rather than assumed.
MagicReport verify(const Labeling& L);

std::pair<int, int> digon_sums(const Labeling& L);

/// The order-plus-one complement y = mn+1-x. Maps magic value S to 4mn+4-S
/// and is an involution.
Labeling complement(const Labeling& L);

/// Antipodal pair-sum targets for odd x odd grids: S(i,j) is (mn+3)/2 on
/// even-parity cells and (3mn+3)/2 on odd-parity cells. Exact integers
/// because mn is odd.
struct PairTargets {
    Dims dims;
    int even_sum = 0; // i+j even
    int odd_sum = 0;  // i+j odd

    static PairTargets of(const Dims& dims); // throws on even dimension
};

int target_pair_sum(const Dims& dims, Vertex v);

/// True iff x(i,j) + x(m+1-i,n+1-j) = S(i,j) at every vertex. Requires odd
/// dimensions.
bool is_bicentrally_balanced(const Labeling& L);

/// The column-1 row-pair sums a_j = x(1,j) + x(1,j+1) for j = 1..n0, after
/// verifying the four identity families that a bicentrally balanced magic
/// labeling must satisfy. Throws StructureViolation naming the first
/// failing identity; throws ValidationError if L is not bicentrally
/// balanced magic.
std::vector<int> row_pair_sums(const Labeling& L);

/// The four alternating monotonicity conditions on the center row and
/// center column. Requires L bicentrally balanced magic.
bool is_standard(const Labeling& L);

/// Relabels by pulling labels back through the inverse coordinate action:
/// x'(v) = x(s^{-1}(v)). Preserves the magic value.
Labeling apply_symmetry(Symmetry s, const Labeling& L);

/// Lexicographically smallest row-major array over the orbit of L under
/// symmetry_group(dims). Idempotent and constant on orbits.
Labeling canonical_form(const Labeling& L);

/// All distinct labelings in the symmetry orbit of L.
std::vector<Labeling> symmetry_orbit(const Labeling& L);

} // namespace facemagic
