#pragma once

#include <cstdint>
#include <vector>

#include "facemagic/labeling.hpp"

namespace facemagic {

// The four elementary projective labeling operations. Each takes a
// bicentrally balanced magic labeling (odd x odd) and returns one with the
// same magic value; preconditions are validated and ValidationError thrown
// otherwise.

/// Parity-preserving permutation eta of {1..m0} applied to the column
/// pairs {i, m+1-i}: column i receives column eta(i), column m+1-i
/// receives column m+1-eta(i); the center column is fixed.
/// eta is passed as eta[k] = eta(k+1).
Labeling permute_column_pairs(const Labeling& L, const std::vector<int>& eta);

/// Row analogue, kappa a parity-preserving permutation of {1..n0}.
Labeling permute_row_pairs(const Labeling& L, const std::vector<int>& kappa);

/// For each i <= m0 with alpha[i-1] = 1, columns i and m+1-i exchange
/// their label columns.
Labeling swap_columns(const Labeling& L, const std::vector<std::uint8_t>& alpha);

/// Row analogue, delta over rows j <= n0.
Labeling swap_rows(const Labeling& L, const std::vector<std::uint8_t>& delta);

/// The unique standard labeling in the projective-labeling-equivalence
/// class of L, computed constructively: one column swap mask, one column
/// pair permutation, one row swap mask, one row pair permutation.
/// Idempotent and constant on equivalence classes.
Labeling standardize(const Labeling& L);

/// True iff L1 and L2 have the same standard form.
bool equivalent(const Labeling& L1, const Labeling& L2);

/// All parity-preserving permutations of {1..k}, each encoded as above.
/// There are ceil(k/2)! * floor(k/2)! of them.
std::vector<std::vector<int>> parity_preserving_permutations(int k);

/// The full projective-labeling-equivalence class of L: every combination
/// of the four elementary operations, deduplicated.
std::vector<Labeling> equivalence_class(const Labeling& L);

} // namespace facemagic
