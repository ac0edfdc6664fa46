#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "facemagic/construct.hpp"
#include "facemagic/labeling.hpp"

namespace facemagic {

enum class PruningMode { Pure, LemmaAssisted };

struct SearchConfig {
    Dims dims;
    /// Restrict the sweep to one magic value; nullopt = all values.
    std::optional<int> value_filter;
    /// Materialize canonical orbit representatives in the report. Both the
    /// raw and the up-to-symmetry counts are always computed.
    bool up_to_symmetry = true;
    PruningMode pruning = PruningMode::Pure;
    int worker_count = 1;
    /// 0 = unlimited. When exceeded the report is flagged incomplete.
    long long node_budget = 0;
    /// Keep the raw solution arrays in the report (they are needed for the
    /// conjecture harness; counts alone need only the canonical sets).
    bool collect_solutions = true;
};

struct ValueCount {
    long long raw = 0;    // labelings
    long long orbits = 0; // up to symmetries on the projective plane

    bool operator==(const ValueCount&) const = default;
};

struct EnumerationReport {
    Dims dims;
    PruningMode pruning = PruningMode::Pure;
    bool complete = true;
    std::map<int, ValueCount> counts; // magic value -> counts
    /// Canonical (lex-min over the symmetry orbit) representatives, sorted.
    std::map<int, std::vector<Labeling>> representatives;
    /// Raw solutions, sorted; filled when collect_solutions.
    std::map<int, std::vector<Labeling>> solutions;
    long long nodes_visited = 0;
    double wall_seconds = 0;
    int workers = 1;

    long long total_raw() const;
    long long total_orbits() const;

    /// Scheduling-independent content: everything except timing and the
    /// worker count, which is what the determinism contract covers.
    bool same_result(const EnumerationReport& other) const;
};

/// Exhaustive enumeration of the C4-face-magic labelings of cfg.dims by
/// constraint propagation: row 1 and the first cell of each later row are
/// the free cells, every other cell is forced by the interior face
/// equation, and wrap faces prune as soon as their four cells are known.
EnumerationReport enumerate_all(const SearchConfig& cfg);

enum class ConjectureVerdict { Equal, EnumeratedStrictlyLarger, Inconclusive };

const char* verdict_name(ConjectureVerdict v);

struct ConjectureReport {
    Dims dims;
    ConjectureVerdict verdict = ConjectureVerdict::Inconclusive;
    /// Standard forms of every enumerated labeling with S = 2mn+3, sorted.
    std::vector<Labeling> enumerated_standard;
    /// {hbbl(F)} over (m,n)-sequences united with {vbbl(F')} over
    /// (n,m)-sequences, sorted.
    std::vector<Labeling> constructed;
    /// Enumerated standard labelings missing from the constructed set.
    std::vector<Labeling> witnesses;
    long long nodes_visited = 0;
};

/// Compares the enumerated standard bicentrally balanced labelings with the
/// constructed family. Reports evidence; never asserts the conjecture.
ConjectureReport conjecture_check(int m, int n, long long node_budget = 0, int workers = 1);

struct CensusClass {
    Labeling standard;
    long long class_size = 0;     // distinct elementary-op images
    long long orbit_quotient = 0; // after quotient by {R0,R180,H,V}
};

struct CensusReport {
    Dims dims;
    std::vector<CensusClass> classes;
    bool complete = true;
};

/// For each standard labeling found by enumeration, the size of its
/// equivalence class and the count after quotienting by the four-element
/// symmetry group (the quotient the counting argument uses even on
/// squares).
CensusReport bicentral_equivalence_census(int m, int n, long long node_budget = 0, int workers = 1);

} // namespace facemagic
