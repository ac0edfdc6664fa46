#include "facemagic/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include "facemagic/transform.hpp"

namespace facemagic {

namespace {

struct FaceCheck {
    int a, b, c, d; // flat cell indices
};

// Static data shared by every task on the same grid: the wrap-face checks,
// scheduled at the first cell index at which all four face cells are known
// under the fixed row-major assignment order. Interior faces never need a
// check; the forced-cell equation is exactly the interior face constraint.
struct Plan {
    Dims dims;
    int m = 0, n = 0, mn = 0;
    std::vector<std::vector<FaceCheck>> triggers;
};

Plan build_plan(const Dims& dims) {
    Plan p;
    p.dims = dims;
    p.m = dims.m;
    p.n = dims.n;
    p.mn = dims.cells();
    p.triggers.resize(p.mn);
    auto flat = [&](int i, int j) { return (j - 1) * p.m + (i - 1); };
    auto add = [&](int a, int b, int c, int d) {
        FaceCheck f{a, b, c, d};
        p.triggers[std::max(std::max(f.a, f.b), std::max(f.c, f.d))].push_back(f);
    };
    for (int j = 1; j <= p.n - 1; ++j) // right-left wrap
        add(flat(p.m, j), flat(p.m, j + 1), flat(1, p.n - j), flat(1, p.n + 1 - j));
    for (int i = 1; i <= p.m - 1; ++i) // top-bottom wrap
        add(flat(i, p.n), flat(i + 1, p.n), flat(p.m - i, 1), flat(p.m + 1 - i, 1));
    return p;
}

struct BudgetGate {
    std::atomic<long long> spent{0};
    std::atomic<bool> abort{false};
    long long budget = 0; // 0 = unlimited

    bool aborted() const { return abort.load(std::memory_order_relaxed); }
    void charge(long long chunk) {
        if (!budget) return;
        if (spent.fetch_add(chunk, std::memory_order_relaxed) + chunk >= budget)
            abort.store(true, std::memory_order_relaxed);
    }
};

constexpr long long kChunk = 4096;

struct Searcher {
    const Plan& plan;
    BudgetGate& gate;
    int S = 0;
    bool digon_prune = false;
    int d_target = 0; // Lemma 6 digon sum for this S

    std::vector<int> cell;
    std::vector<std::uint8_t> used;
    long long nodes = 0;
    long long unflushed = 0;
    std::vector<std::vector<int>> sols;

    Searcher(const Plan& p, BudgetGate& g) : plan(p), gate(g) {}

    bool tick() {
        ++nodes;
        if (++unflushed >= kChunk) {
            gate.charge(unflushed);
            unflushed = 0;
            return !gate.aborted();
        }
        return true;
    }

    bool faces_ok(int k) const {
        for (const FaceCheck& f : plan.triggers[k])
            if (cell[f.a] + cell[f.b] + cell[f.c] + cell[f.d] != S) return false;
        if (digon_prune && k == plan.mn - 1 && cell[0] + cell[k] != d_target) return false;
        return true;
    }

    void place(int k, int v) {
        cell[k] = v;
        used[v] = 1;
        if (faces_ok(k)) dfs(k + 1);
        used[v] = 0;
        cell[k] = 0;
    }

    void dfs(int k) {
        if (k == plan.mn) {
            sols.push_back(cell);
            return;
        }
        const int m = plan.m;
        const int i = k % m + 1, j = k / m + 1;
        if (j == 1 || i == 1) {
            if (digon_prune && i == 1 && j == plan.n) {
                // Lemma 6 pins the second digon sum; only one label can work.
                const int v = d_target - cell[m - 1];
                if (!tick()) return;
                if (v >= 1 && v <= plan.mn && !used[v]) place(k, v);
                return;
            }
            for (int v = 1; v <= plan.mn; ++v) {
                if (used[v]) continue;
                if (!tick()) return;
                place(k, v);
            }
        } else {
            const int v = S - cell[k - m - 1] - cell[k - m] - cell[k - 1];
            if (!tick()) return;
            if (v >= 1 && v <= plan.mn && !used[v]) place(k, v);
        }
    }

    // Runs the subtree with the first two cells pinned.
    void run(int v1, int v2) {
        cell.assign(plan.mn, 0);
        used.assign(plan.mn + 1, 0);
        nodes = 0;
        unflushed = 0;
        sols.clear();
        cell[0] = v1;
        used[v1] = 1;
        cell[1] = v2;
        used[v2] = 1;
        nodes = 2;
        dfs(2);
        gate.charge(unflushed);
        unflushed = 0;
    }
};

struct Task {
    int S;
    int v1, v2;
};

struct TaskOutcome {
    long long nodes = 0;
    std::vector<std::pair<int, std::vector<int>>> sols; // (S, labels)
};

int lemma_digon_target(int mn, int S) {
    if (S == 2 * mn + 1) return (3 * mn + 1) / 2;
    if (S == 2 * mn + 2) return mn + 1;
    return (mn + 3) / 2; // S = 2mn+3
}

std::vector<int> sweep_values(const SearchConfig& cfg) {
    const int mn = cfg.dims.cells();
    std::vector<int> values;
    if (cfg.pruning == PruningMode::LemmaAssisted) {
        if (cfg.dims.both_odd())
            values = {2 * mn + 1, 2 * mn + 2, 2 * mn + 3};
        else if (cfg.dims.both_even())
            values = {2 * mn + 2};
        else
            throw ValidationError("lemma-assisted pruning applies only to odd x odd or "
                                  "even x even grids");
    } else {
        // every conceivable quad-face sum: four smallest to four largest labels
        for (int S = 10; S <= 4 * mn - 6; ++S) values.push_back(S);
    }
    if (cfg.value_filter) {
        const int want = *cfg.value_filter;
        std::vector<int> kept;
        for (int S : values)
            if (S == want) kept.push_back(S);
        values = kept;
    }
    return values;
}

} // namespace

long long EnumerationReport::total_raw() const {
    long long t = 0;
    for (const auto& [S, c] : counts) t += c.raw;
    return t;
}

long long EnumerationReport::total_orbits() const {
    long long t = 0;
    for (const auto& [S, c] : counts) t += c.orbits;
    return t;
}

bool EnumerationReport::same_result(const EnumerationReport& other) const {
    return dims == other.dims && pruning == other.pruning && complete == other.complete &&
           counts == other.counts && representatives == other.representatives &&
           solutions == other.solutions && nodes_visited == other.nodes_visited;
}

EnumerationReport enumerate_all(const SearchConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const Dims dims = Dims::of(cfg.dims.m, cfg.dims.n);
    const int mn = dims.cells();
    const Plan plan = build_plan(dims);

    EnumerationReport rep;
    rep.dims = dims;
    rep.pruning = cfg.pruning;
    rep.workers = std::max(1, cfg.worker_count);

    const std::vector<int> values = sweep_values(cfg);
    if (cfg.value_filter) rep.counts[*cfg.value_filter]; // report the asked-for value even if empty

    std::vector<Task> tasks;
    for (int S : values)
        for (int v1 = 1; v1 <= mn; ++v1)
            for (int v2 = 1; v2 <= mn; ++v2)
                if (v1 != v2) tasks.push_back({S, v1, v2});

    BudgetGate gate;
    gate.budget = cfg.node_budget;

    std::vector<TaskOutcome> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        Searcher searcher(plan, gate);
        for (;;) {
            const std::size_t t = next.fetch_add(1, std::memory_order_relaxed);
            if (t >= tasks.size()) break;
            if (gate.aborted()) break;
            const Task& task = tasks[t];
            searcher.S = task.S;
            searcher.digon_prune =
                cfg.pruning == PruningMode::LemmaAssisted && dims.both_odd();
            searcher.d_target =
                searcher.digon_prune ? lemma_digon_target(mn, task.S) : 0;
            searcher.run(task.v1, task.v2);
            outcomes[t].nodes = searcher.nodes;
            for (auto& s : searcher.sols) outcomes[t].sols.emplace_back(task.S, std::move(s));
        }
    };

    if (rep.workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < rep.workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    rep.complete = !gate.aborted();

    // Deterministic merge in task order, then sorted containers.
    std::map<int, std::set<std::vector<int>>> canon;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        rep.nodes_visited += outcomes[t].nodes;
        for (auto& [S, labels] : outcomes[t].sols) {
            rep.counts[S].raw += 1;
            Labeling L{dims, labels};
            canon[S].insert(canonical_form(L).labels);
            if (cfg.collect_solutions) rep.solutions[S].push_back(std::move(L));
        }
    }
    for (auto& [S, forms] : canon) {
        rep.counts[S].orbits = static_cast<long long>(forms.size());
        if (cfg.up_to_symmetry)
            for (const auto& labels : forms)
                rep.representatives[S].push_back(Labeling{dims, labels});
    }
    for (auto& [S, sols] : rep.solutions)
        std::sort(sols.begin(), sols.end(),
                  [](const Labeling& a, const Labeling& b) { return a.labels < b.labels; });

    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

const char* verdict_name(ConjectureVerdict v) {
    switch (v) {
        case ConjectureVerdict::Equal: return "equal";
        case ConjectureVerdict::EnumeratedStrictlyLarger: return "enumerated-strictly-larger";
        case ConjectureVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

static bool labeling_less(const Labeling& a, const Labeling& b) { return a.labels < b.labels; }

ConjectureReport conjecture_check(int m, int n, long long node_budget, int workers) {
    const Dims dims = Dims::of(m, n);
    if (!dims.both_odd())
        throw ValidationError("the conjecture concerns odd x odd grids");
    const int S_plus = 2 * dims.cells() + 3;

    SearchConfig cfg;
    cfg.dims = dims;
    cfg.value_filter = S_plus;
    cfg.pruning = PruningMode::LemmaAssisted;
    cfg.worker_count = workers;
    cfg.node_budget = node_budget;
    const EnumerationReport rep = enumerate_all(cfg);

    ConjectureReport out;
    out.dims = dims;
    out.nodes_visited = rep.nodes_visited;

    std::set<std::vector<int>> standard_set;
    if (auto it = rep.solutions.find(S_plus); it != rep.solutions.end())
        for (const Labeling& L : it->second) standard_set.insert(standardize(L).labels);
    for (const auto& labels : standard_set) out.enumerated_standard.push_back(Labeling{dims, labels});

    std::set<std::vector<int>> constructed_set;
    for (const auto& F : enumerate_factorization_sequences(m, n, Orientation::Horizontal))
        constructed_set.insert(hbbl(F).labels);
    for (const auto& F : enumerate_factorization_sequences(m, n, Orientation::Vertical))
        constructed_set.insert(vbbl(F).labels);
    for (const auto& labels : constructed_set) out.constructed.push_back(Labeling{dims, labels});

    if (!rep.complete) {
        out.verdict = ConjectureVerdict::Inconclusive;
        return out;
    }
    for (const auto& labels : constructed_set)
        if (!standard_set.count(labels))
            throw StructureViolation("a constructed labeling is missing from the enumeration; "
                                     "the search or the construction is broken");
    for (const auto& labels : standard_set)
        if (!constructed_set.count(labels)) out.witnesses.push_back(Labeling{dims, labels});
    std::sort(out.witnesses.begin(), out.witnesses.end(), labeling_less);
    out.verdict = out.witnesses.empty() ? ConjectureVerdict::Equal
                                        : ConjectureVerdict::EnumeratedStrictlyLarger;
    return out;
}

CensusReport bicentral_equivalence_census(int m, int n, long long node_budget, int workers) {
    const Dims dims = Dims::of(m, n);
    if (!dims.both_odd())
        throw ValidationError("the census concerns odd x odd grids");
    const int S_plus = 2 * dims.cells() + 3;

    SearchConfig cfg;
    cfg.dims = dims;
    cfg.value_filter = S_plus;
    cfg.pruning = PruningMode::LemmaAssisted;
    cfg.worker_count = workers;
    cfg.node_budget = node_budget;
    const EnumerationReport rep = enumerate_all(cfg);

    CensusReport out;
    out.dims = dims;
    out.complete = rep.complete;

    std::set<std::vector<int>> standard_set;
    if (auto it = rep.solutions.find(S_plus); it != rep.solutions.end())
        for (const Labeling& L : it->second) standard_set.insert(standardize(L).labels);

    // The counting argument quotients by the four-element symmetry group
    // regardless of m = n, so the census does too.
    const std::array<Symmetry, 4> four = {Symmetry::R0, Symmetry::R180, Symmetry::H, Symmetry::V};
    auto canon4 = [&](const Labeling& L) {
        std::vector<int> best = L.labels;
        for (Symmetry s : four) {
            const Labeling img = apply_symmetry(s, L);
            if (img.labels < best) best = img.labels;
        }
        return best;
    };

    for (const auto& labels : standard_set) {
        const Labeling L{dims, labels};
        const std::vector<Labeling> cls = equivalence_class(L);
        std::set<std::vector<int>> quotient;
        for (const Labeling& member : cls) quotient.insert(canon4(member));
        out.classes.push_back(
            {L, static_cast<long long>(cls.size()), static_cast<long long>(quotient.size())});
    }
    return out;
}

} // namespace facemagic
