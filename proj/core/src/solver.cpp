#include "prlab/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "prlab/constructions.hpp"
#include "prlab/errors.hpp"
#include "prlab/iso.hpp"
#include "prlab/turan.hpp"

namespace prlab {

namespace {

using Clock = std::chrono::steady_clock;

struct Shared {
    std::atomic<int> best{0};        // colors of the best witnessed coloring
    std::atomic<long long> nodes{0};
    std::atomic<long long> copy_prunes{0};
    std::atomic<long long> bound_prunes{0};
    std::atomic<bool> aborted{false};
    long long node_limit = 0;
    Clock::time_point deadline;

    std::mutex mu;
    std::vector<int> witness; // RGS attaining witness_blocks
    int witness_blocks = 0;
    bool have_witness = false;
    int frontier_upper = 0;   // bound on anything left unexplored at abort

    void offer_witness(const std::vector<int>& rgs, int blocks) {
        int cur = best.load(std::memory_order_relaxed);
        while (blocks > cur &&
               !best.compare_exchange_weak(cur, blocks, std::memory_order_relaxed)) {}
        if (blocks < best.load(std::memory_order_relaxed) && have_witness) return;
        std::lock_guard<std::mutex> lock(mu);
        if (!have_witness || blocks > witness_blocks) {
            witness = rgs;
            witness_blocks = blocks;
            have_witness = true;
        }
    }

    void raise_frontier(int bound) {
        std::lock_guard<std::mutex> lock(mu);
        frontier_upper = std::max(frontier_upper, bound);
    }
};

// One depth-first worker over restricted-growth strings in colex edge order.
// Decision mode (target_k >= 1) accepts the first coloring with exactly
// target_k blocks; optimize mode pushes the shared incumbent up. A null
// detector turns the engine into a bare set-partition enumerator.
struct Engine {
    int n = 0, m = 0;
    const PatternDetector* detector = nullptr;
    Shared* shared = nullptr;
    int target_k = -1;
    bool break_second_edge = false; // fix color(edge 1) != color(edge 0)
    long long leaves = 0;

    std::vector<int> colors;
    std::vector<int> blocks_at; // blocks in use before assigning depth d
    long long local_nodes = 0;

    std::vector<int> decision_result;
    bool decision_found = false;

    bool budget_ok(int depth) {
        if (shared->aborted.load(std::memory_order_relaxed)) {
            record_frontier(depth);
            return false;
        }
        if ((local_nodes & 2047) == 0) {
            long long total =
                shared->nodes.fetch_add(local_nodes, std::memory_order_relaxed) + local_nodes;
            local_nodes = 0;
            if (total > shared->node_limit || Clock::now() > shared->deadline) {
                shared->aborted.store(true, std::memory_order_relaxed);
                record_frontier(depth);
                return false;
            }
        }
        return true;
    }

    // Anything unexplored extends an open sibling at some depth d, where at
    // most blocks_at[d]+1 colors are in play and m-d-1 edges remain.
    void record_frontier(int depth) {
        int bound = shared->best.load(std::memory_order_relaxed);
        for (int d = 0; d <= depth && d < m; ++d)
            bound = std::max(bound, blocks_at[d] + m - d);
        shared->raise_frontier(bound);
    }

    bool dfs(int depth, int blocks) {
        if (depth == m) {
            if (!detector) {
                ++leaves;
                return true;
            }
            if (target_k >= 1) {
                if (blocks == target_k) {
                    decision_result = colors;
                    decision_found = true;
                    return false;
                }
                return true;
            }
            shared->offer_witness(colors, blocks);
            return true;
        }
        blocks_at[depth] = blocks;
        if (detector) {
            if (target_k >= 1) {
                if (blocks > target_k || blocks + (m - depth) < target_k) {
                    shared->bound_prunes.fetch_add(1, std::memory_order_relaxed);
                    return true;
                }
            } else if (blocks + (m - depth) <= shared->best.load(std::memory_order_relaxed)) {
                shared->bound_prunes.fetch_add(1, std::memory_order_relaxed);
                return true;
            }
        }
        for (int c = blocks; c >= 0; --c) { // fresh color first
            if (depth == 0 && c != 0) continue;
            if (depth == 1 && break_second_edge && c == 0) continue;
            ++local_nodes;
            colors[depth] = c;
            if (detector) {
                if (!budget_ok(depth)) return false;
                ColoringPrefix prefix{n, depth + 1, colors.data()};
                if (detector->copy_through(prefix, depth)) {
                    shared->copy_prunes.fetch_add(1, std::memory_order_relaxed);
                    continue;
                }
            }
            if (!dfs(depth + 1, blocks + (c == blocks ? 1 : 0))) return false;
        }
        return true;
    }
};

struct PrefixJob {
    std::vector<int> colors;
    int blocks = 0;
};

// Surviving RGS prefixes of fixed depth; these are the independent parallel
// work units.
void collect_prefixes(Engine& proto, int depth_limit, int depth, int blocks,
                      std::vector<PrefixJob>& out) {
    if (depth == depth_limit) {
        out.push_back(
            {std::vector<int>(proto.colors.begin(), proto.colors.begin() + depth_limit), blocks});
        return;
    }
    for (int c = blocks; c >= 0; --c) {
        if (depth == 0 && c != 0) continue;
        if (depth == 1 && proto.break_second_edge && c == 0) continue;
        ++proto.local_nodes;
        proto.colors[depth] = c;
        ColoringPrefix prefix{proto.n, depth + 1, proto.colors.data()};
        if (proto.detector->copy_through(prefix, depth)) {
            proto.shared->copy_prunes.fetch_add(1, std::memory_order_relaxed);
            continue;
        }
        collect_prefixes(proto, depth_limit, depth + 1, blocks + (c == blocks ? 1 : 0), out);
    }
}

bool verified_valid(const EdgeColoring& col, const SimpleGraph& pattern, CopyMode mode) {
    return !find_copy(col, pattern, mode).has_value();
}

SearchResult run_search(int n, const SimpleGraph& pattern, CopyMode mode, const Budget& budget) {
    auto t0 = Clock::now();
    int m = pair_count(n);

    SearchResult res;
    res.n = n;
    res.pattern = pattern;
    res.mode = mode;

    // A pattern that cannot fit leaves every coloring valid.
    if (pattern.vertex_count > n) {
        res.value = res.upper = m;
        res.exact = true;
        res.witness = EdgeColoring::rainbow(n);
        return res;
    }
    // An edgeless pattern embeds into every coloring; nothing is valid.
    if (pattern.edges.empty()) {
        res.value = res.upper = 0;
        res.exact = true;
        return res;
    }

    Shared shared;
    shared.node_limit = budget.node_limit;
    shared.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(budget.time_limit_s));

    if (auto seed = best_construction_seed(n, pattern, mode)) {
        shared.best.store(seed->color_count);
        shared.witness = seed->colors;
        shared.witness_blocks = seed->color_count;
        shared.have_witness = true;
    }

    PatternDetector detector(pattern, mode);

    Engine proto;
    proto.n = n;
    proto.m = m;
    proto.detector = &detector;
    proto.shared = &shared;
    proto.break_second_edge = m >= 2 && shared.best.load() >= 1;
    proto.colors.assign(m, -1);
    proto.blocks_at.assign(m, 0);

    int threads = std::max(1, budget.threads);
    int split_depth = std::min(m - 1, 7);
    if (threads <= 1 || split_depth < 2) {
        proto.dfs(0, 0);
        shared.nodes.fetch_add(proto.local_nodes, std::memory_order_relaxed);
    } else {
        std::vector<PrefixJob> jobs;
        collect_prefixes(proto, split_depth, 0, 0, jobs);
        shared.nodes.fetch_add(proto.local_nodes, std::memory_order_relaxed);
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            Engine eng = proto;
            eng.local_nodes = 0;
            while (true) {
                size_t idx = next.fetch_add(1);
                if (idx >= jobs.size()) break;
                std::copy(jobs[idx].colors.begin(), jobs[idx].colors.end(), eng.colors.begin());
                int b = 0;
                for (int d = 0; d < split_depth; ++d) {
                    eng.blocks_at[d] = b;
                    if (eng.colors[d] == b) ++b;
                }
                if (!eng.dfs(split_depth, jobs[idx].blocks)) break;
            }
            shared.nodes.fetch_add(eng.local_nodes, std::memory_order_relaxed);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (shared.aborted.load()) {
            // jobs never dequeued still bound the unexplored space
            for (const auto& job : jobs)
                shared.raise_frontier(job.blocks + m - split_depth);
        }
    }

    res.stats.nodes = shared.nodes.load();
    res.stats.copy_prunes = shared.copy_prunes.load();
    res.stats.bound_prunes = shared.bound_prunes.load();
    res.stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

    res.value = shared.best.load();
    if (shared.have_witness) res.witness = EdgeColoring::from_colors(n, shared.witness);
    if (shared.aborted.load()) {
        res.exact = false;
        res.upper = std::max(shared.frontier_upper, res.value);
    } else {
        res.exact = true;
        res.upper = res.value;
    }
    return res;
}

std::optional<EdgeColoring> run_decision(int n, const SimpleGraph& pattern, CopyMode mode, int k,
                                         const Budget& budget) {
    int m = pair_count(n);
    if (k < 1 || k > m) throw std::invalid_argument("decision: need 1 <= k <= C(n,2)");

    if (pattern.vertex_count > n) {
        std::vector<int> rgs(m);
        for (int e = 0; e < m; ++e) rgs[e] = std::min(e, k - 1);
        return EdgeColoring::from_colors(n, std::move(rgs));
    }
    if (pattern.edges.empty()) return std::nullopt;

    // Merging color classes never creates a forbidden copy, so any witness
    // with >= k colors clamps down to a valid k-coloring.
    if (auto seed = best_construction_seed(n, pattern, mode)) {
        if (seed->color_count >= k) {
            std::vector<int> rgs = seed->colors;
            for (int& c : rgs) c = std::min(c, k - 1);
            return EdgeColoring::from_colors(n, std::move(rgs));
        }
    }

    auto t0 = Clock::now();
    Shared shared;
    shared.node_limit = budget.node_limit;
    shared.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(budget.time_limit_s));
    PatternDetector detector(pattern, mode);

    Engine eng;
    eng.n = n;
    eng.m = m;
    eng.detector = &detector;
    eng.shared = &shared;
    eng.target_k = k;
    eng.break_second_edge = m >= 2 && k >= 2;
    eng.colors.assign(m, -1);
    eng.blocks_at.assign(m, 0);
    eng.dfs(0, 0);
    if (eng.decision_found) return EdgeColoring::from_colors(n, eng.decision_result);
    if (shared.aborted.load())
        throw ResourceLimitError("decision: search budget exhausted before an answer");
    return std::nullopt;
}

} // namespace

std::optional<EdgeColoring> best_construction_seed(int n, const SimpleGraph& pattern,
                                                   CopyMode mode) {
    if (pattern.vertex_count > n || pattern.edges.empty()) return std::nullopt;

    std::vector<EdgeColoring> candidates;
    if (pair_count(n) > 0) candidates.push_back(EdgeColoring::monochromatic(n));

    auto add = [&](const ConstructionReport& rep) { candidates.push_back(rep.coloring); };
    try {
        if (is_path_graph(pattern)) {
            int l = pattern.vertex_count;
            if (l == 3) add(small_path_blocker(n, 0));
            if (l >= 4 && n >= l) {
                add(path_lower_bound(n, l, Variant::clique));
                add(path_lower_bound(n, l, Variant::join));
            }
        } else if (is_cycle_graph(pattern)) {
            int k = pattern.vertex_count;
            if (k >= 4 && n >= k) {
                add(cycle_lower_bound(n, k, Variant::clique));
                add(cycle_lower_bound(n, k, Variant::join));
            }
        } else if (pattern.vertex_count == 4 && pattern.edge_count() == 5) {
            if (n >= 4) add(k4minus_lower_bound(n));
        } else if (auto parts = complete_bipartite_parts(pattern);
                   parts && *parts == std::make_pair(2, 3)) {
            if (n >= 5) add(k23_lower_bound(n));
        }
        if (n <= kTuranVertexCap) add(turan_based_lower_bound(n, pattern));
    } catch (const ResourceLimitError&) {
        // a seed is an optimization, never worth failing over
    }

    const EdgeColoring* best = nullptr;
    for (const auto& cand : candidates) {
        if (best && cand.color_count <= best->color_count) continue;
        if (verified_valid(cand, pattern, mode)) best = &cand;
    }
    if (!best) return std::nullopt;
    return *best;
}

SearchResult pr_exact(int n, const SimpleGraph& pattern, const Budget& budget) {
    return run_search(n, pattern, CopyMode::properly_colored, budget);
}

SearchResult ar_exact(int n, const SimpleGraph& pattern, const Budget& budget) {
    return run_search(n, pattern, CopyMode::rainbow, budget);
}

std::optional<EdgeColoring> pr_decision(int n, const SimpleGraph& pattern, int k,
                                        const Budget& budget) {
    return run_decision(n, pattern, CopyMode::properly_colored, k, budget);
}

std::optional<EdgeColoring> ar_decision(int n, const SimpleGraph& pattern, int k,
                                        const Budget& budget) {
    return run_decision(n, pattern, CopyMode::rainbow, k, budget);
}

long long count_set_partitions(int m) {
    if (m < 0) throw std::invalid_argument("count_set_partitions: negative m");
    if (m == 0) return 1;
    Shared shared;
    shared.node_limit = std::numeric_limits<long long>::max();
    shared.deadline = Clock::now() + std::chrono::hours(24);
    Engine eng;
    eng.n = 0;
    eng.m = m;
    eng.detector = nullptr; // detection disabled: bare enumeration
    eng.shared = &shared;
    eng.colors.assign(m, -1);
    eng.blocks_at.assign(m, 0);
    eng.dfs(0, 0);
    return eng.leaves;
}

} // namespace prlab
