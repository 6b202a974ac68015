#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "semdef/bounds.hpp"
#include "semdef/errors.hpp"
#include "semdef/graph.hpp"
#include "semdef/labeling.hpp"

namespace semdef {

struct SolverOptions {
    /// Incremental sum checks and the weighted-sum interval test. When off,
    /// every injection is enumerated and checked at the leaf.
    bool prune = true;
    /// Restrict the first assigned vertex to labels <= ceil(N/2); complete
    /// because f -> N+1-f maps SEM labelings to SEM labelings.
    bool symmetry_breaking = true;
    int threads = 1;
    /// Largest N = p + t the search accepts.
    int label_limit = 16;
};

/// Hard ceiling on N imposed by the 64-bit used-label mask.
inline constexpr int max_label_limit = 62;

struct SearchStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;

    SearchStats& operator+=(const SearchStats& o)
    {
        nodes += o.nodes;
        seconds += o.seconds;
        return *this;
    }
};

/// Result of a single decision query. `witness` empty means the search over
/// all labelings into {1..total_labels} was exhaustive and found none.
struct FindResult {
    std::optional<SemCertificate> witness;
    int total_labels = 0;
    SearchStats stats;

    bool exhausted() const noexcept { return !witness.has_value(); }
};

struct SearchOutcome {
    enum class Kind { Exact, NotSemUpTo };

    Kind kind = Kind::NotSemUpTo;
    /// Exact: the deficiency. NotSemUpTo: the cap.
    int value = 0;
    std::optional<SemCertificate> witness;
    /// Smallest t actually searched; every t below it is excluded by edge counting.
    int first_searched = 0;
    SearchStats stats;

    bool is_exact() const noexcept { return kind == Kind::Exact; }
};

namespace detail {

/// Vertices in search order with the adjacency restricted to earlier positions.
struct SearchPlan {
    int total_labels = 0;
    int p = 0;
    int q = 0;
    std::vector<int> order;
    std::vector<std::vector<int>> earlier;
    std::vector<int> degree_at;
    std::vector<Edge> edges;

    SearchPlan(const Graph& g, int total)
        : total_labels(total), p(g.vertex_count()), q(g.edge_count()), edges(g.edges())
    {
        const auto deg = degree_sequence(g);
        order.resize(static_cast<std::size_t>(p));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
        });
        std::vector<int> pos(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i) {
            pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
        }
        earlier.resize(static_cast<std::size_t>(p));
        for (const auto& e : g.edges()) {
            const int a = pos[static_cast<std::size_t>(e.u)];
            const int b = pos[static_cast<std::size_t>(e.v)];
            if (a < b) {
                earlier[static_cast<std::size_t>(b)].push_back(e.u);
            } else {
                earlier[static_cast<std::size_t>(a)].push_back(e.v);
            }
        }
        for (int v : order) {
            degree_at.push_back(deg[static_cast<std::size_t>(v)]);
        }
    }
};

/// Depth-first labeling search over one plan. Not shared between threads.
class Searcher {
public:
    Searcher(const SearchPlan& plan, const SolverOptions& opts, const std::vector<int>& fixed,
             const std::atomic<bool>& stop)
        : plan_(plan), opts_(opts), fixed_(fixed), stop_(stop),
          label_(static_cast<std::size_t>(plan.p), 0),
          sum_used_(static_cast<std::size_t>(2 * plan.total_labels) + 2, 0)
    {
    }

    /// Restricts position `pos` to the single label `label`.
    void pin(int pos, int label)
    {
        pin_pos_ = pos;
        pin_label_ = label;
    }

    bool run() { return dfs(0); }

    const std::vector<int>& labels() const noexcept { return label_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    bool dfs(int pos)
    {
        if (stop_.load(std::memory_order_relaxed)) {
            return false;
        }
        ++nodes_;
        if (pos == plan_.p) {
            return opts_.prune ? true : leaf_consecutive();
        }
        const int v = plan_.order[static_cast<std::size_t>(pos)];
        int first = 1;
        int last = plan_.total_labels;
        if (const int f = fixed_[static_cast<std::size_t>(v)]; f != 0) {
            first = last = f;
        } else if (pos == pin_pos_) {
            first = last = pin_label_;
        } else if (pos == 0 && opts_.symmetry_breaking) {
            last = (plan_.total_labels + 1) / 2;
        }
        for (int lab = first; lab <= last; ++lab) {
            const std::uint64_t bit = std::uint64_t{1} << lab;
            if (used_ & bit) {
                continue;
            }
            if (opts_.prune) {
                if (!place(pos, v, lab)) {
                    continue;
                }
                if (weighted_feasible(pos + 1) && dfs(pos + 1)) {
                    return true;
                }
                unplace(pos, v, lab);
            } else {
                used_ |= bit;
                label_[static_cast<std::size_t>(v)] = lab;
                if (dfs(pos + 1)) {
                    return true;
                }
                label_[static_cast<std::size_t>(v)] = 0;
                used_ &= ~bit;
            }
        }
        return false;
    }

    bool place(int pos, int v, int lab)
    {
        const auto& nbrs = plan_.earlier[static_cast<std::size_t>(pos)];
        const int saved_lo = lo_;
        const int saved_hi = hi_;
        std::size_t done = 0;
        bool ok = true;
        for (; done < nbrs.size(); ++done) {
            const int s = lab + label_[static_cast<std::size_t>(nbrs[done])];
            if (sum_used_[static_cast<std::size_t>(s)]) {
                ok = false;
                break;
            }
            lo_ = std::min(lo_, s);
            hi_ = std::max(hi_, s);
            if (hi_ - lo_ > plan_.q - 1) {
                ok = false;
                break;
            }
            sum_used_[static_cast<std::size_t>(s)] = 1;
        }
        if (!ok) {
            for (std::size_t i = 0; i < done; ++i) {
                sum_used_[static_cast<std::size_t>(lab + label_[static_cast<std::size_t>(nbrs[i])])] = 0;
            }
            lo_ = saved_lo;
            hi_ = saved_hi;
            return false;
        }
        lo_stack_.push_back(saved_lo);
        hi_stack_.push_back(saved_hi);
        used_ |= std::uint64_t{1} << lab;
        label_[static_cast<std::size_t>(v)] = lab;
        weighted_ += static_cast<std::int64_t>(plan_.degree_at[static_cast<std::size_t>(pos)]) * lab;
        return true;
    }

    void unplace(int pos, int v, int lab)
    {
        for (int u : plan_.earlier[static_cast<std::size_t>(pos)]) {
            sum_used_[static_cast<std::size_t>(lab + label_[static_cast<std::size_t>(u)])] = 0;
        }
        lo_ = lo_stack_.back();
        hi_ = hi_stack_.back();
        lo_stack_.pop_back();
        hi_stack_.pop_back();
        used_ &= ~(std::uint64_t{1} << lab);
        label_[static_cast<std::size_t>(v)] = 0;
        weighted_ -= static_cast<std::int64_t>(plan_.degree_at[static_cast<std::size_t>(pos)]) * lab;
    }

    /// Σ deg·label over all vertices equals q·s + q(q-1)/2. Bounds the
    /// unassigned part by pairing the remaining (descending) degrees with
    /// the smallest and largest free labels, then asks whether some s in
    /// the still-admissible window hits the target.
    bool weighted_feasible(int next) const
    {
        const int q = plan_.q;
        if (q == 0) {
            return true;
        }
        const int n = plan_.total_labels;
        std::int64_t rest_lo = 0;
        std::int64_t rest_hi = 0;
        int asc = 1;
        int desc = n;
        for (int i = next; i < plan_.p; ++i) {
            const std::int64_t d = plan_.degree_at[static_cast<std::size_t>(i)];
            if (d == 0) {
                break;
            }
            while (used_ & (std::uint64_t{1} << asc)) {
                ++asc;
            }
            while (used_ & (std::uint64_t{1} << desc)) {
                --desc;
            }
            rest_lo += d * asc++;
            rest_hi += d * desc--;
        }
        std::int64_t s_lo = 3;
        std::int64_t s_hi = 2 * n - q;
        if (hi_ > 0) {
            s_lo = std::max<std::int64_t>(s_lo, hi_ - (q - 1));
            s_hi = std::min<std::int64_t>(s_hi, lo_);
        }
        const std::int64_t base = static_cast<std::int64_t>(q) * (q - 1) / 2;
        const std::int64_t need_lo = weighted_ + rest_lo - base;
        const std::int64_t need_hi = weighted_ + rest_hi - base;
        // q·s must land in [need_lo, need_hi].
        const std::int64_t from = std::max(s_lo, div_ceil(need_lo, q));
        const std::int64_t to = std::min(s_hi, div_floor(need_hi, q));
        return from <= to;
    }

    bool leaf_consecutive() const
    {
        std::vector<char> seen(sum_used_.size(), 0);
        int lo = 2 * plan_.total_labels + 1;
        int hi = 0;
        for (const auto& e : plan_.edges) {
            const int s = label_[static_cast<std::size_t>(e.u)] + label_[static_cast<std::size_t>(e.v)];
            if (seen[static_cast<std::size_t>(s)]) {
                return false;
            }
            seen[static_cast<std::size_t>(s)] = 1;
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        return plan_.q == 0 || hi - lo == plan_.q - 1;
    }

    static std::int64_t div_floor(std::int64_t a, std::int64_t b)
    {
        return a >= 0 ? a / b : -((-a + b - 1) / b);
    }
    static std::int64_t div_ceil(std::int64_t a, std::int64_t b) { return -div_floor(-a, b); }

    const SearchPlan& plan_;
    const SolverOptions& opts_;
    const std::vector<int>& fixed_;
    const std::atomic<bool>& stop_;
    std::vector<int> label_;
    std::vector<char> sum_used_;
    std::vector<int> lo_stack_;
    std::vector<int> hi_stack_;
    std::uint64_t used_ = 0;
    int lo_ = 1 << 20;
    int hi_ = 0;
    std::int64_t weighted_ = 0;
    std::uint64_t nodes_ = 0;
    int pin_pos_ = -1;
    int pin_label_ = 0;
};

/// Existence query with some vertices' labels fixed. Splits the first
/// unfixed position's label choices across threads; any witness found is
/// returned (which one is unspecified when threads > 1).
inline std::optional<std::vector<int>> search_once(const SearchPlan& plan, const SolverOptions& opts,
                                                   const std::vector<int>& fixed, std::uint64_t& nodes)
{
    int split = 0;
    while (split < plan.p && fixed[static_cast<std::size_t>(plan.order[static_cast<std::size_t>(split)])] != 0) {
        ++split;
    }
    const bool any_fixed = split > 0 || std::any_of(fixed.begin(), fixed.end(), [](int f) { return f != 0; });
    SolverOptions local = opts;
    if (any_fixed) {
        local.symmetry_breaking = false;
    }
    std::atomic<bool> stop{false};

    if (opts.threads <= 1 || split >= plan.p) {
        Searcher s(plan, local, fixed, stop);
        const bool found = s.run();
        nodes += s.nodes();
        if (found) {
            return s.labels();
        }
        return std::nullopt;
    }

    const int last = (split == 0 && local.symmetry_breaking) ? (plan.total_labels + 1) / 2
                                                             : plan.total_labels;
    std::atomic<int> next{1};
    std::atomic<std::uint64_t> total_nodes{0};
    std::mutex mu;
    std::optional<std::vector<int>> result;
    auto worker = [&] {
        std::uint64_t mine = 0;
        for (int lab = next++; lab <= last && !stop.load(); lab = next++) {
            Searcher s(plan, local, fixed, stop);
            s.pin(split, lab);
            const bool found = s.run();
            mine += s.nodes();
            if (found) {
                std::lock_guard lock(mu);
                if (!result) {
                    result = s.labels();
                }
                stop = true;
            }
        }
        total_nodes += mine;
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < opts.threads; ++i) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }
    nodes += total_nodes.load();
    return result;
}

} // namespace detail

/// Decides whether G ∪ tK_1 has a SEM labeling. On success the witness is
/// the lexicographically least labeling by vertex index, independent of the
/// thread count and of the pruning options.
inline FindResult find_sem(const Graph& g, int t, const SolverOptions& opts = {})
{
    if (t < 0) {
        throw ParameterError("find_sem: t must be >= 0");
    }
    const int total = g.vertex_count() + t;
    const int limit = std::min(opts.label_limit, max_label_limit);
    if (total > limit) {
        throw ResourceLimitError("find_sem: " + std::to_string(total) + " labels exceeds the limit of " +
                                 std::to_string(limit));
    }
    const auto started = std::chrono::steady_clock::now();
    FindResult result;
    result.total_labels = total;

    detail::SearchPlan plan(g, total);
    std::vector<int> fixed(static_cast<std::size_t>(plan.p), 0);
    auto best = detail::search_once(plan, opts, fixed, result.stats.nodes);

    if (best) {
        // Lexicographic descent: settle vertex 0, 1, ... in index order,
        // trying only labels below the current witness's.
        for (int v = 0; v < plan.p; ++v) {
            const int current = (*best)[static_cast<std::size_t>(v)];
            for (int lab = 1; lab < current; ++lab) {
                if (std::find(fixed.begin(), fixed.end(), lab) != fixed.end()) {
                    continue;
                }
                fixed[static_cast<std::size_t>(v)] = lab;
                if (auto w = detail::search_once(plan, opts, fixed, result.stats.nodes)) {
                    best = std::move(w);
                    break;
                }
            }
            fixed[static_cast<std::size_t>(v)] = (*best)[static_cast<std::size_t>(v)];
        }
        auto verdict = verify_sem(g, Labeling(*best, total));
        if (!verdict) {
            throw ConstructionError("find_sem: witness failed verification (" +
                                    std::string(reject_reason_name(verdict.rejection->reason)) + ")");
        }
        result.witness = std::move(verdict.certificate);
    }
    result.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

/// Smallest t <= cap with G ∪ tK_1 SEM, starting at the edge-counting bound.
inline SearchOutcome deficiency(const Graph& g, int cap, const SolverOptions& opts = {})
{
    if (cap < 0) {
        throw ParameterError("deficiency: cap must be >= 0");
    }
    SearchOutcome out;
    const int start = g.vertex_count() == 0 ? 0 : counting_lower_bound(g.vertex_count(), g.edge_count());
    out.first_searched = start;
    for (int t = start; t <= cap; ++t) {
        auto r = find_sem(g, t, opts);
        out.stats += r.stats;
        if (r.witness) {
            out.kind = SearchOutcome::Kind::Exact;
            out.value = t;
            out.witness = std::move(r.witness);
            return out;
        }
    }
    out.kind = SearchOutcome::Kind::NotSemUpTo;
    out.value = cap;
    return out;
}

} // namespace semdef
