#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semdef/graph.hpp"

namespace semdef {

/// Vertex labels of G drawn from {1..total_labels}. The labels left unused
/// are carried by `total_labels - p` implicit isolated vertices, so the
/// labeling describes G ∪ tK_1 without materializing the fillers.
struct Labeling {
    std::vector<int> labels;
    int total_labels = 0;

    Labeling() = default;
    Labeling(std::vector<int> l, int n) : labels(std::move(l)), total_labels(n) {}

    /// Labeling with no fillers: N = p.
    static Labeling exact(std::vector<int> l)
    {
        const int n = static_cast<int>(l.size());
        return Labeling(std::move(l), n);
    }

    int isolated() const noexcept { return total_labels - static_cast<int>(labels.size()); }

    friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// Proof object: a labeling whose edge sums are q consecutive integers.
/// For q = 0 the sum set is empty and `min_edge_sum` is 0.
struct SemCertificate {
    Graph graph;
    Labeling labeling;
    int isolated = 0;
    int min_edge_sum = 0;
    int magic_constant = 0;

    friend bool operator==(const SemCertificate&, const SemCertificate&) = default;
};

enum class RejectReason {
    LabelOutOfRange,
    DuplicateLabel,
    DuplicateSum,
    SumGap,
};

inline std::string_view reject_reason_name(RejectReason r)
{
    switch (r) {
    case RejectReason::LabelOutOfRange: return "label-out-of-range";
    case RejectReason::DuplicateLabel: return "duplicate-label";
    case RejectReason::DuplicateSum: return "duplicate-sum";
    case RejectReason::SumGap: return "sum-gap";
    }
    return "unknown";
}

struct Rejection {
    RejectReason reason;
    std::string detail;
};

/// Result of verify_sem: exactly one of `certificate` / `rejection` is set.
struct Verdict {
    std::optional<SemCertificate> certificate;
    std::optional<Rejection> rejection;

    bool accepted() const noexcept { return certificate.has_value(); }
    explicit operator bool() const noexcept { return accepted(); }
};

namespace detail {

inline void require_matching_length(const Graph& g, const Labeling& f)
{
    if (static_cast<int>(f.labels.size()) != g.vertex_count()) {
        throw ParameterError("labeling has " + std::to_string(f.labels.size()) +
                             " labels for a graph with " + std::to_string(g.vertex_count()) +
                             " vertices");
    }
}

} // namespace detail

/// One sum per edge, in the graph's canonical edge order.
inline std::vector<int> edge_sums(const Graph& g, const Labeling& f)
{
    detail::require_matching_length(g, f);
    std::vector<int> sums;
    sums.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        sums.push_back(f.labels[static_cast<std::size_t>(e.u)] +
                       f.labels[static_cast<std::size_t>(e.v)]);
    }
    return sums;
}

/// Accepts iff the labels are distinct values in {1..N} and the edge sums are
/// q distinct integers spanning exactly q - 1. On acceptance the magic
/// constant is N + q + s.
inline Verdict verify_sem(const Graph& g, const Labeling& f)
{
    detail::require_matching_length(g, f);
    const int n = f.total_labels;
    const int p = g.vertex_count();

    std::vector<char> used(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
    for (int v = 0; v < p; ++v) {
        const int label = f.labels[static_cast<std::size_t>(v)];
        if (label < 1 || label > n) {
            return {std::nullopt,
                    Rejection{RejectReason::LabelOutOfRange,
                              "vertex " + std::to_string(v) + " has label " +
                                  std::to_string(label) + " outside 1.." + std::to_string(n)}};
        }
        if (used[static_cast<std::size_t>(label)]) {
            return {std::nullopt, Rejection{RejectReason::DuplicateLabel,
                                            "label " + std::to_string(label) + " used twice"}};
        }
        used[static_cast<std::size_t>(label)] = 1;
    }

    const int q = g.edge_count();
    if (q == 0) {
        return {SemCertificate{g, f, f.isolated(), 0, n}, std::nullopt};
    }

    std::vector<char> seen(static_cast<std::size_t>(2 * n) + 1, 0);
    int lo = 2 * n + 1;
    int hi = 0;
    for (const auto& e : g.edges()) {
        const int s = f.labels[static_cast<std::size_t>(e.u)] + f.labels[static_cast<std::size_t>(e.v)];
        if (seen[static_cast<std::size_t>(s)]) {
            return {std::nullopt,
                    Rejection{RejectReason::DuplicateSum,
                              "edge sum " + std::to_string(s) + " occurs more than once"}};
        }
        seen[static_cast<std::size_t>(s)] = 1;
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    if (hi - lo != q - 1) {
        return {std::nullopt, Rejection{RejectReason::SumGap,
                                        "edge sums span " + std::to_string(lo) + ".." +
                                            std::to_string(hi) + " but there are " +
                                            std::to_string(q) + " edges"}};
    }
    return {SemCertificate{g, f, f.isolated(), lo, n + q + lo}, std::nullopt};
}

/// Edge labels of the total labeling extending `cert`: the edge whose sum is
/// s + j receives N + q - j. Returned in canonical edge order.
inline std::vector<int> edge_labels(const SemCertificate& cert)
{
    const int n = cert.labeling.total_labels;
    const int q = cert.graph.edge_count();
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(q));
    for (int s : edge_sums(cert.graph, cert.labeling)) {
        out.push_back(n + q - (s - cert.min_edge_sum));
    }
    return out;
}

/// Sum of the q consecutive integers starting at s.
constexpr std::int64_t weighted_sum_required(std::int64_t q, std::int64_t s)
{
    return q * s + q * (q - 1) / 2;
}

/// Smallest and largest value of Σ deg(v)·f(v) over injections of
/// {1..total_labels} into vertices, given degrees sorted in descending order.
inline std::pair<std::int64_t, std::int64_t>
weighted_sum_range(const std::vector<int>& degrees_desc, int total_labels)
{
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    for (std::size_t i = 0; i < degrees_desc.size(); ++i) {
        lo += static_cast<std::int64_t>(degrees_desc[i]) * static_cast<std::int64_t>(i + 1);
        hi += static_cast<std::int64_t>(degrees_desc[i]) *
              static_cast<std::int64_t>(total_labels - static_cast<int>(i));
    }
    return {lo, hi};
}

/// Necessary condition only: Σ deg(v)·f(v) must equal the sum of the q
/// consecutive edge sums starting at s, so that target has to fall inside
/// the achievable interval.
inline bool weighted_sum_feasible(const Graph& g, int total_labels, int s)
{
    if (total_labels < g.vertex_count()) {
        return false;
    }
    auto deg = degree_sequence(g);
    std::sort(deg.begin(), deg.end(), std::greater<>());
    const auto [lo, hi] = weighted_sum_range(deg, total_labels);
    const auto target = weighted_sum_required(g.edge_count(), s);
    return lo <= target && target <= hi;
}

} // namespace semdef
