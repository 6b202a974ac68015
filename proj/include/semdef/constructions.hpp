#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "semdef/errors.hpp"
#include "semdef/graph.hpp"
#include "semdef/labeling.hpp"

namespace semdef {

/// Printed labeling formulas that fail the consecutive-sums test, each with
/// the replacement used here.
enum class Erratum {
    WheelIndexRanges,   // odd n: index ranges stop short of x_{n-1}, x_n
    StarJoinCenterLabel,// K_{1,n} + K_1 with center n+1 gives repeated sums
    Path6VList,         // P_6 + mK_1 empty-part list is not a progression
    CycleJoinEvenIndex, // odd cycle join, even-index formula is quadratic
};

inline std::string_view erratum_tag(Erratum e)
{
    switch (e) {
    case Erratum::WheelIndexRanges: return "wheel-index-ranges";
    case Erratum::StarJoinCenterLabel: return "star-join-center-label";
    case Erratum::Path6VList: return "path6-v-list";
    case Erratum::CycleJoinEvenIndex: return "cycle-join-even-index";
    }
    return "unknown";
}

inline constexpr Erratum all_errata[] = {Erratum::WheelIndexRanges, Erratum::StarJoinCenterLabel,
                                         Erratum::Path6VList, Erratum::CycleJoinEvenIndex};

struct ConstructionResult {
    SemCertificate certificate;
    /// Isolated-vertex count given by the closed-form deficiency bound.
    int claimed_isolated = 0;
    std::vector<Erratum> errata_applied;
    /// Magic constant as stated alongside the construction, if one was stated.
    /// Compared against, never substituted for, `certificate.magic_constant`.
    std::optional<int> stated_magic_constant;

    bool magic_constant_matches_statement() const
    {
        return !stated_magic_constant || *stated_magic_constant == certificate.magic_constant;
    }
};

namespace detail {

inline ConstructionResult finish(std::string_view what, Graph g, std::vector<int> labels,
                                 int claimed_isolated, std::vector<Erratum> errata = {},
                                 std::optional<int> stated_k = std::nullopt)
{
    const int total = g.vertex_count() + claimed_isolated;
    Labeling f(std::move(labels), total);
    auto verdict = verify_sem(g, f);
    if (!verdict) {
        throw ConstructionError(std::string(what) + ": labeling failed verification (" +
                                std::string(reject_reason_name(verdict.rejection->reason)) +
                                ": " + verdict.rejection->detail + ")");
    }
    return ConstructionResult{std::move(*verdict.certificate), claimed_isolated, std::move(errata),
                              stated_k};
}

inline void require(bool ok, const std::string& msg)
{
    if (!ok) {
        throw ParameterError(msg);
    }
}

} // namespace detail

/// H_n for 3 <= n <= 7 from the explicit small labelings (hub first).
inline ConstructionResult construct_wheel_minus_spoke_small(int n)
{
    detail::require(n >= 3 && n <= 7, "wheel-minus-spoke small: n must be in 3..7");
    static const std::vector<int> table[] = {
        {1, 4, 3, 2},
        {2, 3, 1, 4, 5},
        {1, 7, 5, 3, 6, 4},
        {2, 3, 1, 4, 8, 5, 6},
        {2, 3, 1, 4, 8, 5, 9, 6},
    };
    const int t = n <= 4 ? 0 : 1;
    return detail::finish("wheel-minus-spoke", wheel_minus_spoke(n), table[n - 3], t);
}

/// H_n for n >= 8, n not 2 mod 4.
///
/// Odd n: hub (3n-1)/2, odd rim index i gets (i+1)/2, even i gets
/// ceil(n/2) + i/2; t = (n-3)/2.
/// n = 0 mod 4: drawn with the spoke to x_{n/2} missing, hub (3n+2)/2;
/// t = n/2.
inline ConstructionResult construct_wheel_minus_spoke(int n)
{
    detail::require(n >= 8, "wheel-minus-spoke: n must be >= 8");
    if (n % 4 == 2) {
        throw UnsupportedError("wheel-minus-spoke: no construction known for n = 2 mod 4");
    }
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(n) + 1);
    if (n % 2 == 1) {
        labels.push_back((3 * n - 1) / 2);
        for (int i = 1; i <= n; ++i) {
            labels.push_back(i % 2 == 1 ? (i + 1) / 2 : (n + 1) / 2 + i / 2);
        }
        return detail::finish("wheel-minus-spoke", wheel_minus_spoke(n), std::move(labels),
                              (n - 3) / 2, {Erratum::WheelIndexRanges});
    }
    labels.push_back((3 * n + 2) / 2);
    for (int i = 1; i <= n; ++i) {
        if (i % 2 == 1) {
            labels.push_back((i + 1) / 2);
        } else if (i < n / 2) {
            labels.push_back((n + i) / 2);
        } else if (i == n / 2) {
            labels.push_back(5 * n / 4);
        } else {
            labels.push_back((n + i - 2) / 2);
        }
    }
    return detail::finish("wheel-minus-spoke", wheel_minus_spoke(n, n / 2), std::move(labels), n / 2);
}

/// P_n + mK_1 from the arithmetic-progression labeling, valid for every
/// n >= 2, m >= 2: path labels interleave floor((n+2)/2) + (i-1)/2 and
/// n + i/2, the empty part takes {1, 2n, 3n, ..., mn}.
inline ConstructionResult construct_path_join_general(int n, int m)
{
    detail::require(n >= 2 && m >= 2, "path-join general: requires n >= 2 and m >= 2");
    std::vector<int> labels;
    for (int i = 1; i <= n; ++i) {
        labels.push_back(i % 2 == 1 ? (n + 2) / 2 + (i - 1) / 2 : n + i / 2);
    }
    labels.push_back(1);
    for (int j = 2; j <= m; ++j) {
        labels.push_back(j * n);
    }
    return detail::finish("path-join", join(path_graph(n), empty_graph(m)), std::move(labels),
                          (n - 1) * (m - 1) - 1, {}, 2 * m * n + (3 * n + 2) / 2);
}

/// P_n + mK_1, choosing the sharpest labeling available for n.
inline ConstructionResult construct_path_join(int n, int m)
{
    detail::require(n >= 1 && m >= 2, "path-join: requires n >= 1 and m >= 2");
    Graph g = join(path_graph(n), empty_graph(m));
    std::vector<int> labels;
    switch (n) {
    case 1:
        // K_{1,m}: center 1, leaves 2..m+1.
        for (int i = 1; i <= m + 1; ++i) {
            labels.push_back(i);
        }
        return detail::finish("path-join", std::move(g), std::move(labels), 0);
    case 2:
        labels = {1, m + 2};
        for (int j = 2; j <= m + 1; ++j) {
            labels.push_back(j);
        }
        return detail::finish("path-join", std::move(g), std::move(labels), 0, {}, 3 * m + 6);
    case 4:
        labels = {1, 2, 2 * m + 2, 2 * m + 3};
        for (int j = 1; j <= m; ++j) {
            labels.push_back(2 * j + 1);
        }
        return detail::finish("path-join", std::move(g), std::move(labels), m - 1, {}, 6 * m + 9);
    case 6:
        labels = {2, 1, 3, 3 * m + 2, 3 * m + 4, 3 * m + 3};
        for (int j = 1; j <= m; ++j) {
            labels.push_back(3 * j + 1);
        }
        return detail::finish("path-join", std::move(g), std::move(labels), 2 * (m - 1),
                              {Erratum::Path6VList});
    default:
        return construct_path_join_general(n, m);
    }
}

/// K_{1,n} + mK_1 (center, leaves, empty part).
/// m = 1: center 1, leaves 2..n+1, apex n+2; t = 0.
/// m >= 2: center n+2, leaves 2..n+1, empty part {1, 2(n+1), ..., m(n+1)};
/// t = n(m-1) - 1.
inline ConstructionResult construct_star_join(int n, int m)
{
    detail::require(n >= 2 && m >= 1, "star-join: requires n >= 2 and m >= 1");
    Graph g = join(star_graph(n), empty_graph(m));
    std::vector<int> labels;
    if (m == 1) {
        labels.push_back(1);
        for (int i = 1; i <= n; ++i) {
            labels.push_back(i + 1);
        }
        labels.push_back(n + 2);
        return detail::finish("star-join", std::move(g), std::move(labels), 0,
                              {Erratum::StarJoinCenterLabel}, 3 * n + 6);
    }
    labels.push_back(n + 2);
    for (int i = 1; i <= n; ++i) {
        labels.push_back(i + 1);
    }
    labels.push_back(1);
    for (int j = 2; j <= m; ++j) {
        labels.push_back(j * (n + 1));
    }
    return detail::finish("star-join", std::move(g), std::move(labels), n * (m - 1) - 1, {},
                          (n + 1) * (m + 1) + 1);
}

/// C_n + mK_1 for odd n: odd index i gets (n+2+i)/2, even i gets n+1+i/2,
/// the empty part {1, 2n+1, 3n+1, ..., mn+1}; t = mn - (n+m) + 1.
inline ConstructionResult construct_cycle_join_odd(int n, int m)
{
    detail::require(n >= 3 && m >= 2, "cycle-join: requires n >= 3 and m >= 2");
    if (n % 2 == 0) {
        throw UnsupportedError("cycle-join: no construction known for even n");
    }
    std::vector<int> labels;
    for (int i = 1; i <= n; ++i) {
        labels.push_back(i % 2 == 1 ? (n + 2 + i) / 2 : n + 1 + i / 2);
    }
    labels.push_back(1);
    for (int j = 2; j <= m; ++j) {
        labels.push_back(j * n + 1);
    }
    return detail::finish("cycle-join", join(cycle_graph(n), empty_graph(m)), std::move(labels),
                          m * n - (n + m) + 1, {Erratum::CycleJoinEvenIndex});
}

/// G + mK_1 from any labeling of G with no fillers: G keeps its labels and
/// the new vertices take s, s+p, ..., s+(m-1)p where s is the largest edge
/// sum and p = |V(G)|; t = s + (m-2)p - m.
inline ConstructionResult construct_general_join(const SemCertificate& base, int m)
{
    detail::require(m >= 1, "general-join: m must be >= 1");
    if (base.isolated != 0 || base.labeling.total_labels != base.graph.vertex_count()) {
        throw PreconditionError("general-join: base labeling must use no isolated vertices");
    }
    auto check = verify_sem(base.graph, base.labeling);
    if (!check) {
        throw PreconditionError("general-join: base labeling does not verify (" +
                                std::string(reject_reason_name(check.rejection->reason)) + ")");
    }
    const int p = base.graph.vertex_count();
    const int q = base.graph.edge_count();
    if (q == 0) {
        throw PreconditionError("general-join: base graph has no edges");
    }
    const int s = base.min_edge_sum + q - 1;
    if (s <= p) {
        throw PreconditionError("general-join: largest edge sum " + std::to_string(s) +
                                " collides with base label range 1.." + std::to_string(p));
    }
    std::vector<int> labels = base.labeling.labels;
    for (int j = 0; j < m; ++j) {
        labels.push_back(s + j * p);
    }
    return detail::finish("general-join", join(base.graph, empty_graph(m)), std::move(labels),
                          s + (m - 2) * p - m);
}

/// Dispatches on a family descriptor. GenericJoin is not covered here since it
/// needs a base labeling; use construct_general_join.
inline ConstructionResult construct(const FamilyDescriptor& d)
{
    switch (d.family) {
    case Family::WheelMinusSpoke:
    case Family::WheelMinusMiddleSpoke:
        return d.n <= 7 ? construct_wheel_minus_spoke_small(d.n) : construct_wheel_minus_spoke(d.n);
    case Family::PathJoin: return construct_path_join(d.n, d.m);
    case Family::StarJoin: return construct_star_join(d.n, d.m);
    case Family::CycleJoin: return construct_cycle_join_odd(d.n, d.m);
    default:
        throw UnsupportedError("construct: no construction for family " +
                               std::string(family_name(d.family)));
    }
}

/// A labeling formula evaluated exactly as printed, next to its correction.
struct ErratumDemo {
    Erratum which;
    std::string instance;
    Graph graph;
    Labeling printed;
    Labeling corrected;
    RejectReason documented_reason;
};

/// Odd-n wheel-minus-spoke labeling with the printed index ranges
/// "i = 1, 3, ..., n-1" and "i = 2, 4, ..., n-2". Both stop before the last
/// rim vertices, which stay unlabeled (0).
inline Labeling printed_wheel_minus_spoke_odd(int n)
{
    detail::require(n >= 5 && n % 2 == 1, "printed wheel-minus-spoke: n must be odd and >= 5");
    std::vector<int> labels(static_cast<std::size_t>(n) + 1, 0);
    labels[0] = (3 * n - 1) / 2;
    for (int i = 1; i <= n - 1; i += 2) {
        labels[static_cast<std::size_t>(i)] = (i + 1) / 2;
    }
    for (int i = 2; i <= n - 2; i += 2) {
        labels[static_cast<std::size_t>(i)] = (n + 1) / 2 + i / 2;
    }
    return Labeling(std::move(labels), (3 * n - 1) / 2);
}

/// K_{1,n} + K_1 labeled center n+1, leaves 1..n, apex n+2.
inline Labeling printed_star_join_single(int n)
{
    detail::require(n >= 2, "printed star-join: n must be >= 2");
    std::vector<int> labels{n + 1};
    for (int i = 1; i <= n; ++i) {
        labels.push_back(i);
    }
    labels.push_back(n + 2);
    return Labeling::exact(std::move(labels));
}

/// P_6 + mK_1 with the empty part read literally as the first m-3 terms of
/// 4, 7, 10, ... followed by 2m-5, 2m-2, 3m+1.
inline Labeling printed_path6_join(int m)
{
    detail::require(m >= 3, "printed path6-join: m must be >= 3");
    std::vector<int> labels{2, 1, 3, 3 * m + 2, 3 * m + 4, 3 * m + 3};
    for (int j = 0; j < m - 3; ++j) {
        labels.push_back(4 + 3 * j);
    }
    labels.push_back(2 * m - 5);
    labels.push_back(2 * m - 2);
    labels.push_back(3 * m + 1);
    return Labeling(std::move(labels), 3 * m + 4);
}

/// Odd cycle join with the even-index formula (i/2)(2n+2+i). The label
/// range is widened to the largest label so only the sums are at issue.
inline Labeling printed_cycle_join_odd(int n, int m)
{
    detail::require(n >= 3 && n % 2 == 1 && m >= 2, "printed cycle-join: n odd >= 3, m >= 2");
    std::vector<int> labels;
    for (int i = 1; i <= n; ++i) {
        labels.push_back(i % 2 == 1 ? (n + 2 + i) / 2 : (i / 2) * (2 * n + 2 + i));
    }
    labels.push_back(1);
    for (int j = 2; j <= m; ++j) {
        labels.push_back(j * n + 1);
    }
    const int top = *std::max_element(labels.begin(), labels.end());
    return Labeling(std::move(labels), std::max(top, m * n + 1));
}

inline ErratumDemo erratum_demo(Erratum e)
{
    switch (e) {
    case Erratum::WheelIndexRanges: {
        auto fixed = construct_wheel_minus_spoke(9);
        return {e, "H_9", fixed.certificate.graph, printed_wheel_minus_spoke_odd(9),
                fixed.certificate.labeling, RejectReason::LabelOutOfRange};
    }
    case Erratum::StarJoinCenterLabel: {
        auto fixed = construct_star_join(3, 1);
        return {e, "K_{1,3} + K_1", fixed.certificate.graph, printed_star_join_single(3),
                fixed.certificate.labeling, RejectReason::DuplicateSum};
    }
    case Erratum::Path6VList: {
        auto fixed = construct_path_join(6, 5);
        return {e, "P_6 + 5K_1", fixed.certificate.graph, printed_path6_join(5),
                fixed.certificate.labeling, RejectReason::DuplicateSum};
    }
    case Erratum::CycleJoinEvenIndex: {
        auto fixed = construct_cycle_join_odd(5, 2);
        return {e, "C_5 + 2K_1", fixed.certificate.graph, printed_cycle_join_odd(5, 2),
                fixed.certificate.labeling, RejectReason::DuplicateSum};
    }
    }
    throw std::logic_error("unknown erratum");
}

} // namespace semdef
