#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>

#include "semdef/errors.hpp"
#include "semdef/graph.hpp"
#include "semdef/labeling.hpp"

namespace semdef {

/// Where a deficiency bound comes from.
enum class BoundSource {
    EdgeCounting,            // q <= 2(p + t) - 3
    WheelNonexistence,       // H_n is not SEM for n >= 5
    WheelMinusSpokeLabeling, // H_n, n >= 8, n != 2 mod 4
    PathJoinLabeling,        // P_n + mK_1 progression labeling
    StarJoinLabeling,        // K_{1,n} + mK_1, m >= 2
    OddCycleJoinLabeling,    // C_n + mK_1, n odd
    GeneralJoinLabeling,     // G + mK_1 from a labeling of G
    ExplicitSmallCase,       // a specific labeling matching the lower bound
    None,
};

inline std::string_view bound_source_name(BoundSource s)
{
    switch (s) {
    case BoundSource::EdgeCounting: return "edge-counting";
    case BoundSource::WheelNonexistence: return "wheel-nonexistence";
    case BoundSource::WheelMinusSpokeLabeling: return "wheel-minus-spoke-labeling";
    case BoundSource::PathJoinLabeling: return "path-join-labeling";
    case BoundSource::StarJoinLabeling: return "star-join-labeling";
    case BoundSource::OddCycleJoinLabeling: return "odd-cycle-join-labeling";
    case BoundSource::GeneralJoinLabeling: return "general-join-labeling";
    case BoundSource::ExplicitSmallCase: return "explicit-small-case";
    case BoundSource::None: return "none";
    }
    return "unknown";
}

struct DeficiencyBounds {
    int lower = 0;
    std::optional<int> upper; // nullopt: no upper bound known
    BoundSource lower_source = BoundSource::EdgeCounting;
    BoundSource upper_source = BoundSource::None;

    std::optional<int> exact() const
    {
        if (upper && *upper == lower) {
            return lower;
        }
        return std::nullopt;
    }
};

/// Least t >= 0 with q <= 2(p + t) - 3, i.e. max(0, ceil((q+3)/2) - p).
constexpr int counting_lower_bound(int p, int q)
{
    if (p < 1 || q < 0) {
        throw ParameterError("counting_lower_bound: requires p >= 1 and q >= 0");
    }
    return q == 0 ? 0 : std::max(0, (q + 4) / 2 - p);
}

/// Bounds for the families with a known construction or closed form.
inline DeficiencyBounds family_bounds(const FamilyDescriptor& d)
{
    const int n = d.n;
    const int m = d.m;
    auto counted = [](const Graph& g) {
        return counting_lower_bound(std::max(g.vertex_count(), 1), g.edge_count());
    };

    switch (d.family) {
    case Family::WheelMinusSpoke:
    case Family::WheelMinusMiddleSpoke: {
        if (n < 3) {
            throw ParameterError("wheel-minus-spoke: n must be >= 3");
        }
        if (n <= 4) {
            return {0, 0, BoundSource::EdgeCounting, BoundSource::ExplicitSmallCase};
        }
        if (n <= 7) {
            return {1, 1, BoundSource::WheelNonexistence, BoundSource::ExplicitSmallCase};
        }
        if (n % 2 == 1) {
            return {1, (n - 3) / 2, BoundSource::WheelNonexistence,
                    BoundSource::WheelMinusSpokeLabeling};
        }
        if (n % 4 == 0) {
            return {1, n / 2, BoundSource::WheelNonexistence, BoundSource::WheelMinusSpokeLabeling};
        }
        return {1, std::nullopt, BoundSource::WheelNonexistence, BoundSource::None};
    }
    case Family::PathJoin: {
        if (n < 1 || m < 2) {
            throw UnsupportedError("path-join bounds: requires n >= 1 and m >= 2");
        }
        const int lower = counted(make_family(d));
        if (n <= 2) {
            return {lower, 0, BoundSource::EdgeCounting, BoundSource::ExplicitSmallCase};
        }
        if (n == 4) {
            return {lower, m - 1, BoundSource::EdgeCounting, BoundSource::ExplicitSmallCase};
        }
        if (n == 6) {
            return {lower, 2 * (m - 1), BoundSource::EdgeCounting, BoundSource::ExplicitSmallCase};
        }
        return {lower, (n - 1) * (m - 1) - 1, BoundSource::EdgeCounting,
                BoundSource::PathJoinLabeling};
    }
    case Family::StarJoin: {
        if (n < 2 || m < 1) {
            throw UnsupportedError("star-join bounds: requires n >= 2 and m >= 1");
        }
        const int lower = counted(make_family(d));
        if (m == 1) {
            return {lower, 0, BoundSource::EdgeCounting, BoundSource::ExplicitSmallCase};
        }
        return {lower, n * (m - 1) - 1, BoundSource::EdgeCounting, BoundSource::StarJoinLabeling};
    }
    case Family::CycleJoin: {
        if (n < 3 || m < 2) {
            throw UnsupportedError("cycle-join bounds: requires n >= 3 and m >= 2");
        }
        const int lower = counted(make_family(d));
        if (n % 2 == 1) {
            return {lower, m * n - (n + m) + 1, BoundSource::EdgeCounting,
                    BoundSource::OddCycleJoinLabeling};
        }
        return {lower, std::nullopt, BoundSource::EdgeCounting, BoundSource::None};
    }
    default:
        throw UnsupportedError("no deficiency bounds for family " +
                               std::string(family_name(d.family)));
    }
}

/// Bounds for G + mK_1 given a labeling of G with no fillers.
inline DeficiencyBounds general_join_bounds(const SemCertificate& base, int m)
{
    if (m < 1) {
        throw ParameterError("general-join bounds: m must be >= 1");
    }
    const int p = base.graph.vertex_count();
    const int q = base.graph.edge_count();
    if (q == 0) {
        throw PreconditionError("general-join bounds: base graph has no edges");
    }
    const int largest_sum = base.min_edge_sum + q - 1;
    const int lower = counting_lower_bound(p + m, q + p * m);
    return {lower, largest_sum + (m - 2) * p - m, BoundSource::EdgeCounting,
            BoundSource::GeneralJoinLabeling};
}

struct BoundIdentityReport {
    bool ok = true;
    long checked = 0;
    std::string counterexample;
};

namespace detail {

constexpr int ceil_half(int x)
{
    return x >= 0 ? (x + 1) / 2 : -((-x) / 2);
}

constexpr int floor_half(int x)
{
    return x >= 0 ? x / 2 : -((-x + 1) / 2);
}

} // namespace detail

/// Checks that the counting bound equals the closed forms
/// ceil((n-2)(m-1)/2), ceil((n-1)(m-1)/2) and floor((m+1)n/2) - (n+m) + 2
/// for path, star and cycle joins over 3 <= n <= n_max, 2 <= m <= m_max.
inline BoundIdentityReport check_bound_identities(int n_max, int m_max)
{
    BoundIdentityReport report;
    auto fail = [&](std::string_view family, int n, int m, int counted, int closed) {
        report.ok = false;
        report.counterexample = std::string(family) + " n=" + std::to_string(n) +
                                " m=" + std::to_string(m) + ": counting " +
                                std::to_string(counted) + " vs closed form " + std::to_string(closed);
    };
    for (int n = 3; n <= n_max; ++n) {
        for (int m = 2; m <= m_max; ++m) {
            const int path = counting_lower_bound(n + m, n * (m + 1) - 1);
            const int path_closed = detail::ceil_half((n - 2) * (m - 1));
            const int star = counting_lower_bound(n + m + 1, (n + 1) * (m + 1) - 1);
            const int star_closed = detail::ceil_half((n - 1) * (m - 1));
            const int cycle = counting_lower_bound(n + m, n * (m + 1));
            const int cycle_closed = detail::floor_half((m + 1) * n) - (n + m) + 2;
            report.checked += 3;
            if (path != path_closed) {
                fail("path-join", n, m, path, path_closed);
                return report;
            }
            if (star != star_closed) {
                fail("star-join", n, m, star, star_closed);
                return report;
            }
            if (cycle != cycle_closed) {
                fail("cycle-join", n, m, cycle, cycle_closed);
                return report;
            }
        }
    }
    return report;
}

} // namespace semdef
