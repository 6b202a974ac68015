#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semdef/errors.hpp"

namespace semdef {

using Vertex = int;

/// Unordered vertex pair stored with `u < v`.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph.
///
/// Edges are kept sorted lexicographically with `u < v`, so two graphs with
/// the same edge set compare equal and serialize identically.
class Graph {
public:
    Graph() = default;

    explicit Graph(int vertex_count, std::vector<Edge> edges = {})
        : vertex_count_(vertex_count), edges_(std::move(edges))
    {
        if (vertex_count_ < 0) {
            throw ParameterError("graph: negative vertex count");
        }
        for (auto& e : edges_) {
            if (e.u == e.v) {
                throw ParameterError("graph: loop at vertex " + std::to_string(e.u));
            }
            if (e.u > e.v) {
                std::swap(e.u, e.v);
            }
            if (e.u < 0 || e.v >= vertex_count_) {
                throw ParameterError("graph: edge endpoint out of range (" + std::to_string(e.u) +
                                     "," + std::to_string(e.v) + ")");
            }
        }
        std::sort(edges_.begin(), edges_.end());
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end()) {
            throw ParameterError("graph: repeated edge (" + std::to_string(dup->u) + "," +
                                 std::to_string(dup->v) + ")");
        }
    }

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_edge(Vertex a, Vertex b) const
    {
        Edge e{std::min(a, b), std::max(a, b)};
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
};

enum class Family {
    Path,
    Cycle,
    Star,
    Empty,
    Wheel,
    WheelMinusSpoke,
    // H_n drawn with the missing spoke at x_{n/2}; isomorphic to WheelMinusSpoke.
    WheelMinusMiddleSpoke,
    PathJoin,
    StarJoin,
    CycleJoin,
    GenericJoin,
};

/// Family tag plus its integer parameters.
///
/// `n` is the size parameter of the first factor (path order, cycle length,
/// number of star leaves, rim length) and `m` the size of the attached empty
/// graph for joins. GenericJoin uses `base` in place of `n`.
struct FamilyDescriptor {
    Family family = Family::Empty;
    int n = 0;
    int m = 0;
    std::shared_ptr<const Graph> base;
};

inline std::string_view family_name(Family f)
{
    switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Star: return "star";
    case Family::Empty: return "empty";
    case Family::Wheel: return "wheel";
    case Family::WheelMinusSpoke: return "wheel-minus-spoke";
    case Family::WheelMinusMiddleSpoke: return "wheel-minus-middle-spoke";
    case Family::PathJoin: return "path-join";
    case Family::StarJoin: return "star-join";
    case Family::CycleJoin: return "cycle-join";
    case Family::GenericJoin: return "general-join";
    }
    return "unknown";
}

inline std::optional<Family> parse_family(std::string_view name)
{
    for (Family f : {Family::Path, Family::Cycle, Family::Star, Family::Empty, Family::Wheel,
                     Family::WheelMinusSpoke, Family::WheelMinusMiddleSpoke, Family::PathJoin,
                     Family::StarJoin, Family::CycleJoin, Family::GenericJoin}) {
        if (family_name(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

inline Graph empty_graph(int n)
{
    if (n < 0) {
        throw ParameterError("empty: n must be >= 0");
    }
    return Graph(n);
}

inline Graph path_graph(int n)
{
    if (n < 1) {
        throw ParameterError("path: n must be >= 1");
    }
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1});
    }
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n)
{
    if (n < 3) {
        throw ParameterError("cycle: n must be >= 3");
    }
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1});
    }
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

/// K_{1,n}: vertex 0 is the center, 1..n the leaves.
inline Graph star_graph(int n)
{
    if (n < 1) {
        throw ParameterError("star: n must be >= 1");
    }
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        edges.push_back({0, i});
    }
    return Graph(n + 1, std::move(edges));
}

/// Disjoint union of `g` and `h` plus every edge between them. Vertices of `h`
/// are shifted by |V(g)|.
inline Graph join(const Graph& g, const Graph& h)
{
    const int pg = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    edges.reserve(g.edges().size() + h.edges().size() +
                  static_cast<std::size_t>(pg) * static_cast<std::size_t>(h.vertex_count()));
    for (const auto& e : h.edges()) {
        edges.push_back({e.u + pg, e.v + pg});
    }
    for (int a = 0; a < pg; ++a) {
        for (int b = 0; b < h.vertex_count(); ++b) {
            edges.push_back({a, pg + b});
        }
    }
    return Graph(pg + h.vertex_count(), std::move(edges));
}

inline Graph add_isolated(const Graph& g, int t)
{
    if (t < 0) {
        throw ParameterError("add_isolated: t must be >= 0");
    }
    return Graph(g.vertex_count() + t, g.edges());
}

/// W_n with hub 0 and rim 1..n, minus the spoke from the hub to rim vertex
/// `missing` (1-based rim index).
inline Graph wheel_minus_spoke(int n, int missing = 1)
{
    if (n < 3) {
        throw ParameterError("wheel-minus-spoke: n must be >= 3");
    }
    if (missing < 1 || missing > n) {
        throw ParameterError("wheel-minus-spoke: missing spoke index out of range");
    }
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        if (i != missing) {
            edges.push_back({0, i});
        }
    }
    for (int i = 1; i < n; ++i) {
        edges.push_back({i, i + 1});
    }
    edges.push_back({1, n});
    return Graph(n + 1, std::move(edges));
}

namespace detail {

inline void require_join_m(const FamilyDescriptor& d)
{
    if (d.m < 1) {
        throw ParameterError(std::string(family_name(d.family)) + ": m must be >= 1");
    }
}

} // namespace detail

/// Builds the graph for `d`. Joins put the first factor at 0..n-1 (star
/// center first) and the empty part after it.
inline Graph make_family(const FamilyDescriptor& d)
{
    switch (d.family) {
    case Family::Path: return path_graph(d.n);
    case Family::Cycle: return cycle_graph(d.n);
    case Family::Star: return star_graph(d.n);
    case Family::Empty: return empty_graph(d.n);
    case Family::Wheel: return join(cycle_graph(d.n), empty_graph(1));
    case Family::WheelMinusSpoke: return wheel_minus_spoke(d.n, 1);
    case Family::WheelMinusMiddleSpoke:
        if (d.n < 4 || d.n % 2 != 0) {
            throw ParameterError("wheel-minus-middle-spoke: n must be even and >= 4");
        }
        return wheel_minus_spoke(d.n, d.n / 2);
    case Family::PathJoin:
        detail::require_join_m(d);
        return join(path_graph(d.n), empty_graph(d.m));
    case Family::StarJoin:
        detail::require_join_m(d);
        return join(star_graph(d.n), empty_graph(d.m));
    case Family::CycleJoin:
        detail::require_join_m(d);
        return join(cycle_graph(d.n), empty_graph(d.m));
    case Family::GenericJoin:
        detail::require_join_m(d);
        if (!d.base) {
            throw ParameterError("general-join: base graph required");
        }
        return join(*d.base, empty_graph(d.m));
    }
    throw ParameterError("unknown family");
}

inline std::vector<int> degree_sequence(const Graph& g)
{
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& e : g.edges()) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    return deg;
}

} // namespace semdef
