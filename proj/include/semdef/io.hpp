#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "semdef/constructions.hpp"
#include "semdef/errors.hpp"
#include "semdef/graph.hpp"
#include "semdef/labeling.hpp"
#include "semdef/solver.hpp"

namespace semdef::io {

using nlohmann::json;

inline constexpr std::string_view schema_version = "semdef/1";

namespace detail {

inline void check_schema(const json& j, std::string_view what)
{
    if (!j.is_object()) {
        throw ParameterError(std::string(what) + ": expected a JSON object");
    }
    if (auto it = j.find("schema"); it != j.end() && *it != schema_version) {
        throw ParameterError(std::string(what) + ": unsupported schema " + it->dump());
    }
}

template <typename T>
T required(const json& j, const char* key, std::string_view what)
{
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParameterError(std::string(what) + ": missing field \"" + key + "\"");
    }
    try {
        return it->get<T>();
    } catch (const json::exception& e) {
        throw ParameterError(std::string(what) + ": bad field \"" + key + "\": " + e.what());
    }
}

} // namespace detail

inline json graph_body(const Graph& g)
{
    json edges = json::array();
    for (const auto& e : g.edges()) {
        edges.push_back({e.u, e.v});
    }
    return {{"p", g.vertex_count()}, {"edges", std::move(edges)}};
}

/// {"schema": "semdef/1", "p": <int>, "edges": [[u, v], ...]}, u < v, sorted.
inline json to_json(const Graph& g)
{
    json j = graph_body(g);
    j["schema"] = schema_version;
    return j;
}

inline Graph graph_from_json(const json& j)
{
    detail::check_schema(j, "graph");
    const int p = detail::required<int>(j, "p", "graph");
    const auto pairs = detail::required<std::vector<std::vector<int>>>(j, "edges", "graph");
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& pr : pairs) {
        if (pr.size() != 2) {
            throw ParameterError("graph: each edge must be a pair");
        }
        edges.push_back({pr[0], pr[1]});
    }
    return Graph(p, std::move(edges));
}

/// {"schema", "graph", "labels", "isolated", "s", "k"}.
inline json to_json(const SemCertificate& c)
{
    return {{"schema", schema_version},
            {"graph", graph_body(c.graph)},
            {"labels", c.labeling.labels},
            {"isolated", c.isolated},
            {"s", c.min_edge_sum},
            {"k", c.magic_constant}};
}

/// A certificate as read from disk, before verification. `s` and `k` are
/// whatever the file claims.
struct CertificateFile {
    Graph graph;
    Labeling labeling;
    int isolated = 0;
    std::optional<int> s;
    std::optional<int> k;
};

inline CertificateFile certificate_from_json(const json& j)
{
    detail::check_schema(j, "certificate");
    CertificateFile c;
    c.graph = graph_from_json(detail::required<json>(j, "graph", "certificate"));
    c.isolated = detail::required<int>(j, "isolated", "certificate");
    if (c.isolated < 0) {
        throw ParameterError("certificate: isolated must be >= 0");
    }
    c.labeling = Labeling(detail::required<std::vector<int>>(j, "labels", "certificate"),
                          c.graph.vertex_count() + c.isolated);
    if (j.contains("s")) {
        c.s = detail::required<int>(j, "s", "certificate");
    }
    if (j.contains("k")) {
        c.k = detail::required<int>(j, "k", "certificate");
    }
    return c;
}

/// Raw certificate JSON for a labeling that may not verify; s is the
/// smallest edge sum and k = N + q + s regardless.
inline json unverified_certificate(const Graph& g, const Labeling& f)
{
    const auto sums = edge_sums(g, f);
    const int s = sums.empty() ? 0 : *std::min_element(sums.begin(), sums.end());
    return {{"schema", schema_version},
            {"graph", graph_body(g)},
            {"labels", f.labels},
            {"isolated", f.isolated()},
            {"s", s},
            {"k", f.total_labels + g.edge_count() + s}};
}

inline json to_json(const ConstructionResult& r)
{
    json j = to_json(r.certificate);
    j["claimed_isolated"] = r.claimed_isolated;
    json tags = json::array();
    for (auto e : r.errata_applied) {
        tags.push_back(erratum_tag(e));
    }
    j["errata"] = std::move(tags);
    if (r.stated_magic_constant) {
        j["stated_k"] = *r.stated_magic_constant;
    }
    return j;
}

inline json to_json(const SearchOutcome& o)
{
    json j{{"schema", schema_version},
           {"result", o.is_exact() ? "exact" : "not-sem-up-to"},
           {"first_searched", o.first_searched}};
    if (o.is_exact()) {
        j["deficiency"] = o.value;
        j["witness"] = to_json(*o.witness);
    } else {
        j["cap"] = o.value;
    }
    return j;
}

} // namespace semdef::io
