#pragma once

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "semdef/io.hpp"
#include "semdef/reproduce.hpp"
#include "semdef/semdef.hpp"

namespace semdef::cli {

enum ExitCode : int {
    ok = 0,
    rejected = 1,
    usage = 2,
    not_sem_up_to = 3,
    resource_limit = 4,
    claims_failed = 5,
    unsupported = 6,
};

namespace detail {

inline io::json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParameterError("cannot open " + path);
    }
    try {
        return io::json::parse(in);
    } catch (const io::json::parse_error& e) {
        throw ParameterError(path + ": " + e.what());
    }
}

inline void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) {
        throw ParameterError("cannot write " + path);
    }
    out << text;
}

inline int default_threads()
{
    if (const char* env = std::getenv("SEMDEF_THREADS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
        }
    }
    return 1;
}

inline std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

struct FamilyArgs {
    std::string family;
    int n = 0;
    int m = 0;
    std::string base;
};

inline void add_family_options(CLI::App* cmd, FamilyArgs& a, bool required)
{
    auto* f = cmd->add_option("--family", a.family,
                              "path | cycle | star | empty | wheel | wheel-minus-spoke | "
                              "wheel-minus-middle-spoke | path-join | star-join | cycle-join | general-join");
    if (required) {
        f->required();
    }
    cmd->add_option("-n", a.n, "first-factor size");
    cmd->add_option("-m", a.m, "number of added independent vertices (joins)");
}

inline FamilyDescriptor descriptor_of(const FamilyArgs& a)
{
    auto fam = parse_family(a.family);
    if (!fam) {
        throw ParameterError("unknown family \"" + a.family + "\"");
    }
    FamilyDescriptor d{*fam, a.n, a.m, nullptr};
    if (*fam == Family::GenericJoin) {
        if (a.base.empty()) {
            throw ParameterError("general-join needs --base <certificate.json>");
        }
        auto base = io::certificate_from_json(read_json_file(a.base));
        d.base = std::make_shared<const Graph>(base.graph);
    }
    return d;
}

inline SemCertificate base_certificate(const std::string& path)
{
    auto file = io::certificate_from_json(read_json_file(path));
    auto verdict = verify_sem(file.graph, file.labeling);
    if (!verdict) {
        throw PreconditionError("base certificate does not verify: " +
                                std::string(reject_reason_name(verdict.rejection->reason)));
    }
    return *verdict.certificate;
}

inline void emit_json(const io::json& j, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << j.dump(2) << "\n";
    } else {
        write_text(path, j.dump(2) + "\n");
    }
}

inline std::string bound_text(const DeficiencyBounds& b)
{
    std::ostringstream os;
    os << "lower=" << b.lower << " (" << bound_source_name(b.lower_source) << ") upper=";
    if (b.upper) {
        os << *b.upper << " (" << bound_source_name(b.upper_source) << ")";
    } else {
        os << "unknown";
    }
    if (auto x = b.exact()) {
        os << " exact=" << *x;
    }
    return os.str();
}

/// Labeling formula as printed, for families with a documented correction.
inline Labeling printed_labeling(const FamilyDescriptor& d)
{
    switch (d.family) {
    case Family::WheelMinusSpoke:
        return printed_wheel_minus_spoke_odd(d.n);
    case Family::StarJoin:
        if (d.m == 1) {
            return printed_star_join_single(d.n);
        }
        break;
    case Family::PathJoin:
        if (d.n == 6) {
            return printed_path6_join(d.m);
        }
        break;
    case Family::CycleJoin:
        return printed_cycle_join_odd(d.n, d.m);
    default:
        break;
    }
    throw UnsupportedError("--as-printed: no corrected formula for these parameters");
}

} // namespace detail

/// Entry point shared by the executable and the tests. `manifest` is the
/// default claim manifest used by `reproduce`.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                       const io::json& manifest)
{
    CLI::App app{"semdef: super edge-magic labelings, deficiency bounds and exact search"};
    app.require_subcommand(1);

    detail::FamilyArgs gen_args;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "emit a family graph as JSON");
    detail::add_family_options(gen, gen_args, true);
    gen->add_option("--base", gen_args.base, "base certificate for general-join");
    gen->add_option("--json", gen_out, "output file (default: stdout)");

    detail::FamilyArgs con_args;
    std::string con_out;
    bool show_errata = false;
    bool as_printed = false;
    auto* con = app.add_subcommand("construct", "build a labeling from a closed-form construction");
    detail::add_family_options(con, con_args, true);
    con->add_option("--base", con_args.base, "base certificate for general-join");
    con->add_option("--json", con_out, "output file (default: stdout)");
    con->add_flag("--show-errata", show_errata, "print applied correction tags");
    con->add_flag("--as-printed", as_printed, "emit the uncorrected labeling formula, unverified");

    std::string ver_graph;
    std::string ver_cert;
    auto* ver = app.add_subcommand("verify", "check a certificate");
    ver->add_option("--graph", ver_graph, "graph JSON (default: the certificate's graph)");
    ver->add_option("--cert", ver_cert, "certificate JSON")->required();

    detail::FamilyArgs bnd_args;
    bool table = false;
    bool csv = false;
    int n_max = 10;
    int m_max = 6;
    auto* bnd = app.add_subcommand("bounds", "deficiency bounds for a family");
    detail::add_family_options(bnd, bnd_args, true);
    bnd->add_option("--base", bnd_args.base, "base certificate for general-join");
    bnd->add_flag("--table", table, "print a grid over n and m");
    bnd->add_flag("--csv", csv, "CSV instead of Markdown for --table");
    bnd->add_option("--n-max", n_max, "table: largest n");
    bnd->add_option("--m-max", m_max, "table: largest m");

    detail::FamilyArgs sol_args;
    std::string sol_graph;
    std::string sol_out;
    int cap = -1;
    SolverOptions sopts;
    sopts.threads = detail::default_threads();
    bool no_prune = false;
    bool no_symmetry = false;
    auto* sol = app.add_subcommand("solve", "exact deficiency by exhaustive search");
    sol->add_option("--graph", sol_graph, "graph JSON");
    detail::add_family_options(sol, sol_args, false);
    sol->add_option("--base", sol_args.base, "base certificate for general-join");
    sol->add_option("--cap", cap, "largest t to try (default: up to the label limit)");
    sol->add_option("--threads", sopts.threads, "worker threads (env SEMDEF_THREADS)");
    sol->add_flag("--no-prune", no_prune, "enumerate without pruning");
    sol->add_flag("--no-symmetry", no_symmetry, "disable complement symmetry breaking");
    sol->add_option("--label-limit", sopts.label_limit, "largest p + t searched (max 62)");
    sol->add_option("--json", sol_out, "write the outcome JSON here");

    std::vector<std::string> selection;
    std::string rep_json;
    std::string rep_md;
    std::string rep_manifest;
    int rep_threads = detail::default_threads();
    auto* rep = app.add_subcommand("reproduce", "run the claim manifest and report");
    rep->add_option("--select", selection, "claim ids or groups (default: all)");
    rep->add_option("--json", rep_json, "JSON report path");
    rep->add_option("--markdown", rep_md, "Markdown report path (default: stdout)");
    rep->add_option("--manifest", rep_manifest, "manifest JSON (default: built-in)");
    rep->add_option("--threads", rep_threads, "solver threads");

    std::vector<std::string> argv_store{"semdef"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return usage;
    }

    try {
        if (gen->parsed()) {
            detail::emit_json(io::to_json(make_family(detail::descriptor_of(gen_args))), gen_out, out);
            return ok;
        }

        if (con->parsed()) {
            auto d = detail::descriptor_of(con_args);
            if (as_printed) {
                const auto f = detail::printed_labeling(d);
                detail::emit_json(io::unverified_certificate(make_family(d), f), con_out, out);
                return ok;
            }
            auto r = d.family == Family::GenericJoin
                         ? construct_general_join(detail::base_certificate(con_args.base), d.m)
                         : construct(d);
            detail::emit_json(io::to_json(r), con_out, out);
            std::ostream& info = con_out.empty() ? err : out;
            if (!con_out.empty()) {
                info << "t=" << r.certificate.isolated << " s=" << r.certificate.min_edge_sum
                     << " k=" << r.certificate.magic_constant << "\n";
            }
            if (show_errata) {
                info << "errata:";
                if (r.errata_applied.empty()) {
                    info << " none";
                }
                for (auto e : r.errata_applied) {
                    info << " " << erratum_tag(e);
                }
                info << "\n";
            }
            if (r.stated_magic_constant && !r.magic_constant_matches_statement()) {
                info << "note: stated magic constant " << *r.stated_magic_constant
                     << " differs from N+q+s = " << r.certificate.magic_constant << "\n";
            }
            return ok;
        }

        if (ver->parsed()) {
            auto file = io::certificate_from_json(detail::read_json_file(ver_cert));
            if (!ver_graph.empty()) {
                auto g = io::graph_from_json(detail::read_json_file(ver_graph));
                if (g != file.graph) {
                    err << "reject certificate-mismatch: certificate graph differs from --graph\n";
                    return rejected;
                }
            }
            auto verdict = verify_sem(file.graph, file.labeling);
            if (!verdict) {
                out << "reject " << reject_reason_name(verdict.rejection->reason) << ": "
                    << verdict.rejection->detail << "\n";
                return rejected;
            }
            const auto& c = *verdict.certificate;
            if ((file.s && *file.s != c.min_edge_sum) || (file.k && *file.k != c.magic_constant)) {
                out << "reject certificate-mismatch: claimed s/k differ from computed s="
                    << c.min_edge_sum << " k=" << c.magic_constant << "\n";
                return rejected;
            }
            out << "accept p=" << c.graph.vertex_count() << " q=" << c.graph.edge_count()
                << " t=" << c.isolated << " s=" << c.min_edge_sum << " k=" << c.magic_constant << "\n";
            return ok;
        }

        if (bnd->parsed()) {
            auto d = detail::descriptor_of(bnd_args);
            if (!table) {
                if (d.family == Family::GenericJoin) {
                    out << detail::bound_text(general_join_bounds(detail::base_certificate(bnd_args.base), d.m))
                        << "\n";
                } else {
                    out << detail::bound_text(family_bounds(d)) << "\n";
                }
                return ok;
            }
            const char* sep = csv ? "," : " | ";
            out << (csv ? "" : "| ") << "n" << sep << "m" << sep << "lower" << sep << "upper" << sep
                << "upper_source" << (csv ? "\n" : " |\n");
            if (!csv) {
                out << "|---|---|---|---|---|\n";
            }
            const bool has_m = d.family == Family::PathJoin || d.family == Family::StarJoin ||
                               d.family == Family::CycleJoin;
            for (int n = 1; n <= n_max; ++n) {
                for (int m = has_m ? 1 : 0; m <= (has_m ? m_max : 0); ++m) {
                    d.n = n;
                    d.m = m;
                    DeficiencyBounds b;
                    try {
                        b = family_bounds(d);
                    } catch (const std::exception&) {
                        continue;
                    }
                    out << (csv ? "" : "| ") << n << sep << m << sep << b.lower << sep
                        << (b.upper ? std::to_string(*b.upper) : "unknown") << sep
                        << bound_source_name(b.upper_source) << (csv ? "\n" : " |\n");
                }
            }
            return ok;
        }

        if (sol->parsed()) {
            Graph g;
            if (!sol_graph.empty()) {
                g = io::graph_from_json(detail::read_json_file(sol_graph));
            } else if (!sol_args.family.empty()) {
                g = make_family(detail::descriptor_of(sol_args));
            } else {
                err << "solve: give --graph or --family\n";
                return usage;
            }
            sopts.prune = !no_prune;
            sopts.symmetry_breaking = !no_symmetry;
            if (cap < 0) {
                cap = std::max(0, std::min(sopts.label_limit, max_label_limit) - g.vertex_count());
            }
            auto o = deficiency(g, cap, sopts);
            err << "nodes=" << o.stats.nodes << " seconds=" << o.stats.seconds
                << " first_searched=" << o.first_searched << "\n";
            if (!sol_out.empty()) {
                detail::write_text(sol_out, io::to_json(o).dump(2) + "\n");
            }
            if (o.is_exact()) {
                out << "exact " << o.value << "\n";
                if (sol_out.empty()) {
                    out << io::to_json(*o.witness).dump() << "\n";
                }
                return ok;
            }
            out << "not-sem-up-to " << o.value << "\n";
            return not_sem_up_to;
        }

        if (rep->parsed()) {
            const io::json m = rep_manifest.empty() ? manifest : detail::read_json_file(rep_manifest);
            SolverOptions ropts;
            ropts.threads = rep_threads;
            auto report = reproduce(m, selection, ropts);
            if (!rep_json.empty()) {
                detail::write_text(rep_json, report.to_json(detail::utc_timestamp()).dump(2) + "\n");
            }
            if (rep_md.empty()) {
                out << report.to_markdown();
            } else {
                detail::write_text(rep_md, report.to_markdown());
            }
            return report.all_passed() ? ok : claims_failed;
        }
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return resource_limit;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << "\n";
        return unsupported;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << "\n";
        return unsupported;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}

} // namespace semdef::cli
