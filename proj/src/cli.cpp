#include "ihara/cli.hpp"

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ihara/errors.hpp"
#include "ihara/families.hpp"
#include "ihara/graph_enum.hpp"
#include "ihara/rank_two.hpp"
#include "ihara/spanning_trees.hpp"
#include "ihara/zeta.hpp"

namespace ihara::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Human, Json, Csv };

Format parse_format(const std::string& s) {
    if (s == "human") return Format::Human;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw InputError("unknown output format: " + s);
}

Json coeffs_json(const IntPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

std::string coeffs_csv(const IntPoly& p) {
    std::string s;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k) s += ';';
        s += p.coeffs()[k].get_str();
    }
    return s;
}

Json graph_json(const Multigraph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edge_list()) edges.push_back({e.u, e.v});
    return Json{{"n_vertices", g.n_vertices()}, {"edges", edges}};
}

std::string hex64(std::uint64_t h) {
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << h;
    return s.str();
}

struct Options {
    std::string format = "human";
    std::string graph_path;
    std::string spec;
    std::string engine = "all";
    int cap = kDefaultEnumerationCap;
    int max_edges = 6;
    bool verify = false;
    bool audit = false;
};

Multigraph load_input(const Options& o, std::optional<FamilySpec>& spec) {
    if (!o.graph_path.empty() && !o.spec.empty()) throw InputError("give exactly one of --graph and --spec");
    if (!o.spec.empty()) {
        spec = parse_family(o.spec);
        return gen_family(*spec);
    }
    if (o.graph_path.empty()) throw InputError("give exactly one of --graph and --spec");
    return read_edge_list_file(o.graph_path);
}

int cmd_zeta(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format);
    std::optional<FamilySpec> spec;
    const Multigraph g = load_input(o, spec);
    validate(g);
    std::vector<Engine> engines;
    bool all = o.engine == "all";
    if (all) engines = {Engine::Bass, Engine::LineDet, Engine::Enumeration};
    else engines = {parse_engine(o.engine)};

    std::vector<ZetaReport> reports;
    std::vector<std::string> skipped;
    for (Engine e : engines) {
        if (all && e == Engine::Enumeration && 2 * g.n_edges() > o.cap) {
            skipped.emplace_back(engine_name(e));
            continue;
        }
        reports.push_back(compute_zeta(g, e, o.cap));
    }
    bool agree = true;
    for (const auto& r : reports) agree &= r.poly == reports.front().poly;
    std::string violation;
    try {
        poly_invariants(reports.front().poly, g);
    } catch (const InvariantViolation& e) {
        violation = e.what();
    }

    if (fmt == Format::Json) {
        for (const auto& r : reports) {
            Json j;
            j["graph"] = graph_json(g);
            j["engine"] = std::string(engine_name(r.engine));
            j["coeffs"] = coeffs_json(r.poly);
            j["invariants"] = Json{{"degree", r.degree},
                                   {"leading_coeff", r.leading_coeff.get_str()},
                                   {"kotani_sunada", kotani_sunada_leading(g).get_str()},
                                   {"girth_readout", r.girth_readout},
                                   {"even", r.even},
                                   {"engines_agree", agree},
                                   {"violation", violation}};
            out << j.dump() << '\n';
        }
    } else if (fmt == Format::Csv) {
        out << "engine,degree,leading_coeff,girth_readout,even,coeffs\n";
        for (const auto& r : reports)
            out << engine_name(r.engine) << ',' << r.degree << ',' << r.leading_coeff.get_str() << ','
                << r.girth_readout << ',' << (r.even ? "true" : "false") << ',' << coeffs_csv(r.poly) << '\n';
    } else {
        for (const auto& r : reports) {
            if (reports.size() > 1) out << std::left << std::setw(9) << engine_name(r.engine);
            out << r.poly.to_string() << '\n';
        }
        for (const auto& s : skipped) out << std::left << std::setw(9) << s << "skipped (2|E| exceeds cap " << o.cap << ")\n";
        const auto& r = reports.front();
        out << "degree " << r.degree << ", leading coefficient " << r.leading_coeff.get_str()
            << ", girth readout " << r.girth_readout << ", " << (r.even ? "even" : "not even") << '\n';
        if (reports.size() > 1) out << (agree ? "engines agree" : "ENGINES DISAGREE") << '\n';
        if (!violation.empty()) out << "INVARIANT VIOLATION: " << violation << '\n';
    }
    return agree && violation.empty() ? kSuccess : kViolation;
}

int cmd_family(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format);
    const FamilySpec spec = parse_family(o.spec);
    check_domain(spec);
    const bool mobius = std::holds_alternative<MobiusLadder>(spec);
    std::optional<IntPoly> closed;
    if (!mobius) closed = closed_form(spec);

    std::optional<FamilyVerification> ver;
    std::string mismatch;
    if (o.verify) {
        try {
            ver = verify_family(spec);
        } catch (const FormulaViolation& e) {
            mismatch = e.what();
        }
    }
    const std::string name = format_family(spec);
    if (fmt == Format::Json) {
        Json j;
        j["spec"] = name;
        j["closed_form"] = closed ? Json{{"coeffs", coeffs_json(*closed)}} : Json(nullptr);
        if (o.verify) {
            Json v;
            v["match"] = mismatch.empty();
            v["mode"] = mobius ? "numeric" : "exact";
            if (ver && mobius) {
                v["engine_coeffs"] = coeffs_json(ver->engine_poly);
                std::ostringstream r;
                r << std::scientific << std::setprecision(3) << ver->worst_residual;
                v["worst_residual"] = r.str();
            }
            if (!mismatch.empty()) v["detail"] = mismatch;
            j["verify"] = v;
        }
        out << j.dump() << '\n';
    } else if (fmt == Format::Csv) {
        out << "spec,closed_form,verify\n";
        out << name << ',' << (closed ? coeffs_csv(*closed) : "numeric-only") << ','
            << (o.verify ? (mismatch.empty() ? "MATCH" : "MISMATCH") : "") << '\n';
    } else {
        out << name << ": ";
        if (closed) out << closed->to_string() << '\n';
        else out << "closed form is a complex product (numeric evaluation only)\n";
        if (o.verify) {
            if (!mismatch.empty()) {
                out << "MISMATCH: " << mismatch << '\n';
            } else if (mobius) {
                out << "engine: " << ver->engine_poly.to_string() << '\n';
                out << "MATCH (numeric, worst relative residual " << std::scientific << std::setprecision(3)
                    << ver->worst_residual << " over " << ver->sample_points.size() << " points)\n";
            } else {
                out << "MATCH\n";
            }
        }
    }
    return mismatch.empty() ? kSuccess : kViolation;
}

int cmd_trees(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format);
    std::optional<FamilySpec> spec;
    const Multigraph g = load_input(o, spec);
    std::vector<TreeCountResult> results{tree_count_kirchhoff(g)};
    if (g.rank() >= 2) {
        validate(g);
        results.push_back(tree_count_from_zeta(zeta_bass(g).poly, g.rank()));
    }
    if (spec) {
        try {
            results.push_back(tree_count_closed_form(*spec));
        } catch (const ParameterError&) {
            // no closed form for this family
        }
    }
    bool agree = true;
    for (const auto& r : results) agree &= r.kappa == results.front().kappa;

    if (fmt == Format::Json) {
        Json j;
        j["rank"] = g.rank();
        Json counts = Json::object();
        for (const auto& r : results) counts[std::string(method_name(r.method))] = r.kappa.get_str();
        j["kappa"] = counts;
        j["agree"] = agree;
        out << j.dump() << '\n';
    } else if (fmt == Format::Csv) {
        out << "method,kappa\n";
        for (const auto& r : results) out << method_name(r.method) << ',' << r.kappa.get_str() << '\n';
    } else {
        for (const auto& r : results)
            out << std::left << std::setw(16) << method_name(r.method) << r.kappa.get_str() << '\n';
        if (results.size() > 1) out << (agree ? "methods agree" : "METHODS DISAGREE") << '\n';
    }
    return agree ? kSuccess : kViolation;
}

int cmd_rank2(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format);
    const CompletenessReport rep = completeness_check(o.max_edges);
    std::optional<ExhaustivenessAudit> audit;
    if (o.audit) audit = audit_rank2_exhaustive(o.max_edges);

    if (fmt == Format::Json) {
        Json rows = Json::array();
        for (const auto& r : rep.rows)
            rows.push_back(Json{{"spec", format_rank_two(r.spec)},
                                {"edges", r.n_edges},
                                {"leading_coeff", r.leading_coeff.get_str()},
                                {"girth_readout", r.girth_readout},
                                {"kappa", r.tree_count.get_str()},
                                {"poly_hash", hex64(r.poly_hash)}});
        Json j{{"max_edges", rep.max_edges}, {"specs", rep.rows.size()}, {"distinct", true}, {"rows", rows}};
        if (audit)
            j["audit"] = Json{{"brute_force_classes", audit->brute_force_classes},
                              {"enumerated_specs", audit->enumerated_specs},
                              {"exhaustive", audit->exhaustive()}};
        out << j.dump() << '\n';
    } else if (fmt == Format::Csv) {
        out << "spec,edges,leading_coeff,girth_readout,kappa,poly_hash\n";
        for (const auto& r : rep.rows)
            out << '"' << format_rank_two(r.spec) << "\"," << r.n_edges << ',' << r.leading_coeff.get_str() << ','
                << r.girth_readout << ',' << r.tree_count.get_str() << ',' << hex64(r.poly_hash) << '\n';
    } else {
        out << std::left << std::setw(14) << "spec" << std::setw(6) << "|E|" << std::setw(9) << "leading"
            << std::setw(7) << "girth" << std::setw(8) << "kappa" << "hash\n";
        for (const auto& r : rep.rows)
            out << std::left << std::setw(14) << format_rank_two(r.spec) << std::setw(6) << r.n_edges << std::setw(9)
                << r.leading_coeff.get_str() << std::setw(7) << r.girth_readout << std::setw(8)
                << r.tree_count.get_str() << hex64(r.poly_hash) << '\n';
        out << rep.rows.size() << " canonical rank-two specs with |E| <= " << rep.max_edges
            << ", all zeta polynomials distinct\n";
        if (audit)
            out << "exhaustiveness audit: " << audit->brute_force_classes << " brute-force classes vs "
                << audit->enumerated_specs << " specs: " << (audit->exhaustive() ? "EXHAUSTIVE" : "NOT EXHAUSTIVE")
                << '\n';
    }
    return !audit || audit->exhaustive() ? kSuccess : kViolation;
}

struct SweepTally {
    std::size_t graphs = 0;
    std::size_t bass_linedet = 0;
    std::size_t enum_checked = 0;
    std::size_t enum_agree = 0;
    std::size_t invariants_ok = 0;
    std::size_t tree_checked = 0;
    std::size_t tree_ok = 0;
    std::vector<std::string> failures;
};

int cmd_verify(const Options& o, std::ostream& out) {
    const Format fmt = parse_format(o.format);
    if (o.max_edges < 1) throw InputError("--max-edges must be positive");
    EnumerationOptions opt;
    opt.max_edges = o.max_edges;
    SweepTally t;
    const int cap = std::min(o.cap, kMaxEnumerationCap);
    for (const Multigraph& g : enumerate_multigraphs(opt)) {
        ++t.graphs;
        const std::string label = format_edge_list(g);
        const ZetaReport bass = zeta_bass(g);
        if (zeta_line_det(g).poly == bass.poly) ++t.bass_linedet;
        else t.failures.push_back("bass != linedet for\n" + label);
        if (2 * g.n_edges() <= cap) {
            ++t.enum_checked;
            if (zeta_enum(g, cap).poly == bass.poly) ++t.enum_agree;
            else t.failures.push_back("enum != bass for\n" + label);
        }
        try {
            poly_invariants(bass.poly, g);
            ++t.invariants_ok;
        } catch (const InvariantViolation& e) {
            t.failures.push_back(std::string(e.what()) + " for\n" + label);
        }
        if (g.rank() >= 2) {
            ++t.tree_checked;
            if (tree_count_from_zeta(bass.poly, g.rank()).kappa == kirchhoff_tree_count(g)) ++t.tree_ok;
            else t.failures.push_back("tree count mismatch for\n" + label);
        }
    }
    const bool ok = t.failures.empty();
    if (fmt == Format::Json) {
        Json j{{"max_edges", o.max_edges},
               {"graphs", t.graphs},
               {"bass_linedet_agree", t.bass_linedet},
               {"enum_checked", t.enum_checked},
               {"enum_agree", t.enum_agree},
               {"invariants_ok", t.invariants_ok},
               {"tree_checked", t.tree_checked},
               {"tree_ok", t.tree_ok},
               {"failures", t.failures}};
        out << j.dump() << '\n';
    } else if (fmt == Format::Csv) {
        out << "max_edges,graphs,bass_linedet_agree,enum_checked,enum_agree,invariants_ok,tree_checked,tree_ok\n"
            << o.max_edges << ',' << t.graphs << ',' << t.bass_linedet << ',' << t.enum_checked << ','
            << t.enum_agree << ',' << t.invariants_ok << ',' << t.tree_checked << ',' << t.tree_ok << '\n';
    } else {
        out << "connected min-degree-2 multigraphs with |E| <= " << o.max_edges << ": " << t.graphs << '\n'
            << "bass = linedet:       " << t.bass_linedet << '/' << t.graphs << '\n'
            << "enum agrees:          " << t.enum_agree << '/' << t.enum_checked << " (2|E| <= " << cap << ")\n"
            << "invariants hold:      " << t.invariants_ok << '/' << t.graphs << '\n'
            << "tree counts (r >= 2): " << t.tree_ok << '/' << t.tree_checked << '\n';
        for (const auto& f : t.failures) out << "FAIL: " << f;
        out << (ok ? "OK" : "FAILED") << '\n';
    }
    return ok ? kSuccess : kViolation;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Ihara zeta polynomials of multigraphs", "ihara"};
    app.require_subcommand(1);
    Options o;

    auto* zeta = app.add_subcommand("zeta", "zeta reciprocal of a graph by one or all engines");
    zeta->add_option("--graph", o.graph_path, "edge-list file");
    zeta->add_option("--spec", o.spec, "family spec, e.g. G(3,4)");
    zeta->add_option("--engine", o.engine, "bass | linedet | enum | all")
        ->check(CLI::IsMember({"bass", "linedet", "enum", "all"}));
    zeta->add_option("--cap", o.cap, "enumeration engine cap on 2|E|");

    auto* family = app.add_subcommand("family", "closed form of a named family");
    family->add_option("--spec", o.spec, "family spec, e.g. Gp(5,6,2)")->required();
    family->add_flag("--verify", o.verify, "cross-check against the engine");

    auto* trees = app.add_subcommand("trees", "spanning tree count by all applicable methods");
    trees->add_option("--graph", o.graph_path, "edge-list file");
    trees->add_option("--spec", o.spec, "family spec");

    auto* rank2 = app.add_subcommand("rank2", "rank-two completeness table");
    rank2->add_option("--max-edges", o.max_edges, "largest |E|")->required();
    rank2->add_flag("--audit", o.audit, "also certify the enumeration against brute force");

    auto* verify = app.add_subcommand("verify", "engine agreement sweep over all small multigraphs");
    verify->add_option("--max-edges", o.max_edges, "largest |E|")->required();
    verify->add_option("--cap", o.cap, "enumeration engine cap on 2|E|");

    for (auto* sub : {zeta, family, trees, rank2, verify})
        sub->add_option("--format", o.format, "human | json | csv")->check(CLI::IsMember({"human", "json", "csv"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kSuccess;
        }
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (zeta->parsed()) return cmd_zeta(o, out);
        if (family->parsed()) return cmd_family(o, out);
        if (trees->parsed()) return cmd_trees(o, out);
        if (rank2->parsed()) return cmd_rank2(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
    } catch (const SizeCapError& e) {
        err << "size cap: " << e.what() << '\n';
        return kSizeCap;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        err << "violation: " << e.what() << '\n';
        return kViolation;
    }
    return kInputError;
}

} // namespace ihara::cli
