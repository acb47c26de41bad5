#include "ihara/rank_two.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "ihara/detail/overloaded.hpp"
#include "ihara/errors.hpp"
#include "ihara/graph_enum.hpp"
#include "ihara/spanning_trees.hpp"
#include "ihara/zeta.hpp"

namespace ihara {

using detail::overloaded;

FamilySpec to_family(const RankTwoSpec& spec) {
    return std::visit([](const auto& s) -> FamilySpec { return s; }, spec);
}

std::string format_rank_two(const RankTwoSpec& spec) { return format_family(to_family(spec)); }

int rank_two_edges(const RankTwoSpec& spec) {
    return std::visit(overloaded{
                          [](const DoubleCycle& s) { return s.m + s.n; },
                          [](const SharedPath& s) { return s.m + s.n - s.p; },
                          [](const Handcuff& s) { return s.m + s.n + s.l; },
                      },
                      spec);
}

RankTwoSpec canonicalize(const RankTwoSpec& spec) {
    return std::visit(
        overloaded{
            [](const DoubleCycle& s) -> RankTwoSpec {
                if (s.m < 1 || s.n < 1) throw ParameterError("double cycle needs m, n >= 1");
                return DoubleCycle{std::min(s.m, s.n), std::max(s.m, s.n)};
            },
            [](const Handcuff& s) -> RankTwoSpec {
                if (s.m < 1 || s.n < 1 || s.l < 1) throw ParameterError("handcuff needs m, n, l >= 1");
                return Handcuff{std::min(s.m, s.n), std::max(s.m, s.n), s.l};
            },
            [](const SharedPath& s) -> RankTwoSpec {
                std::array<int, 3> paths{s.p, s.m - s.p, s.n - s.p};
                if (*std::min_element(paths.begin(), paths.end()) < 1)
                    throw ParameterError("shared-path graph needs three paths of length >= 1");
                std::sort(paths.begin(), paths.end(), std::greater<>());
                const int a = paths[0], b = paths[1], c = paths[2];
                return SharedPath{b + c, a + c, c};
            },
        },
        spec);
}

namespace {

auto as_tuple(const RankTwoSpec& s) {
    return std::visit(overloaded{
                          [](const DoubleCycle& x) { return std::array<int, 4>{0, x.m, x.n, 0}; },
                          [](const SharedPath& x) { return std::array<int, 4>{1, x.m, x.n, x.p}; },
                          [](const Handcuff& x) { return std::array<int, 4>{2, x.m, x.n, x.l}; },
                      },
                      s);
}

} // namespace

bool is_canonical(const RankTwoSpec& spec) { return as_tuple(canonicalize(spec)) == as_tuple(spec); }

std::vector<RankTwoSpec> enumerate_rank2(int max_edges) {
    if (max_edges < 2) throw InputError("max_edges must be at least 2");
    std::vector<RankTwoSpec> out;
    for (int e = 2; e <= max_edges; ++e) {
        for (int m = 1; 2 * m <= e; ++m) out.emplace_back(DoubleCycle{m, e - m});
        // theta paths a >= b >= c >= 1 with a + b + c = e
        for (int c = 1; 3 * c <= e; ++c)
            for (int b = c; c + 2 * b <= e; ++b) {
                const int a = e - b - c;
                out.emplace_back(SharedPath{b + c, a + c, c});
            }
        for (int l = 1; l + 2 <= e; ++l)
            for (int m = 1; 2 * m <= e - l; ++m) out.emplace_back(Handcuff{m, e - l - m, l});
    }
    return out;
}

std::uint64_t poly_hash(const IntPoly& p) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : p.to_json()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

CompletenessReport completeness_check(int max_edges) {
    CompletenessReport report{max_edges, {}};
    std::map<std::vector<BigInt>, std::size_t> seen;
    for (const RankTwoSpec& spec : enumerate_rank2(max_edges)) {
        const Multigraph g = gen_family(to_family(spec));
        const ZetaReport z = zeta_bass(g);
        RankTwoRow row;
        row.spec = spec;
        row.n_edges = g.n_edges();
        row.leading_coeff = z.leading_coeff;
        row.girth_readout = z.girth_readout;
        row.tree_count = tree_count_from_zeta(z.poly, g.rank()).kappa;
        row.poly_hash = poly_hash(z.poly);
        row.poly = z.poly;
        auto [it, inserted] = seen.emplace(z.poly.coeffs(), report.rows.size());
        if (!inserted)
            throw TheoremViolation("zeta collision between " + format_rank_two(report.rows[it->second].spec) +
                                   " and " + format_rank_two(spec) + ": " + z.poly.to_string());
        report.rows.push_back(std::move(row));
    }
    return report;
}

ExhaustivenessAudit audit_rank2_exhaustive(int max_edges) {
    ExhaustivenessAudit audit;
    audit.max_edges = max_edges;
    const auto specs = enumerate_rank2(max_edges);
    audit.enumerated_specs = specs.size();
    std::vector<Multigraph> spec_graphs;
    spec_graphs.reserve(specs.size());
    for (const auto& s : specs) spec_graphs.push_back(gen_family(to_family(s)));
    std::vector<int> hits(specs.size(), 0);

    EnumerationOptions opt;
    opt.max_edges = max_edges;
    opt.min_degree = 2;
    opt.connected = true;
    for (const Multigraph& g : enumerate_multigraphs(opt)) {
        if (g.rank() != 2) continue;
        ++audit.brute_force_classes;
        bool covered = false;
        for (std::size_t i = 0; i < specs.size(); ++i) {
            if (spec_graphs[i].n_edges() != g.n_edges()) continue;
            if (isomorphic(spec_graphs[i], g)) {
                ++hits[i];
                covered = true;
            }
        }
        if (!covered) audit.uncovered.push_back(g);
    }
    for (std::size_t i = 0; i < specs.size(); ++i)
        if (hits[i] != 1) audit.unmatched_specs.push_back(specs[i]);
    return audit;
}

} // namespace ihara
