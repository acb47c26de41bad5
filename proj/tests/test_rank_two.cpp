#include <doctest.h>

#include <set>

#include "ihara/errors.hpp"
#include "ihara/graph_enum.hpp"
#include "ihara/rank_two.hpp"
#include "ihara/zeta.hpp"

using namespace ihara;

namespace {

std::set<std::string> names(const std::vector<RankTwoSpec>& specs) {
    std::set<std::string> out;
    for (const auto& s : specs) out.insert(format_rank_two(s));
    return out;
}

// Every raw parameter tuple with |E| <= max_edges that describes some rank-two graph.
std::vector<RankTwoSpec> raw_specs(int max_edges) {
    std::vector<RankTwoSpec> out;
    for (int m = 1; m <= max_edges; ++m)
        for (int n = 1; n <= max_edges; ++n) {
            if (m + n <= max_edges) out.emplace_back(DoubleCycle{m, n});
            for (int l = 1; m + n + l <= max_edges; ++l) out.emplace_back(Handcuff{m, n, l});
            for (int p = 1; p < std::min(m, n); ++p)
                if (m + n - p <= max_edges) out.emplace_back(SharedPath{m, n, p});
        }
    return out;
}

} // namespace

TEST_CASE("smallest rank-two lists") {
    CHECK(names(enumerate_rank2(2)) == std::set<std::string>{"G(1,1)"});
    CHECK(names(enumerate_rank2(3)) == std::set<std::string>{"G(1,1)", "G(1,2)", "Gp(2,2,1)", "H(1,1,1)"});
    CHECK_THROWS_AS(enumerate_rank2(1), InputError);
}

TEST_CASE("every enumerated spec is canonical, valid and of rank two") {
    const auto specs = enumerate_rank2(9);
    CHECK(names(specs).size() == specs.size());
    for (const auto& s : specs) {
        CAPTURE(format_rank_two(s));
        CHECK(is_canonical(s));
        const auto g = gen_family(to_family(s));
        CHECK(g.rank() == 2);
        CHECK(g.n_edges() == rank_two_edges(s));
        CHECK_NOTHROW(validate(g));
    }
}

TEST_CASE("canonicalize is idempotent and sound") {
    const auto canonical = names(enumerate_rank2(8));
    for (const auto& s : raw_specs(8)) {
        CAPTURE(format_rank_two(s));
        const RankTwoSpec c = canonicalize(s);
        CHECK(canonicalize(c) == c);
        CHECK(is_canonical(c));
        CHECK(canonical.count(format_rank_two(c)) == 1);
        const auto a = gen_family(to_family(s));
        const auto b = gen_family(to_family(c));
        CHECK(isomorphic(a, b));
        CHECK(structural_report(a).girth == structural_report(b).girth);
        CHECK(zeta_bass(a).poly == zeta_bass(b).poly);
    }
    CHECK_THROWS_AS(canonicalize(SharedPath{3, 3, 3}), ParameterError);
}

TEST_CASE("invariant triple separates the documented pairs") {
    const auto report = completeness_check(7);
    auto row = [&](const std::string& name) -> const RankTwoRow& {
        for (const auto& r : report.rows)
            if (format_rank_two(r.spec) == name) return r;
        FAIL("missing " << name);
        return report.rows.front();
    };
    CHECK(row("G(3,3)").leading_coeff == -3);
    CHECK(row("H(3,3,1)").leading_coeff == -4);
    CHECK(row("Gp(4,4,2)").tree_count == 12);
    CHECK(row("H(2,4,1)").tree_count == 8);
    CHECK(row("G(1,5)").girth_readout == 1);
    CHECK(row("Gp(3,3,1)").girth_readout == 3);
}

TEST_CASE("completeness report is deterministic") {
    const auto a = completeness_check(7);
    const auto b = completeness_check(7);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].poly_hash == b.rows[i].poly_hash);
        CHECK(a.rows[i].poly_hash == poly_hash(a.rows[i].poly));
    }
}

TEST_CASE("small exhaustiveness audit") {
    const auto audit = audit_rank2_exhaustive(5);
    CHECK(audit.exhaustive());
    CHECK(audit.brute_force_classes == enumerate_rank2(5).size());
}
