#include <doctest.h>

#include <cmath>

#include "ihara/errors.hpp"
#include "ihara/families.hpp"
#include "ihara/graph_enum.hpp"
#include "ihara/zeta.hpp"

using namespace ihara;

namespace {

IntPoly cf(std::string_view spec) { return closed_form(parse_family(spec)); }

bool same_graph(std::string_view a, std::string_view b) {
    return isomorphic(gen_family(parse_family(a)), gen_family(parse_family(b)));
}

} // namespace

TEST_CASE("spec strings round trip") {
    for (const char* s : {"C(5)", "K(5)", "KL(3,1)", "Kb(2,3)", "O(6)", "B(8)", "M(8)", "G(3,4)", "Gp(5,6,2)",
                          "H(4,3,2)", "BQ(2)", "D(1,0,2)", "T(0,0,0,0,2,2)", "N(K5-)", "N(coP3K2)"})
        CHECK(format_family(parse_family(s)) == s);
    CHECK(format_family(parse_family(" G( 3 , 4 ) ")) == "G(3,4)");
    for (NamedGraph id : all_named_graphs()) {
        const std::string s = "N(" + std::string(named_graph_id(id)) + ")";
        CHECK(format_family(parse_family(s)) == s);
    }
}

TEST_CASE("malformed spec strings") {
    for (const char* s : {"", "G", "G(3)", "G(3,4", "G(3,4,5,6)", "X(1)", "G(a,4)", "N(K6-)", "K(3)x"})
        CHECK_THROWS_AS(parse_family(s), InputError);
}

TEST_CASE("parameter domains") {
    for (const char* s : {"C(0)", "K(2)", "Kb(1,3)", "O(5)", "B(5)", "M(5)", "M(2)", "BQ(0)", "Gp(3,3,3)",
                          "Gp(2,4,2)", "H(3,3,0)", "D(0,0,1)", "D(1,1,0)", "T(0,0,0,1,0,0)", "KL(3,-1)"}) {
        CAPTURE(s);
        CHECK_THROWS_AS(check_domain(parse_family(s)), ParameterError);
    }
    CHECK_NOTHROW(check_domain(parse_family("Gp(2,2,1)")));
    CHECK_NOTHROW(check_domain(parse_family("G(1,1)")));
}

TEST_CASE("generated sizes") {
    struct Case {
        const char* spec;
        int v, e;
    };
    for (const Case c : {Case{"K(6)", 6, 15}, Case{"Kb(3,4)", 7, 12}, Case{"O(8)", 8, 24}, Case{"B(8)", 8, 12},
                         Case{"M(8)", 8, 12}, Case{"G(3,4)", 6, 7}, Case{"Gp(5,6,2)", 8, 9},
                         Case{"H(4,3,2)", 8, 9}, Case{"KL(4,2)", 4, 14}, Case{"T(1,0,2,1,0,3)", 3, 7}}) {
        CAPTURE(c.spec);
        const auto g = gen_family(parse_family(c.spec));
        CHECK(g.n_vertices() == c.v);
        CHECK(g.n_edges() == c.e);
    }
}

TEST_CASE("symmetric parameters give the same closed form") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            const std::string a = std::to_string(m), b = std::to_string(n);
            CHECK(cf("G(" + a + "," + b + ")") == cf("G(" + b + "," + a + ")"));
            CHECK(cf("H(" + a + "," + b + ",2)") == cf("H(" + b + "," + a + ",2)"));
            if (m >= 2 && n >= 2) CHECK(cf("Kb(" + a + "," + b + ")") == cf("Kb(" + b + "," + a + ")"));
        }
    CHECK(cf("Gp(5,7,2)") == cf("Gp(7,5,2)"));
    // theta with paths 3, 2, 1 described from either pair of cycles
    CHECK(cf("Gp(3,4,1)") == cf("Gp(4,5,3)"));
    CHECK(same_graph("Gp(3,4,1)", "Gp(4,5,3)"));
}

TEST_CASE("specialization chains between families") {
    struct Pair {
        const char* a;
        const char* b;
    };
    for (const Pair p : {Pair{"G(1,1)", "BQ(2)"}, Pair{"G(1,1)", "N(BQ2)"}, Pair{"G(1,2)", "N(BL)"},
                         Pair{"G(2,2)", "N(BB)"}, Pair{"Gp(2,2,1)", "N(theta)"}, Pair{"Gp(2,2,1)", "D(0,0,3)"},
                         Pair{"H(1,1,1)", "D(1,1,1)"}, Pair{"K(3)", "C(3)"}, Pair{"Kb(2,2)", "C(4)"},
                         Pair{"O(4)", "C(4)"}, Pair{"B(6)", "C(6)"}, Pair{"KL(4,0)", "K(4)"},
                         Pair{"T(0,0,0,1,1,1)", "C(3)"}, Pair{"T(0,0,0,2,2,0)", "G(2,2)"}}) {
        CAPTURE(p.a);
        CAPTURE(p.b);
        CHECK(same_graph(p.a, p.b));
        CHECK(cf(p.a) == cf(p.b));
    }
    CHECK(isomorphic(gen_family(MobiusLadder{4}), gen_family(Complete{4})));
}

TEST_CASE("closed forms match the engine on assorted members") {
    for (const char* s : {"K(5)", "KL(3,2)", "Kb(3,5)", "O(8)", "B(10)", "G(4,6)", "Gp(6,6,3)", "H(2,5,3)",
                          "D(2,3,4)", "T(1,0,2,1,3,1)", "BQ(4)", "N(coC4)"}) {
        CAPTURE(s);
        const FamilySpec spec = parse_family(s);
        const auto v = verify_family(spec);
        CHECK_FALSE(v.numeric);
        CHECK(v.engine_poly == zeta_bass(gen_family(spec)).poly);
    }
}

TEST_CASE("Mobius ladder: numeric closed form") {
    CHECK_THROWS_AS(cf("M(6)"), UnsupportedFormError);
    const auto pts = mobius_sample_points();
    REQUIRE(pts.size() == 8);
    CHECK(pts.front() == Rational(1, 24));
    CHECK(pts.back() == Rational(1, 3));
    const auto v = verify_family(MobiusLadder{6});
    CHECK(v.numeric);
    CHECK(v.worst_residual < kMobiusTolerance);

    // The evaluator distinguishes neighbouring members.
    const IntPoly m8 = zeta_bass(gen_family(MobiusLadder{8})).poly;
    const auto m6 = mobius_closed_form(6);
    double worst = 0;
    for (const auto& x : pts) {
        const double u = x.get_d();
        const double exact = m8.eval(Rational(x)).get_d();
        worst = std::max(worst, std::abs(m6(u) - exact) / std::abs(exact));
    }
    CHECK(worst > 1e-3);
}
