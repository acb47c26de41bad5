#pragma once

#include <complex>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ihara/multigraph.hpp"
#include "ihara/poly.hpp"

namespace ihara {

struct Cycle { int n; bool operator==(const Cycle&) const = default; };
struct Complete { int n; bool operator==(const Complete&) const = default; };
struct CompleteWithLoops { int n; int k; bool operator==(const CompleteWithLoops&) const = default; };
struct CompleteBipartite { int m; int n; bool operator==(const CompleteBipartite&) const = default; };
/// O_order: complete graph on `order` vertices minus a perfect matching.
struct CocktailParty { int order; bool operator==(const CocktailParty&) const = default; };
/// B_order: K_{order/2,order/2} minus a perfect matching.
struct MatchingDeleted { int order; bool operator==(const MatchingDeleted&) const = default; };
/// M_n: n-cycle plus the n/2 antipodal chords.
struct MobiusLadder { int n; bool operator==(const MobiusLadder&) const = default; };
/// G_{m,n}: cycles C_m and C_n sharing one vertex (1 = loop, 2 = bigon).
struct DoubleCycle { int m; int n; bool operator==(const DoubleCycle&) const = default; };
/// G_{m,n,p}: cycles C_m and C_n sharing p consecutive edges, i.e. a theta
/// graph with internal paths of lengths p, m-p, n-p.
struct SharedPath { int m; int n; int p; bool operator==(const SharedPath&) const = default; };
/// H_{m,n,l}: C_m joined to C_n by a path of l edges.
struct Handcuff { int m; int n; int l; bool operator==(const Handcuff&) const = default; };
/// BQ_a: one vertex with a loops.
struct Bouquet { int a; bool operator==(const Bouquet&) const = default; };
/// D_{a,b,c}: a loops on v0, b loops on v1, c parallel v0v1 edges.
struct Dumbbell { int a; int b; int c; bool operator==(const Dumbbell&) const = default; };
/// T: loops a1..a3 and pair multiplicities b12, b13, b23 on three vertices.
struct ThreeVertex { int a1, a2, a3, b12, b13, b23; bool operator==(const ThreeVertex&) const = default; };

enum class NamedGraph {
    K4Minus,
    K5Minus,
    BQ2,
    BL,        // bigon with a loop
    BB,        // two bigons sharing a vertex
    Theta,     // triple edge G_{2,2,1}
    Co2K2,     // order 5, complement is a matching on four vertices (size 8)
    CoP3,      // order 5, complement is a path on three vertices (size 8)
    CoK3,      // order 5, complement is a triangle (size 7)
    CoP4,      // order 5, complement is a path on four vertices (size 7)
    CoP3K2,    // order 5, complement is P_3 plus a disjoint K_2 (size 7)
    CoP5,      // order 5, complement is a path with four edges (size 6)
    CoC4,      // order 5, complement is a 4-cycle (size 6)
};
struct NamedSmall { NamedGraph id; bool operator==(const NamedSmall&) const = default; };

using FamilySpec = std::variant<Cycle, Complete, CompleteWithLoops, CompleteBipartite, CocktailParty,
                                MatchingDeleted, MobiusLadder, DoubleCycle, SharedPath, Handcuff,
                                Bouquet, Dumbbell, ThreeVertex, NamedSmall>;

std::string_view named_graph_id(NamedGraph id);
const std::vector<NamedGraph>& all_named_graphs();

/// Parses `G(3,4)`, `Gp(5,6,2)`, `H(4,3,2)`, `K(5)`, `KL(3,1)`, `Kb(2,3)`,
/// `O(6)`, `B(8)`, `M(8)`, `C(5)`, `BQ(2)`, `D(1,0,2)`, `T(0,0,0,0,2,2)`,
/// `N(K5-)`. Throws InputError on malformed strings.
FamilySpec parse_family(std::string_view text);
std::string format_family(const FamilySpec& spec);

/// Throws ParameterError if spec lies outside the family's parameter domain.
void check_domain(const FamilySpec& spec);

Multigraph gen_family(const FamilySpec& spec);

/// Expanded closed-form zeta reciprocal. Throws UnsupportedFormError for
/// MobiusLadder; use mobius_closed_form for that family.
IntPoly closed_form(const FamilySpec& spec);

/// Complex-product evaluator for M_n at real u != 0.
std::function<std::complex<double>(double)> mobius_closed_form(int n);

struct FamilyVerification {
    FamilySpec spec;
    bool numeric = false;
    IntPoly engine_poly;
    /// Worst relative residual over the sample points (numeric path only).
    double worst_residual = 0.0;
    std::vector<Rational> sample_points;
};

/// Sample points j/24, j = 1..8, in (0, 1/3].
std::vector<Rational> mobius_sample_points();
inline constexpr double kMobiusTolerance = 1e-9;

/// Compares closed_form with zeta_bass(gen_family(spec)); throws
/// FormulaViolation on mismatch.
FamilyVerification verify_family(const FamilySpec& spec);

} // namespace ihara
