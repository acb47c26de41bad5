#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ihara/multigraph.hpp"
#include "ihara/poly.hpp"

namespace ihara {

/// A vertex of the oriented line graph: one orientation of an edge of G.
struct DirectedEdge {
    int origin = 0;
    int terminus = 0;
    int parent = 0;        // edge id in Multigraph::edge_list()
    bool reversed = false; // false: (u -> v) for the stored pair {u, v}
};

/// Oriented line graph L^oG on the 2|E| directed edges of G.
///
/// Directed edge 2e is the forward orientation of edge e and 2e+1 the
/// reverse, so inverse(i) == i ^ 1. A loop's two orientations are declared
/// mutual inverses. Arcs follow the pair rule: there is an arc i -> j when
/// t(j) == o(i) and j != inverse(i).
class OrientedLineDigraph {
public:
    explicit OrientedLineDigraph(const Multigraph& g);

    [[nodiscard]] int size() const noexcept { return int(vertices_.size()); }
    [[nodiscard]] const std::vector<DirectedEdge>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] static int inverse(int i) noexcept { return i ^ 1; }

    [[nodiscard]] const std::vector<int>& out(int i) const { return out_.at(i); }
    [[nodiscard]] const std::vector<int>& in(int i) const { return in_.at(i); }
    [[nodiscard]] bool has_arc(int i, int j) const;
    [[nodiscard]] std::size_t arc_count() const;

    /// 0/1 matrix T with T(i, j) = 1 iff there is an arc i -> j.
    [[nodiscard]] BigIntMatrix adjacency() const;

private:
    std::vector<DirectedEdge> vertices_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Validates g and builds its oriented line graph.
OrientedLineDigraph oriented_line_graph(const Multigraph& g);

enum class Engine { Bass, LineDet, Enumeration };

std::string_view engine_name(Engine e);
Engine parse_engine(std::string_view name);

struct ZetaReport {
    IntPoly poly;
    Engine engine = Engine::Bass;
    int n_edges = 0;
    int degree = 0;
    BigInt leading_coeff;
    /// Index of the first nonzero coefficient after c_0, or -1.
    int girth_readout = -1;
    bool even = false;
};

ZetaReport make_report(IntPoly poly, Engine engine, const Multigraph& g);

/// (1 - u^2)^(r-1) det(I - A u + Q u^2).
ZetaReport zeta_bass(const Multigraph& g, DetStrategy strategy = DetStrategy::EvaluationInterpolation);

/// det(I - u T) over the oriented line graph.
ZetaReport zeta_line_det(const Multigraph& g, DetStrategy strategy = DetStrategy::EvaluationInterpolation);

inline constexpr int kDefaultEnumerationCap = 16;
/// Hard ceiling on the enumeration cap. The path table holds cap * 2^cap
/// counts and the convolution costs 3^cap steps.
inline constexpr int kMaxEnumerationCap = 18;

/// Coefficients as signed counts of linear subgraphs of L^oG. Throws
/// SizeCapError when 2|E| > cap.
ZetaReport zeta_enum(const Multigraph& g, int cap = kDefaultEnumerationCap);

/// census[k][r]: number of linear subgraphs of L^oG on k vertices made of
/// r directed cycles. Same cap semantics as zeta_enum.
std::vector<std::vector<std::int64_t>> linear_subgraph_census(const Multigraph& g,
                                                              int cap = kDefaultEnumerationCap);

ZetaReport compute_zeta(const Multigraph& g, Engine engine, int cap = kDefaultEnumerationCap);

/// (-1)^(|E|-|V|) * prod (d(v) - 1)
BigInt kotani_sunada_leading(const Multigraph& g);

struct PolyInvariants {
    BigInt leading_coeff;
    BigInt expected_leading;
    int girth_readout = -1;
    int structural_girth = -1;  // -1 when acyclic
    bool even = false;
    bool bipartite = false;
};

/// Checks c_0 = 1, degree 2|E|, the Kotani-Sunada leading coefficient, the
/// girth readout and evenness vs bipartiteness. Throws InvariantViolation
/// naming the failed check.
PolyInvariants poly_invariants(const IntPoly& poly, const Multigraph& g);

} // namespace ihara
