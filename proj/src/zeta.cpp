#include "ihara/zeta.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>

#include "ihara/errors.hpp"

namespace ihara {

OrientedLineDigraph::OrientedLineDigraph(const Multigraph& g) {
    const auto edges = g.edge_list();
    vertices_.reserve(2 * edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        vertices_.push_back({edges[e].u, edges[e].v, int(e), false});
        vertices_.push_back({edges[e].v, edges[e].u, int(e), true});
    }
    std::vector<std::vector<int>> by_terminus(g.n_vertices());
    for (int i = 0; i < size(); ++i) by_terminus[vertices_[i].terminus].push_back(i);
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    for (int i = 0; i < size(); ++i)
        for (int j : by_terminus[vertices_[i].origin]) {
            if (j == inverse(i)) continue;
            out_[i].push_back(j);
            in_[j].push_back(i);
        }
}

bool OrientedLineDigraph::has_arc(int i, int j) const {
    const auto& o = out_.at(i);
    return std::find(o.begin(), o.end(), j) != o.end();
}

std::size_t OrientedLineDigraph::arc_count() const {
    std::size_t n = 0;
    for (const auto& o : out_) n += o.size();
    return n;
}

BigIntMatrix OrientedLineDigraph::adjacency() const {
    BigIntMatrix t(vertices_.size(), 0);
    for (int i = 0; i < size(); ++i)
        for (int j : out_[i]) t(i, j) = 1;
    return t;
}

OrientedLineDigraph oriented_line_graph(const Multigraph& g) {
    validate(g);
    return OrientedLineDigraph(g);
}

std::string_view engine_name(Engine e) {
    switch (e) {
    case Engine::Bass: return "bass";
    case Engine::LineDet: return "linedet";
    case Engine::Enumeration: return "enum";
    }
    return "?";
}

Engine parse_engine(std::string_view name) {
    if (name == "bass") return Engine::Bass;
    if (name == "linedet") return Engine::LineDet;
    if (name == "enum") return Engine::Enumeration;
    throw InputError("unknown engine: " + std::string(name));
}

ZetaReport make_report(IntPoly poly, Engine engine, const Multigraph& g) {
    ZetaReport r;
    r.engine = engine;
    r.n_edges = g.n_edges();
    r.degree = poly.degree();
    r.leading_coeff = poly.leading_coeff();
    r.girth_readout = poly.first_nonzero_from(1);
    r.even = poly.is_even();
    r.poly = std::move(poly);
    return r;
}

namespace {

IntPoly one_minus_u_squared_pow(long exponent) {
    return IntPoly{1, 0, -1}.pow(static_cast<unsigned>(exponent));
}

void check_total_degree(const IntPoly& p, const Multigraph& g, std::string_view engine) {
    if (p.degree() != 2 * g.n_edges())
        throw ConsistencyError(std::string(engine) + " engine produced degree " + std::to_string(p.degree()) +
                               ", expected 2|E| = " + std::to_string(2 * g.n_edges()));
}

} // namespace

ZetaReport zeta_bass(const Multigraph& g, DetStrategy strategy) {
    validate(g);
    const auto [a, q] = matrices(g);
    const std::size_t n = a.dim();
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<BigInt> c{i == j ? BigInt(1) : BigInt(0), -a(i, j), q(i, j)};
            m(i, j) = IntPoly(std::move(c));
        }
    IntPoly det = det_poly_matrix(m, 2 * int(n), strategy);
    IntPoly poly = one_minus_u_squared_pow(g.rank() - 1) * det;
    check_total_degree(poly, g, "bass");
    return make_report(std::move(poly), Engine::Bass, g);
}

ZetaReport zeta_line_det(const Multigraph& g, DetStrategy strategy) {
    const OrientedLineDigraph log = oriented_line_graph(g);
    const std::size_t n = std::size_t(log.size());
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!log.has_arc(int(i), int(i))) m(i, i) = IntPoly{1};
        else m(i, i) = IntPoly{1, -1};
        for (int j : log.out(int(i)))
            if (std::size_t(j) != i) m(i, std::size_t(j)) = IntPoly{0, -1};
    }
    IntPoly poly = det_poly_matrix(m, 2 * g.n_edges(), strategy);
    check_total_degree(poly, g, "linedet");
    return make_report(std::move(poly), Engine::LineDet, g);
}

namespace {

// closed[S]: number of directed simple cycles of L^oG with vertex set exactly
// S. Built from path counts paths[S][v] of simple paths that start at the
// lowest vertex of S, visit exactly S and end at v.
std::vector<std::int64_t> closed_cycle_counts(const OrientedLineDigraph& log) {
    const int n = log.size();
    const std::size_t full = std::size_t(1) << n;
    std::vector<std::int64_t> paths(full * std::size_t(n), 0);
    std::vector<std::int64_t> closed(full, 0);
    for (int s = 0; s < n; ++s) paths[(std::size_t(1) << s) * n + s] = 1;
    for (std::size_t S = 1; S < full; ++S) {
        const int s = std::countr_zero(S);
        const std::int64_t* row = &paths[S * n];
        for (int v = s; v < n; ++v) {
            if (!row[v]) continue;
            for (int w : log.out(v)) {
                if (w == s) closed[S] += row[v];
                else if (w > s && !(S >> w & 1)) paths[(S | (std::size_t(1) << w)) * n + w] += row[v];
            }
        }
    }
    return closed;
}

void check_enumeration_size(const Multigraph& g, const OrientedLineDigraph& log, int cap) {
    if (cap > kMaxEnumerationCap)
        throw SizeCapError("enumeration cap " + std::to_string(cap) + " exceeds the hard limit " +
                           std::to_string(kMaxEnumerationCap));
    if (2 * g.n_edges() > cap)
        throw SizeCapError("enumeration engine needs 2|E| <= cap; 2|E| = " + std::to_string(2 * g.n_edges()) +
                           ", cap = " + std::to_string(cap));
    // Packings number at most prod(outdeg + 1); keep every partial count in int64.
    long double bound = 1;
    for (int i = 0; i < log.size(); ++i) bound *= (long double)(log.out(i).size() + 1);
    if (bound > (long double)(std::numeric_limits<std::int64_t>::max() / 4))
        throw SizeCapError("linear-subgraph counts would overflow 64-bit accumulators");
}

} // namespace

ZetaReport zeta_enum(const Multigraph& g, int cap) {
    const OrientedLineDigraph log = oriented_line_graph(g);
    check_enumeration_size(g, log, cap);
    const int n = log.size();
    const auto closed = closed_cycle_counts(log);
    const std::size_t full = std::size_t(1) << n;
    // signed[mask] = sum over linear subgraphs with vertex set exactly mask of
    // (-1)^cycles. Split off the cycle through the lowest vertex of mask.
    std::vector<std::int64_t> signed_count(full, 0);
    signed_count[0] = 1;
    std::vector<BigInt> c(std::size_t(n) + 1, 0);
    c[0] = 1;
    for (std::size_t mask = 1; mask < full; ++mask) {
        const std::size_t low = mask & -mask;
        const std::size_t rest = mask ^ low;
        std::int64_t acc = 0;
        for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
            const std::size_t cyc = sub | low;
            if (closed[cyc]) acc -= closed[cyc] * signed_count[mask ^ cyc];
            if (!sub) break;
        }
        signed_count[mask] = acc;
        if (acc) c[std::popcount(mask)] += acc;
    }
    IntPoly poly(std::move(c));
    check_total_degree(poly, g, "enum");
    return make_report(std::move(poly), Engine::Enumeration, g);
}

std::vector<std::vector<std::int64_t>> linear_subgraph_census(const Multigraph& g, int cap) {
    const OrientedLineDigraph log = oriented_line_graph(g);
    check_enumeration_size(g, log, cap);
    const int n = log.size();
    const std::size_t width = std::size_t(n) + 1;
    const auto closed = closed_cycle_counts(log);
    const std::size_t full = std::size_t(1) << n;
    // table[mask * width + r]: linear subgraphs on exactly mask with r cycles
    std::vector<std::int64_t> table(full * width, 0);
    table[0] = 1;
    std::vector<std::vector<std::int64_t>> census(width, std::vector<std::int64_t>(width, 0));
    census[0][0] = 1;
    for (std::size_t mask = 1; mask < full; ++mask) {
        const std::size_t low = mask & -mask;
        const std::size_t rest = mask ^ low;
        std::int64_t* row = &table[mask * width];
        for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
            const std::size_t cyc = sub | low;
            if (closed[cyc]) {
                const std::int64_t* prev = &table[(mask ^ cyc) * width];
                for (std::size_t r = 0; r + 1 < width; ++r)
                    if (prev[r]) row[r + 1] += closed[cyc] * prev[r];
            }
            if (!sub) break;
        }
        const int k = std::popcount(mask);
        for (std::size_t r = 0; r < width; ++r) census[k][r] += row[r];
    }
    return census;
}

ZetaReport compute_zeta(const Multigraph& g, Engine engine, int cap) {
    switch (engine) {
    case Engine::Bass: return zeta_bass(g);
    case Engine::LineDet: return zeta_line_det(g);
    case Engine::Enumeration: return zeta_enum(g, cap);
    }
    throw InputError("unknown engine");
}

BigInt kotani_sunada_leading(const Multigraph& g) {
    BigInt prod = 1;
    for (int v = 0; v < g.n_vertices(); ++v) prod *= g.degree(v) - 1;
    return (g.n_edges() - g.n_vertices()) % 2 == 0 ? prod : BigInt(-prod);
}

PolyInvariants poly_invariants(const IntPoly& poly, const Multigraph& g) {
    PolyInvariants inv;
    const auto report = structural_report(g);
    inv.leading_coeff = poly.leading_coeff();
    inv.expected_leading = kotani_sunada_leading(g);
    inv.girth_readout = poly.first_nonzero_from(1);
    inv.structural_girth = report.girth.value_or(-1);
    inv.even = poly.is_even();
    inv.bipartite = report.bipartite;

    if (poly.coeff(0) != 1)
        throw InvariantViolation("constant term: c_0 = " + poly.coeff(0).get_str() + ", expected 1");
    if (poly.degree() != 2 * g.n_edges())
        throw InvariantViolation("degree: " + std::to_string(poly.degree()) + ", expected 2|E| = " +
                                 std::to_string(2 * g.n_edges()));
    if (inv.leading_coeff != inv.expected_leading)
        throw InvariantViolation("leading coefficient: " + inv.leading_coeff.get_str() +
                                 ", Kotani-Sunada product gives " + inv.expected_leading.get_str());
    if (inv.girth_readout != inv.structural_girth)
        throw InvariantViolation("girth readout: first nonzero c_k at k = " + std::to_string(inv.girth_readout) +
                                 ", structural girth " + std::to_string(inv.structural_girth));
    if (inv.even != inv.bipartite)
        throw InvariantViolation(std::string("evenness: polynomial is ") + (inv.even ? "even" : "not even") +
                                 " but graph is " + (inv.bipartite ? "bipartite" : "not bipartite"));
    return inv;
}

} // namespace ihara
